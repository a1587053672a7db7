#pragma once

#include <cstdint>
#include <vector>

#include "latpd/complex.hpp"
#include "latpd/filtration.hpp"
#include "latpd/lattice.hpp"
#include "latpd/report.hpp"

namespace latpd {

// An integer valued function on an interval lattice. Birth-death functions
// are monotone; Mobius inversions usually are not, so monotonicity is a
// property to check rather than an invariant of the type.
class IntervalFunction {
public:
  IntervalFunction() = default;
  IntervalFunction(IntervalLattice index, std::vector<int64_t> values);

  const IntervalLattice& index() const { return index_; }
  int64_t value(int interval_idx) const { return values_[interval_idx]; }
  int64_t value_at(int lo, int hi) const { return values_[index_.find_or_throw(lo, hi)]; }
  const std::vector<int64_t>& values() const { return values_; }
  int64_t top_value() const { return values_[index_.top()]; }

  bool operator==(const IntervalFunction& o) const {
    return index_ == o.index_ && values_ == o.values_;
  }

private:
  IntervalLattice index_;
  std::vector<int64_t> values_;
};

// The i-th birth-death function of a filtration: on [a,b] with b below top,
// the dimension of the cycles alive at a that bound by b; on [a,top], the
// full cycle space dimension at a, so no class survives past top.
// Per-interval work is independent; LATTICE_PD_THREADS caps the worker
// count when many intervals are present.
IntervalFunction bd(const Filtration& filtration, int dim, FieldConfig field = {});

// Every comparable pair violating monotonicity.
CheckReport check_monotone(const IntervalFunction& f);

// Mon axiom: g(I) = f(max lifted^{-1}[bot, I]) for every target interval.
CheckReport check_mon_morphism(const IntervalFunction& f, const IntervalFunction& g,
                               const IntervalMap& lifted);

struct MonMorphism {
  IntervalFunction source;
  IntervalFunction target;
  IntervalMap map;
};

MonMorphism make_mon_morphism(IntervalFunction source, IntervalFunction target, IntervalMap map);
MonMorphism compose_mon_morphisms(const MonMorphism& first, const MonMorphism& then);

// The unique Mon morphism from f to the one-interval function carrying
// f[top,top].
MonMorphism terminal_mon(const IntervalFunction& f);

} // namespace latpd
