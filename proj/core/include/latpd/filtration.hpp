#pragma once

#include <vector>

#include "latpd/complex.hpp"
#include "latpd/lattice.hpp"
#include "latpd/report.hpp"

namespace latpd {

// A lattice-indexed filtration of a fixed complex: a monotone assignment of
// face-closed subcomplexes with the top element carrying the whole complex.
// Stages are stored as explicit simplex masks so the morphism axiom is a
// literal set equality.
class Filtration {
public:
  Filtration(MetricLattice index, SimplicialComplex complex, std::vector<SimplexMask> stages);

  const MetricLattice& index() const { return index_; }
  const SimplicialComplex& complex() const { return complex_; }
  const SimplexMask& stage(int element) const { return stages_[element]; }

  bool operator==(const Filtration& o) const {
    return index_ == o.index_ && complex_ == o.complex_ && stages_ == o.stages_;
  }

private:
  MetricLattice index_;
  SimplicialComplex complex_;
  std::vector<SimplexMask> stages_;
};

Filtration validate_filtration(MetricLattice index, SimplicialComplex complex,
                               std::vector<SimplexMask> stages);

// All elements a of G's index where G(a) != F(max alpha^{-1}[bot,a]).
CheckReport check_filtration_morphism(const Filtration& source, const Filtration& target,
                                      const LatticeMap& alpha);

// The pushed-forward filtration G(a) := F(max alpha^{-1}[bot,a]); the triple
// (F, G, alpha) always passes check_filtration_morphism.
Filtration kan_extend(const Filtration& source, const LatticeMap& alpha);

struct FiltrationMorphism {
  Filtration source;
  Filtration target;
  LatticeMap map;
};

// Validated morphism triple; throws lattice_mismatch / invalid axiom.
FiltrationMorphism make_filtration_morphism(Filtration source, Filtration target, LatticeMap map);

FiltrationMorphism compose_filtration_morphisms(const FiltrationMorphism& first,
                                                const FiltrationMorphism& then);

} // namespace latpd
