#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latpd/errors.hpp"
#include "latpd/extreal.hpp"
#include "latpd/report.hpp"

namespace latpd {

struct MetricEntry {
  std::string a, b;
  double value = 0.0;
};

// A finite lattice with an extended metric. Elements are referred to by
// their index in the order they were listed; the order relation, meet/join
// tables and the metric are dense n-by-n tables fixed at validation.
// Immutable afterwards, safe to share across threads.
class MetricLattice {
public:
  MetricLattice() = default;

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int e) const { return names_[e]; }
  const std::vector<std::string>& names() const { return names_; }
  int index(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;

  bool leq(int a, int b) const { return leq_[at(a, b)] != 0; }
  int meet(int a, int b) const { return meet_[at(a, b)]; }
  int join(int a, int b) const { return join_[at(a, b)]; }
  double dist(int a, int b) const { return dist_[at(a, b)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Hasse edges (a covers relation), lexicographic by (lo, hi) index.
  std::vector<std::pair<int, int>> cover_pairs() const;

  // Optional real coordinates carried from the input file or a generator;
  // validated only when an embedding is actually requested.
  const std::optional<std::vector<double>>& coords() const { return coords_; }

  bool operator==(const MetricLattice& o) const;

private:
  std::size_t at(int a, int b) const { return static_cast<std::size_t>(a) * names_.size() + b; }

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> name_index_;
  std::vector<char> leq_;
  std::vector<int> meet_;
  std::vector<int> join_;
  std::vector<double> dist_;
  std::optional<std::vector<double>> coords_;
  int bottom_ = -1;
  int top_ = -1;

  friend MetricLattice validate_lattice(std::vector<std::string>,
                                        const std::vector<std::pair<std::string, std::string>>&,
                                        const std::optional<std::vector<MetricEntry>>&,
                                        std::optional<std::vector<double>>);
};

// Validates a raw lattice description: order pairs may be Hasse covers or any
// relation whose reflexive-transitive closure is intended; the closure is
// computed here. Without explicit metric entries the metric is the shortest
// path edge count in the Hasse diagram.
MetricLattice validate_lattice(std::vector<std::string> elements,
                               const std::vector<std::pair<std::string, std::string>>& order_pairs,
                               const std::optional<std::vector<MetricEntry>>& metric = std::nullopt,
                               std::optional<std::vector<double>> coords = std::nullopt);

// Shortest-path metric on the Hasse diagram of a validated poset.
MetricLattice hasse_metric(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& order_pairs);

// The one element lattice, bottom = top.
MetricLattice one_point_lattice();

struct Interval {
  int lo = 0;
  int hi = 0;
  friend bool operator==(Interval, Interval) = default;
};

// The lattice of order intervals [a,b] of a base lattice, ordered
// componentwise, with the sup metric. Interval indices follow the
// lexicographic (lo, hi) order of base element indices. Meets, joins and
// distances are answered from the base tables, so nothing quadratic in the
// interval count is stored.
class IntervalLattice {
public:
  IntervalLattice() = default;
  explicit IntervalLattice(MetricLattice base);

  const MetricLattice& base() const { return base_; }
  int count() const { return static_cast<int>(intervals_.size()); }
  Interval at(int idx) const { return intervals_[idx]; }
  int find(int lo, int hi) const;
  int find_or_throw(int lo, int hi) const;
  std::string name(int idx) const;

  bool leq(int i, int j) const;
  int meet(int i, int j) const;
  int join(int i, int j) const;
  double dist(int i, int j) const;
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool diagonal(int idx) const { return intervals_[idx].lo == intervals_[idx].hi; }

  // A fixed linear extension of the componentwise order.
  const std::vector<int>& linear_extension() const { return linext_; }

  // Materialises the interval lattice as a standalone MetricLattice with
  // elements named "[a,b]".
  MetricLattice to_metric_lattice() const;

  bool operator==(const IntervalLattice& o) const { return base_ == o.base_; }

private:
  MetricLattice base_;
  std::vector<Interval> intervals_;
  std::vector<int> pair_index_;
  std::vector<int> linext_;
  int bottom_ = -1;
  int top_ = -1;
};

IntervalLattice interval_lattice(const MetricLattice& base);

// A bounded lattice function between two metric lattices: preserves bottom,
// top, meets and joins (hence monotone). Validated at construction.
class LatticeMap {
public:
  LatticeMap(MetricLattice source, MetricLattice target, std::vector<int> assignment);

  const MetricLattice& source() const { return source_; }
  const MetricLattice& target() const { return target_; }
  int apply(int a) const { return map_[a]; }
  const std::vector<int>& assignment() const { return map_; }

  static LatticeMap identity(const MetricLattice& lattice);
  static LatticeMap to_point(const MetricLattice& source);

  bool operator==(const LatticeMap& o) const {
    return source_ == o.source_ && target_ == o.target_ && map_ == o.map_;
  }

private:
  MetricLattice source_, target_;
  std::vector<int> map_;
};

// All bounded-lattice-function axiom violations of a candidate assignment.
CheckReport check_lattice_map(const MetricLattice& source, const MetricLattice& target,
                              const std::vector<int>& assignment);

// Composition then(first(x)); sources/targets must agree structurally.
LatticeMap compose(const LatticeMap& first, const LatticeMap& then);

// The maximal element of alpha^{-1}[bottom, a]; exists because the preimage
// is a nonempty sublattice. Uniqueness is verified, not assumed.
int preimage_max(const LatticeMap& alpha, int target_elem);

// max over all pairs of |d_P(a,b) - d_Q(alpha a, alpha b)|, extended.
double distortion(const LatticeMap& alpha);

// The lift of a base map to interval lattices: [a,b] -> [alpha a, alpha b].
class IntervalMap {
public:
  explicit IntervalMap(LatticeMap base);

  const LatticeMap& base_map() const { return base_; }
  const IntervalLattice& source() const { return source_; }
  const IntervalLattice& target() const { return target_; }
  int apply(int interval_idx) const;
  // Componentwise preimage max inside the interval lattice.
  int preimage_max(int interval_idx) const;

private:
  LatticeMap base_;
  IntervalLattice source_, target_;
};

IntervalMap lift_map(const LatticeMap& alpha);
IntervalMap compose(const IntervalMap& first, const IntervalMap& then);

// Distortion of the lifted map computed honestly over interval pairs with
// the sup metric (equals the base distortion; tests rely on exact equality).
double distortion(const IntervalMap& lifted);

// Accepts an interval-level assignment only if it is induced by a bounded
// lattice function on the bases; otherwise throws map_not_lifted.
IntervalMap as_lifted_map(const IntervalLattice& source, const IntervalLattice& target,
                          const std::vector<int>& assignment);

} // namespace latpd
