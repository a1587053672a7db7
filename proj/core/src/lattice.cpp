#include "latpd/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace latpd {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_a_poset: return "NotAPoset";
    case errc::no_meet_or_join: return "NoMeetOrJoin";
    case errc::bad_metric: return "BadMetric";
    case errc::unknown_element: return "UnknownElement";
    case errc::not_a_lattice_map: return "NotALatticeMap";
    case errc::empty_simplex: return "EmptySimplex";
    case errc::duplicate_vertex_in_simplex: return "DuplicateVertexInSimplex";
    case errc::not_a_subcomplex: return "NotASubcomplex";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_monotone: return "NotMonotone";
    case errc::top_not_full: return "TopNotFull";
    case errc::lattice_mismatch: return "LatticeMismatch";
    case errc::not_composable: return "NotComposable";
    case errc::map_not_lifted: return "MapNotLifted";
    case errc::invalid_morphism: return "InvalidMorphism";
    case errc::invalid_step: return "InvalidStep";
    case errc::broken_chain: return "BrokenChain";
    case errc::negative_mass: return "NegativeMass";
    case errc::not_totally_ordered: return "NotTotallyOrdered";
    case errc::no_embedding: return "NoEmbedding";
    case errc::infinite_mixing: return "InfiniteMixing";
    case errc::not_increasing: return "NotIncreasing";
    case errc::empty_input: return "Empty";
    case errc::not_classical_index: return "NotClassicalIndex";
    case errc::not_prime: return "NotPrime";
    case errc::overflow: return "Overflow";
    case errc::bad_matching: return "BadMatching";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

int MetricLattice::index(const std::string& name) const {
  auto it = name_index_.find(name);
  if (it == name_index_.end()) fail(errc::unknown_element, "no element named '" + name + "'");
  return it->second;
}

std::optional<int> MetricLattice::find(const std::string& name) const {
  auto it = name_index_.find(name);
  if (it == name_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int, int>> MetricLattice::cover_pairs() const {
  const int n = size();
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < n && direct; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
      if (direct) covers.emplace_back(a, b);
    }
  return covers;
}

bool MetricLattice::operator==(const MetricLattice& o) const {
  return names_ == o.names_ && leq_ == o.leq_ && dist_ == o.dist_ && coords_ == o.coords_;
}

namespace {

// Shortest path edge counts in the undirected Hasse diagram.
std::vector<double> hasse_distances(int n, const std::vector<char>& leq) {
  std::vector<std::vector<int>> adj(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq[static_cast<std::size_t>(a) * n + b]) continue;
      bool direct = true;
      for (int c = 0; c < n && direct; ++c)
        if (c != a && c != b && leq[static_cast<std::size_t>(a) * n + c] &&
            leq[static_cast<std::size_t>(c) * n + b])
          direct = false;
      if (direct) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  std::vector<double> dist(static_cast<std::size_t>(n) * n, ext_inf);
  for (int s = 0; s < n; ++s) {
    std::deque<int> queue{s};
    dist[static_cast<std::size_t>(s) * n + s] = 0.0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[v])
        if (is_inf(dist[static_cast<std::size_t>(s) * n + w])) {
          dist[static_cast<std::size_t>(s) * n + w] = dist[static_cast<std::size_t>(s) * n + v] + 1.0;
          queue.push_back(w);
        }
    }
  }
  return dist;
}

} // namespace

MetricLattice validate_lattice(std::vector<std::string> elements,
                               const std::vector<std::pair<std::string, std::string>>& order_pairs,
                               const std::optional<std::vector<MetricEntry>>& metric,
                               std::optional<std::vector<double>> coords) {
  if (elements.empty()) fail(errc::empty_input, "a lattice needs at least one element");
  const int n = static_cast<int>(elements.size());

  MetricLattice out;
  out.names_ = std::move(elements);
  for (int i = 0; i < n; ++i) {
    if (!out.name_index_.emplace(out.names_[i], i).second)
      fail(errc::parse_error, "duplicate element '" + out.names_[i] + "'");
  }

  // Reflexive-transitive closure of the given relation.
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  auto at = [n](int a, int b) { return static_cast<std::size_t>(a) * n + b; };
  for (int i = 0; i < n; ++i) leq[at(i, i)] = 1;
  for (const auto& [lo, hi] : order_pairs) leq[at(out.index(lo), out.index(hi))] = 1;
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a) {
      if (!leq[at(a, k)]) continue;
      for (int b = 0; b < n; ++b)
        if (leq[at(k, b)]) leq[at(a, b)] = 1;
    }

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (leq[at(a, b)] && leq[at(b, a)])
        fail(errc::not_a_poset,
             "antisymmetry fails between '" + out.names_[a] + "' and '" + out.names_[b] + "'");

  // Meet and join tables; every pair must have a unique greatest lower /
  // least upper bound (uniqueness follows from antisymmetry once one bound
  // dominates all candidates).
  out.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  out.join_.assign(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> bounds;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      bounds.clear();
      for (int c = 0; c < n; ++c)
        if (leq[at(c, a)] && leq[at(c, b)]) bounds.push_back(c);
      int greatest = -1;
      for (int g : bounds) {
        bool dominates = true;
        for (int c : bounds)
          if (!leq[at(c, g)]) {
            dominates = false;
            break;
          }
        if (dominates) {
          greatest = g;
          break;
        }
      }
      if (greatest < 0)
        fail(errc::no_meet_or_join,
             "no meet for '" + out.names_[a] + "' and '" + out.names_[b] + "'");
      out.meet_[at(a, b)] = out.meet_[at(b, a)] = greatest;

      bounds.clear();
      for (int c = 0; c < n; ++c)
        if (leq[at(a, c)] && leq[at(b, c)]) bounds.push_back(c);
      int least = -1;
      for (int g : bounds) {
        bool dominated = true;
        for (int c : bounds)
          if (!leq[at(g, c)]) {
            dominated = false;
            break;
          }
        if (dominated) {
          least = g;
          break;
        }
      }
      if (least < 0)
        fail(errc::no_meet_or_join,
             "no join for '" + out.names_[a] + "' and '" + out.names_[b] + "'");
      out.join_[at(a, b)] = out.join_[at(b, a)] = least;
    }

  // Bottom and top are forced by finiteness.
  int bottom = 0, top = 0;
  for (int c = 1; c < n; ++c) {
    bottom = out.meet_[at(bottom, c)];
    top = out.join_[at(top, c)];
  }
  out.bottom_ = bottom;
  out.top_ = top;
  out.leq_ = std::move(leq);

  if (!metric.has_value()) {
    out.dist_ = hasse_distances(n, out.leq_);
  } else {
    const double unset = -1.0;
    out.dist_.assign(static_cast<std::size_t>(n) * n, unset);
    for (int i = 0; i < n; ++i) out.dist_[at(i, i)] = 0.0;
    for (const auto& entry : *metric) {
      int a = out.index(entry.a), b = out.index(entry.b);
      if (std::isnan(entry.value) || entry.value < 0.0)
        fail(errc::bad_metric, "negative or NaN distance for ('" + entry.a + "','" + entry.b + "')");
      for (std::size_t pos : {at(a, b), at(b, a)}) {
        if (out.dist_[pos] != unset && out.dist_[pos] != entry.value)
          fail(errc::bad_metric,
               "conflicting distances for ('" + entry.a + "','" + entry.b + "')");
        out.dist_[pos] = entry.value;
      }
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (out.dist_[at(a, b)] == unset)
          fail(errc::bad_metric,
               "missing distance for ('" + out.names_[a] + "','" + out.names_[b] + "')");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a != b && out.dist_[at(a, b)] == 0.0)
          fail(errc::bad_metric,
               "zero distance between distinct '" + out.names_[a] + "' and '" + out.names_[b] + "'");
        for (int c = 0; c < n; ++c) {
          double direct = out.dist_[at(a, c)];
          double via = ext_add(out.dist_[at(a, b)], out.dist_[at(b, c)]);
          if (!(direct <= via + ext_tol) && !is_inf(via))
            fail(errc::bad_metric, "triangle inequality fails at ('" + out.names_[a] + "','" +
                                       out.names_[b] + "','" + out.names_[c] + "')");
        }
      }
  }

  if (coords.has_value() && static_cast<int>(coords->size()) != n)
    fail(errc::parse_error, "coords size does not match element count");
  out.coords_ = std::move(coords);
  return out;
}

MetricLattice hasse_metric(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& order_pairs) {
  return validate_lattice(std::move(elements), order_pairs);
}

MetricLattice one_point_lattice() {
  return validate_lattice({"*"}, {});
}

IntervalLattice::IntervalLattice(MetricLattice base) : base_(std::move(base)) {
  const int n = base_.size();
  pair_index_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int lo = 0; lo < n; ++lo)
    for (int hi = 0; hi < n; ++hi)
      if (base_.leq(lo, hi)) {
        pair_index_[static_cast<std::size_t>(lo) * n + hi] = static_cast<int>(intervals_.size());
        intervals_.push_back({lo, hi});
      }
  bottom_ = find_or_throw(base_.bottom(), base_.bottom());
  top_ = find_or_throw(base_.top(), base_.top());

  // Linear extension: sort by down-set sizes of the endpoints. a < b in the
  // base implies |down(a)| < |down(b)|, so this respects the product order.
  std::vector<int> down(n, 0);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (base_.leq(c, a)) ++down[a];
  linext_.resize(intervals_.size());
  for (std::size_t i = 0; i < intervals_.size(); ++i) linext_[i] = static_cast<int>(i);
  std::sort(linext_.begin(), linext_.end(), [&](int i, int j) {
    const Interval a = intervals_[i], b = intervals_[j];
    auto key = [&](Interval v) { return std::tuple(down[v.lo], down[v.hi], v.lo, v.hi); };
    return key(a) < key(b);
  });
}

int IntervalLattice::find(int lo, int hi) const {
  const int n = base_.size();
  if (lo < 0 || hi < 0 || lo >= n || hi >= n) return -1;
  return pair_index_[static_cast<std::size_t>(lo) * n + hi];
}

int IntervalLattice::find_or_throw(int lo, int hi) const {
  int idx = find(lo, hi);
  if (idx < 0)
    fail(errc::unknown_element,
         "no interval [" + base_.name(lo) + "," + base_.name(hi) + "]");
  return idx;
}

std::string IntervalLattice::name(int idx) const {
  const Interval v = intervals_[idx];
  return "[" + base_.name(v.lo) + "," + base_.name(v.hi) + "]";
}

bool IntervalLattice::leq(int i, int j) const {
  const Interval a = intervals_[i], b = intervals_[j];
  return base_.leq(a.lo, b.lo) && base_.leq(a.hi, b.hi);
}

int IntervalLattice::meet(int i, int j) const {
  const Interval a = intervals_[i], b = intervals_[j];
  return find_or_throw(base_.meet(a.lo, b.lo), base_.meet(a.hi, b.hi));
}

int IntervalLattice::join(int i, int j) const {
  const Interval a = intervals_[i], b = intervals_[j];
  return find_or_throw(base_.join(a.lo, b.lo), base_.join(a.hi, b.hi));
}

double IntervalLattice::dist(int i, int j) const {
  const Interval a = intervals_[i], b = intervals_[j];
  return std::max(base_.dist(a.lo, b.lo), base_.dist(a.hi, b.hi));
}

MetricLattice IntervalLattice::to_metric_lattice() const {
  std::vector<std::string> names;
  names.reserve(intervals_.size());
  for (int i = 0; i < count(); ++i) names.push_back(name(i));
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<MetricEntry> entries;
  for (int i = 0; i < count(); ++i)
    for (int j = 0; j < count(); ++j) {
      if (leq(i, j)) order.emplace_back(names[i], names[j]);
      if (i <= j) entries.push_back({names[i], names[j], dist(i, j)});
    }
  return validate_lattice(std::move(names), order, entries);
}

IntervalLattice interval_lattice(const MetricLattice& base) { return IntervalLattice(base); }

CheckReport check_lattice_map(const MetricLattice& source, const MetricLattice& target,
                              const std::vector<int>& assignment) {
  CheckReport report;
  if (static_cast<int>(assignment.size()) != source.size()) {
    report.add("(map)", "assignment is not total on the source");
    return report;
  }
  for (int a = 0; a < source.size(); ++a)
    if (assignment[a] < 0 || assignment[a] >= target.size()) {
      report.add(source.name(a), "image out of range");
      return report;
    }
  if (assignment[source.bottom()] != target.bottom())
    report.add(source.name(source.bottom()), "bottom is not sent to bottom");
  if (assignment[source.top()] != target.top())
    report.add(source.name(source.top()), "top is not sent to top");
  for (int a = 0; a < source.size(); ++a)
    for (int b = a + 1; b < source.size(); ++b) {
      if (assignment[source.meet(a, b)] != target.meet(assignment[a], assignment[b]))
        report.add(source.name(a) + "," + source.name(b), "meet is not preserved");
      if (assignment[source.join(a, b)] != target.join(assignment[a], assignment[b]))
        report.add(source.name(a) + "," + source.name(b), "join is not preserved");
    }
  return report;
}

LatticeMap::LatticeMap(MetricLattice source, MetricLattice target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(assignment)) {
  CheckReport report = check_lattice_map(source_, target_, map_);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "bounded lattice function axioms fail:";
    for (std::size_t i = 0; i < report.violations.size() && i < 8; ++i)
      msg << " [" << report.violations[i].where << "] " << report.violations[i].detail << ";";
    fail(errc::not_a_lattice_map, msg.str());
  }
}

LatticeMap LatticeMap::identity(const MetricLattice& lattice) {
  std::vector<int> id(lattice.size());
  for (int i = 0; i < lattice.size(); ++i) id[i] = i;
  return LatticeMap(lattice, lattice, std::move(id));
}

LatticeMap LatticeMap::to_point(const MetricLattice& source) {
  return LatticeMap(source, one_point_lattice(), std::vector<int>(source.size(), 0));
}

LatticeMap compose(const LatticeMap& first, const LatticeMap& then) {
  if (!(first.target() == then.source()))
    fail(errc::not_composable, "target of the first map differs from source of the second");
  std::vector<int> assignment(first.source().size());
  for (int a = 0; a < first.source().size(); ++a) assignment[a] = then.apply(first.apply(a));
  return LatticeMap(first.source(), then.target(), std::move(assignment));
}

int preimage_max(const LatticeMap& alpha, int target_elem) {
  const MetricLattice& src = alpha.source();
  const MetricLattice& tgt = alpha.target();
  if (target_elem < 0 || target_elem >= tgt.size())
    fail(errc::unknown_element, "target element out of range");
  int best = -1;
  for (int x = 0; x < src.size(); ++x) {
    if (!tgt.leq(alpha.apply(x), target_elem)) continue;
    best = best < 0 ? x : src.join(best, x);
  }
  // Nonempty because bottom maps to bottom; the join stays in the preimage.
  if (best < 0 || !tgt.leq(alpha.apply(best), target_elem))
    throw std::logic_error("preimage of a bounded lattice map lost its maximum");
  for (int x = 0; x < src.size(); ++x)
    if (tgt.leq(alpha.apply(x), target_elem) && !src.leq(x, best))
      throw std::logic_error("preimage maximum is not above every member");
  return best;
}

double distortion(const LatticeMap& alpha) {
  double worst = 0.0;
  for (int a = 0; a < alpha.source().size(); ++a)
    for (int b = a; b < alpha.source().size(); ++b)
      worst = std::max(worst, ext_abs_diff(alpha.source().dist(a, b),
                                           alpha.target().dist(alpha.apply(a), alpha.apply(b))));
  return worst;
}

IntervalMap::IntervalMap(LatticeMap base)
    : base_(std::move(base)), source_(base_.source()), target_(base_.target()) {}

int IntervalMap::apply(int interval_idx) const {
  const Interval v = source_.at(interval_idx);
  return target_.find_or_throw(base_.apply(v.lo), base_.apply(v.hi));
}

int IntervalMap::preimage_max(int interval_idx) const {
  const Interval v = target_.at(interval_idx);
  return source_.find_or_throw(latpd::preimage_max(base_, v.lo), latpd::preimage_max(base_, v.hi));
}

IntervalMap lift_map(const LatticeMap& alpha) { return IntervalMap(alpha); }

IntervalMap compose(const IntervalMap& first, const IntervalMap& then) {
  return IntervalMap(compose(first.base_map(), then.base_map()));
}

double distortion(const IntervalMap& lifted) {
  const IntervalLattice& src = lifted.source();
  const IntervalLattice& tgt = lifted.target();
  double worst = 0.0;
  for (int i = 0; i < src.count(); ++i)
    for (int j = i; j < src.count(); ++j)
      worst = std::max(worst, ext_abs_diff(src.dist(i, j), tgt.dist(lifted.apply(i), lifted.apply(j))));
  return worst;
}

IntervalMap as_lifted_map(const IntervalLattice& source, const IntervalLattice& target,
                          const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != source.count())
    fail(errc::map_not_lifted, "assignment is not total on the interval lattice");
  const MetricLattice& p = source.base();
  std::vector<int> base(p.size(), -1);
  for (int a = 0; a < p.size(); ++a) {
    int image = assignment[source.find_or_throw(a, a)];
    if (image < 0 || image >= target.count() || !target.diagonal(image))
      fail(errc::map_not_lifted, "diagonal interval [" + p.name(a) + "," + p.name(a) +
                                     "] is not sent to a diagonal interval");
    base[a] = target.at(image).lo;
  }
  CheckReport axioms = check_lattice_map(p, target.base(), base);
  if (!axioms.ok())
    fail(errc::map_not_lifted, "induced base assignment is not a bounded lattice function");
  IntervalMap lifted(LatticeMap(p, target.base(), std::move(base)));
  for (int i = 0; i < source.count(); ++i)
    if (lifted.apply(i) != assignment[i])
      fail(errc::map_not_lifted, "assignment differs from the lift of its base map at " +
                                     source.name(i));
  return lifted;
}

} // namespace latpd
