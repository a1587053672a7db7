#include "latpd/distances.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>

namespace latpd {

namespace {

void check_step_endpoints(bool source_ok, bool target_ok, std::size_t step) {
  if (!source_ok || !target_ok)
    fail(errc::broken_chain,
         "step " + std::to_string(step) + " does not connect its neighbouring objects");
}

void check_step_report(const CheckReport& report, std::size_t step) {
  if (report.ok()) return;
  std::string msg = "step " + std::to_string(step) + " fails its category axiom at:";
  for (const auto& v : report.violations) msg += " " + v.where;
  fail(errc::invalid_step, msg);
}

} // namespace

double path_length(const FilPath& path) {
  if (path.objects.size() != path.steps.size() + 1)
    fail(errc::broken_chain, "a path with n steps needs n+1 objects");
  double total = 0.0;
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    const bool fwd = path.steps[k].direction == StepDirection::forward;
    const Filtration& src = fwd ? path.objects[k] : path.objects[k + 1];
    const Filtration& tgt = fwd ? path.objects[k + 1] : path.objects[k];
    const LatticeMap& map = path.steps[k].map;
    check_step_endpoints(map.source() == src.index() && src.complex() == tgt.complex(),
                         map.target() == tgt.index(), k);
    check_step_report(check_filtration_morphism(src, tgt, map), k);
    total = ext_add(total, distortion(map));
  }
  return total;
}

double path_length(const FnPath& path) {
  if (path.objects.size() != path.steps.size() + 1)
    fail(errc::broken_chain, "a path with n steps needs n+1 objects");
  if (path.category == Category::fil)
    fail(errc::parse_error, "function paths must be in Mon or Fnc");
  double total = 0.0;
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    const bool fwd = path.steps[k].direction == StepDirection::forward;
    const IntervalFunction& src = fwd ? path.objects[k] : path.objects[k + 1];
    const IntervalFunction& tgt = fwd ? path.objects[k + 1] : path.objects[k];
    const LatticeMap& map = path.steps[k].map;
    check_step_endpoints(map.source() == src.index().base(), map.target() == tgt.index().base(),
                         k);
    IntervalMap lifted = lift_map(map);
    check_step_report(path.category == Category::mon ? check_mon_morphism(src, tgt, lifted)
                                                     : check_charge_morphism(src, tgt, lifted),
                      k);
    total = ext_add(total, distortion(map));
  }
  return total;
}

FnPath bd_path(const FilPath& path, int dim, FieldConfig field) {
  FnPath out;
  out.category = Category::mon;
  out.objects.reserve(path.objects.size());
  for (const Filtration& f : path.objects) out.objects.push_back(bd(f, dim, field));
  out.steps = path.steps;
  return out;
}

FnPath mobius_path(const FnPath& mon_path) {
  if (mon_path.category != Category::mon)
    fail(errc::parse_error, "mobius_path expects a Mon path");
  FnPath out;
  out.category = Category::fnc;
  out.objects.reserve(mon_path.objects.size());
  for (const IntervalFunction& f : mon_path.objects) out.objects.push_back(mobius_invert(f));
  out.steps = mon_path.steps;
  return out;
}

std::vector<double> make_embedding(const MetricLattice& lattice) {
  for (int a = 0; a < lattice.size(); ++a)
    for (int b = 0; b < lattice.size(); ++b)
      if (!lattice.leq(a, b) && !lattice.leq(b, a))
        fail(errc::not_totally_ordered,
             "'" + lattice.name(a) + "' and '" + lattice.name(b) + "' are incomparable");

  std::vector<double> coords;
  if (lattice.coords().has_value()) {
    coords = *lattice.coords();
  } else {
    coords.reserve(lattice.size());
    for (int a = 0; a < lattice.size(); ++a) {
      const std::string& name = lattice.name(a);
      if (name == "inf" || name == "+inf") {
        coords.push_back(ext_inf);
        continue;
      }
      char* end = nullptr;
      double parsed = std::strtod(name.c_str(), &end);
      if (end == name.c_str() || *end != '\0')
        fail(errc::no_embedding, "element '" + name + "' has no numeric coordinate");
      coords.push_back(parsed);
    }
  }
  if (coords[lattice.bottom()] != 0.0)
    fail(errc::no_embedding, "bottom must map to 0");
  for (int a = 0; a < lattice.size(); ++a) {
    if (std::isnan(coords[a]) || coords[a] < 0.0)
      fail(errc::no_embedding, "coordinates must be non-negative");
    for (int b = 0; b < lattice.size(); ++b) {
      if (a != b && lattice.leq(a, b) && !(coords[a] < coords[b]))
        fail(errc::no_embedding, "embedding is not strictly monotone at '" + lattice.name(a) +
                                     "' vs '" + lattice.name(b) + "'");
      if (!ext_close(ext_abs_diff(coords[a], coords[b]), lattice.dist(a, b)))
        fail(errc::no_embedding, "embedding is not isometric at ('" + lattice.name(a) + "','" +
                                     lattice.name(b) + "')");
    }
  }
  return coords;
}

Diagram make_diagram(IntervalFunction fn) {
  std::vector<double> coords = make_embedding(fn.index().base());
  for (int i = 0; i < fn.index().count(); ++i)
    if (fn.value(i) < 0)
      fail(errc::negative_mass, "negative mass at " + fn.index().name(i));
  return Diagram{std::move(fn), std::move(coords)};
}

double interval_sup_dist(double lo_a, double hi_a, double lo_b, double hi_b) {
  return std::max(ext_abs_diff(lo_a, lo_b), ext_abs_diff(hi_a, hi_b));
}

Matching validate_matching(const Diagram& sigma, const Diagram& tau,
                           std::vector<MatchingEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const MatchingEntry& a, const MatchingEntry& b) {
    return std::tuple(a.source_interval, a.target_interval) <
           std::tuple(b.source_interval, b.target_interval);
  });
  std::vector<int64_t> row(sigma.fn.index().count(), 0), col(tau.fn.index().count(), 0);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const MatchingEntry& e = entries[k];
    if (e.source_interval < 0 || e.source_interval >= sigma.fn.index().count() ||
        e.target_interval < 0 || e.target_interval >= tau.fn.index().count())
      fail(errc::bad_matching, "entry references an unknown interval");
    if (e.count <= 0) fail(errc::bad_matching, "entry counts must be positive");
    if (k > 0 && entries[k - 1].source_interval == e.source_interval &&
        entries[k - 1].target_interval == e.target_interval)
      fail(errc::bad_matching, "duplicate entry for one interval pair");
    row[e.source_interval] += e.count;
    col[e.target_interval] += e.count;
  }
  for (int i = 0; i < sigma.fn.index().count(); ++i)
    if (!sigma.fn.index().diagonal(i) && row[i] != sigma.fn.value(i))
      fail(errc::bad_matching, "row sum at " + sigma.fn.index().name(i) + " is " +
                                   std::to_string(row[i]) + ", expected " +
                                   std::to_string(sigma.fn.value(i)));
  for (int j = 0; j < tau.fn.index().count(); ++j)
    if (!tau.fn.index().diagonal(j) && col[j] != tau.fn.value(j))
      fail(errc::bad_matching, "column sum at " + tau.fn.index().name(j) + " is " +
                                   std::to_string(col[j]) + ", expected " +
                                   std::to_string(tau.fn.value(j)));
  return Matching{std::move(entries)};
}

double matching_norm(const Diagram& sigma, const Diagram& tau, const Matching& matching) {
  double worst = 0.0;
  for (const MatchingEntry& e : matching.entries)
    worst = std::max(worst, interval_sup_dist(sigma.lo(e.source_interval),
                                              sigma.hi(e.source_interval),
                                              tau.lo(e.target_interval),
                                              tau.hi(e.target_interval)));
  return worst;
}

namespace {

// Plain Dinic max flow; capacities are interval masses, so int64 is ample.
class FlowNetwork {
public:
  explicit FlowNetwork(int nodes) : graph_(nodes) {}

  int add_edge(int from, int to, int64_t cap) {
    graph_[from].push_back({to, cap, static_cast<int>(graph_[to].size())});
    graph_[to].push_back({from, 0, static_cast<int>(graph_[from].size()) - 1});
    edge_refs_.push_back({from, static_cast<int>(graph_[from].size()) - 1});
    return static_cast<int>(edge_refs_.size()) - 1;
  }

  int64_t flow_on(int edge_id) const {
    auto [node, pos] = edge_refs_[edge_id];
    const Edge& e = graph_[node][pos];
    return graph_[e.to][e.rev].cap; // residual of the reverse edge
  }

  int64_t max_flow(int source, int sink) {
    int64_t total = 0;
    while (bfs(source, sink)) {
      iter_.assign(graph_.size(), 0);
      while (int64_t pushed = dfs(source, sink, INT64_MAX)) total += pushed;
    }
    return total;
  }

private:
  struct Edge {
    int to;
    int64_t cap;
    int rev;
  };

  bool bfs(int source, int sink) {
    level_.assign(graph_.size(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (const Edge& e : graph_[v])
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[v] + 1;
          queue.push(e.to);
        }
    }
    return level_[sink] >= 0;
  }

  int64_t dfs(int v, int sink, int64_t limit) {
    if (v == sink) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
      Edge& e = graph_[v][i];
      if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
      int64_t pushed = dfs(e.to, sink, std::min(limit, e.cap));
      if (pushed > 0) {
        e.cap -= pushed;
        graph_[e.to][e.rev].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<Edge>> graph_;
  std::vector<std::pair<int, int>> edge_refs_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

struct AbsorptionCost {
  double cost = ext_inf;
  int element = -1; // diagonal element realising the cost
};

// Cheapest diagonal interval [q,q] of the other side absorbing [lo,hi].
AbsorptionCost absorb_cost(double lo, double hi, const std::vector<double>& other_coords) {
  AbsorptionCost best{interval_sup_dist(lo, hi, other_coords[0], other_coords[0]), 0};
  for (std::size_t q = 1; q < other_coords.size(); ++q) {
    double cost = interval_sup_dist(lo, hi, other_coords[q], other_coords[q]);
    if (cost < best.cost) best = {cost, static_cast<int>(q)};
  }
  return best;
}

} // namespace

BottleneckResult bottleneck(const Diagram& sigma, const Diagram& tau) {
  std::vector<int> lhs, rhs; // non-diagonal supports
  for (int i = 0; i < sigma.fn.index().count(); ++i)
    if (!sigma.fn.index().diagonal(i) && sigma.fn.value(i) > 0) lhs.push_back(i);
  for (int j = 0; j < tau.fn.index().count(); ++j)
    if (!tau.fn.index().diagonal(j) && tau.fn.value(j) > 0) rhs.push_back(j);

  std::vector<std::vector<double>> direct(lhs.size(), std::vector<double>(rhs.size()));
  std::vector<AbsorptionCost> lhs_absorb(lhs.size()), rhs_absorb(rhs.size());
  std::vector<double> candidates{0.0};
  for (std::size_t a = 0; a < lhs.size(); ++a) {
    lhs_absorb[a] = absorb_cost(sigma.lo(lhs[a]), sigma.hi(lhs[a]), tau.coords);
    candidates.push_back(lhs_absorb[a].cost);
    for (std::size_t b = 0; b < rhs.size(); ++b) {
      direct[a][b] = interval_sup_dist(sigma.lo(lhs[a]), sigma.hi(lhs[a]), tau.lo(rhs[b]),
                                       tau.hi(rhs[b]));
      candidates.push_back(direct[a][b]);
    }
  }
  for (std::size_t b = 0; b < rhs.size(); ++b) {
    rhs_absorb[b] = absorb_cost(tau.lo(rhs[b]), tau.hi(rhs[b]), sigma.coords);
    candidates.push_back(rhs_absorb[b].cost);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Node layout: src, sink (the circulation pair), lhs..., rhs..., then the
  // super source/sink appended per threshold
  const int src = 0, sink = 1;
  const int lhs_base = 2;
  const int rhs_base = lhs_base + static_cast<int>(lhs.size());
  int64_t big = 1;
  for (int i : lhs) big += sigma.fn.value(i);
  for (int j : rhs) big += tau.fn.value(j);

  // The marginal constraints are exact on both sides while the diagonal
  // absorbs and feeds freely, so the feasibility question is a flow with
  // lower bounds. The usual reduction: a super source pushes every exact
  // amount, a super sink collects it, the original source/sink pair is
  // closed into a circulation, and feasibility means the super flow
  // saturates everything, i.e. reaches sum(sigma) + sum(tau).
  int64_t sigma_total = 0, tau_total = 0;
  for (int i : lhs) sigma_total += sigma.fn.value(i);
  for (int j : rhs) tau_total += tau.fn.value(j);

  struct Solved {
    bool feasible = false;
    std::vector<MatchingEntry> entries;
  };
  auto solve = [&](double t) {
    Solved out;
    const int super_src = rhs_base + static_cast<int>(rhs.size());
    const int super_sink = super_src + 1;
    FlowNetwork net(super_sink + 1);
    std::vector<int> absorb_edges(lhs.size(), -1), feed_edges(rhs.size(), -1);
    std::vector<std::vector<int>> direct_edges(lhs.size(), std::vector<int>(rhs.size(), -1));
    for (std::size_t a = 0; a < lhs.size(); ++a) {
      net.add_edge(super_src, lhs_base + static_cast<int>(a), sigma.fn.value(lhs[a]));
      if (lhs_absorb[a].cost <= t)
        absorb_edges[a] = net.add_edge(lhs_base + static_cast<int>(a), sink, big);
      for (std::size_t b = 0; b < rhs.size(); ++b)
        if (direct[a][b] <= t)
          direct_edges[a][b] = net.add_edge(lhs_base + static_cast<int>(a),
                                            rhs_base + static_cast<int>(b), big);
    }
    for (std::size_t b = 0; b < rhs.size(); ++b) {
      net.add_edge(rhs_base + static_cast<int>(b), super_sink, tau.fn.value(rhs[b]));
      if (rhs_absorb[b].cost <= t)
        feed_edges[b] = net.add_edge(src, rhs_base + static_cast<int>(b), big);
    }
    net.add_edge(super_src, sink, tau_total);
    net.add_edge(src, super_sink, sigma_total);
    net.add_edge(sink, src, big);
    if (net.max_flow(super_src, super_sink) != sigma_total + tau_total) return out;
    out.feasible = true;
    for (std::size_t a = 0; a < lhs.size(); ++a) {
      for (std::size_t b = 0; b < rhs.size(); ++b)
        if (direct_edges[a][b] >= 0 && net.flow_on(direct_edges[a][b]) > 0)
          out.entries.push_back({lhs[a], rhs[b], net.flow_on(direct_edges[a][b])});
      if (absorb_edges[a] >= 0 && net.flow_on(absorb_edges[a]) > 0) {
        int q = lhs_absorb[a].element;
        out.entries.push_back({lhs[a], tau.fn.index().find_or_throw(q, q),
                               net.flow_on(absorb_edges[a])});
      }
    }
    for (std::size_t b = 0; b < rhs.size(); ++b)
      if (feed_edges[b] >= 0 && net.flow_on(feed_edges[b]) > 0) {
        int p = rhs_absorb[b].element;
        out.entries.push_back({sigma.fn.index().find_or_throw(p, p), rhs[b],
                               net.flow_on(feed_edges[b])});
      }
    return out;
  };

  // Feasibility is monotone in the threshold, so binary search the candidates.
  int lo = 0, hi = static_cast<int>(candidates.size()) - 1;
  Solved best = solve(candidates[hi]);
  if (!best.feasible) throw std::logic_error("matching infeasible at the largest candidate cost");
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    Solved attempt = solve(candidates[mid]);
    if (attempt.feasible) {
      best = std::move(attempt);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  BottleneckResult result;
  result.distance = candidates[lo];
  result.matching = validate_matching(sigma, tau, std::move(best.entries));
  return result;
}

Matching morphism_to_matching(const Diagram& sigma, const Diagram& tau,
                              const IntervalMap& lifted) {
  CheckReport axiom = check_charge_morphism(sigma.fn, tau.fn, lifted);
  if (!axiom.ok()) {
    std::string msg = "the triple is not charge-preserving at:";
    for (const auto& v : axiom.violations) msg += " " + v.where;
    fail(errc::invalid_morphism, msg);
  }
  std::vector<MatchingEntry> entries;
  for (int i = 0; i < sigma.fn.index().count(); ++i)
    if (sigma.fn.value(i) > 0) entries.push_back({i, lifted.apply(i), sigma.fn.value(i)});
  return validate_matching(sigma, tau, std::move(entries));
}

namespace {

// A straight line between two embedded endpoint values. Both-infinite
// trajectories stay at infinity; mixed ones are rejected up front.
struct Trajectory {
  double start = 0.0;
  double end = 0.0;

  double at(double t) const {
    if (start == end) return start;
    return (1.0 - t) * start + t * end;
  }
  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

std::vector<Trajectory> build_trajectories(const Diagram& sigma, const Diagram& tau,
                                           const Matching& matching, bool with_anchors) {
  std::vector<Trajectory> trajs;
  auto push = [&](double a, double b) {
    if (is_inf(a) != is_inf(b))
      fail(errc::infinite_mixing,
           "a trajectory mixes a finite endpoint with an infinite one");
    Trajectory t{a, b};
    if (std::find(trajs.begin(), trajs.end(), t) == trajs.end()) trajs.push_back(t);
  };
  if (with_anchors) {
    // Both bottoms embed at 0, so the bottom trajectory is constant: it pins
    // 0 into every interpolation lattice at no distortion cost and makes the
    // displacement-vs-distortion comparison available at intermediate steps.
    // Matched trajectories stay at or above it and merge with it only at the
    // ends of [0,1], never strictly inside. The tops are not carried along:
    // a moving top would charge the connecting maps for distance no mass
    // travels.
    push(sigma.coords[sigma.fn.index().base().bottom()],
         tau.coords[tau.fn.index().base().bottom()]);
  }
  for (const MatchingEntry& e : matching.entries) {
    push(sigma.lo(e.source_interval), tau.lo(e.target_interval));
    push(sigma.hi(e.source_interval), tau.hi(e.target_interval));
  }
  return trajs;
}

// Sorted deduplicated trajectory values at time t, and each trajectory's
// point index.
struct PointSet {
  std::vector<double> points;
  std::vector<int> of_trajectory;
};

PointSet points_at(const std::vector<Trajectory>& trajs, double t) {
  std::vector<double> values;
  values.reserve(trajs.size());
  for (const Trajectory& traj : trajs) values.push_back(traj.at(t));
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  PointSet out;
  for (double v : sorted)
    if (out.points.empty() || !ext_close(out.points.back(), v)) out.points.push_back(v);
  out.of_trajectory.resize(trajs.size());
  for (std::size_t k = 0; k < trajs.size(); ++k) {
    auto it = std::lower_bound(out.points.begin(), out.points.end(), values[k] - ext_tol);
    if (it == out.points.end() || !ext_close(*it, values[k]))
      throw std::logic_error("trajectory value lost during deduplication");
    out.of_trajectory[k] = static_cast<int>(it - out.points.begin());
  }
  return out;
}

MetricLattice chain_from_points(const std::vector<double>& points) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<MetricEntry> entries;
  names.reserve(points.size());
  for (double v : points) names.push_back(format_real(v));
  for (std::size_t i = 0; i + 1 < points.size(); ++i) covers.emplace_back(names[i], names[i + 1]);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i; j < points.size(); ++j)
      entries.push_back({names[i], names[j], ext_abs_diff(points[i], points[j])});
  return validate_lattice(names, covers, entries, std::vector<double>(points.begin(), points.end()));
}

} // namespace

std::vector<double> critical_points(const Diagram& sigma, const Diagram& tau,
                                    const Matching& matching) {
  std::vector<Trajectory> trajs = build_trajectories(sigma, tau, matching, false);
  std::vector<double> found;
  for (std::size_t a = 0; a < trajs.size(); ++a) {
    if (is_inf(trajs[a].start)) continue;
    for (std::size_t b = a + 1; b < trajs.size(); ++b) {
      if (is_inf(trajs[b].start)) continue;
      const double d0 = trajs[a].start - trajs[b].start;
      const double d1 = trajs[a].end - trajs[b].end;
      if (d0 == d1) continue; // parallel; identical ones were deduplicated
      double t = d0 / (d0 - d1);
      if (t < -ext_tol || t > 1.0 + ext_tol) continue;
      found.push_back(std::clamp(t, 0.0, 1.0));
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<double> out;
  for (double t : found)
    if (out.empty() || t - out.back() > ext_tol) out.push_back(t);
  return out;
}

IntervalFunction interpolate(const Diagram& sigma, const Diagram& tau, const Matching& matching,
                             double t) {
  if (t < 0.0 || t > 1.0) fail(errc::parse_error, "interpolation time must lie in [0,1]");
  std::vector<Trajectory> trajs = build_trajectories(sigma, tau, matching, true);
  PointSet set = points_at(trajs, t);
  IntervalLattice intervals(chain_from_points(set.points));
  std::vector<int64_t> values(intervals.count(), 0);
  auto locate = [&](double lo_s, double lo_e, double hi_s, double hi_e) {
    Trajectory lo{lo_s, lo_e}, hi{hi_s, hi_e};
    auto lo_it = std::find(trajs.begin(), trajs.end(), lo);
    auto hi_it = std::find(trajs.begin(), trajs.end(), hi);
    int lo_pt = set.of_trajectory[lo_it - trajs.begin()];
    int hi_pt = set.of_trajectory[hi_it - trajs.begin()];
    return intervals.find_or_throw(lo_pt, hi_pt);
  };
  for (const MatchingEntry& e : matching.entries) {
    int idx = locate(sigma.lo(e.source_interval), tau.lo(e.target_interval),
                     sigma.hi(e.source_interval), tau.hi(e.target_interval));
    values[idx] += e.count;
  }
  return IntervalFunction(intervals, std::move(values));
}

FnPath witness_path(const Diagram& sigma, const Diagram& tau, const Matching& matching) {
  std::vector<Trajectory> trajs = build_trajectories(sigma, tau, matching, true);

  std::vector<double> anchors{0.0};
  for (double t : critical_points(sigma, tau, matching))
    if (t > ext_tol && t < 1.0 - ext_tol) anchors.push_back(t);
  anchors.push_back(1.0);

  auto is_degenerate = [&](double t) {
    // Two non-identical trajectories meeting at t would make the
    // endpoint-to-endpoint map ambiguous.
    for (std::size_t a = 0; a < trajs.size(); ++a)
      for (std::size_t b = a + 1; b < trajs.size(); ++b)
        if (ext_close(trajs[a].at(t), trajs[b].at(t))) return true;
    return false;
  };

  FnPath path;
  path.category = Category::fnc;
  path.objects.push_back(interpolate(sigma, tau, matching, 0.0));
  for (std::size_t seg = 0; seg + 1 < anchors.size(); ++seg) {
    const double lo = anchors[seg], hi = anchors[seg + 1];
    double mid = (lo + hi) / 2.0;
    for (int tries = 0; tries < 60 && is_degenerate(mid); ++tries) mid = (lo + mid) / 2.0;
    if (is_degenerate(mid))
      throw std::logic_error("no non-critical midpoint found between anchors");

    PointSet at_mid = points_at(trajs, mid);
    MetricLattice mid_lattice = chain_from_points(at_mid.points);
    IntervalFunction mid_fn = interpolate(sigma, tau, matching, mid);

    auto map_to = [&](double s, const IntervalFunction& target_fn) {
      PointSet at_s = points_at(trajs, s);
      std::vector<int> assignment(at_mid.points.size(), -1);
      for (std::size_t k = 0; k < trajs.size(); ++k) {
        int from = at_mid.of_trajectory[k], to = at_s.of_trajectory[k];
        if (assignment[from] >= 0 && assignment[from] != to)
          throw std::logic_error("trajectories disagree at a non-critical midpoint");
        assignment[from] = to;
      }
      return LatticeMap(mid_lattice, target_fn.index().base(), std::move(assignment));
    };

    // Backward leg into the left anchor, forward leg onto the right anchor.
    LatticeMap back = map_to(lo, path.objects.back());
    path.objects.push_back(mid_fn);
    path.steps.push_back({StepDirection::backward, std::move(back)});
    IntervalFunction next = interpolate(sigma, tau, matching, hi);
    LatticeMap ahead = map_to(hi, next);
    path.objects.push_back(std::move(next));
    path.steps.push_back({StepDirection::forward, std::move(ahead)});
  }
  path_length(path); // every leg must be a valid charge-preserving morphism
  return path;
}

EditBounds edit_bounds(const Diagram& sigma, const Diagram& tau) {
  EditBounds out;
  BottleneckResult flow = bottleneck(sigma, tau);
  out.lower = flow.distance;
  out.matching = std::move(flow.matching);
  if (is_inf(out.lower)) {
    // No finite-norm matching; there is nothing to interpolate along.
    out.upper = ext_inf;
    out.path.category = Category::fnc;
    out.path.objects.push_back(sigma.fn);
    return out;
  }
  out.path = witness_path(sigma, tau, out.matching);
  out.upper = path_length(out.path);
  return out;
}

} // namespace latpd
