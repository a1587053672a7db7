#pragma once

// Seeded random instances for the property suites: metric lattices from a
// few structural families, bounded lattice maps found by backtracking,
// monotone filtrations, and embedded chains with dyadic coordinates (so
// distortion identities compare exactly in floating point).

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latpd/distances.hpp"
#include "latpd/filtration.hpp"
#include "latpd/lattice.hpp"

namespace latpd::testgen {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double dyadic(Rng& rng, int max_halves) {
  return pick(rng, 1, max_halves) * 0.5;
}

// ---- lattices -------------------------------------------------------------

inline MetricLattice chain_lattice(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(names[i], names[i + 1]);
  return validate_lattice(names, covers);
}

inline MetricLattice diamond_lattice(int atoms) {
  std::vector<std::string> names{"bot"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < atoms; ++i) {
    names.push_back("m" + std::to_string(i));
    covers.emplace_back("bot", names.back());
  }
  names.push_back("top");
  for (int i = 0; i < atoms; ++i) covers.emplace_back("m" + std::to_string(i), "top");
  return validate_lattice(names, covers);
}

inline MetricLattice grid_lattice(int rows, int cols) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  auto name = [](int r, int c) { return "g" + std::to_string(r) + "_" + std::to_string(c); };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) names.push_back(name(r, c));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (r + 1 < rows) covers.emplace_back(name(r, c), name(r + 1, c));
      if (c + 1 < cols) covers.emplace_back(name(r, c), name(r, c + 1));
    }
  return validate_lattice(names, covers);
}

// Re-validates an order skeleton with dyadic edge weights turned into a
// shortest-path metric (a metric by construction).
inline MetricLattice with_random_metric(Rng& rng, const MetricLattice& skeleton) {
  if (pick(rng, 0, 1) == 0) return skeleton; // keep the unit Hasse metric
  const int n = skeleton.size();
  auto covers = skeleton.cover_pairs();
  std::vector<double> weight(covers.size());
  for (double& w : weight) w = dyadic(rng, 4);
  // Floyd-Warshall over the undirected weighted cover graph.
  std::vector<double> dist(static_cast<std::size_t>(n) * n, ext_inf);
  for (int i = 0; i < n; ++i) dist[static_cast<std::size_t>(i) * n + i] = 0.0;
  for (std::size_t e = 0; e < covers.size(); ++e) {
    auto [a, b] = covers[e];
    dist[static_cast<std::size_t>(a) * n + b] = std::min(dist[static_cast<std::size_t>(a) * n + b], weight[e]);
    dist[static_cast<std::size_t>(b) * n + a] = dist[static_cast<std::size_t>(a) * n + b];
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dist[static_cast<std::size_t>(i) * n + j] =
            std::min(dist[static_cast<std::size_t>(i) * n + j],
                     dist[static_cast<std::size_t>(i) * n + k] + dist[static_cast<std::size_t>(k) * n + j]);
  std::vector<MetricEntry> entries;
  std::vector<std::pair<std::string, std::string>> order;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (skeleton.leq(a, b)) order.emplace_back(skeleton.name(a), skeleton.name(b));
      if (a <= b)
        entries.push_back({skeleton.name(a), skeleton.name(b), dist[static_cast<std::size_t>(a) * n + b]});
    }
  return validate_lattice(skeleton.names(), order, entries);
}

inline MetricLattice random_lattice(Rng& rng, int max_elems = 8) {
  MetricLattice skeleton;
  switch (pick(rng, 0, 3)) {
    case 0: skeleton = chain_lattice(pick(rng, 1, std::min(max_elems, 6))); break;
    case 1: skeleton = diamond_lattice(pick(rng, 2, std::min(max_elems - 2, 4))); break;
    case 2: skeleton = grid_lattice(2, pick(rng, 2, std::min(max_elems / 2, 4))); break;
    default: skeleton = grid_lattice(pick(rng, 2, 2), pick(rng, 2, std::min(max_elems / 2, 4))); break;
  }
  return with_random_metric(rng, skeleton);
}

inline std::vector<int> linear_extension(const MetricLattice& lattice) {
  std::vector<int> order(lattice.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> down(lattice.size(), 0);
  for (int a = 0; a < lattice.size(); ++a)
    for (int c = 0; c < lattice.size(); ++c)
      if (lattice.leq(c, a)) ++down[a];
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tuple(down[a], a) < std::tuple(down[b], b);
  });
  return order;
}

// ---- bounded lattice maps ---------------------------------------------------

// Randomised backtracking over a linear extension; monotonicity prunes the
// search and the meet/join axioms are re-checked pairwise on completion.
inline std::optional<LatticeMap> try_random_bounded_map(Rng& rng, const MetricLattice& source,
                                                        const MetricLattice& target,
                                                        int node_budget = 100000) {
  std::vector<int> order = linear_extension(source);
  std::vector<int> assignment(source.size(), -1);
  assignment[source.bottom()] = target.bottom();
  assignment[source.top()] = target.top();

  int budget = node_budget;
  auto consistent = [&](int elem, int value) {
    for (int other = 0; other < source.size(); ++other) {
      if (assignment[other] < 0 || other == elem) continue;
      if (source.leq(other, elem) && !target.leq(assignment[other], value)) return false;
      if (source.leq(elem, other) && !target.leq(value, assignment[other])) return false;
      int m = source.meet(elem, other), j = source.join(elem, other);
      if (assignment[m] >= 0 && assignment[m] != target.meet(value, assignment[other]))
        return false;
      if (assignment[j] >= 0 && assignment[j] != target.join(value, assignment[other]))
        return false;
    }
    return true;
  };
  std::vector<int> candidates(target.size());
  std::iota(candidates.begin(), candidates.end(), 0);

  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (budget-- <= 0) return false;
    while (pos < order.size() && assignment[order[pos]] >= 0) ++pos;
    if (pos == order.size()) return check_lattice_map(source, target, assignment).ok();
    int elem = order[pos];
    std::vector<int> shuffled = candidates;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (int value : shuffled) {
      if (!consistent(elem, value)) continue;
      assignment[elem] = value;
      if (self(self, pos + 1)) return true;
      assignment[elem] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return LatticeMap(source, target, assignment);
}

inline LatticeMap random_bounded_map(Rng& rng, const MetricLattice& source,
                                     const MetricLattice& target) {
  auto found = try_random_bounded_map(rng, source, target);
  if (found) return *found;
  return LatticeMap::to_point(source); // only possible when target is the point
}

// A random lattice admitting a surjection onto `base`, with the surjection.
// Product projections and interval endpoint maps give structural variety;
// surjectivity is what makes F |-> F o beta a right inverse of kan_extend.
struct Surjection {
  MetricLattice source;
  LatticeMap map;
};

inline Surjection random_surjection_onto(Rng& rng, const MetricLattice& base) {
  switch (pick(rng, 0, 2)) {
    case 0: { // product with a short chain, first projection
      int height = pick(rng, 2, 3);
      std::vector<std::string> names;
      std::vector<std::pair<std::string, std::string>> covers;
      auto name = [&](int a, int level) {
        return base.name(a) + "#" + std::to_string(level);
      };
      for (int a = 0; a < base.size(); ++a)
        for (int level = 0; level < height; ++level) names.push_back(name(a, level));
      for (int a = 0; a < base.size(); ++a)
        for (int b = 0; b < base.size(); ++b)
          if (base.leq(a, b))
            for (int la = 0; la < height; ++la)
              for (int lb = la; lb < height; ++lb) covers.emplace_back(name(a, la), name(b, lb));
      MetricLattice product = validate_lattice(names, covers);
      std::vector<int> proj(product.size());
      for (int a = 0; a < base.size(); ++a)
        for (int level = 0; level < height; ++level)
          proj[product.index(name(a, level))] = a;
      return {product, LatticeMap(product, base, proj)};
    }
    case 1: { // interval lattice with the upper endpoint map
      IntervalLattice intervals(base);
      MetricLattice as_lattice = intervals.to_metric_lattice();
      std::vector<int> upper(as_lattice.size());
      for (int i = 0; i < intervals.count(); ++i)
        upper[as_lattice.index(intervals.name(i))] = intervals.at(i).hi;
      return {as_lattice, LatticeMap(as_lattice, base, upper)};
    }
    default: { // identity
      return {base, LatticeMap::identity(base)};
    }
  }
}

// ---- complexes and filtrations ---------------------------------------------

inline SimplicialComplex random_complex(Rng& rng, int max_simplices = 12) {
  for (;;) {
    std::vector<Simplex> maximal;
    int pieces = pick(rng, 1, 4);
    for (int k = 0; k < pieces; ++k) {
      int size = pick(rng, 1, 3);
      Simplex s;
      while (static_cast<int>(s.size()) < size) {
        int v = pick(rng, 0, 5);
        if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
      }
      std::sort(s.begin(), s.end());
      maximal.push_back(std::move(s));
    }
    SimplicialComplex complex = validate_complex(maximal);
    if (complex.count() <= max_simplices) return complex;
  }
}

inline SimplexMask random_subcomplex(Rng& rng, const SimplicialComplex& complex, double density) {
  SimplexMask mask(complex.count(), 0);
  std::bernoulli_distribution coin(density);
  for (int id = 0; id < complex.count(); ++id)
    if (coin(rng)) mask[id] = 1;
  // close downward
  for (int id = complex.count() - 1; id >= 0; --id)
    if (mask[id])
      for (int f : complex.faces(id)) mask[f] = 1;
  return mask;
}

inline Filtration random_filtration(Rng& rng, const MetricLattice& index,
                                    const SimplicialComplex& complex) {
  std::vector<SimplexMask> stages(index.size(), SimplexMask(complex.count(), 0));
  for (int a : linear_extension(index)) {
    SimplexMask mask = random_subcomplex(rng, complex, 0.35);
    for (int b = 0; b < index.size(); ++b)
      if (b != a && index.leq(b, a))
        for (int id = 0; id < complex.count(); ++id)
          if (stages[b][id]) mask[id] = 1;
    stages[a] = std::move(mask);
  }
  stages[index.top()] = full_mask(complex);
  return validate_filtration(index, complex, stages);
}

// ---- functions and diagrams --------------------------------------------------

inline IntervalFunction random_function(Rng& rng, const IntervalLattice& intervals, int lo = -3,
                                        int hi = 3) {
  std::vector<int64_t> values(intervals.count());
  for (auto& v : values) v = pick(rng, lo, hi);
  return IntervalFunction(intervals, std::move(values));
}

// Strictly increasing dyadic coordinates starting at 0, named by their value,
// so the chain embeds isometrically via its element names.
inline MetricLattice random_embedded_chain(Rng& rng, int max_elems = 6) {
  int n = pick(rng, 2, max_elems);
  std::vector<double> coords{0.0};
  while (static_cast<int>(coords.size()) < n) coords.push_back(coords.back() + dyadic(rng, 4));
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<MetricEntry> entries;
  for (double c : coords) names.push_back(format_real(c));
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(names[i], names[i + 1]);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) entries.push_back({names[i], names[j], coords[j] - coords[i]});
  return validate_lattice(names, covers, entries);
}

inline Diagram random_diagram(Rng& rng, const MetricLattice& chain, int max_mass = 3) {
  IntervalLattice intervals(chain);
  std::vector<int64_t> values(intervals.count(), 0);
  int classes = pick(rng, 0, 3);
  for (int k = 0; k < classes; ++k)
    values[pick(rng, 0, intervals.count() - 1)] += pick(rng, 1, max_mass);
  return make_diagram(IntervalFunction(intervals, std::move(values)));
}

// ---- paths -------------------------------------------------------------------

// A random Fil zigzag from `start`: forward legs are Kan extensions along
// random bounded maps, backward legs pull back along random surjections.
inline FilPath random_fil_path(Rng& rng, Filtration start, int steps) {
  FilPath path;
  path.objects.push_back(std::move(start));
  for (int k = 0; k < steps; ++k) {
    const Filtration& current = path.objects.back();
    if (pick(rng, 0, 1) == 0) {
      MetricLattice next_index = random_lattice(rng);
      auto alpha = try_random_bounded_map(rng, current.index(), next_index);
      if (!alpha) {
        next_index = one_point_lattice();
        alpha = LatticeMap::to_point(current.index());
      }
      Filtration next = kan_extend(current, *alpha);
      path.steps.push_back({StepDirection::forward, *alpha});
      path.objects.push_back(std::move(next));
    } else {
      Surjection surj = random_surjection_onto(rng, current.index());
      std::vector<SimplexMask> stages;
      stages.reserve(surj.source.size());
      for (int r = 0; r < surj.source.size(); ++r)
        stages.push_back(current.stage(surj.map.apply(r)));
      Filtration next = validate_filtration(surj.source, current.complex(), std::move(stages));
      path.steps.push_back({StepDirection::backward, surj.map});
      path.objects.push_back(std::move(next));
    }
  }
  return path;
}

} // namespace latpd::testgen
