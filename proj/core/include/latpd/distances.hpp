#pragma once

#include <cstdint>
#include <vector>

#include "latpd/birthdeath.hpp"
#include "latpd/filtration.hpp"
#include "latpd/mobius.hpp"

namespace latpd {

enum class Category { fil, mon, fnc };
enum class StepDirection { forward, backward };

// A zigzag of morphisms. Objects are explicit; step k connects objects k and
// k+1, with `forward` meaning the morphism points from k to k+1. Length is
// the sum of the step distortions under extended arithmetic.
struct PathStep {
  StepDirection direction = StepDirection::forward;
  LatticeMap map;
};

struct FilPath {
  std::vector<Filtration> objects;
  std::vector<PathStep> steps;
};

struct FnPath {
  Category category = Category::mon;
  std::vector<IntervalFunction> objects;
  std::vector<PathStep> steps;
};

// Validates every step in its category (BrokenChain for endpoint mismatches,
// InvalidStep when a morphism axiom fails) and returns the summed distortion.
double path_length(const FilPath& path);
double path_length(const FnPath& path);

// Stepwise images of a path under the two functors; step maps and directions
// are carried over unchanged, so lengths agree exactly.
FnPath bd_path(const FilPath& path, int dim, FieldConfig field = {});
FnPath mobius_path(const FnPath& mon_path);

// An isometric, strictly monotone embedding of a totally ordered lattice into
// the extended reals with bottom at 0. Taken from the lattice coords when
// present, otherwise from numeric element names.
std::vector<double> make_embedding(const MetricLattice& lattice);

// A non-negative integral function over an embedded chain; the raw material
// of matchings.
struct Diagram {
  IntervalFunction fn;
  std::vector<double> coords; // one per base element

  double lo(int interval_idx) const { return coords[fn.index().at(interval_idx).lo]; }
  double hi(int interval_idx) const { return coords[fn.index().at(interval_idx).hi]; }
};

Diagram make_diagram(IntervalFunction fn);

// sup distance between two embedded intervals
double interval_sup_dist(double lo_a, double hi_a, double lo_b, double hi_b);

struct MatchingEntry {
  int source_interval = 0; // index into the source interval lattice
  int target_interval = 0; // index into the target interval lattice
  int64_t count = 0;
};

struct Matching {
  std::vector<MatchingEntry> entries; // sorted by (source, target), counts > 0
};

// Marginal constraints: rows of non-diagonal source intervals sum to sigma,
// columns of non-diagonal target intervals sum to tau, all counts positive.
Matching validate_matching(const Diagram& sigma, const Diagram& tau,
                           std::vector<MatchingEntry> entries);

// Worst sup-distance over the support; 0 for empty support.
double matching_norm(const Diagram& sigma, const Diagram& tau, const Matching& matching);

struct BottleneckResult {
  double distance = 0.0;
  Matching matching; // a witness of minimal norm
};

// Minimal matching norm. Costs take finitely many values (pairwise sup
// distances plus best diagonal absorptions), so the minimum is attained at a
// candidate; feasibility at a candidate is an integral max-flow check.
BottleneckResult bottleneck(const Diagram& sigma, const Diagram& tau);

// The matching induced by a single charge-preserving morphism:
// gamma(I, lifted(I)) = sigma(I). Its norm is the maximal displacement,
// which never exceeds the map distortion.
Matching morphism_to_matching(const Diagram& sigma, const Diagram& tau, const IntervalMap& lifted);

// Parameters in [0,1] where two endpoint trajectories of the matching cross
// or merge, deduplicated within tolerance. The constant bottom and top
// trajectories are carried along; they never cross anything strictly inside
// (0,1).
std::vector<double> critical_points(const Diagram& sigma, const Diagram& tau,
                                    const Matching& matching);

// The interpolated function at time t, over the chain built from the
// trajectory endpoint set (plus the bottom/top trajectory images).
IntervalFunction interpolate(const Diagram& sigma, const Diagram& tau, const Matching& matching,
                             double t);

// The zigzag of charge-preserving morphisms through the interpolation at
// non-critical midpoints; total length is at most twice the matching norm.
FnPath witness_path(const Diagram& sigma, const Diagram& tau, const Matching& matching);

struct EditBounds {
  double lower = 0.0; // bottleneck distance
  double upper = 0.0; // witness path length on an optimal matching
  Matching matching;
  FnPath path;
};

EditBounds edit_bounds(const Diagram& sigma, const Diagram& tau);

} // namespace latpd
