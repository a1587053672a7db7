#pragma once

#include <vector>

#include "latpd/birthdeath.hpp"
#include "latpd/filtration.hpp"
#include "latpd/report.hpp"

namespace latpd {

// The index lattice of a one-parameter filtration at values r_1 < ... < r_n:
// the chain 1 < ... < n < inf with d(a,b) = |r_a - r_b| and d(a,inf) = inf,
// embedded by a -> r_a - r_1 so the bottom lands on 0.
MetricLattice classical_lattice(const std::vector<double>& values);

// The signed-sum persistence diagram: rank-based four-term sums for strict
// finite intervals, two-term sums against infinity, with stages below the
// bottom contributing empty ranks. Diagonal entries carry the Mobius values
// (the signed sums are only defined off the diagonal).
IntervalFunction classical_pd_signed(const Filtration& filtration, int dim, FieldConfig field = {});

// Compares the signed-sum diagram against the Mobius inversion of the
// birth-death function on every strict interval; expected to be empty.
CheckReport check_classical_equivalence(const Filtration& filtration, int dim,
                                        FieldConfig field = {});

} // namespace latpd
