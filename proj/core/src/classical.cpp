#include "latpd/classical.hpp"

#include "latpd/mobius.hpp"

namespace latpd {

MetricLattice classical_lattice(const std::vector<double>& values) {
  if (values.empty()) fail(errc::empty_input, "at least one filtration value is required");
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    if (!(values[i] < values[i + 1]))
      fail(errc::not_increasing, "filtration values must be strictly increasing");
  const int n = static_cast<int>(values.size());
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<MetricEntry> entries;
  std::vector<double> coords;
  for (int a = 1; a <= n; ++a) {
    names.push_back(std::to_string(a));
    coords.push_back(values[a - 1] - values[0]);
  }
  names.push_back("inf");
  coords.push_back(ext_inf);
  for (int a = 0; a + 1 <= n; ++a) covers.emplace_back(names[a], names[a + 1]);
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) entries.push_back({names[a], names[b], ext_abs_diff(coords[a], coords[b])});
  return validate_lattice(names, covers, entries, std::move(coords));
}

namespace {

void require_classical(const MetricLattice& index) {
  const int n = index.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!index.leq(a, b) && !index.leq(b, a))
        fail(errc::not_classical_index, "index lattice is not totally ordered");
  for (int a = 0; a < n; ++a) {
    double d = index.dist(a, index.top());
    if (a != index.top() && !is_inf(d))
      fail(errc::not_classical_index, "the top stage must sit at infinite distance");
  }
}

} // namespace

IntervalFunction classical_pd_signed(const Filtration& filtration, int dim, FieldConfig field) {
  validate_field(field.p);
  require_classical(filtration.index());
  const MetricLattice& index = filtration.index();
  const int n = index.size();

  // Stages sorted bottom to top; stage -1 below the bottom is empty.
  std::vector<int> order(n);
  for (int a = 0; a < n; ++a) order[a] = a;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return a != b && index.leq(a, b); });

  const ChainContext chains(filtration.complex(), field);
  std::vector<int> cycle_dim(n + 1, 0); // position 0 is the empty stage
  std::vector<GFMatrix> cycles(n + 1), bounds(n + 1);
  SimplexMask empty(filtration.complex().count(), 0);
  cycles[0] = chains.cycle_basis(empty, dim);
  bounds[0] = chains.boundary_basis(empty, dim);
  for (int pos = 1; pos <= n; ++pos) {
    cycles[pos] = chains.cycle_basis(filtration.stage(order[pos - 1]), dim);
    bounds[pos] = chains.boundary_basis(filtration.stage(order[pos - 1]), dim);
    cycle_dim[pos] = cycles[pos].cols();
  }
  // rank of the homology map between stage positions a <= b
  auto rank_h = [&](int a, int b) {
    return static_cast<int64_t>(cycle_dim[a]) - dim_intersection(cycles[a], bounds[b]);
  };

  const IntervalLattice intervals(index);
  std::vector<int64_t> values(intervals.count(), 0);
  const int top_pos = n; // position of the infinity stage
  for (int idx = 0; idx < intervals.count(); ++idx) {
    const Interval v = intervals.at(idx);
    if (v.lo == v.hi) continue; // diagonal filled from the Mobius inversion below
    int a = 0, b = 0;
    for (int pos = 1; pos <= n; ++pos) {
      if (order[pos - 1] == v.lo) a = pos;
      if (order[pos - 1] == v.hi) b = pos;
    }
    if (b == top_pos) {
      values[idx] = rank_h(a, top_pos) - rank_h(a - 1, top_pos);
    } else {
      values[idx] = rank_h(a, b - 1) - rank_h(a - 1, b - 1) - rank_h(a, b) + rank_h(a - 1, b);
    }
  }
  IntervalFunction mobius = mobius_invert(bd(filtration, dim, field));
  for (int idx = 0; idx < intervals.count(); ++idx)
    if (intervals.diagonal(idx)) values[idx] = mobius.value(idx);
  return IntervalFunction(intervals, std::move(values));
}

CheckReport check_classical_equivalence(const Filtration& filtration, int dim, FieldConfig field) {
  IntervalFunction signed_sum = classical_pd_signed(filtration, dim, field);
  IntervalFunction mobius = mobius_invert(bd(filtration, dim, field));
  CheckReport report;
  for (int idx = 0; idx < signed_sum.index().count(); ++idx) {
    if (signed_sum.index().diagonal(idx)) continue;
    if (signed_sum.value(idx) != mobius.value(idx))
      report.add(signed_sum.index().name(idx),
                 "signed sum " + std::to_string(signed_sum.value(idx)) +
                     " differs from Mobius value " + std::to_string(mobius.value(idx)));
  }
  return report;
}

} // namespace latpd
