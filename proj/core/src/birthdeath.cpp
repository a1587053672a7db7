#include "latpd/birthdeath.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace latpd {

IntervalFunction::IntervalFunction(IntervalLattice index, std::vector<int64_t> values)
    : index_(std::move(index)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != index_.count())
    fail(errc::parse_error, "one value per interval is required");
}

namespace {

int worker_count(int jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  int threads = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* cap = std::getenv("LATTICE_PD_THREADS")) {
    int parsed = std::atoi(cap);
    if (parsed >= 1) threads = std::min(threads, parsed);
  }
  return std::min(threads, jobs);
}

} // namespace

IntervalFunction bd(const Filtration& filtration, int dim, FieldConfig field) {
  validate_field(field.p);
  const IntervalLattice intervals(filtration.index());
  const ChainContext chains(filtration.complex(), field);
  const int top = filtration.index().top();

  std::vector<int64_t> values(intervals.count(), 0);
  auto compute = [&](int idx) {
    const Interval v = intervals.at(idx);
    if (v.hi == top) {
      values[idx] = chains.cycle_basis(filtration.stage(v.lo), dim).cols();
    } else {
      GFMatrix cycles = chains.cycle_basis(filtration.stage(v.lo), dim);
      GFMatrix bounds = chains.boundary_basis(filtration.stage(v.hi), dim);
      values[idx] = dim_intersection(cycles, bounds);
    }
  };

  const int jobs = intervals.count();
  const int threads = worker_count(jobs);
  if (threads <= 1 || jobs < 64) {
    for (int idx = 0; idx < jobs; ++idx) compute(idx);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (int idx = next.fetch_add(1); idx < jobs; idx = next.fetch_add(1)) compute(idx);
      });
    for (auto& worker : pool) worker.join();
  }
  return IntervalFunction(intervals, std::move(values));
}

CheckReport check_monotone(const IntervalFunction& f) {
  CheckReport report;
  const IntervalLattice& index = f.index();
  for (int i = 0; i < index.count(); ++i)
    for (int j = 0; j < index.count(); ++j)
      if (i != j && index.leq(i, j) && f.value(i) > f.value(j))
        report.add(index.name(i) + " vs " + index.name(j),
                   std::to_string(f.value(i)) + " > " + std::to_string(f.value(j)));
  return report;
}

CheckReport check_mon_morphism(const IntervalFunction& f, const IntervalFunction& g,
                               const IntervalMap& lifted) {
  if (!(lifted.source() == f.index()) || !(lifted.target() == g.index()))
    fail(errc::lattice_mismatch, "lifted map endpoints differ from the function lattices");
  CheckReport report;
  for (int i = 0; i < g.index().count(); ++i) {
    int star = lifted.preimage_max(i);
    if (g.value(i) != f.value(star))
      report.add(g.index().name(i), "expected " + std::to_string(f.value(star)) + " from " +
                                        f.index().name(star) + ", found " +
                                        std::to_string(g.value(i)));
  }
  return report;
}

MonMorphism make_mon_morphism(IntervalFunction source, IntervalFunction target, IntervalMap map) {
  CheckReport report = check_mon_morphism(source, target, map);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "Mon axiom fails at:";
    for (const auto& v : report.violations) msg << " " << v.where;
    fail(errc::invalid_morphism, msg.str());
  }
  return MonMorphism{std::move(source), std::move(target), std::move(map)};
}

MonMorphism compose_mon_morphisms(const MonMorphism& first, const MonMorphism& then) {
  if (!(first.target == then.source)) fail(errc::not_composable, "middle functions do not agree");
  return make_mon_morphism(first.source, then.target, compose(first.map, then.map));
}

MonMorphism terminal_mon(const IntervalFunction& f) {
  IntervalLattice point(one_point_lattice());
  IntervalFunction e(point, {f.top_value()});
  return make_mon_morphism(f, std::move(e), lift_map(LatticeMap::to_point(f.index().base())));
}

} // namespace latpd
