#include "latpd/mobius.hpp"

#include <sstream>

namespace latpd {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    fail(errc::overflow, "integer overflow while summing interval values");
  return out;
}

int64_t checked_sub(int64_t a, int64_t b) {
  int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out))
    fail(errc::overflow, "integer overflow while summing interval values");
  return out;
}

} // namespace

IntervalFunction mobius_invert(const IntervalFunction& f) {
  const IntervalLattice& index = f.index();
  std::vector<int64_t> sigma(index.count(), 0);
  // Any linear extension gives the same sigma; the lattice fixes one.
  for (int j : index.linear_extension()) {
    int64_t below = 0;
    for (int i = 0; i < index.count(); ++i)
      if (i != j && index.leq(i, j)) below = checked_add(below, sigma[i]);
    sigma[j] = checked_sub(f.value(j), below);
  }
  return IntervalFunction(index, std::move(sigma));
}

IntervalFunction mobius_sum(const IntervalFunction& sigma) {
  const IntervalLattice& index = sigma.index();
  std::vector<int64_t> f(index.count(), 0);
  for (int j = 0; j < index.count(); ++j) {
    int64_t total = 0;
    for (int i = 0; i < index.count(); ++i)
      if (index.leq(i, j)) total = checked_add(total, sigma.value(i));
    f[j] = total;
  }
  return IntervalFunction(index, std::move(f));
}

IntervalFunction pushforward(const IntervalFunction& sigma, const IntervalMap& lifted) {
  if (!(lifted.source() == sigma.index()))
    fail(errc::lattice_mismatch, "lifted map source differs from the function lattice");
  std::vector<int64_t> tau(lifted.target().count(), 0);
  for (int j = 0; j < sigma.index().count(); ++j) {
    int image = lifted.apply(j);
    tau[image] = checked_add(tau[image], sigma.value(j));
  }
  return IntervalFunction(lifted.target(), std::move(tau));
}

CheckReport check_charge_morphism(const IntervalFunction& sigma, const IntervalFunction& tau,
                                  const IntervalMap& lifted) {
  if (!(lifted.source() == sigma.index()) || !(lifted.target() == tau.index()))
    fail(errc::lattice_mismatch, "lifted map endpoints differ from the function lattices");
  IntervalFunction pushed = pushforward(sigma, lifted);
  CheckReport report;
  for (int i = 0; i < tau.index().count(); ++i) {
    if (tau.index().diagonal(i)) continue;
    if (pushed.value(i) != tau.value(i))
      report.add(tau.index().name(i), "fiber sum " + std::to_string(pushed.value(i)) +
                                          " differs from " + std::to_string(tau.value(i)));
  }
  return report;
}

ChargeMorphism make_charge_morphism(IntervalFunction source, IntervalFunction target,
                                    IntervalMap map) {
  CheckReport report = check_charge_morphism(source, target, map);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "Fnc axiom fails at:";
    for (const auto& v : report.violations) msg << " " << v.where;
    fail(errc::invalid_morphism, msg.str());
  }
  return ChargeMorphism{std::move(source), std::move(target), std::move(map)};
}

ChargeMorphism compose_charge_morphisms(const ChargeMorphism& first, const ChargeMorphism& then) {
  if (!(first.target == then.source)) fail(errc::not_composable, "middle functions do not agree");
  // Lifted maps never send a non-diagonal interval to a diagonal one, so the
  // fiber sums compose and the composite is valid; re-checked anyway.
  return make_charge_morphism(first.source, then.target, compose(first.map, then.map));
}

} // namespace latpd
