#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latpd/io.hpp"
#include "latpd/mobius.hpp"
#include "support/generators.hpp"

using namespace latpd;

namespace {

std::string data(const std::string& name) {
  return std::string(LATPD_TEST_DATA_DIR) + "/" + name;
}

int64_t at(const IntervalFunction& f, const char* lo, const char* hi) {
  const MetricLattice& base = f.index().base();
  return f.value_at(base.index(lo), base.index(hi));
}

} // namespace

TEST_CASE("persistence diagram of the triangle filtration") {
  Filtration f = io::load_filtration(data("triangle_F.json"));
  IntervalFunction sigma = mobius_invert(bd(f, 1));
  CHECK(sigma == io::load_function(data("pd1_sigma.json")));
  CHECK(at(sigma, "b", "d") == 1);
  CHECK(at(sigma, "c", "d") == 1);
  CHECK(at(sigma, "d", "d") == -1);
  int64_t nonzero = 0;
  for (int i = 0; i < sigma.index().count(); ++i)
    if (sigma.value(i) != 0) ++nonzero;
  CHECK(nonzero == 3);
}

TEST_CASE("persistence diagram of the edge filtration") {
  Filtration f = io::load_filtration(data("edge_F.json"));
  IntervalFunction sigma = mobius_invert(bd(f, 0));
  CHECK(at(sigma, "a", "d") == 1);
  CHECK(at(sigma, "b", "d") == 1);
  CHECK(at(sigma, "c", "c") == 1);
  CHECK(at(sigma, "d", "d") == -1);
  int64_t nonzero = 0;
  for (int i = 0; i < sigma.index().count(); ++i)
    if (sigma.value(i) != 0) ++nonzero;
  CHECK(nonzero == 4);
}

TEST_CASE("inversion and summation of trivial functions") {
  IntervalLattice bars(io::load_lattice(data("diamond.json")));
  IntervalFunction zero(bars, std::vector<int64_t>(bars.count(), 0));
  CHECK(mobius_invert(zero) == zero);
  CHECK(mobius_sum(zero) == zero);

  std::vector<int64_t> delta(bars.count(), 0);
  delta[bars.bottom()] = 1;
  IntervalFunction sum = mobius_sum(IntervalFunction(bars, std::move(delta)));
  for (int i = 0; i < bars.count(); ++i) CHECK(sum.value(i) == 1);
}

TEST_CASE("round trip on the bd1 function") {
  IntervalFunction f = io::load_function(data("bd1_f.json"));
  CHECK(mobius_sum(mobius_invert(f)) == f);
  CHECK(mobius_invert(mobius_sum(f)) == f);
}

TEST_CASE("round trip is exact on random functions") {
  testgen::Rng rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    IntervalLattice bars(testgen::random_lattice(rng, 8));
    IntervalFunction f = testgen::random_function(rng, bars, -5, 5);
    CHECK(mobius_sum(mobius_invert(f)) == f);
    CHECK(mobius_invert(mobius_sum(f)) == f);
  }
}

TEST_CASE("pushforward of pd1 sigma along the lifted map is pd1 tau") {
  IntervalFunction sigma = io::load_function(data("pd1_sigma.json"));
  IntervalFunction tau = io::load_function(data("pd1_tau.json"));
  IntervalMap lifted = lift_map(io::load_morphism(data("diamond_to_chain.json")));
  CHECK(pushforward(sigma, lifted) == tau);
  CHECK(pushforward(sigma, lift_map(LatticeMap::identity(sigma.index().base()))) == sigma);

  IntervalFunction collapsed =
      pushforward(sigma, lift_map(LatticeMap::to_point(sigma.index().base())));
  int64_t total = 0;
  for (int i = 0; i < sigma.index().count(); ++i) total += sigma.value(i);
  CHECK(collapsed.value(0) == total);
}

TEST_CASE("pd1 triple is charge-preserving") {
  IntervalFunction sigma = io::load_function(data("pd1_sigma.json"));
  IntervalFunction tau = io::load_function(data("pd1_tau.json"));
  IntervalMap lifted = lift_map(io::load_morphism(data("diamond_to_chain.json")));
  CHECK(check_charge_morphism(sigma, tau, lifted).ok());

  // perturbing tau on a non-diagonal interval is caught exactly there
  std::vector<int64_t> bent = tau.values();
  int pq = tau.index().find_or_throw(tau.index().base().index("p"), tau.index().base().index("q"));
  bent[pq] += 1;
  CheckReport report = check_charge_morphism(sigma, IntervalFunction(tau.index(), bent), lifted);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].where == "[p,q]");

  // but diagonal intervals are exempt
  std::vector<int64_t> diag = tau.values();
  diag[tau.index().find_or_throw(tau.index().base().index("q"), tau.index().base().index("q"))] += 7;
  CHECK(check_charge_morphism(sigma, IntervalFunction(tau.index(), diag), lifted).ok());
}

TEST_CASE("mobius inversion applied to the bd1 morphism gives pd1") {
  IntervalFunction f = io::load_function(data("bd1_f.json"));
  IntervalFunction g = io::load_function(data("bd1_g.json"));
  IntervalMap lifted = lift_map(io::load_morphism(data("diamond_to_chain.json")));
  REQUIRE(check_mon_morphism(f, g, lifted).ok());
  IntervalFunction sigma = mobius_invert(f), tau = mobius_invert(g);
  CHECK(sigma == io::load_function(data("pd1_sigma.json")));
  CHECK(tau == io::load_function(data("pd1_tau.json")));
  CHECK(check_charge_morphism(sigma, tau, lifted).ok());
}

TEST_CASE("functor law with the strengthened pushforward identity") {
  testgen::Rng rng(71);
  int produced = 0;
  for (int trial = 0; trial < 40; ++trial) {
    MetricLattice p = testgen::random_lattice(rng, 6);
    SimplicialComplex k = testgen::random_complex(rng);
    Filtration filt = testgen::random_filtration(rng, p, k);
    MetricLattice q = testgen::random_lattice(rng, 6);
    auto alpha = testgen::try_random_bounded_map(rng, p, q);
    if (!alpha) continue;
    ++produced;
    Filtration gilt = kan_extend(filt, *alpha);
    for (int dim = 0; dim <= k.dimension(); ++dim) {
      IntervalFunction f = bd(filt, dim), g = bd(gilt, dim);
      IntervalMap lifted = lift_map(*alpha);
      REQUIRE(check_mon_morphism(f, g, lifted).ok());
      IntervalFunction sigma = mobius_invert(f), tau = mobius_invert(g);
      CHECK(check_charge_morphism(sigma, tau, lifted).ok());
      // the proof gives equality on every interval, diagonals included
      CHECK(pushforward(sigma, lifted) == tau);
    }
  }
  CHECK(produced > 10);
}

TEST_CASE("total mass equals the top value") {
  testgen::Rng rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    IntervalLattice bars(testgen::random_lattice(rng, 7));
    IntervalFunction f = testgen::random_function(rng, bars, -4, 4);
    IntervalFunction sigma = mobius_invert(f);
    int64_t total = 0;
    for (int i = 0; i < bars.count(); ++i) total += sigma.value(i);
    CHECK(total == f.top_value());
  }
}

TEST_CASE("charge morphism composition") {
  testgen::Rng rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    MetricLattice p = testgen::random_lattice(rng, 6);
    SimplicialComplex k = testgen::random_complex(rng);
    Filtration filt = testgen::random_filtration(rng, p, k);
    MetricLattice q = testgen::random_lattice(rng, 5);
    auto alpha = testgen::try_random_bounded_map(rng, p, q);
    if (!alpha) continue;
    Filtration gilt = kan_extend(filt, *alpha);
    IntervalFunction sigma = mobius_invert(bd(filt, 0));
    IntervalFunction tau = mobius_invert(bd(gilt, 0));
    ChargeMorphism first = make_charge_morphism(sigma, tau, lift_map(*alpha));
    // compose with the terminal collapse; any one-point function is terminal
    ChargeMorphism second = make_charge_morphism(
        tau, pushforward(tau, lift_map(LatticeMap::to_point(q))),
        lift_map(LatticeMap::to_point(q)));
    ChargeMorphism composite = compose_charge_morphisms(first, second);
    CHECK(check_charge_morphism(composite.source, composite.target, composite.map).ok());
    // identity composite
    ChargeMorphism ident =
        make_charge_morphism(sigma, sigma, lift_map(LatticeMap::identity(p)));
    CHECK(compose_charge_morphisms(ident, first).target == tau);
  }
}

TEST_CASE("overflow aborts instead of wrapping") {
  IntervalLattice bars(testgen::chain_lattice(2));
  std::vector<int64_t> huge(bars.count(), INT64_MAX / 2 + 1);
  CHECK_THROWS_WITH_AS(mobius_sum(IntervalFunction(bars, huge)), doctest::Contains("Overflow"),
                       validation_error);
}
