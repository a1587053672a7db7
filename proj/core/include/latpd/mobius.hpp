#pragma once

#include "latpd/birthdeath.hpp"
#include "latpd/lattice.hpp"
#include "latpd/report.hpp"

namespace latpd {

// The unique sigma with f(J) = sum of sigma over the down-set of J, obtained
// by walking a linear extension. Exact integer arithmetic; overflow aborts.
IntervalFunction mobius_invert(const IntervalFunction& f);

// Down-set summation, the inverse of mobius_invert.
IntervalFunction mobius_sum(const IntervalFunction& sigma);

// tau(I) := sum of sigma over the fiber of I, for every target interval
// including diagonals (empty fiber sums to 0).
IntervalFunction pushforward(const IntervalFunction& sigma, const IntervalMap& lifted);

// Fnc axiom: the fiber sums match tau on every non-diagonal target interval;
// diagonal intervals are exempt.
CheckReport check_charge_morphism(const IntervalFunction& sigma, const IntervalFunction& tau,
                                  const IntervalMap& lifted);

struct ChargeMorphism {
  IntervalFunction source;
  IntervalFunction target;
  IntervalMap map;
};

ChargeMorphism make_charge_morphism(IntervalFunction source, IntervalFunction target,
                                    IntervalMap map);
ChargeMorphism compose_charge_morphisms(const ChargeMorphism& first, const ChargeMorphism& then);

} // namespace latpd
