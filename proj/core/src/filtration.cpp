#include "latpd/filtration.hpp"

#include <sstream>

namespace latpd {

Filtration::Filtration(MetricLattice index, SimplicialComplex complex,
                       std::vector<SimplexMask> stages)
    : index_(std::move(index)), complex_(std::move(complex)), stages_(std::move(stages)) {}

Filtration validate_filtration(MetricLattice index, SimplicialComplex complex,
                               std::vector<SimplexMask> stages) {
  if (static_cast<int>(stages.size()) != index.size())
    fail(errc::parse_error, "one subcomplex per lattice element is required");
  for (int a = 0; a < index.size(); ++a) require_subcomplex(complex, stages[a]);
  for (int a = 0; a < index.size(); ++a)
    for (int b = 0; b < index.size(); ++b)
      if (index.leq(a, b) && !mask_subset(stages[a], stages[b]))
        fail(errc::not_monotone, "stage at '" + index.name(a) +
                                     "' is not contained in stage at '" + index.name(b) + "'");
  if (stages[index.top()] != full_mask(complex))
    fail(errc::top_not_full, "the top element must carry the whole complex");
  return Filtration(std::move(index), std::move(complex), std::move(stages));
}

CheckReport check_filtration_morphism(const Filtration& source, const Filtration& target,
                                      const LatticeMap& alpha) {
  if (!(alpha.source() == source.index()) || !(alpha.target() == target.index()))
    fail(errc::lattice_mismatch, "map endpoints differ from the filtration index lattices");
  if (!(source.complex() == target.complex()))
    fail(errc::lattice_mismatch, "filtrations are over different complexes");
  CheckReport report;
  for (int a = 0; a < target.index().size(); ++a) {
    int star = preimage_max(alpha, a);
    if (target.stage(a) != source.stage(star))
      report.add(target.index().name(a),
                 "stage differs from the source stage at '" + source.index().name(star) + "'");
  }
  return report;
}

Filtration kan_extend(const Filtration& source, const LatticeMap& alpha) {
  if (!(alpha.source() == source.index()))
    fail(errc::lattice_mismatch, "map source differs from the filtration index lattice");
  std::vector<SimplexMask> stages;
  stages.reserve(alpha.target().size());
  for (int a = 0; a < alpha.target().size(); ++a)
    stages.push_back(source.stage(preimage_max(alpha, a)));
  // The top stage is the source top stage, which is the whole complex.
  return validate_filtration(alpha.target(), source.complex(), std::move(stages));
}

FiltrationMorphism make_filtration_morphism(Filtration source, Filtration target, LatticeMap map) {
  CheckReport report = check_filtration_morphism(source, target, map);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "morphism axiom fails at:";
    for (const auto& v : report.violations) msg << " '" << v.where << "'";
    fail(errc::invalid_morphism, msg.str());
  }
  return FiltrationMorphism{std::move(source), std::move(target), std::move(map)};
}

FiltrationMorphism compose_filtration_morphisms(const FiltrationMorphism& first,
                                                const FiltrationMorphism& then) {
  if (!(first.target == then.source))
    fail(errc::not_composable, "middle filtrations do not agree");
  return make_filtration_morphism(first.source, then.target, compose(first.map, then.map));
}

} // namespace latpd
