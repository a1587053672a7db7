#pragma once

#include <string>
#include <vector>

namespace latpd {

// One axiom violation, located by the element/interval it occurred at.
struct Violation {
  std::string where;
  std::string detail;
};

// Result of a membership/morphism check. Checks report every violation,
// not just the first, so authored inputs can be fixed in one pass.
struct CheckReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string where, std::string detail) {
    violations.push_back({std::move(where), std::move(detail)});
  }
};

} // namespace latpd
