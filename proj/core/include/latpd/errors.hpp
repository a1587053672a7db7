#pragma once

#include <stdexcept>
#include <string>

namespace latpd {

// Machine-readable failure codes. The CLI mirrors the enumerator name
// verbatim in its JSON diagnostics, so renaming one is a breaking change.
enum class errc {
  not_a_poset,
  no_meet_or_join,
  bad_metric,
  unknown_element,
  not_a_lattice_map,
  empty_simplex,
  duplicate_vertex_in_simplex,
  not_a_subcomplex,
  dimension_mismatch,
  not_monotone,
  top_not_full,
  lattice_mismatch,
  not_composable,
  map_not_lifted,
  invalid_morphism,
  invalid_step,
  broken_chain,
  negative_mass,
  not_totally_ordered,
  no_embedding,
  infinite_mixing,
  not_increasing,
  empty_input,
  not_classical_index,
  not_prime,
  overflow,
  bad_matching,
  parse_error,
};

const char* errc_name(errc code);

class validation_error : public std::runtime_error {
public:
  validation_error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
  throw validation_error(code, detail);
}

} // namespace latpd
