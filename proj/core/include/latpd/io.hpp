#pragma once

#include <string>

#include "latpd/classical.hpp"
#include "latpd/distances.hpp"

namespace latpd::io {

// All loaders accept either inline JSON objects or string references to
// other files; references are resolved relative to the referencing file.
// The parse_* variants take raw JSON text plus the directory used for
// resolving references.

MetricLattice load_lattice(const std::string& path);
MetricLattice parse_lattice(const std::string& text, const std::string& base_dir = ".");

SimplicialComplex load_complex(const std::string& path);
SimplicialComplex parse_complex(const std::string& text, const std::string& base_dir = ".");

Filtration load_filtration(const std::string& path);
Filtration parse_filtration(const std::string& text, const std::string& base_dir = ".");

IntervalFunction load_function(const std::string& path);
IntervalFunction parse_function(const std::string& text, const std::string& base_dir = ".");

// Standalone morphism files carry their own source/target lattices.
LatticeMap load_morphism(const std::string& path);
LatticeMap parse_morphism(const std::string& text, const std::string& base_dir = ".");

// A map whose endpoints are supplied by the caller (triples, kan).
LatticeMap parse_map_between(const std::string& text, const MetricLattice& source,
                             const MetricLattice& target);

struct FilTriple {
  Filtration source;
  Filtration target;
  LatticeMap map;
};
struct FnTriple {
  IntervalFunction source;
  IntervalFunction target;
  LatticeMap map; // between the base lattices
};
FilTriple load_fil_triple(const std::string& path);
FilTriple parse_fil_triple(const std::string& text, const std::string& base_dir = ".");
FnTriple load_fn_triple(const std::string& path);
FnTriple parse_fn_triple(const std::string& text, const std::string& base_dir = ".");

Category peek_path_category(const std::string& path);
FilPath load_fil_path(const std::string& path);
FilPath parse_fil_path(const std::string& text, const std::string& base_dir = ".");
FnPath load_fn_path(const std::string& path);
FnPath parse_fn_path(const std::string& text, const std::string& base_dir = ".");

Matching load_matching(const std::string& path, const Diagram& sigma, const Diagram& tau);
Matching parse_matching(const std::string& text, const Diagram& sigma, const Diagram& tau);

Filtration load_classical_filtration(const std::string& path);
Filtration parse_classical_filtration(const std::string& text, const std::string& base_dir = ".");

// Writers emit deterministic, self-contained JSON (2-space indent, fixed key
// and item order, trailing newline).
std::string lattice_to_json(const MetricLattice& lattice);
std::string complex_to_json(const SimplicialComplex& complex);
std::string filtration_to_json(const Filtration& filtration);
std::string function_to_json(const IntervalFunction& fn, bool include_zeros = false);
std::string matching_to_json(const Diagram& sigma, const Diagram& tau, const Matching& matching);
std::string fn_path_to_json(const FnPath& path, bool include_zeros = false);
std::string report_to_json(const CheckReport& report);

} // namespace latpd::io
