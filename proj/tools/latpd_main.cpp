// latpd: batch command line over lattice-indexed persistence pipelines.
// Subcommands read the JSON formats documented in the README and write
// deterministic JSON (or DOT/barcode text) to stdout. Validation failures
// exit 1 with a machine-readable diagnostic on stderr; usage errors exit 2.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "latpd/io.hpp"

using namespace latpd;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// lattice files have "elements", functions "values", filtrations
// "assignment"; used by render to dispatch
std::string sniff_kind(const std::string& path) {
  ordered_json obj = ordered_json::parse(slurp(path), nullptr, false);
  if (obj.is_discarded()) fail(errc::parse_error, "input is not valid JSON");
  if (obj.contains("values")) return "function";
  if (obj.contains("assignment")) return "filtration";
  if (obj.contains("elements")) return "lattice";
  if (obj.contains("simplices")) return "complex";
  fail(errc::parse_error, "cannot tell what kind of file this is");
}

void emit_report(const CheckReport& report) {
  std::cout << io::report_to_json(report);
  if (!report.ok())
    fail(errc::invalid_morphism, std::to_string(report.violations.size()) + " violation(s)");
}

std::string render_lattice_dot(const MetricLattice& lattice) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int e = 0; e < lattice.size(); ++e)
    out << "  n" << e << " [label=\"" << lattice.name(e) << "\"];\n";
  for (auto [lo, hi] : lattice.cover_pairs()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string render_function_dot(const IntervalFunction& fn) {
  const IntervalLattice& bars = fn.index();
  std::ostringstream out;
  out << "digraph function {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < bars.count(); ++i)
    out << "  n" << i << " [label=\"" << bars.name(i) << ": " << fn.value(i) << "\"];\n";
  for (int i = 0; i < bars.count(); ++i)
    for (int j = 0; j < bars.count(); ++j) {
      if (i == j || !bars.leq(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < bars.count() && cover; ++k)
        if (k != i && k != j && bars.leq(i, k) && bars.leq(k, j)) cover = false;
      if (cover) out << "  n" << i << " -> n" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

std::string render_barcode(const IntervalFunction& fn) {
  const std::vector<double> coords = make_embedding(fn.index().base());
  double finite_max = 0.0;
  for (double c : coords)
    if (!is_inf(c)) finite_max = std::max(finite_max, c);
  if (finite_max == 0.0) finite_max = 1.0;
  const int width = 48;
  auto column = [&](double x) {
    return static_cast<int>(std::min<double>(width, std::round(x / finite_max * width)));
  };
  std::ostringstream out;
  for (int i = 0; i < fn.index().count(); ++i) {
    if (fn.value(i) == 0) continue;
    const Interval v = fn.index().at(i);
    double lo = coords[v.lo], hi = coords[v.hi];
    std::string line(width + 1, ' ');
    int start = column(lo);
    int stop = is_inf(hi) ? width : column(hi);
    for (int c = start; c <= stop && c <= width; ++c) line[c] = '=';
    line[start] = '|';
    if (is_inf(hi))
      line[width] = '>';
    else
      line[stop] = '|';
    out << line << "  " << fn.index().name(i) << " x" << fn.value(i) << "\n";
  }
  return out.str();
}

Diagram diagram_from_file(const std::string& path) {
  return make_diagram(io::load_function(path));
}

ordered_json json_real(double value) {
  if (is_inf(value)) return ordered_json("inf");
  if (value == static_cast<int64_t>(value)) return ordered_json(static_cast<int64_t>(value));
  return ordered_json(value);
}

int run(int argc, char** argv) {
  CLI::App app{"persistence diagrams of lattice-indexed filtrations"};
  app.require_subcommand(1);
  argv = app.ensure_utf8(argv);

  std::string file, second, matching_file, path_out, kind, format = "dot", category;
  int dim = 0;
  int field = 2;
  bool full = false;
  bool sum = false;
  double t = 0.5;

  CLI::App* validate = app.add_subcommand("validate", "check a file against its invariants");
  validate->add_option("kind", kind, "lattice|complex|filtration|function|morphism|path")
      ->required();
  validate->add_option("file", file)->required();

  CLI::App* intervals = app.add_subcommand("intervals", "interval lattice of a lattice");
  intervals->add_option("file", file)->required();

  CLI::App* distortion_cmd = app.add_subcommand("distortion", "distortion of a morphism");
  distortion_cmd->add_option("file", file)->required();

  CLI::App* bd_cmd = app.add_subcommand("bd", "birth-death function of a filtration");
  bd_cmd->add_option("file", file)->required();
  bd_cmd->add_option("--dim", dim)->required();
  bd_cmd->add_option("--field", field);
  bd_cmd->add_flag("--full", full, "write zero intervals too");

  CLI::App* mobius_cmd = app.add_subcommand("mobius", "Mobius inversion of a function");
  mobius_cmd->add_option("file", file)->required();
  mobius_cmd->add_flag("--sum", sum, "down-set summation instead of inversion");
  mobius_cmd->add_flag("--full", full);

  CLI::App* pd_cmd = app.add_subcommand("pd", "persistence diagram of a filtration");
  pd_cmd->add_option("file", file)->required();
  pd_cmd->add_option("--dim", dim)->required();
  pd_cmd->add_option("--field", field);
  pd_cmd->add_flag("--full", full);

  CLI::App* check_cmd = app.add_subcommand("check", "verify a morphism triple");
  check_cmd->add_option("category", category, "fil|mon|fnc")->required();
  check_cmd->add_option("file", file)->required();

  CLI::App* kan_cmd = app.add_subcommand("kan", "push a filtration forward along a map");
  kan_cmd->add_option("filtration", file)->required();
  kan_cmd->add_option("morphism", second)->required();

  CLI::App* length_cmd = app.add_subcommand("path-length", "validated length of a path");
  length_cmd->add_option("file", file)->required();

  CLI::App* bottleneck_cmd = app.add_subcommand("bottleneck", "bottleneck distance");
  bottleneck_cmd->add_option("first", file)->required();
  bottleneck_cmd->add_option("second", second)->required();

  CLI::App* interp_cmd = app.add_subcommand("interpolate", "interpolated diagram at t");
  interp_cmd->add_option("first", file)->required();
  interp_cmd->add_option("second", second)->required();
  interp_cmd->add_option("--matching", matching_file)->required();
  interp_cmd->add_option("--t", t);
  interp_cmd->add_flag("--full", full);

  CLI::App* witness_cmd = app.add_subcommand("witness", "edit distance bounds with a path");
  witness_cmd->add_option("first", file)->required();
  witness_cmd->add_option("second", second)->required();
  witness_cmd->add_option("--path-out", path_out, "write the witness path to this file");
  witness_cmd->add_flag("--full", full);

  CLI::App* classical_cmd = app.add_subcommand("classical-pd", "signed-sum diagram");
  classical_cmd->add_option("file", file)->required();
  classical_cmd->add_option("--dim", dim)->required();
  classical_cmd->add_option("--field", field);
  classical_cmd->add_flag("--full", full);

  CLI::App* render_cmd = app.add_subcommand("render", "DOT or barcode text");
  render_cmd->add_option("file", file)->required();
  render_cmd->add_option("--format", format, "dot|barcode");

  CLI11_PARSE(app, argc, argv);

  if (*validate) {
    if (kind == "lattice") {
      io::load_lattice(file);
    } else if (kind == "complex") {
      io::load_complex(file);
    } else if (kind == "filtration") {
      io::load_filtration(file);
    } else if (kind == "function") {
      io::load_function(file);
    } else if (kind == "morphism") {
      io::load_morphism(file);
    } else if (kind == "path") {
      if (io::peek_path_category(file) == Category::fil)
        path_length(io::load_fil_path(file));
      else
        path_length(io::load_fn_path(file));
    } else {
      throw CLI::ValidationError(
          "kind must be one of lattice|complex|filtration|function|morphism|path");
    }
    std::cout << "{\n  \"valid\": true\n}\n";
  } else if (*intervals) {
    std::cout << io::lattice_to_json(IntervalLattice(io::load_lattice(file)).to_metric_lattice());
  } else if (*distortion_cmd) {
    std::cout << format_real(distortion(io::load_morphism(file))) << "\n";
  } else if (*bd_cmd) {
    std::cout << io::function_to_json(bd(io::load_filtration(file), dim, validate_field(field)),
                                      full);
  } else if (*mobius_cmd) {
    IntervalFunction fn = io::load_function(file);
    std::cout << io::function_to_json(sum ? mobius_sum(fn) : mobius_invert(fn), full);
  } else if (*pd_cmd) {
    std::cout << io::function_to_json(
        mobius_invert(bd(io::load_filtration(file), dim, validate_field(field))), full);
  } else if (*check_cmd) {
    if (category == "fil") {
      io::FilTriple triple = io::load_fil_triple(file);
      emit_report(check_filtration_morphism(triple.source, triple.target, triple.map));
    } else if (category == "mon") {
      io::FnTriple triple = io::load_fn_triple(file);
      emit_report(check_mon_morphism(triple.source, triple.target, lift_map(triple.map)));
    } else if (category == "fnc") {
      io::FnTriple triple = io::load_fn_triple(file);
      emit_report(check_charge_morphism(triple.source, triple.target, lift_map(triple.map)));
    } else {
      throw CLI::ValidationError("category must be fil, mon or fnc");
    }
  } else if (*kan_cmd) {
    Filtration f = io::load_filtration(file);
    LatticeMap alpha = io::load_morphism(second);
    std::cout << io::filtration_to_json(kan_extend(f, alpha));
  } else if (*length_cmd) {
    double length = io::peek_path_category(file) == Category::fil
                        ? path_length(io::load_fil_path(file))
                        : path_length(io::load_fn_path(file));
    std::cout << format_real(length) << "\n";
  } else if (*bottleneck_cmd) {
    Diagram sigma = diagram_from_file(file);
    Diagram tau = diagram_from_file(second);
    BottleneckResult result = bottleneck(sigma, tau);
    ordered_json out;
    out["distance"] = json_real(result.distance);
    out["matching"] = ordered_json::parse(io::matching_to_json(sigma, tau, result.matching));
    std::cout << out.dump(2) << "\n";
  } else if (*interp_cmd) {
    Diagram sigma = diagram_from_file(file);
    Diagram tau = diagram_from_file(second);
    Matching matching = io::load_matching(matching_file, sigma, tau);
    std::cout << io::function_to_json(interpolate(sigma, tau, matching, t), full);
  } else if (*witness_cmd) {
    Diagram sigma = diagram_from_file(file);
    Diagram tau = diagram_from_file(second);
    EditBounds bounds = edit_bounds(sigma, tau);
    ordered_json out;
    out["lower"] = json_real(bounds.lower);
    out["upper"] = json_real(bounds.upper);
    out["matching"] = ordered_json::parse(io::matching_to_json(sigma, tau, bounds.matching));
    std::string path_json = io::fn_path_to_json(bounds.path, full);
    out["path"] = ordered_json::parse(path_json);
    std::cout << out.dump(2) << "\n";
    if (!path_out.empty()) {
      std::ofstream sink(path_out);
      if (!sink) fail(errc::parse_error, "cannot write '" + path_out + "'");
      sink << path_json;
    }
  } else if (*classical_cmd) {
    Filtration f = io::load_classical_filtration(file);
    std::cout << io::function_to_json(classical_pd_signed(f, dim, validate_field(field)), full);
  } else if (*render_cmd) {
    std::string what = sniff_kind(file);
    if (what == "lattice") {
      std::cout << render_lattice_dot(io::load_lattice(file));
    } else if (what == "function") {
      IntervalFunction fn = io::load_function(file);
      bool barcode_ok = format == "barcode";
      if (barcode_ok) {
        try {
          make_embedding(fn.index().base());
        } catch (const validation_error&) {
          barcode_ok = false; // not totally ordered or not embedded: fall back
        }
      }
      std::cout << (barcode_ok ? render_barcode(fn) : render_function_dot(fn));
    } else {
      fail(errc::parse_error, "render expects a lattice or function file");
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;
  } catch (const validation_error& error) {
    ordered_json diag;
    diag["error"] = error.code_name();
    diag["message"] = error.what();
    std::cerr << diag.dump(2) << "\n";
    return 1;
  } catch (const std::exception& error) {
    ordered_json diag;
    diag["error"] = "Internal";
    diag["message"] = error.what();
    std::cerr << diag.dump(2) << "\n";
    return 1;
  }
}
