#include "latpd/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace latpd::io {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

json parse_text(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) fail(errc::parse_error, "input is not valid JSON");
  return parsed;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// A value that is either an inline object or a string reference to a file.
json resolve_ref(const json& value, const std::string& base_dir, std::string* next_dir) {
  if (value.is_string()) {
    fs::path target = fs::path(base_dir) / value.get<std::string>();
    *next_dir = target.parent_path().string();
    if (next_dir->empty()) *next_dir = ".";
    return parse_text(slurp(target.string()));
  }
  *next_dir = base_dir;
  return value;
}

double number_or_inf(const json& value, const char* what) {
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    if (s == "inf" || s == "+inf") return ext_inf;
    fail(errc::parse_error, std::string(what) + " must be a number or \"inf\"");
  }
  if (!value.is_number()) fail(errc::parse_error, std::string(what) + " must be a number or \"inf\"");
  return value.get<double>();
}

json real_to_json(double value) {
  if (is_inf(value)) return json("inf");
  if (value == static_cast<int64_t>(value)) return json(static_cast<int64_t>(value));
  return json(value);
}

const json& expect(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    fail(errc::parse_error, std::string("missing key '") + key + "'");
  return obj.at(key);
}

MetricLattice lattice_from_json(const json& value, const std::string& base_dir) {
  std::string dir;
  json obj = resolve_ref(value, base_dir, &dir);
  std::vector<std::string> elements;
  for (const json& e : expect(obj, "elements")) elements.push_back(e.get<std::string>());

  std::vector<std::pair<std::string, std::string>> order;
  const char* order_key = obj.contains("covers") ? "covers" : "leq";
  if (obj.contains(order_key))
    for (const json& pair : obj.at(order_key)) {
      if (!pair.is_array() || pair.size() != 2)
        fail(errc::parse_error, "order pairs must be [lo, hi]");
      order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }

  std::optional<std::vector<MetricEntry>> metric;
  if (obj.contains("metric")) {
    const json& m = obj.at("metric");
    const std::string type = expect(m, "type").get<std::string>();
    if (type == "explicit") {
      std::vector<MetricEntry> entries;
      for (const json& entry : expect(m, "entries")) {
        if (!entry.is_array() || entry.size() != 3)
          fail(errc::parse_error, "metric entries must be [a, b, value]");
        entries.push_back({entry[0].get<std::string>(), entry[1].get<std::string>(),
                           number_or_inf(entry[2], "metric value")});
      }
      metric = std::move(entries);
    } else if (type != "hasse") {
      fail(errc::parse_error, "metric type must be \"hasse\" or \"explicit\"");
    }
  }

  std::optional<std::vector<double>> coords;
  if (obj.contains("coords")) {
    const json& c = obj.at("coords");
    std::vector<double> values(elements.size(), 0.0);
    std::vector<char> seen(elements.size(), 0);
    for (auto it = c.begin(); it != c.end(); ++it) {
      auto pos = std::find(elements.begin(), elements.end(), it.key());
      if (pos == elements.end()) fail(errc::unknown_element, "coords name '" + it.key() + "'");
      values[pos - elements.begin()] = number_or_inf(it.value(), "coordinate");
      seen[pos - elements.begin()] = 1;
    }
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (!seen[i]) fail(errc::parse_error, "coords missing element '" + elements[i] + "'");
    coords = std::move(values);
  }
  return validate_lattice(std::move(elements), order, metric, std::move(coords));
}

SimplicialComplex complex_from_json(const json& value, const std::string& base_dir) {
  std::string dir;
  json obj = resolve_ref(value, base_dir, &dir);
  std::vector<Simplex> simplices;
  for (const json& s : expect(obj, "simplices")) {
    Simplex simplex;
    for (const json& v : s) {
      if (!v.is_number_integer()) fail(errc::parse_error, "vertices must be integers");
      simplex.push_back(v.get<int>());
    }
    simplices.push_back(std::move(simplex));
  }
  return validate_complex(simplices);
}

std::vector<Simplex> simplex_list(const json& value) {
  std::vector<Simplex> out;
  for (const json& s : value) {
    Simplex simplex;
    for (const json& v : s) simplex.push_back(v.get<int>());
    out.push_back(std::move(simplex));
  }
  return out;
}

Filtration filtration_from_json(const json& value, const std::string& base_dir) {
  std::string dir;
  json obj = resolve_ref(value, base_dir, &dir);
  MetricLattice lattice = lattice_from_json(expect(obj, "lattice"), dir);
  SimplicialComplex complex = complex_from_json(expect(obj, "complex"), dir);
  const json& assignment = expect(obj, "assignment");
  std::vector<SimplexMask> stages(lattice.size());
  std::vector<char> seen(lattice.size(), 0);
  for (auto it = assignment.begin(); it != assignment.end(); ++it) {
    int e = lattice.index(it.key());
    stages[e] = mask_from_simplices(complex, simplex_list(it.value()));
    seen[e] = 1;
  }
  for (int e = 0; e < lattice.size(); ++e)
    if (!seen[e]) fail(errc::parse_error, "assignment missing element '" + lattice.name(e) + "'");
  return validate_filtration(std::move(lattice), std::move(complex), std::move(stages));
}

IntervalFunction function_from_json(const json& value, const std::string& base_dir) {
  std::string dir;
  json obj = resolve_ref(value, base_dir, &dir);
  MetricLattice base = lattice_from_json(expect(obj, "lattice"), dir);
  IntervalLattice intervals(std::move(base));
  std::vector<int64_t> values(intervals.count(), 0);
  std::vector<char> seen(intervals.count(), 0);
  for (const json& row : expect(obj, "values")) {
    if (!row.is_array() || row.size() != 3)
      fail(errc::parse_error, "function values must be [lo, hi, value]");
    int lo = intervals.base().index(row[0].get<std::string>());
    int hi = intervals.base().index(row[1].get<std::string>());
    if (!row[2].is_number_integer())
      fail(errc::parse_error, "interval values must be integers");
    int idx = intervals.find_or_throw(lo, hi);
    if (seen[idx]) fail(errc::parse_error, "duplicate value for " + intervals.name(idx));
    seen[idx] = 1;
    values[idx] = row[2].get<int64_t>();
  }
  return IntervalFunction(std::move(intervals), std::move(values));
}

LatticeMap map_between(const json& map_obj, const MetricLattice& source,
                       const MetricLattice& target) {
  std::vector<int> assignment(source.size(), -1);
  for (auto it = map_obj.begin(); it != map_obj.end(); ++it)
    assignment[source.index(it.key())] = target.index(it.value().get<std::string>());
  for (int a = 0; a < source.size(); ++a)
    if (assignment[a] < 0)
      fail(errc::parse_error, "map missing source element '" + source.name(a) + "'");
  return LatticeMap(source, target, std::move(assignment));
}

LatticeMap morphism_from_json(const json& value, const std::string& base_dir) {
  std::string dir;
  json obj = resolve_ref(value, base_dir, &dir);
  MetricLattice source = lattice_from_json(expect(obj, "source"), dir);
  MetricLattice target = lattice_from_json(expect(obj, "target"), dir);
  return map_between(expect(obj, "map"), source, target);
}

const json& step_map_obj(const json& step) {
  if (step.contains("morphism")) return expect(step.at("morphism"), "map");
  return expect(step, "map");
}

StepDirection step_direction(const json& step) {
  const std::string dir = expect(step, "direction").get<std::string>();
  if (dir == "fwd" || dir == "forward") return StepDirection::forward;
  if (dir == "bwd" || dir == "backward") return StepDirection::backward;
  fail(errc::parse_error, "step direction must be \"fwd\" or \"bwd\"");
}

Category category_from_string(const std::string& name) {
  if (name == "fil") return Category::fil;
  if (name == "mon") return Category::mon;
  if (name == "fnc") return Category::fnc;
  fail(errc::parse_error, "category must be \"fil\", \"mon\" or \"fnc\"");
}

FilPath fil_path_from_json(const json& obj, const std::string& base_dir) {
  FilPath path;
  path.objects.push_back(filtration_from_json(expect(obj, "start"), base_dir));
  for (const json& step : expect(obj, "steps")) {
    const Filtration& prev = path.objects.back();
    Filtration next = filtration_from_json(expect(step, "object"), base_dir);
    StepDirection dir = step_direction(step);
    const MetricLattice& from = dir == StepDirection::forward ? prev.index() : next.index();
    const MetricLattice& to = dir == StepDirection::forward ? next.index() : prev.index();
    path.steps.push_back({dir, map_between(step_map_obj(step), from, to)});
    path.objects.push_back(std::move(next));
  }
  return path;
}

FnPath fn_path_from_json(const json& obj, const std::string& base_dir, Category category) {
  FnPath path;
  path.category = category;
  path.objects.push_back(function_from_json(expect(obj, "start"), base_dir));
  for (const json& step : expect(obj, "steps")) {
    const IntervalFunction& prev = path.objects.back();
    IntervalFunction next = function_from_json(expect(step, "object"), base_dir);
    StepDirection dir = step_direction(step);
    const MetricLattice& from =
        dir == StepDirection::forward ? prev.index().base() : next.index().base();
    const MetricLattice& to =
        dir == StepDirection::forward ? next.index().base() : prev.index().base();
    path.steps.push_back({dir, map_between(step_map_obj(step), from, to)});
    path.objects.push_back(std::move(next));
  }
  return path;
}

json lattice_json(const MetricLattice& lattice) {
  json obj;
  obj["elements"] = json::array();
  for (int e = 0; e < lattice.size(); ++e) obj["elements"].push_back(lattice.name(e));
  obj["covers"] = json::array();
  for (auto [lo, hi] : lattice.cover_pairs())
    obj["covers"].push_back(json::array({lattice.name(lo), lattice.name(hi)}));
  json entries = json::array();
  for (int a = 0; a < lattice.size(); ++a)
    for (int b = a; b < lattice.size(); ++b)
      entries.push_back(json::array(
          {lattice.name(a), lattice.name(b), real_to_json(lattice.dist(a, b))}));
  obj["metric"] = json{{"type", "explicit"}, {"entries", std::move(entries)}};
  if (lattice.coords().has_value()) {
    json coords;
    for (int e = 0; e < lattice.size(); ++e)
      coords[lattice.name(e)] = real_to_json((*lattice.coords())[e]);
    obj["coords"] = std::move(coords);
  }
  return obj;
}

json complex_json(const SimplicialComplex& complex) {
  // Inclusion-maximal simplices suffice; faces are implied.
  json list = json::array();
  for (int id = 0; id < complex.count(); ++id) {
    bool maximal = true;
    for (int other = 0; other < complex.count() && maximal; ++other) {
      if (other == id) continue;
      const Simplex& s = complex.simplex(id);
      const Simplex& t = complex.simplex(other);
      if (s.size() < t.size() && std::includes(t.begin(), t.end(), s.begin(), s.end()))
        maximal = false;
    }
    if (maximal) list.push_back(complex.simplex(id));
  }
  return json{{"simplices", std::move(list)}};
}

json subcomplex_json(const SimplicialComplex& complex, const SimplexMask& mask) {
  json list = json::array();
  for (int id = 0; id < complex.count(); ++id) {
    if (!mask[id]) continue;
    bool maximal = true;
    for (int other = 0; other < complex.count() && maximal; ++other) {
      if (other == id || !mask[other]) continue;
      const Simplex& s = complex.simplex(id);
      const Simplex& t = complex.simplex(other);
      if (s.size() < t.size() && std::includes(t.begin(), t.end(), s.begin(), s.end()))
        maximal = false;
    }
    if (maximal) list.push_back(complex.simplex(id));
  }
  return list;
}

json function_json(const IntervalFunction& fn, bool include_zeros) {
  json obj;
  obj["lattice"] = lattice_json(fn.index().base());
  json values = json::array();
  for (int i = 0; i < fn.index().count(); ++i) {
    if (!include_zeros && fn.value(i) == 0) continue;
    const Interval v = fn.index().at(i);
    values.push_back(json::array(
        {fn.index().base().name(v.lo), fn.index().base().name(v.hi), fn.value(i)}));
  }
  obj["values"] = std::move(values);
  return obj;
}

json map_json(const LatticeMap& map) {
  json obj;
  for (int a = 0; a < map.source().size(); ++a)
    obj[map.source().name(a)] = map.target().name(map.apply(a));
  return obj;
}

std::string dump(const json& obj) { return obj.dump(2) + "\n"; }

} // namespace

MetricLattice parse_lattice(const std::string& text, const std::string& base_dir) {
  return lattice_from_json(parse_text(text), base_dir);
}
MetricLattice load_lattice(const std::string& path) {
  return lattice_from_json(json(path), ".");
}

SimplicialComplex parse_complex(const std::string& text, const std::string& base_dir) {
  return complex_from_json(parse_text(text), base_dir);
}
SimplicialComplex load_complex(const std::string& path) {
  return complex_from_json(json(path), ".");
}

Filtration parse_filtration(const std::string& text, const std::string& base_dir) {
  return filtration_from_json(parse_text(text), base_dir);
}
Filtration load_filtration(const std::string& path) {
  return filtration_from_json(json(path), ".");
}

IntervalFunction parse_function(const std::string& text, const std::string& base_dir) {
  return function_from_json(parse_text(text), base_dir);
}
IntervalFunction load_function(const std::string& path) {
  return function_from_json(json(path), ".");
}

LatticeMap parse_morphism(const std::string& text, const std::string& base_dir) {
  return morphism_from_json(parse_text(text), base_dir);
}
LatticeMap load_morphism(const std::string& path) {
  return morphism_from_json(json(path), ".");
}

LatticeMap parse_map_between(const std::string& text, const MetricLattice& source,
                             const MetricLattice& target) {
  json obj = parse_text(text);
  return map_between(obj.contains("map") ? obj.at("map") : obj, source, target);
}

FilTriple parse_fil_triple(const std::string& text, const std::string& base_dir) {
  json obj = parse_text(text);
  Filtration source = filtration_from_json(expect(obj, "source"), base_dir);
  Filtration target = filtration_from_json(expect(obj, "target"), base_dir);
  LatticeMap map = map_between(expect(obj, "map"), source.index(), target.index());
  return FilTriple{std::move(source), std::move(target), std::move(map)};
}
FilTriple load_fil_triple(const std::string& path) {
  return parse_fil_triple(slurp(path), fs::path(path).parent_path().string().empty()
                                           ? "."
                                           : fs::path(path).parent_path().string());
}

FnTriple parse_fn_triple(const std::string& text, const std::string& base_dir) {
  json obj = parse_text(text);
  IntervalFunction source = function_from_json(expect(obj, "source"), base_dir);
  IntervalFunction target = function_from_json(expect(obj, "target"), base_dir);
  LatticeMap map = map_between(expect(obj, "map"), source.index().base(), target.index().base());
  return FnTriple{std::move(source), std::move(target), std::move(map)};
}
FnTriple load_fn_triple(const std::string& path) {
  return parse_fn_triple(slurp(path), fs::path(path).parent_path().string().empty()
                                          ? "."
                                          : fs::path(path).parent_path().string());
}

Category peek_path_category(const std::string& path) {
  json obj = parse_text(slurp(path));
  return category_from_string(expect(obj, "category").get<std::string>());
}

FilPath parse_fil_path(const std::string& text, const std::string& base_dir) {
  json obj = parse_text(text);
  if (category_from_string(expect(obj, "category").get<std::string>()) != Category::fil)
    fail(errc::parse_error, "expected a Fil path");
  return fil_path_from_json(obj, base_dir);
}
FilPath load_fil_path(const std::string& path) {
  std::string dir = fs::path(path).parent_path().string();
  return parse_fil_path(slurp(path), dir.empty() ? "." : dir);
}

FnPath parse_fn_path(const std::string& text, const std::string& base_dir) {
  json obj = parse_text(text);
  Category category = category_from_string(expect(obj, "category").get<std::string>());
  if (category == Category::fil) fail(errc::parse_error, "expected a Mon or Fnc path");
  return fn_path_from_json(obj, base_dir, category);
}
FnPath load_fn_path(const std::string& path) {
  std::string dir = fs::path(path).parent_path().string();
  return parse_fn_path(slurp(path), dir.empty() ? "." : dir);
}

Matching parse_matching(const std::string& text, const Diagram& sigma, const Diagram& tau) {
  json obj = parse_text(text);
  std::vector<MatchingEntry> entries;
  for (const json& row : expect(obj, "entries")) {
    if (!row.is_array() || row.size() != 5)
      fail(errc::parse_error, "matching entries must be [loI, hiI, loJ, hiJ, count]");
    const MetricLattice& p = sigma.fn.index().base();
    const MetricLattice& q = tau.fn.index().base();
    int i = sigma.fn.index().find_or_throw(p.index(row[0].get<std::string>()),
                                           p.index(row[1].get<std::string>()));
    int j = tau.fn.index().find_or_throw(q.index(row[2].get<std::string>()),
                                         q.index(row[3].get<std::string>()));
    if (!row[4].is_number_integer()) fail(errc::parse_error, "matching counts must be integers");
    entries.push_back({i, j, row[4].get<int64_t>()});
  }
  return validate_matching(sigma, tau, std::move(entries));
}
Matching load_matching(const std::string& path, const Diagram& sigma, const Diagram& tau) {
  return parse_matching(slurp(path), sigma, tau);
}

Filtration parse_classical_filtration(const std::string& text, const std::string& base_dir) {
  json obj = parse_text(text);
  std::vector<double> values;
  for (const json& v : expect(obj, "values")) values.push_back(number_or_inf(v, "value"));
  MetricLattice lattice = classical_lattice(values);
  SimplicialComplex complex = complex_from_json(expect(obj, "complex"), base_dir);
  const json& assignment = expect(obj, "assignment");
  std::vector<SimplexMask> stages(lattice.size());
  for (int e = 0; e + 1 < lattice.size(); ++e) {
    const std::string key = lattice.name(e);
    if (!assignment.contains(key))
      fail(errc::parse_error, "assignment missing stage '" + key + "'");
    stages[e] = mask_from_simplices(complex, simplex_list(assignment.at(key)));
  }
  // The infinity stage defaults to the whole complex.
  stages[lattice.size() - 1] = assignment.contains("inf")
                                   ? mask_from_simplices(complex, simplex_list(assignment.at("inf")))
                                   : full_mask(complex);
  return validate_filtration(std::move(lattice), std::move(complex), std::move(stages));
}
Filtration load_classical_filtration(const std::string& path) {
  std::string dir = fs::path(path).parent_path().string();
  return parse_classical_filtration(slurp(path), dir.empty() ? "." : dir);
}

std::string lattice_to_json(const MetricLattice& lattice) { return dump(lattice_json(lattice)); }

std::string complex_to_json(const SimplicialComplex& complex) { return dump(complex_json(complex)); }

std::string filtration_to_json(const Filtration& filtration) {
  json obj;
  obj["lattice"] = lattice_json(filtration.index());
  obj["complex"] = complex_json(filtration.complex());
  json assignment;
  for (int e = 0; e < filtration.index().size(); ++e)
    assignment[filtration.index().name(e)] =
        subcomplex_json(filtration.complex(), filtration.stage(e));
  obj["assignment"] = std::move(assignment);
  return dump(obj);
}

std::string function_to_json(const IntervalFunction& fn, bool include_zeros) {
  return dump(function_json(fn, include_zeros));
}

std::string matching_to_json(const Diagram& sigma, const Diagram& tau, const Matching& matching) {
  const MetricLattice& p = sigma.fn.index().base();
  const MetricLattice& q = tau.fn.index().base();
  json entries = json::array();
  for (const MatchingEntry& e : matching.entries) {
    const Interval i = sigma.fn.index().at(e.source_interval);
    const Interval j = tau.fn.index().at(e.target_interval);
    entries.push_back(
        json::array({p.name(i.lo), p.name(i.hi), q.name(j.lo), q.name(j.hi), e.count}));
  }
  return dump(json{{"entries", std::move(entries)}});
}

std::string fn_path_to_json(const FnPath& path, bool include_zeros) {
  json obj;
  obj["category"] = path.category == Category::mon ? "mon" : "fnc";
  obj["start"] = function_json(path.objects.front(), include_zeros);
  json steps = json::array();
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    json step;
    step["direction"] = path.steps[k].direction == StepDirection::forward ? "fwd" : "bwd";
    step["morphism"] = json{{"map", map_json(path.steps[k].map)}};
    step["object"] = function_json(path.objects[k + 1], include_zeros);
    steps.push_back(std::move(step));
  }
  obj["steps"] = std::move(steps);
  return dump(obj);
}

std::string report_to_json(const CheckReport& report) {
  json obj;
  obj["valid"] = report.ok();
  json violations = json::array();
  for (const Violation& v : report.violations)
    violations.push_back(json{{"where", v.where}, {"detail", v.detail}});
  obj["violations"] = std::move(violations);
  return dump(obj);
}

} // namespace latpd::io
