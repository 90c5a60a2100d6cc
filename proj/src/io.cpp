#include "symq/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace symq {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw std::invalid_argument(path + ": " + what);
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<int>();
}

std::vector<int> get_int_array(const json& j, const std::string& path,
                               int expect = -1) {
  if (!j.is_array()) schema_error(path, "expected an array");
  if (expect >= 0 && static_cast<int>(j.size()) != expect)
    schema_error(path, "expected " + std::to_string(expect) + " entries");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int> get_matrix(const json& j, const std::string& path, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    schema_error(path, "expected " + std::to_string(n) + " rows");
  std::vector<int> flat;
  for (int r = 0; r < n; ++r) {
    auto row = get_int_array(j[r], path + "[" + std::to_string(r) + "]", n);
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

json matrix_json(const std::vector<int>& flat, int n) {
  json rows = json::array();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int c = 0; c < n; ++c) row.push_back(flat[std::size_t(r) * n + c]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::pair<QuandleTable, std::optional<std::vector<int>>> load_table_json(
    const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) schema_error("$", "expected an object");
  if (!j.contains("n")) schema_error("n", "missing");
  int n = get_int(j["n"], "n");
  if (n <= 0) schema_error("n", "must be positive");
  if (!j.contains("op")) schema_error("op", "missing");
  QuandleTable t;
  t.n = n;
  t.op = get_matrix(j["op"], "op", n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t.at(x, y) < 0 || t.at(x, y) >= n)
        schema_error("op[" + std::to_string(x) + "][" + std::to_string(y) + "]",
                     "out of range");
  std::optional<std::vector<int>> rho;
  if (j.contains("rho")) {
    rho = get_int_array(j["rho"], "rho", n);
    for (int v : *rho)
      if (v < 0 || v >= n) schema_error("rho", "entry out of range");
  }
  return {std::move(t), std::move(rho)};
}

QuandleTable load_quandle_json(const std::string& text) {
  return load_table_json(text).first;
}

SymmetricQuandleTable load_symmetric_quandle_json(const std::string& text) {
  auto [t, rho] = load_table_json(text);
  if (!rho) schema_error("rho", "missing");
  return {std::move(t), std::move(*rho)};
}

std::string save_quandle_json(const QuandleTable& t) {
  json j;
  j["n"] = t.n;
  j["op"] = matrix_json(t.op, t.n);
  return j.dump() + "\n";
}

std::string save_symmetric_quandle_json(const SymmetricQuandleTable& s) {
  json j;
  j["n"] = s.quandle.n;
  j["op"] = matrix_json(s.quandle.op, s.quandle.n);
  j["rho"] = s.rho;
  return j.dump() + "\n";
}

std::string table_text(const RackTable& t) {
  std::ostringstream os;
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) os << (y ? " " : "") << t.at(x, y);
    os << "\n";
  }
  return os.str();
}

GroupTable load_group_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) schema_error("$", "expected an object");
  if (!j.contains("n")) schema_error("n", "missing");
  int n = get_int(j["n"], "n");
  if (n <= 0) schema_error("n", "must be positive");
  if (!j.contains("mul")) schema_error("mul", "missing");
  GroupTable g;
  g.n = n;
  g.mul = get_matrix(j["mul"], "mul", n);
  for (int v : g.mul)
    if (v < 0 || v >= n) schema_error("mul", "entry out of range");
  if (j.contains("identity")) {
    g.identity = get_int(j["identity"], "identity");
  } else {
    g.identity = -1;
    for (int e = 0; e < n && g.identity < 0; ++e) {
      bool ok = true;
      for (int x = 0; x < n; ++x)
        if (g.at(e, x) != x || g.at(x, e) != x) {
          ok = false;
          break;
        }
      if (ok) g.identity = e;
    }
    if (g.identity < 0) schema_error("mul", "no identity element");
  }
  if (j.contains("inverse")) {
    g.inverse = get_int_array(j["inverse"], "inverse", n);
  } else {
    g.inverse.assign(n, -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (g.at(x, y) == g.identity && g.at(y, x) == g.identity)
          g.inverse[x] = y;
    for (int v : g.inverse)
      if (v < 0) schema_error("mul", "missing inverses");
  }
  return g;
}

std::string save_group_json(const GroupTable& g) {
  json j;
  j["n"] = g.n;
  j["mul"] = matrix_json(g.mul, g.n);
  j["identity"] = g.identity;
  j["inverse"] = g.inverse;
  return j.dump() + "\n";
}

Diagram load_diagram_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) schema_error("$", "expected an object");
  Diagram d;
  if (!j.contains("m")) schema_error("m", "missing");
  d.m = get_int(j["m"], "m");
  d.dimension = j.contains("dimension") ? get_int(j["dimension"], "dimension") : 1;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) schema_error("labels", "expected an array");
    for (std::size_t i = 0; i < j["labels"].size(); ++i) {
      if (!j["labels"][i].is_string())
        schema_error("labels[" + std::to_string(i) + "]", "expected a string");
      d.labels.push_back(j["labels"][i].get<std::string>());
    }
  }
  if (j.contains("strata")) {
    if (!j["strata"].is_array()) schema_error("strata", "expected an array");
    for (std::size_t k = 0; k < j["strata"].size(); ++k) {
      const json& js = j["strata"][k];
      std::string path = "strata[" + std::to_string(k) + "]";
      if (!js.is_object()) schema_error(path, "expected an object");
      for (const char* f : {"upper", "over", "lower"})
        if (!js.contains(f)) schema_error(path + "." + f, "missing");
      Stratum s;
      auto upper = get_int_array(js["upper"], path + ".upper", 2);
      auto lower = get_int_array(js["lower"], path + ".lower", 2);
      s.upper_i = upper[0];
      s.upper_j = upper[1];
      s.lower_s = lower[0];
      s.lower_t = lower[1];
      s.over = get_int(js["over"], path + ".over");
      auto get_flag = [&](const char* f, bool dflt) {
        if (!js.contains(f)) return dflt;
        if (!js[f].is_boolean()) schema_error(path + "." + f, "expected a bool");
        return js[f].get<bool>();
      };
      s.upper_coherent = get_flag("upper_coherent", true);
      s.lower_coherent = get_flag("lower_coherent", true);
      d.strata.push_back(s);
    }
  }
  try {
    validate(d);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("diagram: ") + e.what());
  }
  return d;
}

std::string save_diagram_json(const Diagram& d) {
  json j;
  j["dimension"] = d.dimension;
  j["m"] = d.m;
  if (!d.labels.empty()) j["labels"] = d.labels;
  json strata = json::array();
  for (const Stratum& s : d.strata) {
    json js;
    js["upper"] = {s.upper_i, s.upper_j};
    js["upper_coherent"] = s.upper_coherent;
    js["over"] = s.over;
    js["lower"] = {s.lower_s, s.lower_t};
    js["lower_coherent"] = s.lower_coherent;
    strata.push_back(std::move(js));
  }
  j["strata"] = std::move(strata);
  return j.dump() + "\n";
}

namespace {

Relation parse_relation_line(const std::string& body, const GeneratorSet& gens,
                             std::size_t lineno) {
  std::size_t eq = body.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("line " + std::to_string(lineno) +
                                ": relation needs '='");
  auto trim = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string lhs = trim(body.substr(0, eq)), rhs = trim(body.substr(eq + 1));
  if (lhs.empty() || rhs.empty())
    throw std::invalid_argument("line " + std::to_string(lineno) +
                                ": empty relation side");
  return {parse_fsr_element(lhs, gens), parse_fsr_element(rhs, gens)};
}

}  // namespace

SymQuandlePresentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> names;
  SymQuandlePresentation p;
  bool have_flavor = false, have_gens = false;
  std::size_t lineno = 0;
  std::vector<std::pair<std::size_t, std::string>> rel_lines;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "flavor") {
      std::string f;
      if (!(ls >> f))
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": flavor name missing");
      p.flavor = flavor_from_string(f);
      have_flavor = true;
    } else if (kw == "gen") {
      if (!rel_lines.empty())
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": gen after rel");
      std::string n;
      while (ls >> n) names.push_back(n);
      have_gens = true;
    } else if (kw == "rel") {
      std::string rest;
      std::getline(ls, rest);
      rel_lines.push_back({lineno, rest});
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": unknown keyword '" + kw + "'");
    }
  }
  if (!have_gens || names.empty())
    throw std::invalid_argument("presentation has no generators");
  p.generators = GeneratorSet(std::move(names));
  for (const auto& [n, body] : rel_lines)
    p.relations.push_back(parse_relation_line(body, p.generators, n));
  if (!have_flavor) p.flavor = Flavor::symmetric_quandle;
  validate(p);
  return p;
}

std::string presentation_text(const SymQuandlePresentation& p) {
  std::ostringstream os;
  os << "flavor " << to_string(p.flavor) << "\n";
  os << "gen";
  for (const std::string& n : p.generators.names()) os << " " << n;
  os << "\n";
  for (const auto& [l, r] : p.relations)
    os << "rel " << to_string(l, p.generators) << " = "
       << to_string(r, p.generators) << "\n";
  return os.str();
}

SymQuandlePresentation load_presentation_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) schema_error("$", "expected an object");
  SymQuandlePresentation p;
  if (j.contains("flavor")) {
    if (!j["flavor"].is_string()) schema_error("flavor", "expected a string");
    p.flavor = flavor_from_string(j["flavor"].get<std::string>());
  }
  if (!j.contains("generators")) schema_error("generators", "missing");
  std::vector<std::string> names;
  for (const json& n : j["generators"]) {
    if (!n.is_string()) schema_error("generators", "expected strings");
    names.push_back(n.get<std::string>());
  }
  if (names.empty()) schema_error("generators", "must be non-empty");
  p.generators = GeneratorSet(std::move(names));
  if (j.contains("relations")) {
    for (std::size_t i = 0; i < j["relations"].size(); ++i) {
      const json& r = j["relations"][i];
      std::string path = "relations[" + std::to_string(i) + "]";
      if (!r.is_array() || r.size() != 2 || !r[0].is_string() ||
          !r[1].is_string())
        schema_error(path, "expected [lhs, rhs] strings");
      p.relations.push_back(
          {parse_fsr_element(r[0].get<std::string>(), p.generators),
           parse_fsr_element(r[1].get<std::string>(), p.generators)});
    }
  }
  validate(p);
  return p;
}

std::string save_presentation_json(const SymQuandlePresentation& p) {
  json j;
  j["flavor"] = to_string(p.flavor);
  j["generators"] = p.generators.names();
  json rels = json::array();
  for (const auto& [l, r] : p.relations)
    rels.push_back({to_string(l, p.generators), to_string(r, p.generators)});
  j["relations"] = std::move(rels);
  return j.dump() + "\n";
}

SymQuandlePresentation load_presentation(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{')
    return load_presentation_json(text);
  return parse_presentation(text);
}

std::string group_presentation_text(const GroupPresentation& g) {
  std::ostringstream os;
  os << "gen";
  for (const std::string& n : g.generators.names()) os << " " << n;
  os << "\n";
  for (const FreeWord& r : g.relators)
    os << "relator " << to_string(r, g.generators) << "\n";
  return os.str();
}

std::string save_group_presentation_json(const GroupPresentation& g) {
  json j;
  j["generators"] = g.generators.names();
  json rels = json::array();
  for (const FreeWord& r : g.relators) rels.push_back(to_string(r, g.generators));
  j["relators"] = std::move(rels);
  return j.dump() + "\n";
}

namespace {

int suffix_int(const std::string& name, const std::string& prefix,
               const std::string& suffix = "") {
  if (name.size() <= prefix.size() + suffix.size()) return -1;
  if (name.compare(0, prefix.size(), prefix) != 0) return -1;
  if (!suffix.empty() &&
      name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0)
    return -1;
  std::string digits =
      name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
  if (digits.empty()) return -1;
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
  int v = std::stoi(digits);
  return v > 0 && v <= 64 ? v : -1;
}

}  // namespace

SymmetricQuandleTable builtin_target(const std::string& name) {
  if (name == "conj-S3-inv") return conjugation_quandle(symmetric_group(3));
  if (int k = suffix_int(name, "triv-"); k > 0) {
    QuandleTable t = trivial_quandle(k);
    std::vector<int> id(k);
    for (int i = 0; i < k; ++i) id[i] = i;
    return {std::move(t), std::move(id)};
  }
  if (int n = suffix_int(name, "R", "-id"); n > 0) {
    QuandleTable t = dihedral_quandle(n);
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    return {std::move(t), std::move(id)};
  }
  if (int k = suffix_int(name, "D-triv-"); k > 0)
    return double_cover(trivial_quandle(k));
  if (int n = suffix_int(name, "D-R"); n > 0)
    return double_cover(dihedral_quandle(n));
  throw std::invalid_argument("unknown built-in target '" + name + "'");
}

std::vector<std::string> builtin_target_names(int max_order) {
  std::vector<std::pair<int, std::string>> all;
  for (int k = 1; k <= 6; ++k)
    all.push_back({k, "triv-" + std::to_string(k)});
  for (int n = 3; n <= 6; ++n)
    all.push_back({n, "R" + std::to_string(n) + "-id"});
  for (int k = 1; k <= 3; ++k)
    all.push_back({2 * k, "D-triv-" + std::to_string(k)});
  all.push_back({6, "D-R3"});
  all.push_back({6, "conj-S3-inv"});
  std::sort(all.begin(), all.end());
  std::vector<std::string> out;
  for (const auto& [order, name] : all)
    if (order <= max_order) out.push_back(name);
  return out;
}

}  // namespace symq
