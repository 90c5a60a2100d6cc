// symq: command line front end for the symmetric quandle toolkit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symq/errors.hpp"
#include "symq/invariants.hpp"
#include "symq/io.hpp"

namespace {

using namespace symq;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::istringstream ls(csv);
  std::string tok;
  while (std::getline(ls, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("expected an integer list, got '" + tok +
                                  "'");
    }
  }
  return out;
}

struct DiagramArgs {
  std::string pd, gauss, diagram_file;
  std::string flips;
  std::vector<std::string> over;  // "stratum:sheet"

  void attach(CLI::App* cmd) {
    cmd->add_option("--pd", pd, "inline PD code, e.g. \"X[1,4,2,5] ...\"");
    cmd->add_option("--gauss", gauss, "inline signed Gauss code");
    cmd->add_option("--diagram", diagram_file, "diagram JSON file ('-' = stdin)");
    cmd->add_option("--flips", flips,
                    "comma-separated semi-sheets whose normals to flip");
    cmd->add_option("--over", over,
                    "re-designate over sheets, stratum:sheet (repeatable)");
  }

  Diagram build() const {
    int sources = !pd.empty() + !gauss.empty() + !diagram_file.empty();
    if (sources != 1)
      throw std::invalid_argument(
          "need exactly one of --pd, --gauss, --diagram");
    Diagram d;
    if (!diagram_file.empty()) {
      d = load_diagram_json(read_input(diagram_file));
      for (int k : parse_int_list(flips)) d = flip_normal(std::move(d), k);
    } else {
      PdCode code = pd.empty() ? parse_gauss(gauss) : parse_pd(pd);
      d = pd_to_diagram(code, parse_int_list(flips));
    }
    for (const std::string& o : over) {
      std::size_t colon = o.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("--over expects stratum:sheet");
      d = set_over(std::move(d), std::stoul(o.substr(0, colon)),
                   std::stoi(o.substr(colon + 1)));
    }
    return d;
  }

  std::string designator() const {
    if (!diagram_file.empty()) return diagram_file;
    return pd.empty() ? "gauss" : "pd";
  }
};

struct TableArgs {
  std::string file;
  int dihedral = 0, trivial = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", file, "table JSON file ('-' = stdin)");
    cmd->add_option("--dihedral", dihedral, "use the dihedral quandle R_n");
    cmd->add_option("--trivial", trivial, "use the trivial quandle of order k");
  }

  std::pair<QuandleTable, std::optional<std::vector<int>>> load() const {
    int sources = !file.empty() + (dihedral > 0) + (trivial > 0);
    if (sources != 1)
      throw std::invalid_argument(
          "need exactly one of an input file, --dihedral, --trivial");
    if (dihedral > 0) return {dihedral_quandle(dihedral), std::nullopt};
    if (trivial > 0) return {trivial_quandle(trivial), std::nullopt};
    return load_table_json(read_input(file));
  }
};

SymmetricQuandleTable load_target(const std::string& name_or_path) {
  try {
    return builtin_target(name_or_path);
  } catch (const std::invalid_argument&) {
    // fall through to file loading
  }
  return load_symmetric_quandle_json(read_input(name_or_path));
}

std::string verdict_json(const Verdict& v) {
  std::ostringstream os;
  os << "{\"ok\":" << (v.ok ? "true" : "false");
  if (!v.ok) {
    os << ",\"law\":\"" << v.law << "\",\"witness\":[";
    bool first = true;
    for (int w : v.witness) {
      if (w < 0) continue;
      os << (first ? "" : ",") << w;
      first = false;
    }
    os << "]";
  }
  os << "}";
  return os.str();
}

int run_check(const TableArgs& table, bool as_rack, bool as_quandle,
              bool as_symmetric, bool verbose, bool json_out) {
  auto [q, rho] = table.load();
  bool symmetric = as_symmetric || (!as_rack && !as_quandle && rho);
  if (symmetric && !rho)
    throw std::invalid_argument("symmetric check needs a rho field");

  std::vector<Verdict> violations;
  if (verbose) {
    violations = as_rack ? verify_rack_verbose(q) : verify_quandle_verbose(q);
    if (symmetric && violations.empty())
      violations = verify_good_involution_verbose({q, *rho});
  } else {
    Verdict v = as_rack ? verify_rack(q) : verify_quandle(q);
    if (v && symmetric) v = verify_good_involution({q, *rho});
    if (!v) violations.push_back(std::move(v));
  }

  if (json_out) {
    if (violations.empty()) {
      std::cout << "{\"ok\":true}\n";
    } else if (!verbose) {
      std::cout << verdict_json(violations.front()) << "\n";
    } else {
      std::ostringstream os;
      os << "[";
      for (std::size_t i = 0; i < violations.size(); ++i)
        os << (i ? "," : "") << verdict_json(violations[i]);
      os << "]";
      std::cout << os.str() << "\n";
    }
  } else {
    if (violations.empty())
      std::cout << "ok\n";
    else
      for (const Verdict& v : violations) std::cout << v.describe() << "\n";
  }
  return violations.empty() ? 0 : 1;
}

void run_good_involutions(const TableArgs& table, std::size_t limit,
                          int guard, bool json_out) {
  auto [q, rho] = table.load();
  InvolutionList list = enumerate_good_involutions(q, limit, guard);
  if (json_out) {
    std::ostringstream os;
    os << "{\"involutions\":[";
    for (std::size_t i = 0; i < list.involutions.size(); ++i) {
      os << (i ? "," : "") << "[";
      for (std::size_t k = 0; k < list.involutions[i].size(); ++k)
        os << (k ? "," : "") << list.involutions[i][k];
      os << "]";
    }
    os << "],\"truncated\":" << (list.truncated ? "true" : "false") << "}";
    std::cout << os.str() << "\n";
    return;
  }
  for (const auto& inv : list.involutions) {
    bool id = true;
    for (std::size_t i = 0; i < inv.size(); ++i)
      if (inv[i] != static_cast<int>(i)) id = false;
    if (id) {
      std::cout << "identity\n";
      continue;
    }
    for (std::size_t i = 0; i < inv.size(); ++i)
      std::cout << (i ? " " : "") << inv[i];
    std::cout << "\n";
  }
  if (list.truncated) std::cout << "(truncated)\n";
}

void print_presentation(const SymQuandlePresentation& p, bool json_out) {
  std::cout << (json_out ? save_presentation_json(p) : presentation_text(p));
}

std::string factors_line(const std::vector<long long>& factors) {
  if (factors.empty()) return "trivial";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i)
    os << (i ? " " : "") << factors[i];
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric quandle toolkit"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "machine-readable output everywhere");

  // check
  auto* check = app.add_subcommand("check", "verify a rack/quandle/symmetric quandle table");
  TableArgs check_table;
  check_table.attach(check);
  bool as_rack = false, as_quandle = false, as_symmetric = false;
  bool check_verbose = false;
  check->add_flag("--rack", as_rack, "check rack axioms only");
  check->add_flag("--quandle", as_quandle, "check quandle axioms");
  check->add_flag("--symmetric", as_symmetric, "check the good involution too");
  check->add_flag("--verbose", check_verbose, "report every violation");

  // good-involutions
  auto* good = app.add_subcommand("good-involutions", "enumerate good involutions");
  TableArgs good_table;
  good_table.attach(good);
  std::size_t good_limit = SIZE_MAX;
  int good_guard = 12;
  good->add_option("--limit", good_limit, "stop after this many involutions");
  good->add_option("--max-n", good_guard, "size guard for the brute force");

  // double-cover
  auto* cover = app.add_subcommand("double-cover", "double cover of a quandle");
  TableArgs cover_table;
  cover_table.attach(cover);

  // dihedral
  auto* dih = app.add_subcommand("dihedral", "emit the dihedral quandle R_n");
  int dih_n = 0;
  dih->add_option("n", dih_n, "order")->required();

  // conj
  auto* conj = app.add_subcommand("conj", "conjugation quandle of a group");
  std::string conj_file;
  int conj_cyclic = 0, conj_sym = 0;
  conj->add_option("input", conj_file, "group JSON file ('-' = stdin)");
  conj->add_option("--cyclic", conj_cyclic, "cyclic group Z_n");
  conj->add_option("--sym", conj_sym, "symmetric group S_k");

  // pd
  auto* pd_cmd = app.add_subcommand("pd", "PD/Gauss code to diagram JSON");
  DiagramArgs pd_args;
  pd_args.attach(pd_cmd);

  // present
  auto* present = app.add_subcommand("present", "diagram to presentation");
  DiagramArgs present_args;
  present_args.attach(present);
  bool oriented = false;
  present->add_flag("--oriented", oriented, "merge sheets, quandle flavor");

  // eliminate
  auto* elim = app.add_subcommand("eliminate", "eliminate generators");
  std::string elim_file = "-", elim_gen;
  int elim_rel = -1;
  bool elim_auto = false, elim_normalize = false;
  elim->add_option("input", elim_file, "presentation file ('-' = stdin)");
  elim->add_option("--gen", elim_gen, "generator to eliminate");
  elim->add_option("--rel", elim_rel, "index of the defining relation");
  elim->add_flag("--auto", elim_auto, "eliminate every solvable generator");
  elim->add_flag("--normalize", elim_normalize, "normalize relations afterwards");

  // group
  auto* group = app.add_subcommand("group", "associated group and abelianization");
  std::string group_file = "-", group_file_opt;
  group->add_option("input", group_file, "presentation file ('-' = stdin)");
  group->add_option("--presentation", group_file_opt, "presentation file");

  // color
  auto* color = app.add_subcommand("color", "count or list colorings");
  DiagramArgs color_args;
  color_args.attach(color);
  std::vector<std::string> color_targets;
  bool color_enum = false, color_csv = false;
  std::size_t color_limit = SIZE_MAX;
  color->add_option("--target", color_targets,
                    "built-in name or symmetric table JSON file (repeatable)")
      ->required();
  color->add_flag("--enumerate", color_enum, "list the colorings");
  color->add_option("--limit", color_limit, "cap for --enumerate");
  color->add_flag("--csv", color_csv, "CSV diagram,target,count");

  // prove
  auto* prove = app.add_subcommand("prove", "bounded equality proof");
  std::string prove_file = "-", prove_lhs, prove_rhs, prove_budget = "8,10000";
  prove->add_option("input", prove_file, "presentation file ('-' = stdin)");
  prove->add_option("--lhs", prove_lhs, "left element")->required();
  prove->add_option("--rhs", prove_rhs, "right element")->required();
  prove->add_option("--budget", prove_budget, "L,M word length and pair budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check->parsed())
      return run_check(check_table, as_rack, as_quandle, as_symmetric,
                       check_verbose, json_out);

    if (good->parsed()) {
      run_good_involutions(good_table, good_limit, good_guard, json_out);
      return 0;
    }

    if (cover->parsed()) {
      auto [q, rho] = cover_table.load();
      SymmetricQuandleTable s = double_cover(q);
      std::cout << save_symmetric_quandle_json(s);
      return 0;
    }

    if (dih->parsed()) {
      QuandleTable t = dihedral_quandle(dih_n);
      std::cout << (json_out ? save_quandle_json(t) : table_text(t));
      return 0;
    }

    if (conj->parsed()) {
      int sources = !conj_file.empty() + (conj_cyclic > 0) + (conj_sym > 0);
      if (sources != 1)
        throw std::invalid_argument(
            "need exactly one of an input file, --cyclic, --sym");
      GroupTable g = conj_cyclic > 0 ? cyclic_group(conj_cyclic)
                     : conj_sym > 0  ? symmetric_group(conj_sym)
                                     : load_group_json(read_input(conj_file));
      std::cout << save_symmetric_quandle_json(conjugation_quandle(g));
      return 0;
    }

    if (pd_cmd->parsed()) {
      std::cout << save_diagram_json(pd_args.build());
      return 0;
    }

    if (present->parsed()) {
      Diagram d = present_args.build();
      SymQuandlePresentation p = oriented
                                     ? oriented_presentation_from_diagram(d)
                                     : presentation_from_diagram(d);
      print_presentation(p, json_out);
      return 0;
    }

    if (elim->parsed()) {
      SymQuandlePresentation p = load_presentation(read_input(elim_file));
      if (elim_auto) {
        while (auto found = find_eliminable(p))
          p = eliminate_generator(p, found->first, found->second);
      } else {
        if (elim_gen.empty() || elim_rel < 0)
          throw std::invalid_argument("need --gen and --rel (or --auto)");
        int g = p.generators.index_of(elim_gen);
        if (g < 0)
          throw std::invalid_argument("unknown generator '" + elim_gen + "'");
        p = eliminate_generator(p, g, static_cast<std::size_t>(elim_rel));
      }
      if (elim_normalize) p = normalize_relations(p);
      print_presentation(p, json_out);
      return 0;
    }

    if (group->parsed()) {
      std::string path = group_file_opt.empty() ? group_file : group_file_opt;
      SymQuandlePresentation p = load_presentation(read_input(path));
      GroupPresentation g = associated_group(p);
      std::vector<long long> factors = abelianization(g);
      if (json_out) {
        std::cout << save_group_presentation_json(g);
        std::ostringstream os;
        os << "{\"invariant_factors\":[";
        for (std::size_t i = 0; i < factors.size(); ++i)
          os << (i ? "," : "") << factors[i];
        os << "]}";
        std::cout << os.str() << "\n";
      } else {
        std::cout << group_presentation_text(g);
        std::cout << "abelianization " << factors_line(factors) << "\n";
      }
      return 0;
    }

    if (color->parsed()) {
      Diagram d = color_args.build();
      if (color_enum) {
        if (color_targets.size() != 1)
          throw std::invalid_argument("--enumerate needs exactly one target");
        ColoringList list =
            enumerate_colorings(d, load_target(color_targets[0]), color_limit);
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < list.colorings.size(); ++i) {
          os << (i ? "," : "") << "[";
          for (std::size_t k = 0; k < list.colorings[i].size(); ++k)
            os << (k ? "," : "") << list.colorings[i][k];
          os << "]";
        }
        os << "]";
        std::cout << os.str() << "\n";
        if (list.truncated) std::cerr << "truncated at " << color_limit << "\n";
        return 0;
      }
      if (json_out) {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < color_targets.size(); ++i)
          os << (i ? "," : "") << "{\"target\":\"" << color_targets[i]
             << "\",\"count\":"
             << count_colorings(d, load_target(color_targets[i])) << "}";
        os << "]";
        std::cout << os.str() << "\n";
      } else if (color_csv || color_targets.size() > 1) {
        std::cout << "diagram,target,count\n";
        for (const std::string& target : color_targets)
          std::cout << color_args.designator() << "," << target << ","
                    << count_colorings(d, load_target(target)) << "\n";
      } else {
        std::cout << count_colorings(d, load_target(color_targets[0])) << "\n";
      }
      return 0;
    }

    if (prove->parsed()) {
      SymQuandlePresentation p = load_presentation(read_input(prove_file));
      std::vector<int> lm = parse_int_list(prove_budget);
      if (lm.size() != 2) throw std::invalid_argument("--budget expects L,M");
      ClosureBudget budget{lm[0], static_cast<std::size_t>(lm[1])};
      ProofStatus st = prove_equal(p, parse_fsr_element(prove_lhs, p.generators),
                                   parse_fsr_element(prove_rhs, p.generators),
                                   budget);
      std::string status = st == ProofStatus::proven ? "proven" : "unknown";
      if (json_out)
        std::cout << "{\"status\":\"" << status << "\"}\n";
      else
        std::cout << status << "\n";
      return 0;
    }
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
