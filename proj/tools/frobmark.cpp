// frobmark: command-line front end for the group-determinant, k-character,
// Markov and Fricke checks.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "frobmark/char_table.hpp"
#include "frobmark/error.hpp"
#include "frobmark/exterior.hpp"
#include "frobmark/factorization.hpp"
#include "frobmark/fricke.hpp"
#include "frobmark/kchar.hpp"
#include "frobmark/markov.hpp"

using nlohmann::json;
using namespace frobmark;

namespace {

struct RunConfig {
  std::string command;
  std::string subcommand;
  std::string group = "S3";
  std::string max = "1000";
  int p = 7;
  int k = 0;  // 0: per-check default
  std::uint64_t samples = 0;  // 0: per-check default
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  std::string mode = "symbolic";
  std::string check = "all";
  std::string triple;
  std::string jc = "-2";
  bool list = false;
};

json config_json(const RunConfig& c) {
  json j{{"command", c.command}, {"seed", c.seed}, {"format", c.format}};
  if (!c.subcommand.empty()) j["subcommand"] = c.subcommand;
  if (!c.out.empty()) j["out"] = c.out;
  if (c.command == "gdet") {
    j["group"] = c.group;
    j["mode"] = c.mode;
  } else if (c.command == "kchar") {
    j["group"] = c.group;
    j["check"] = c.check;
    j["k"] = c.k;
    j["samples"] = c.samples == 0 ? CoverageOptions{}.samples : c.samples;
  } else if (c.command == "markov") {
    if (c.subcommand == "tree" || c.subcommand == "unique") j["max"] = c.max;
    if (c.subcommand == "modp" || c.subcommand == "mordell") j["p"] = c.p;
  } else if (c.command == "fricke") {
    if (c.subcommand == "check") j["samples"] = c.samples == 0 ? std::uint64_t{1000} : c.samples;
    if (c.subcommand == "orbit" || c.subcommand == "lift") j["triple"] = c.triple;
    if (c.subcommand == "orbit" || c.subcommand == "length") j["jc"] = c.jc;
    if (c.subcommand == "orbit") j["max"] = c.max;
  }
  return j;
}

// Writes either to stdout or to --out.
class Output {
 public:
  explicit Output(const RunConfig& c) : json_(c.format == "json"), config_(config_json(c)) {
    if (!c.out.empty()) {
      file_.open(c.out);
      if (!file_) throw Error(ErrorKind::InvalidParameter, "cannot open output file " + c.out);
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  bool json_mode() const { return json_; }
  // One JSON document carrying version and config.
  void document(json body) {
    json j{{"version", FROBMARK_VERSION}, {"config", config_}};
    j.update(body);
    os() << j.dump() << '\n';
  }
  // Header line for JSON-lines streams.
  void stream_header() { os() << json{{"version", FROBMARK_VERSION}, {"config", config_}}.dump() << '\n'; }

 private:
  bool json_;
  json config_;
  std::ofstream file_;
};

const char* mark(bool pass) { return pass ? "PASS" : "FAIL"; }

void print_verdict(std::ostream& os, const Verdict& v, const std::string& label) {
  os << mark(v.pass) << "  " << std::left << std::setw(22) << v.check << std::setw(14) << label << std::setw(11)
     << v.mode << " checked=" << v.checked;
  if (!v.witness.empty()) os << "  witness: " << v.witness;
  os << '\n';
}

// --- group resolution -------------------------------------------------------

struct Resolved {
  GroupPtr group;
  std::optional<CharTable> table;
};

Resolved resolve_group(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ParseError, arg + ": " + e.what());
    }
    if (j.contains("chars")) {
      CharTable t = char_table_from_json(j);
      return {t.group, t};
    }
    auto g = std::make_shared<const FiniteGroup>(group_from_json(j));
    try {
      CharTable t = builtin_char_table(g->name());
      if (*t.group == *g) return {t.group, t};
    } catch (const Error&) {
    }
    return {g, std::nullopt};
  }
  CharTable t = builtin_char_table(arg);
  return {t.group, t};
}

const CharTable& need_table(const Resolved& r) {
  if (!r.table) throw Error(ErrorKind::InvalidParameter, "no character table available for group " + r.group->name());
  return *r.table;
}

// --- gdet --------------------------------------------------------------------

int cmd_gdet(const RunConfig& c, Output& out) {
  const Resolved r = resolve_group(c.group);
  const CharTable& table = need_table(r);
  FactorizationOptions opts;
  if (c.mode == "symbolic") opts.mode = FactorMode::Symbolic;
  else if (c.mode == "eval") opts.mode = FactorMode::Eval;
  opts.seed = c.seed;
  if (c.samples != 0) opts.eval_points = static_cast<int>(c.samples);
  const FactorizationReport rep = verify_factorization(*r.group, table, opts);
  if (out.json_mode()) {
    json body{{"group", r.group->name()}, {"order", r.group->order()}, {"degrees", rep.degrees},
              {"verdict", rep.verdict}};
    if (rep.verdict.mode == "symbolic") {
      body["theta"] = rep.theta.str();
      body["theta_terms"] = rep.theta.term_count();
      json factors = json::array();
      for (std::size_t i = 0; i < rep.factors.size(); ++i) {
        factors.push_back({{"degree", rep.degrees[i]}, {"multiplicity", rep.degrees[i]},
                           {"terms", rep.factors[i].term_count()}, {"poly", rep.factors[i].str()}});
      }
      body["factors"] = factors;
    }
    out.document(body);
  } else {
    auto& os = out.os();
    os << "group " << r.group->name() << " (order " << r.group->order() << "), mode " << rep.verdict.mode << '\n';
    if (rep.verdict.mode == "symbolic") {
      os << "Theta = " << rep.theta.str() << "\n  (" << rep.theta.term_count() << " terms)\n";
      for (std::size_t i = 0; i < rep.factors.size(); ++i) {
        os << "Phi_" << (i + 1) << " (degree " << rep.degrees[i] << ", power " << rep.degrees[i]
           << ") = " << rep.factors[i].str() << '\n';
      }
    }
    print_verdict(os, rep.verdict, r.group->name());
  }
  return rep.verdict.pass ? 0 : 1;
}

// --- kchar -------------------------------------------------------------------

struct Labeled {
  std::string label;
  Verdict verdict;
};

std::vector<MatrixRep> available_reps(const Resolved& r) {
  std::vector<MatrixRep> reps;
  for (const auto& row : need_table(r).rows) {
    if (row.degree == 1) reps.push_back(rep_from_linear_character(row.chi));
  }
  try {
    MatrixRep m = builtin_matrix_rep(r.group->name());
    if (*m.group == *r.group) reps.push_back(std::move(m));
  } catch (const Error&) {
  }
  return reps;
}

int cmd_kchar(const RunConfig& c, Output& out) {
  static const std::set<std::string> known{"vanishing", "symmetry",  "equivalence", "shuffle", "whitney",
                                           "exterior",  "reduction", "uexpansion",  "all"};
  if (!known.contains(c.check)) throw Error(ErrorKind::InvalidParameter, "unknown check '" + c.check + "'");
  const Resolved r = resolve_group(c.group);
  const CharTable& table = need_table(r);
  CoverageOptions cov;
  cov.seed = c.seed;
  if (c.samples != 0) cov.samples = c.samples;
  auto wants = [&](const char* name) { return c.check == "all" || c.check == name; };
  std::vector<Labeled> results;
  const auto& rows = table.rows;
  auto row_label = [](std::size_t i) { return "chi" + std::to_string(i + 1); };

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& chi = rows[i].chi;
    const int n = rows[i].degree;
    if (wants("vanishing")) results.push_back({row_label(i), vanishing_check(chi, c.k ? c.k : n + 1, cov)});
    if (wants("symmetry")) results.push_back({row_label(i), kchar_symmetry_check(chi, c.k ? c.k : 3, cov)});
    if (wants("equivalence")) {
      results.push_back({row_label(i), kchar_equivalence_check(chi, c.k ? c.k : 3, cov)});
      results.push_back({row_label(i), explicit_formula_check(chi, cov)});
    }
    if (wants("reduction")) {
      for (int j = 0; j <= n + 1; ++j) {
        results.push_back({row_label(i) + " j=" + std::to_string(j), identity_reduction_check(chi, j, cov)});
      }
    }
    if (wants("uexpansion")) results.push_back({row_label(i), u_expansion_check(chi)});
  }
  if (wants("shuffle")) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i; j < rows.size(); ++j) {
        results.push_back({row_label(i) + "+" + row_label(j).substr(3),
                           direct_sum_kchar_check(rows[i].chi, rows[j].chi, c.k ? c.k : 3, cov)});
      }
    }
  }
  if (wants("whitney") || wants("exterior")) {
    const auto reps = available_reps(r);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const std::string li = "rho" + std::to_string(i + 1);
      if (wants("exterior")) results.push_back({li, exterior_power_check(reps[i])});
      if (!wants("whitney")) continue;
      for (std::size_t j = i; j < reps.size(); ++j) {
        const int dim = reps[i].dim + reps[j].dim;
        for (int k = 0; k <= dim; ++k) {
          results.push_back({li + "+" + std::to_string(j + 1) + " k=" + std::to_string(k),
                             whitney_check(reps[i], reps[j], k)});
        }
      }
    }
  }

  bool pass = true;
  for (const auto& l : results) pass = pass && l.verdict.pass;
  if (out.json_mode()) {
    json arr = json::array();
    for (const auto& l : results) {
      json v = l.verdict;
      v["label"] = l.label;
      arr.push_back(v);
    }
    out.document({{"group", r.group->name()}, {"results", arr}, {"pass", pass}});
  } else {
    for (const auto& l : results) print_verdict(out.os(), l.verdict, l.label);
    out.os() << (pass ? "ALL PASS" : "FAILURES") << " (" << results.size() << " checks)\n";
  }
  return pass ? 0 : 1;
}

// --- markov ------------------------------------------------------------------

json mod_triples_json(const std::vector<ModTriple>& ts) {
  json arr = json::array();
  for (const auto& t : ts) arr.push_back({t.x, t.y, t.z});
  return arr;
}

int cmd_markov(const RunConfig& c, Output& out) {
  auto& os = out.os();
  if (c.subcommand == "tree") {
    const auto triples = enumerate_tree(parse_int(c.max));
    if (out.json_mode()) {
      out.stream_header();
      for (const auto& t : triples) os << triple_to_json(t).dump() << '\n';
    } else {
      for (const auto& t : triples) os << t.str() << '\n';
      os << triples.size() << " triples with z <= " << c.max << '\n';
    }
    return 0;
  }
  if (c.subcommand == "unique") {
    const Verdict v = uniqueness_scan(parse_int(c.max));
    if (out.json_mode()) {
      out.document({{"verdict", v}});
    } else {
      print_verdict(os, v, "max=" + c.max);
      os << (v.pass ? "no collision" : "collision found: " + v.witness) << '\n';
    }
    return v.pass ? 0 : 1;
  }
  if (c.subcommand == "modp") {
    const ModpReport r = strong_approx_check(c.p);
    // a mismatch is a finding; only a non-contained orbit is a failure
    if (out.json_mode()) {
      json body = modp_report_json(r);
      if (c.list) {
        body["solution_set"] = mod_triples_json(modp_solutions(c.p));
        body["orbit_set"] = mod_triples_json(modp_orbit(c.p));
      }
      out.document(body);
    } else {
      os << "p=" << r.p << "  solutions=" << r.solutions << "  solutions_nonzero_coords=" << r.solutions_nonzero_coords
         << "  orbit=" << r.orbit << '\n';
      os << "orbit == solutions (excluding (0,0,0)): " << (r.equal ? "yes" : "no") << '\n';
      os << "orbit == solutions (no zero coordinate): " << (r.equal_nonzero_coords ? "yes" : "no") << '\n';
      os << mark(r.orbit_subset) << "  orbit contained in solution set\n";
    }
    return r.orbit_subset ? 0 : 1;
  }
  if (c.subcommand == "mordell") {
    const auto sols = mordell_modp_solutions(c.p);
    if (out.json_mode()) {
      json body{{"p", c.p}, {"count", sols.size()}};
      if (c.list) body["solution_set"] = mod_triples_json(sols);
      out.document(body);
    } else {
      os << "p=" << c.p << "  solutions of x^2+y^2+z^2-2xyz=1: " << sols.size() << '\n';
      if (c.list) {
        for (const auto& t : sols) os << t.x << ' ' << t.y << ' ' << t.z << '\n';
      }
    }
    return 0;
  }
  throw Error(ErrorKind::InvalidParameter, "unknown markov subcommand");
}

// --- fricke ------------------------------------------------------------------

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

json trace_json(const TraceTriple& t) {
  return {{"x", t.x.str()}, {"y", t.y.str()}, {"z", t.z.str()}, {"jc", t.jc.str()}, {"residual", surface_eval(t).str()}};
}

std::string trace_text(const TraceTriple& t) {
  return "(" + t.x.str() + ", " + t.y.str() + ", " + t.z.str() + ")  j_c=" + t.jc.str() +
         "  residual=" + surface_eval(t).str();
}

int cmd_fricke(const RunConfig& c, Output& out) {
  auto& os = out.os();
  if (c.subcommand == "check") {
    FrickeSuiteOptions opts;
    opts.samples = c.samples == 0 ? 1000 : c.samples;
    opts.seed = c.seed;
    const auto verdicts = fricke_suite(opts);
    bool pass = true;
    for (const auto& v : verdicts) pass = pass && v.pass;
    if (out.json_mode()) {
      out.document({{"results", verdicts}, {"pass", pass}});
    } else {
      for (const auto& v : verdicts) print_verdict(os, v, "SL2(Z)");
    }
    return pass ? 0 : 1;
  }
  if (c.subcommand == "lift") {
    const auto parts = split_commas(c.triple);
    if (parts.size() != 3) throw Error(ErrorKind::InvalidParameter, "--triple needs three comma-separated integers");
    const MarkovTriple t(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]));
    const TraceTriple lifted = markov_lift(t);
    const Rat residual = markov_surface_eval(lifted.x, lifted.y, lifted.z);
    if (out.json_mode()) {
      out.document({{"triple", triple_to_json(t)}, {"lift", trace_json(lifted)}, {"pass", residual.is_zero()}});
    } else {
      os << t.str() << " -> " << trace_text(lifted) << '\n';
    }
    return residual.is_zero() ? 0 : 1;
  }
  if (c.subcommand == "orbit") {
    const auto parts = split_commas(c.triple);
    if (parts.size() != 3) throw Error(ErrorKind::InvalidParameter, "--triple needs three comma-separated rationals");
    const TraceTriple start{Rat::parse(parts[0]), Rat::parse(parts[1]), Rat::parse(parts[2]), Rat::parse(c.jc)};
    const long limit = parse_int(c.max).get_si();
    if (limit < 1 || limit > 100000) throw Error(ErrorKind::InvalidParameter, "--max for orbit must be in 1..100000");
    // breadth-first orbit under S and TS, first `limit` distinct triples
    std::vector<TraceTriple> orbit{start};
    bool invariant = true;
    for (std::size_t i = 0; i < orbit.size() && orbit.size() < static_cast<std::size_t>(limit); ++i) {
      for (const TraceTriple& next : {action_S(orbit[i]), action_TS(orbit[i])}) {
        if (!(surface_eval(next) == surface_eval(start))) invariant = false;
        if (std::find(orbit.begin(), orbit.end(), next) == orbit.end() &&
            orbit.size() < static_cast<std::size_t>(limit)) {
          orbit.push_back(next);
        }
      }
    }
    if (out.json_mode()) {
      out.stream_header();
      for (const auto& t : orbit) os << trace_json(t).dump() << '\n';
      os << json{{"invariant", invariant}}.dump() << '\n';
    } else {
      for (const auto& t : orbit) os << trace_text(t) << '\n';
      os << mark(invariant) << "  surface value preserved on " << orbit.size() << " triples\n";
    }
    return invariant ? 0 : 1;
  }
  if (c.subcommand == "length") {
    const Rat jc = Rat::parse(c.jc);
    const double l = boundary_length(jc);
    if (out.json_mode()) {
      out.document({{"jc", jc.str()}, {"length", l}});
    } else {
      os << std::setprecision(10) << "l = 2 arcosh(-j_c/2) = " << l << '\n';
    }
    return 0;
  }
  throw Error(ErrorKind::InvalidParameter, "unknown fricke subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"frobmark: exact checks for group determinants, k-characters, Markov triples and Fricke identities"};
  app.set_version_flag("--version", std::string(FROBMARK_VERSION));
  app.require_subcommand(1);

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    sub->add_option("--out", cfg.out, "write output to this file");
  };

  auto* gdet = app.add_subcommand("gdet", "group determinant and its factorization");
  gdet->add_option("--group", cfg.group, "built-in group name or JSON file")->capture_default_str();
  gdet->add_option("--mode", cfg.mode, "symbolic or eval")->check(CLI::IsMember({"symbolic", "eval"}))->capture_default_str();
  gdet->add_option("--samples", cfg.samples, "evaluation points (eval mode)");
  common(gdet);

  auto* kchar = app.add_subcommand("kchar", "k-character identities");
  kchar->add_option("--group", cfg.group, "built-in group name or JSON file")->capture_default_str();
  kchar->add_option("--check", cfg.check,
                    "vanishing|symmetry|equivalence|shuffle|whitney|exterior|reduction|uexpansion|all")
      ->capture_default_str();
  kchar->add_option("--k", cfg.k, "tuple length (default depends on the check)");
  kchar->add_option("--samples", cfg.samples, "samples when G^k exceeds the exhaustive limit");
  common(kchar);

  auto* markov = app.add_subcommand("markov", "Markov triples");
  markov->require_subcommand(1);
  for (const char* name : {"tree", "unique"}) {
    auto* sub = markov->add_subcommand(name, std::string(name) == "tree" ? "enumerate the tree" : "uniqueness scan");
    sub->add_option("--max", cfg.max, "largest z")->capture_default_str();
    common(sub);
  }
  for (const char* name : {"modp", "mordell"}) {
    auto* sub = markov->add_subcommand(name, std::string(name) == "modp" ? "mod-p solutions vs Vieta orbit"
                                                                         : "solutions of x^2+y^2+z^2-2xyz=1 mod p");
    sub->add_option("--p", cfg.p, "prime modulus")->capture_default_str();
    sub->add_flag("--list", cfg.list, "include the residue triples");
    common(sub);
  }

  auto* fricke = app.add_subcommand("fricke", "trace identities for 2x2 matrices");
  fricke->require_subcommand(1);
  auto* fcheck = fricke->add_subcommand("check", "skein, Fricke and chi3 identities on random words");
  fcheck->add_option("--samples", cfg.samples, "number of word pairs (default 1000)");
  common(fcheck);
  auto* forbit = fricke->add_subcommand("orbit", "orbit of a trace triple under S and TS");
  forbit->add_option("--triple", cfg.triple, "x,y,z")->required();
  forbit->add_option("--jc", cfg.jc, "commutator trace")->capture_default_str();
  forbit->add_option("--max", cfg.max, "maximum orbit size");
  common(forbit);
  auto* flift = fricke->add_subcommand("lift", "lift a Markov triple to the j_c = -2 surface");
  flift->add_option("--triple", cfg.triple, "x,y,z")->required();
  common(flift);
  auto* flength = fricke->add_subcommand("length", "boundary geodesic length");
  flength->add_option("--jc", cfg.jc, "commutator trace")->capture_default_str();
  common(flength);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gdet->parsed()) {
      cfg.command = "gdet";
      Output out(cfg);
      return cmd_gdet(cfg, out);
    }
    if (kchar->parsed()) {
      cfg.command = "kchar";
      Output out(cfg);
      return cmd_kchar(cfg, out);
    }
    if (markov->parsed()) {
      cfg.command = "markov";
      cfg.subcommand = markov->get_subcommands().front()->get_name();
      Output out(cfg);
      return cmd_markov(cfg, out);
    }
    if (fricke->parsed()) {
      cfg.command = "fricke";
      cfg.subcommand = fricke->get_subcommands().front()->get_name();
      if (cfg.subcommand == "orbit" && forbit->count("--max") == 0) cfg.max = "20";
      Output out(cfg);
      return cmd_fricke(cfg, out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
