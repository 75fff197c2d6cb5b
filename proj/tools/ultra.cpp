// ultra: command-line front end for ultra triples.
//
// Exit codes: 0 success or property holds, 1 property fails, 2 usage,
// parse or parameter error. ULTRA_ENUM_CAP (a positive integer) overrides
// the cap on enumerated greedy sequences.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ultra/bhargava.hpp"
#include "ultra/constructions.hpp"
#include "ultra/core.hpp"
#include "ultra/greedoid.hpp"
#include "ultra/greedy.hpp"
#include "ultra/io.hpp"
#include "ultra/oracle.hpp"

namespace {

using nlohmann::json;
using ultra::io::ParseError;

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

std::size_t enumeration_cap() {
  const char* env = std::getenv("ULTRA_ENUM_CAP");
  if (env == nullptr || *env == '\0') return ultra::kDefaultEnumerationCap;
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != std::string(env).size() || value == 0) {
    throw ParseError("ULTRA_ENUM_CAP must be a positive integer");
  }
  return static_cast<std::size_t>(value);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::int64_t> int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  for (const auto& tok : split_list(text)) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (tok.empty() || pos != tok.size()) {
      throw ParseError(std::string("bad integer in ") + what + ": '" + tok +
                       "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<ultra::Rational> rational_list(const std::string& text) {
  std::vector<ultra::Rational> out;
  for (const auto& tok : split_list(text)) {
    try {
      out.push_back(ultra::Rational::parse(tok));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return out;
}

ultra::Rational rational_arg(const std::string& text) {
  try {
    return ultra::Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

// Resolves comma-separated labels; empty text selects every point.
std::vector<ultra::Point> resolve_subset(const ultra::UltraTriple& t,
                                         const std::string& text) {
  std::vector<ultra::Point> out;
  if (text.empty()) {
    for (ultra::Point p = 0; p < t.size(); ++p) out.push_back(p);
    return out;
  }
  for (const auto& label : split_list(text)) {
    const auto p = t.find(label);
    if (!p) throw ParseError("unknown label '" + label + "'");
    out.push_back(*p);
  }
  return out;
}

json labels_of(const ultra::UltraTriple* t, ultra::Mask m) {
  json out = json::array();
  for (ultra::Point p : ultra::points_of(m)) {
    out.push_back(t != nullptr ? t->label(p) : std::to_string(p));
  }
  return out;
}

json report_json(const ultra::AxiomReport& r, const ultra::UltraTriple* t) {
  json out{{"axiom", ultra::to_string(r.axiom)}, {"holds", r.holds}};
  if (r.witness) {
    json sets = json::array();
    for (ultra::Mask m : r.witness->sets) sets.push_back(labels_of(t, m));
    json elems = json::array();
    for (ultra::Point p : r.witness->elements) {
      elems.push_back(t != nullptr ? t->label(p) : std::to_string(p));
    }
    out["witness"] = {{"sets", std::move(sets)}, {"elements", std::move(elems)}};
  }
  return out;
}

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + out_path);
  out << doc.dump(2) << '\n';
}

// validate ------------------------------------------------------------------

struct ValidateArgs {
  std::string instance;
  std::size_t max_points = 64;
};

int cmd_validate(const ValidateArgs& a) {
  const auto inst = ultra::io::read_instance(a.instance);
  if (inst.triple.size() > a.max_points) {
    throw ParseError(std::to_string(inst.triple.size()) +
                     " points exceeds --max-points " +
                     std::to_string(a.max_points));
  }
  const auto report = inst.full ? ultra::validate(*inst.full)
                                : ultra::validate(inst.triple);
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"a", inst.triple.label(v.a)},
                          {"b", inst.triple.label(v.b)},
                          {"c", inst.triple.label(v.c)},
                          {"lhs", v.lhs.str()},
                          {"rhs", v.rhs.str()}});
  }
  emit({{"valid", report.ok},
        {"full", inst.full.has_value()},
        {"violations", std::move(violations)}},
       "");
  return report.ok ? kOk : kFails;
}

// greedy / nu -----------------------------------------------------------------

struct GreedyArgs {
  std::string instance;
  std::string subset;
  std::optional<std::size_t> m;
  std::string mode = "perm";
  std::string ties = "first";
};

const ultra::FullUltraTriple& require_full(const ultra::io::Instance& inst) {
  if (!inst.full) {
    throw ParseError("subseq mode needs an instance with \"selfdist\"");
  }
  return *inst.full;
}

int cmd_greedy(const GreedyArgs& a) {
  const auto inst = ultra::io::read_instance(a.instance);
  const auto subset = resolve_subset(inst.triple, a.subset);
  const std::size_t m = a.m.value_or(subset.size());
  const auto ties = a.ties == "all" ? ultra::TieBreak::kEnumerateAll
                                    : ultra::TieBreak::kLowestIndex;
  std::vector<ultra::GreedyTrace> traces;
  if (a.mode == "subseq") {
    traces = ultra::greedy_subsequences(require_full(inst), subset, m, ties,
                                        enumeration_cap());
  } else {
    traces = ultra::greedy_permutations(inst.triple, subset, m, ties,
                                        enumeration_cap());
  }
  json out = json::array();
  for (const auto& t : traces) out.push_back(ultra::io::to_json(t, inst.triple));
  emit({{"traces", std::move(out)}}, "");
  return kOk;
}

struct NuArgs {
  std::string instance;
  std::string subset;
  std::size_t k = 1;
  std::string mode = "perm";
};

int cmd_nu(const NuArgs& a) {
  const auto inst = ultra::io::read_instance(a.instance);
  const auto subset = resolve_subset(inst.triple, a.subset);
  const ultra::Rational value =
      a.mode == "subseq" ? ultra::nu(require_full(inst), subset, a.k)
                         : ultra::nu_bar(inst.triple, subset, a.k);
  std::cout << json(value.str()).dump() << '\n';
  return kOk;
}

// greedoid --------------------------------------------------------------------

struct GreedoidArgs {
  std::string instance;
  std::string system;
  std::string emit = "sets";
  std::size_t max_points = 16;
};

int cmd_greedoid(const GreedoidArgs& a) {
  if (a.instance.empty() == a.system.empty()) {
    throw ParseError("give exactly one of an instance file or --system");
  }
  std::optional<ultra::io::Instance> inst;
  ultra::SetSystem system;
  if (!a.system.empty()) {
    system = ultra::io::parse_set_system(ultra::io::read_text(a.system));
  } else {
    inst = ultra::io::read_instance(a.instance);
    system = ultra::bhargava_greedoid(inst->triple, a.max_points);
  }
  const ultra::UltraTriple* t = inst ? &inst->triple : nullptr;

  if (a.emit == "sets") {
    json levels = json::array();
    for (std::size_t k = 0; k <= system.ground(); ++k) {
      json sets = json::array();
      for (ultra::Mask m : ultra::level_sets(system, k).sets()) {
        sets.push_back(labels_of(t, m));
      }
      levels.push_back({{"k", k}, {"sets", std::move(sets)}});
    }
    emit({{"ground", system.ground()}, {"levels", std::move(levels)}}, "");
    return kOk;
  }

  bool all = true;
  json axioms = json::array();
  for (const auto& r :
       {ultra::check_axiom_i(system), ultra::check_axiom_ii(system),
        ultra::check_axiom_iii(system), ultra::check_axiom_iv(system)}) {
    all = all && r.holds;
    axioms.push_back(report_json(r, t));
  }
  json levels = json::array();
  for (std::size_t k = 0; k <= system.ground(); ++k) {
    const auto level = ultra::level_sets(system, k);
    if (level.size() == 0) continue;
    const auto r = ultra::check_matroid_bases(level);
    all = all && r.holds;
    json entry = report_json(r, t);
    entry["k"] = k;
    levels.push_back(std::move(entry));
  }
  emit({{"holds", all}, {"axioms", std::move(axioms)},
        {"levels", std::move(levels)}},
       "");
  return all ? kOk : kFails;
}

// generate --------------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::string points;
  std::string weights;
  std::size_t n = 0;
  std::int64_t m = 0;
  std::string eps = "1";
  std::string alpha = "2";
  std::int64_t p = 2;
  std::string r;
  std::string c;
  std::uint64_t seed = 0;
  std::size_t depth = 3;
  std::string full;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  const auto weights = rational_list(a.weights);
  const auto points = int_list(a.points, "--points");
  ultra::UltraTriple t;
  if (a.family == "constant") {
    t = ultra::constant_triple(a.n, weights);
  } else if (a.family == "mod") {
    t = ultra::mod_triple(points, a.m, rational_arg(a.eps),
                          rational_arg(a.alpha), weights);
  } else if (a.family == "padic") {
    t = ultra::padic_triple(points, a.p, weights);
  } else if (a.family == "padic-log") {
    t = ultra::padic_log_triple(points, a.p, weights);
  } else if (a.family == "rseq") {
    t = ultra::rseq_triple(points, int_list(a.r, "--r"), rational_list(a.c),
                           weights);
  } else {
    t = ultra::oracle::random_ultra_triple(a.seed, a.n, a.depth);
  }
  if (!a.full.empty()) {
    emit(ultra::io::to_json(ultra::extend_to_full(t, rational_arg(a.full))),
         a.out);
  } else {
    emit(ultra::io::to_json(t), a.out);
  }
  return kOk;
}

// tree ------------------------------------------------------------------------

int cmd_tree(const std::string& path, const std::string& out) {
  const auto tree = ultra::io::parse_tree(ultra::io::read_text(path));
  emit(ultra::io::to_json(ultra::tree_triple(tree)), out);
  return kOk;
}

// pordering -------------------------------------------------------------------

struct POrderingArgs {
  std::int64_t p = 2;
  std::string points;
  std::size_t m = 0;
  std::optional<std::string> check;
};

int cmd_pordering(const POrderingArgs& a) {
  const auto set = int_list(a.points, "--points");
  if (a.check) {
    const auto seq = int_list(*a.check, "--check");
    const bool ok = ultra::check_equivalence(set, a.p, seq);
    emit({{"p", a.p},
          {"sequence", seq},
          {"pm_ordering", ok},
          {"greedy_permutation", ok}},
         "");
    return ok ? kOk : kFails;
  }
  emit({{"p", a.p}, {"ordering", ultra::pm_ordering(set, a.p, a.m)}}, "");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ultra triples: validation, greedy perimeter algorithms, "
               "Bhargava greedoids and P-orderings"};
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Check the ultrametric inequality");
  validate->add_option("instance", va.instance, "Instance JSON")->required();
  validate->add_option("--max-points", va.max_points, "Refuse larger instances");

  GreedyArgs ga;
  auto* greedy = app.add_subcommand("greedy", "Greedy permutations or subsequences");
  greedy->add_option("instance", ga.instance, "Instance JSON")->required();
  greedy->add_option("--subset", ga.subset, "Comma-separated labels (default: all)");
  greedy->add_option("--m", ga.m, "Sequence length (default: |subset|)");
  greedy->add_option("--mode", ga.mode)->check(CLI::IsMember({"perm", "subseq"}));
  greedy->add_option("--ties", ga.ties)->check(CLI::IsMember({"first", "all"}));

  NuArgs na;
  auto* nu = app.add_subcommand("nu", "The k-th greedy increment");
  nu->add_option("instance", na.instance, "Instance JSON")->required();
  nu->add_option("--subset", na.subset, "Comma-separated labels (default: all)");
  nu->add_option("--k", na.k)->required();
  nu->add_option("--mode", na.mode)->check(CLI::IsMember({"perm", "subseq"}));

  GreedoidArgs oa;
  auto* greedoid = app.add_subcommand("greedoid", "Bhargava greedoid sets or axiom check");
  greedoid->add_option("instance", oa.instance, "Instance JSON");
  greedoid->add_option("--system", oa.system, "Set system JSON instead of an instance");
  greedoid->add_option("--emit", oa.emit)->check(CLI::IsMember({"sets", "check"}));
  greedoid->add_option("--max-points", oa.max_points, "Ground set cap");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write an instance from a family");
  generate->add_option("--family", gen.family)
      ->required()
      ->check(CLI::IsMember({"constant", "mod", "padic", "padic-log", "rseq", "random"}));
  generate->add_option("--points", gen.points, "Comma-separated integers");
  generate->add_option("--weights", gen.weights, "Comma-separated rationals");
  generate->add_option("--n", gen.n, "Point count (constant, random)");
  generate->add_option("--m", gen.m, "Modulus (mod)");
  generate->add_option("--eps", gen.eps, "Distance within a class (mod)");
  generate->add_option("--alpha", gen.alpha, "Distance across classes (mod)");
  generate->add_option("--p", gen.p, "Prime (padic, padic-log)");
  generate->add_option("--r", gen.r, "Divisibility chain (rseq)");
  generate->add_option("--c", gen.c, "Distances per level (rseq)");
  generate->add_option("--seed", gen.seed, "Seed (random)");
  generate->add_option("--depth", gen.depth, "Hierarchy depth (random)");
  generate->add_option("--full", gen.full, "Add this self-distance");
  generate->add_option("--out", gen.out, "Output path (default: stdout)");

  std::string tree_path;
  std::string tree_out;
  auto* tree = app.add_subcommand("tree", "Leaf triple of a weighted rooted tree");
  tree->add_option("tree", tree_path, "Tree file")->required();
  tree->add_option("--out", tree_out, "Output path (default: stdout)");

  POrderingArgs pa;
  auto* pordering = app.add_subcommand("pordering", "(P,m)-orderings of integers");
  pordering->add_option("--p", pa.p)->required();
  pordering->add_option("--points", pa.points, "Comma-separated integers")->required();
  pordering->add_option("--m", pa.m, "Ordering length");
  pordering->add_option("--check", pa.check, "Sequence to test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(va);
    if (greedy->parsed()) return cmd_greedy(ga);
    if (nu->parsed()) return cmd_nu(na);
    if (greedoid->parsed()) return cmd_greedoid(oa);
    if (generate->parsed()) return cmd_generate(gen);
    if (tree->parsed()) return cmd_tree(tree_path, tree_out);
    if (pordering->parsed()) return cmd_pordering(pa);
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range and length_error (cap exceeded) are
    // caller errors; any other logic_error is a failed internal check.
    const bool caller = dynamic_cast<const std::invalid_argument*>(&e) ||
                        dynamic_cast<const std::out_of_range*>(&e) ||
                        dynamic_cast<const std::length_error*>(&e);
    std::cerr << "error: " << e.what() << '\n';
    return caller ? kUsage : kFails;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
