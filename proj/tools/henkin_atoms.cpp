// henkin-atoms: command-line front end.
//
//   henkin-atoms eval --structure sigma0 --budget 2 --formula f.l2 [--assign a.json]
//   henkin-atoms choice-witness --structure ksigma0:2 --H h.l2 [--assign a.json]
//   henkin-atoms refute-tr --k 2 --support-bound 2
//   henkin-atoms refute-wo --support-bound 2
//   henkin-atoms oracle-check [--structure finite:3] [--formula corpus.l2] [--seed 0]
//
// Exit codes: 0 success, 1 verification failure or an accepted candidate,
// 2 usage or input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "henkin/choice.hpp"
#include "henkin/indep.hpp"
#include "henkin/json_io.hpp"
#include "naive_eval.hpp"
#include "sampling.hpp"

using namespace henkin;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Formula> read_formulas(const std::string& path) {
  try {
    auto out = parse_corpus(read_file(path));
    if (out.empty()) throw UsageError(path + ": no formula");
    return out;
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

Structure parse_structure(const std::string& spec) {
  try {
    return Structure::parse(spec);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int default_budget() {
  const char* env = std::getenv("HENKIN_ATOMS_BUDGET");
  if (!env || !*env) return 2;
  try {
    std::size_t used = 0;
    int b = std::stoi(env, &used);
    if (used != std::string(env).size() || b < 0) throw std::invalid_argument("");
    return b;
  } catch (const std::exception&) {
    throw UsageError(std::string("HENKIN_ATOMS_BUDGET must be a non-negative integer, got ") + env);
  }
}

Assignment read_assignment(const std::string& path, const Structure& s) {
  if (path.empty()) return {};
  Json j;
  try {
    j = Json::parse(read_file(path));
    return assignment_from_json(j, s);
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const Json& report, const std::string& json_path, const std::string& summary) {
  if (json_path.empty()) {
    std::cout << report.dump(2) << "\n";
    std::cerr << summary;
    return;
  }
  std::ofstream out(json_path);
  if (!out) throw UsageError("cannot write " + json_path);
  out << report.dump(2) << "\n";
  std::cout << summary;
}

struct Options {
  std::string structure;
  int budget = -1;
  std::string formula;
  std::string assign;
  int k = 2;
  int support_bound = 2;
  std::string json;
  std::uint64_t seed = 0;
  bool all = false;
  unsigned threads = 0;
  int samples = 3;
};

EvalConfig config(const Options& o, const std::string& fallback_structure) {
  EvalConfig cfg;
  cfg.structure = parse_structure(o.structure.empty() ? fallback_structure : o.structure);
  cfg.budget = o.budget >= 0 ? o.budget : default_budget();
  return cfg;
}

int run_eval(const Options& o) {
  EvalConfig cfg = config(o, "sigma0");
  auto formulas = read_formulas(o.formula);
  Assignment f = read_assignment(o.assign, cfg.structure);
  Json results = Json::array();
  std::ostringstream summary;
  for (const auto& phi : formulas) {
    EvalResult r = eval(phi, f, cfg);
    Json e;
    e["formula"] = print(phi);
    e["value"] = r.value;
    e["budgetLimited"] = r.budget_limited;
    results.push_back(std::move(e));
    summary << (r.value ? "true " : "false") << (r.budget_limited ? " (budget-limited)" : "") << "  " << print(phi)
            << "\n";
  }
  Json report;
  report["structure"] = cfg.structure.name();
  report["budget"] = cfg.budget;
  report["results"] = std::move(results);
  emit(report, o.json, summary.str());
  return 0;
}

int run_choice(const Options& o) {
  EvalConfig cfg = config(o, "sigma0");
  auto formulas = read_formulas(o.formula);
  if (formulas.size() != 1) throw UsageError("--H expects exactly one formula");
  Assignment f = read_assignment(o.assign, cfg.structure);
  try {
    ChoiceWitness w = build_sigma(formulas[0], f, cfg);
    Json report = to_json(w);
    report["verificationLimited"] = w.verification_limited;
    std::ostringstream summary;
    summary << "choice predicate built over " << w.defining_support << " with " << w.choices.size()
            << " blocks; consequent verified" << (w.verification_limited ? " within budget" : "") << "\n";
    emit(report, o.json, summary.str());
    return 0;
  } catch (const AntecedentError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const WitnessExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
  }
  return 1;
}

int report_refutations(const RefutationReport& rep, const std::string& json_path, Json extra = {}) {
  Json j = to_json(rep);
  for (auto& [key, value] : extra.items()) j[key] = value;
  std::ostringstream summary;
  summary << rep.claim << ": " << rep.candidates << " candidates, " << rep.accepted << " accepted, "
          << rep.refutation_count << " refutations, " << rep.replayed << " replayed\n";
  emit(j, json_path, summary.str());
  return rep.accepted == 0 && rep.replayed == rep.refutation_count ? 0 : 1;
}

int run_refute_tr(const Options& o) {
  if (o.k < 2) {
    std::cerr << "error: TR refutation requires k ≥ 2\n";
    return 2;
  }
  if (o.support_bound < 0) throw UsageError("--support-bound must be non-negative");
  return report_refutations(refute_tr1(o.k, o.support_bound, o.all, o.threads), o.json);
}

int run_refute_wo(const Options& o) {
  if (o.support_bound < 0) throw UsageError("--support-bound must be non-negative");
  RefutationReport rep = refute_wo1(o.support_bound, o.all);

  // Positive control: the index order on FiniteStd(3) is a well-order.
  Structure fin = Structure::finite(3);
  OrbitPredicate leq =
      OrbitPredicate::from_membership(2, {}, fin, [](const std::vector<Atom>& t) { return t[0].index <= t[1].index; });
  bool direct = !check_well_order_finite(leq).has_value();
  Assignment f;
  f.bind("T", leq);
  EvalConfig cfg;
  cfg.structure = fin;
  bool by_eval = eval(well_order_body("T", 1), f, cfg).value;
  Json control;
  control["structure"] = fin.name();
  control["order"] = to_json(leq);
  control["accepted"] = direct && by_eval;
  Json extra;
  extra["positiveControl"] = control;
  int code = report_refutations(rep, o.json, extra);
  if (!(direct && by_eval)) {
    std::cerr << "positive control rejected\n";
    return 1;
  }
  return code;
}

int run_oracle_check(const Options& o) {
  std::vector<Structure> structures;
  if (o.structure.empty()) {
    structures = {Structure::finite(2), Structure::finite(3)};
  } else {
    structures = {parse_structure(o.structure)};
    if (!structures[0].is_finite()) throw UsageError("oracle-check needs a finite structure");
  }
  std::string path = o.formula.empty() ? std::string(HENKIN_CORPUS_DIR) + "/finite.l2" : o.formula;
  auto formulas = read_formulas(path);
  oracle::Rng rng(o.seed);
  std::uint64_t checks = 0;
  Json mismatches = Json::array();
  for (const auto& s : structures) {
    EvalConfig cfg;
    cfg.structure = s;
    auto universe = s.domain();
    for (const auto& phi : formulas) {
      FreeVariables fv = free_variables(phi);
      int samples = fv.individuals.empty() && fv.predicates.empty() ? 1 : o.samples;
      for (int i = 0; i < samples; ++i) {
        Assignment f = oracle::random_assignment(phi, s, rng);
        bool mine = eval(phi, f, cfg).value;
        bool theirs = oracle::evaluate(phi, universe, oracle::to_env(f, universe));
        ++checks;
        if (mine != theirs) {
          Json m;
          m["structure"] = s.name();
          m["formula"] = print(phi);
          m["eval"] = mine;
          m["oracle"] = theirs;
          mismatches.push_back(std::move(m));
        }
      }
    }
  }
  Json report;
  report["formulas"] = formulas.size();
  report["checks"] = checks;
  report["seed"] = o.seed;
  report["mismatches"] = mismatches;
  std::ostringstream summary;
  summary << "oracle-check: " << checks << " checks, " << mismatches.size() << " mismatches\n";
  emit(report, o.json, summary.str());
  return mismatches.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finitely supported predicates, Henkin evaluation, choice witnesses and refuters"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--structure", o.structure, "sigma0 | ksigma0:<k> | finite:<k>");
    cmd->add_option("--budget", o.budget, "fresh atoms per sort for predicate quantifiers")->check(CLI::NonNegativeNumber);
    cmd->add_option("--json", o.json, "write the JSON report here");
    cmd->add_option("--seed", o.seed, "seed for randomized checks");
  };

  auto* ev = app.add_subcommand("eval", "evaluate formulas");
  add_common(ev);
  ev->add_option("--formula", o.formula, "formula file (one formula or a ;-separated corpus)")->required();
  ev->add_option("--assign", o.assign, "JSON assignment for free variables");

  auto* cw = app.add_subcommand("choice-witness", "build the choice predicate for H(x, D)");
  add_common(cw);
  cw->add_option("--H,--formula", o.formula, "file holding H(x, D)")->required();
  cw->add_option("--assign", o.assign, "JSON assignment for free parameters of H");

  auto* tr = app.add_subcommand("refute-tr", "refute TR1 in the k-sorted model");
  add_common(tr);
  tr->add_option("--k", o.k, "number of sorts");
  tr->add_option("--support-bound", o.support_bound, "maximal candidate support size");
  tr->add_flag("--all", o.all, "list every refutation instead of grouping them");
  tr->add_option("--threads", o.threads, "worker threads (0: all cores)");

  auto* wo = app.add_subcommand("refute-wo", "refute WO1 in the basic model");
  add_common(wo);
  wo->add_option("--support-bound", o.support_bound, "maximal candidate support size");
  wo->add_flag("--all", o.all, "list every refutation instead of grouping them");

  auto* oc = app.add_subcommand("oracle-check", "compare eval with brute force on finite structures");
  add_common(oc);
  oc->add_option("--formula", o.formula, "corpus file");
  oc->add_option("--samples", o.samples, "random assignments per formula with free variables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ev) return run_eval(o);
    if (*cw) return run_choice(o);
    if (*tr) return run_refute_tr(o);
    if (*wo) return run_refute_wo(o);
    if (*oc) return run_oracle_check(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnboundVariable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
