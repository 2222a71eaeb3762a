#include "henkin/choice.hpp"

#include <array>

namespace henkin {

bool PartitionPlan::in_block(const Block& b, const Atom& a) const {
  if (b.cofinite) return a.sort == b.sort && !P.contains(a);
  return a == b.rep;
}

const Block& PartitionPlan::block_of(const Atom& a) const {
  structure.check_atom(a);
  for (const auto& b : blocks)
    if (in_block(b, a)) return b;
  throw DomainError("atom " + to_string(a) + " lies in no block");
}

SupportSet PartitionPlan::choice_set() const {
  SupportSet out;
  for (const auto& b : blocks) out.insert(b.rep);
  return out;
}

PartitionPlan p_adequate_partition(const SupportSet& P, const Structure& s) {
  PartitionPlan plan;
  plan.P = P;
  plan.structure = s;
  int i = 0;
  for (const auto& a : P) {
    s.check_atom(a);
    plan.blocks.push_back({a.sort, ++i, false, a});
  }
  const int q = static_cast<int>(P.size());
  for (int sort = 1; sort <= s.sorts(); ++sort) {
    Atom mu;
    try {
      mu = fresh_atom(sort, P, s);
    } catch (const DomainError&) {
      continue;  // I_j ∖ P is empty
    }
    plan.blocks.push_back({sort, q + 1, true, mu});
    plan.mu.insert(mu);
  }
  return plan;
}

namespace {

std::string block_name(const Block& b) {
  return "(" + std::to_string(b.sort) + "," + std::to_string(b.index) + ")";
}

}  // namespace

std::vector<OrbitPredicate> choose_deltas(const Formula& h, const Assignment& f, const PartitionPlan& plan,
                                          const EvalConfig& cfg, const std::string& x, const std::string& d) {
  std::vector<OrbitPredicate> out;
  out.reserve(plan.blocks.size());
  for (const auto& b : plan.blocks) {
    Assignment g = f;
    g.unbind(d);
    g.bind(x, b.rep);
    WitnessSearch w = first_witness(h, d, 1, g, cfg);
    if (!w.witness) {
      if (w.budget_limited)
        throw WitnessExhausted("witness search exhausted at budget " + std::to_string(cfg.budget) + " for block " +
                               block_name(b) + " at " + to_string(b.rep));
      throw AntecedentError("antecedent fails at " + to_string(b.rep));
    }
    out.push_back(std::move(*w.witness));
  }
  return out;
}

Formula swap_formula(bool cofinite) {
  if (!cofinite) return parse("x = x0 & y = y0");
  return parse(
      "(x = x0 -> y = y0) & (!(x = x0) -> (((!(y0 = x0) & !(y0 = x)) -> y = y0) & (y0 = x0 -> y = x) & "
      "(y0 = x -> y = x0)))");
}

OrbitPredicate section(const OrbitPredicate& sigma, const Atom& xi) {
  if (sigma.arity() != 2) throw ArityError("section needs a binary predicate");
  SupportSet supp = sigma.support();
  supp.insert(xi);
  return OrbitPredicate::from_membership(1, supp, sigma.structure(), [&](const std::vector<Atom>& t) {
    std::array<Atom, 2> pair{xi, t[0]};
    return sigma.contains(pair);
  });
}

namespace {

std::string nu_var(int i) { return "n" + std::to_string(i); }
std::string sort_var(int j) { return "I" + std::to_string(j); }

}  // namespace

Formula block_formula(const PartitionPlan& plan, const Block& b, const std::string& v) {
  if (!b.cofinite) return Formula::eq(v, nu_var(b.index));
  std::vector<Formula> parts;
  if (plan.structure.sorts() > 1) parts.push_back(Formula::app(sort_var(b.sort), {v}));
  int i = 0;
  for (const auto& a : plan.P) {
    ++i;
    if (a.sort == b.sort) parts.push_back(Formula::negation(Formula::eq(v, nu_var(i))));
  }
  if (parts.empty()) return Formula::eq(v, v);
  return Formula::conj(parts);
}

Assignment block_env(const PartitionPlan& plan) {
  Assignment env;
  int i = 0;
  for (const auto& a : plan.P) env.bind(nu_var(++i), a);
  const Structure& s = plan.structure;
  if (s.sorts() > 1)
    for (int j = 1; j <= s.sorts(); ++j)
      env.bind(sort_var(j), OrbitPredicate::from_membership(
                                1, {}, s, [j](const std::vector<Atom>& t) { return t[0].sort == j; }));
  return env;
}

namespace {

Formula certificate_formula(const PartitionPlan& plan) {
  std::vector<Formula> disjuncts;
  for (const auto& b : plan.blocks) {
    Formula inner = Formula::conj(
        {block_formula(plan, b, "x0"), Formula::app("S0", {"x0", "y0"}), swap_formula(b.cofinite)});
    disjuncts.push_back(
        Formula::conj(block_formula(plan, b, "x"), Formula::exists("x0", Formula::exists("y0", inner))));
  }
  return Formula::disj(disjuncts);
}

}  // namespace

ChoiceWitness build_sigma(const Formula& h, const Assignment& f, const EvalConfig& cfg, const std::string& x,
                          const std::string& d) {
  const Structure& s = cfg.structure;
  Formula antecedent = Formula::forall(x, Formula::exists_pred(d, 1, h));
  std::string s_name;
  Formula consequent = choice_consequent_body(h, x, d, &s_name);

  EvalResult ante = eval(antecedent, f, cfg);
  if (!ante.value)
    throw AntecedentError(ante.budget_limited ? "antecedent fails within budget " + std::to_string(cfg.budget)
                                              : "antecedent fails");

  SupportSet P = stabilizer_of(h, f, {x, d});
  PartitionPlan plan = p_adequate_partition(P, s);
  std::vector<OrbitPredicate> deltas = choose_deltas(h, f, plan, cfg, x, d);

  SupportSet Q = set_union(P, plan.mu);
  for (const auto& delta : deltas) Q.insert(least_support(delta));

  auto delta_of = [&](const Block& b) -> const OrbitPredicate& {
    for (std::size_t i = 0; i < plan.blocks.size(); ++i)
      if (plan.blocks[i] == b) return deltas[i];
    throw InternalError("unknown block");
  };

  // σ(ξ, η): ξ's block e; singletons use δ_ξ directly, co-finite blocks move
  // η back along (μ_j ξ) into δ_{μ_j}.
  auto sigma_rule = [&](const std::vector<Atom>& t) {
    const Block& b = plan.block_of(t[0]);
    const OrbitPredicate& delta = delta_of(b);
    Atom eta = b.cofinite ? transposition(b.rep, t[0])(t[1]) : t[1];
    return delta.contains(std::span<const Atom>(&eta, 1));
  };
  OrbitPredicate sigma = OrbitPredicate::from_membership(2, Q, s, sigma_rule);

  ChoiceWitness out{plan, {}, sigma, Q, certificate_formula(plan), {}, false};
  for (std::size_t i = 0; i < plan.blocks.size(); ++i) out.choices.push_back({plan.blocks[i], deltas[i]});

  Assignment g = f;
  g.unbind(x);
  g.unbind(d);
  g.bind(s_name, sigma);
  EvalResult cons = eval(consequent, g, cfg);
  if (!cons.value) throw InternalError("choice predicate fails the consequent");
  out.verification_limited = cons.budget_limited;

  // Certificate: S0 = σ restricted to the representatives, then G must agree
  // with σ on one pair per orbit type over Q.
  SupportSet reps = plan.choice_set();
  OrbitPredicate s0 = OrbitPredicate::from_membership(2, Q, s, [&](const std::vector<Atom>& t) {
    return reps.contains(t[0]) && sigma.contains(t);
  });
  Assignment& env = out.certificate_env;
  env = block_env(plan);
  env.bind("S0", s0);
  for (const auto& t : all_orbit_types(2, Q, s)) {
    std::vector<Atom> pair = representative(t, Q, s);
    Assignment probe = env;
    probe.bind("x", pair[0]).bind("y", pair[1]);
    EvalResult r = eval(out.certificate, probe, cfg);
    if (r.value != sigma.contains(pair))
      throw InternalError("certificate disagrees with the choice predicate at (" + to_string(pair[0]) + ", " +
                          to_string(pair[1]) + ")");
  }
  return out;
}

}  // namespace henkin
