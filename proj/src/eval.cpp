#include "henkin/eval.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

namespace henkin {

Assignment& Assignment::bind(const std::string& x, const Atom& a) {
  individuals_[x] = a;
  return *this;
}

Assignment& Assignment::bind(const std::string& pred, const OrbitPredicate& p) {
  predicates_.insert_or_assign(pred, p);
  return *this;
}

void Assignment::unbind(const std::string& name) {
  individuals_.erase(name);
  predicates_.erase(name);
}

const Atom* Assignment::individual(const std::string& x) const {
  auto it = individuals_.find(x);
  return it == individuals_.end() ? nullptr : &it->second;
}

const OrbitPredicate* Assignment::predicate(const std::string& pred) const {
  auto it = predicates_.find(pred);
  return it == predicates_.end() ? nullptr : &it->second;
}

Assignment Assignment::permuted(const FinitePermutation& p) const {
  Assignment out;
  for (const auto& [x, a] : individuals_) out.bind(x, p(a));
  for (const auto& [name, pred] : predicates_) out.bind(name, apply_perm(pred, p));
  return out;
}

SupportSet stabilizer_of(const Formula& phi, const Assignment& f, const std::set<std::string>& designated) {
  FreeVariables fv = free_variables(phi);
  SupportSet out;
  for (const auto& x : fv.individuals) {
    if (designated.count(x)) continue;
    const Atom* a = f.individual(x);
    if (!a) throw UnboundVariable("unbound individual variable " + x);
    out.insert(*a);
  }
  for (const auto& [name, arity] : fv.predicates) {
    if (designated.count(name)) continue;
    const OrbitPredicate* p = f.predicate(name);
    if (!p) throw UnboundVariable("unbound predicate variable " + name);
    if (p->arity() != arity)
      throw ArityError("predicate variable " + name + " has arity " + std::to_string(arity) +
                       " but is bound to a predicate of arity " + std::to_string(p->arity()));
    out.insert(p->support());
  }
  return out;
}

namespace {

class Evaluator {
 public:
  Evaluator(const Assignment& base, const EvalConfig& cfg) : cfg_(cfg) {
    for (const auto& [x, a] : base.individuals()) inds_.emplace_back(x, a);
    for (const auto& [name, p] : base.predicates()) preds_.emplace_back(name, &p);
  }

  EvalResult run(const Formula& f) {
    switch (f.op()) {
      case Op::IndEq:
        return {lookup_ind(f.args()[0]) == lookup_ind(f.args()[1]), false};
      case Op::PredApp: {
        const OrbitPredicate& p = lookup_pred(f.var());
        if (p.arity() != f.arity())
          throw ArityError("predicate " + f.var() + " of arity " + std::to_string(p.arity()) + " applied to " +
                           std::to_string(f.arity()) + " arguments");
        tuple_.clear();
        for (const auto& a : f.args()) tuple_.push_back(lookup_ind(a));
        return {p.contains(tuple_), false};
      }
      case Op::Not: {
        EvalResult r = run(f.body());
        return {!r.value, r.budget_limited};
      }
      case Op::And:
        return junction(f.lhs(), f.rhs(), false, false);
      case Op::Or:
        return junction(f.lhs(), f.rhs(), false, true);
      case Op::Implies:
        return junction(f.lhs(), f.rhs(), true, true);
      case Op::Iff: {
        EvalResult a = run(f.lhs());
        EvalResult b = run(f.rhs());
        return {a.value == b.value, a.budget_limited || b.budget_limited};
      }
      case Op::ForallInd:
      case Op::ExistsInd:
        return quantify_individual(f);
      case Op::ForallPred:
      case Op::ExistsPred: {
        bool want = f.op() == Op::ExistsPred;
        return quantify_predicate(f.var(), f.arity(), f.body(), context(f), want, nullptr);
      }
    }
    return {};
  }

  // Searches for a value of `var` making `body` evaluate to `want`. A hit
  // whose own evaluation was budget-limited does not stop the search.
  EvalResult quantify_predicate(const std::string& var, int arity, const Formula& body, const SupportSet& ctx,
                                bool want, std::optional<OrbitPredicate>* hit) {
    std::optional<OrbitPredicate> limited_hit;
    bool any_limited = false;

    auto try_level = [&](const SupportSet& support, const std::vector<OrbitType>& types) -> bool {
      const std::size_t n = types.size();
      const std::uint64_t count = std::uint64_t{1} << n;
      std::vector<OrbitType> chosen;
      for (std::uint64_t mask = 0; mask < count; ++mask) {
        chosen.clear();
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) chosen.push_back(types[i]);
        OrbitPredicate cand = OrbitPredicate::from_sorted_types(arity, support, chosen, cfg_.structure);
        preds_.emplace_back(var, &cand);
        EvalResult r = run(body);
        preds_.pop_back();
        if (r.value == want) {
          if (!r.budget_limited) {
            if (hit) hit->emplace(std::move(cand));
            return true;
          }
          if (!limited_hit) limited_hit.emplace(std::move(cand));
        } else {
          any_limited = any_limited || r.budget_limited;
        }
      }
      return false;
    };

    if (cfg_.structure.is_finite()) {
      SupportSet dom(cfg_.structure.domain());
      const auto& types = types_for(arity, dom);
      if (types.size() > 40) throw Error("finite predicate enumeration too large");
      if (try_level(dom, types)) return {want, false};
      if (limited_hit) {
        if (hit) *hit = std::move(limited_hit);
        return {want, true};
      }
      return {!want, any_limited};
    }

    for (int level = 0; level <= cfg_.budget; ++level) {
      SupportSet support = ctx;
      for (int sort = 1; sort <= cfg_.structure.sorts(); ++sort) {
        SupportSet avoid = ctx;
        for (int i = 0; i < level; ++i) {
          Atom a = fresh_atom(sort, avoid);
          avoid.insert(a);
          support.insert(a);
        }
      }
      const auto& types = types_for(arity, support);
      if (types.size() >= 63) break;
      const std::uint64_t count = std::uint64_t{1} << types.size();
      if (count > cfg_.max_candidates || work_ + count > cfg_.max_work) break;
      work_ += count;
      if (try_level(support, types)) return {want, false};
    }
    if (limited_hit && hit) *hit = std::move(limited_hit);
    // Predicates with larger supports were never tried.
    return {limited_hit ? want : !want, true};
  }

  SupportSet context(const Formula& f) {
    const FreeVariables& fv = free_vars(f);
    SupportSet out;
    for (const auto& x : fv.individuals) out.insert(lookup_ind(x));
    for (const auto& [name, arity] : fv.predicates) out.insert(lookup_pred(name).support());
    return out;
  }

 private:
  EvalResult junction(const Formula& a, const Formula& b, bool negate_left, bool is_or) {
    EvalResult l = run(a);
    bool lv = negate_left ? !l.value : l.value;
    // Or short-circuits on true, And on false.
    if (lv == is_or) return {lv, l.budget_limited};
    EvalResult r = run(b);
    if (r.value == is_or) return {r.value, r.budget_limited};
    return {r.value, l.budget_limited || r.budget_limited};
  }

  EvalResult quantify_individual(const Formula& f) {
    bool want = f.op() == Op::ExistsInd;
    SupportSet ctx = context(f);
    std::vector<Atom> reps;
    if (cfg_.structure.is_finite()) {
      reps = cfg_.structure.domain();
    } else {
      reps = ctx.atoms();
      for (int sort = 1; sort <= cfg_.structure.sorts(); ++sort) reps.push_back(fresh_atom(sort, ctx));
      std::sort(reps.begin(), reps.end());
    }
    bool limited_hit = false;
    bool any_limited = false;
    for (const auto& a : reps) {
      inds_.emplace_back(f.var(), a);
      EvalResult r = run(f.body());
      inds_.pop_back();
      if (r.value == want) {
        if (!r.budget_limited) return {want, false};
        limited_hit = true;
      } else {
        any_limited = any_limited || r.budget_limited;
      }
    }
    if (limited_hit) return {want, true};
    return {!want, any_limited};
  }

  const Atom& lookup_ind(const std::string& x) const {
    for (auto it = inds_.rbegin(); it != inds_.rend(); ++it)
      if (it->first == x) return it->second;
    throw UnboundVariable("unbound individual variable " + x);
  }

  const OrbitPredicate& lookup_pred(const std::string& name) const {
    for (auto it = preds_.rbegin(); it != preds_.rend(); ++it)
      if (it->first == name) return *it->second;
    throw UnboundVariable("unbound predicate variable " + name);
  }

  const FreeVariables& free_vars(const Formula& f) {
    auto it = fv_cache_.find(f.id());
    if (it == fv_cache_.end()) it = fv_cache_.emplace(f.id(), free_variables(f)).first;
    return it->second;
  }

  const std::vector<OrbitType>& types_for(int arity, const SupportSet& support) {
    auto key = std::make_pair(arity, support);
    auto it = type_cache_.find(key);
    if (it == type_cache_.end()) it = type_cache_.emplace(key, all_orbit_types(arity, support, cfg_.structure)).first;
    return it->second;
  }

  const EvalConfig& cfg_;
  std::vector<std::pair<std::string, Atom>> inds_;
  std::vector<std::pair<std::string, const OrbitPredicate*>> preds_;
  std::vector<Atom> tuple_;
  std::uint64_t work_ = 0;  // candidates admitted so far
  std::unordered_map<const void*, FreeVariables> fv_cache_;
  std::map<std::pair<int, SupportSet>, std::vector<OrbitType>> type_cache_;
};

void validate(const Formula& phi, const Assignment& f, const EvalConfig& cfg) {
  if (cfg.budget < 0) throw Error("budget must be non-negative");
  stabilizer_of(phi, f);  // throws on unbound or mis-aritied free variables
  for (const auto& [x, a] : f.individuals()) cfg.structure.check_atom(a);
  for (const auto& [name, p] : f.predicates())
    if (!(p.structure() == cfg.structure))
      throw Error("predicate " + name + " belongs to " + p.structure().name() + ", not " + cfg.structure.name());
}

}  // namespace

EvalResult eval(const Formula& phi, const Assignment& f, const EvalConfig& cfg) {
  validate(phi, f, cfg);
  Evaluator ev(f, cfg);
  return ev.run(phi);
}

WitnessSearch first_witness(const Formula& body, const std::string& var, int arity, const Assignment& f,
                            const EvalConfig& cfg) {
  Formula quant = Formula::exists_pred(var, arity, body);
  validate(quant, f, cfg);
  Evaluator ev(f, cfg);
  std::optional<OrbitPredicate> hit;
  EvalResult r = ev.quantify_predicate(var, arity, body, ev.context(quant), true, &hit);
  WitnessSearch out;
  if (r.value) out.witness = std::move(hit);
  out.budget_limited = r.budget_limited;
  return out;
}

}  // namespace henkin
