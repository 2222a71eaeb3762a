#include "naive_eval.hpp"

#include <memory>
#include <set>
#include <stdexcept>

namespace henkin::oracle {

namespace {

struct Evaluator {
  const std::vector<Atom>& universe;

  bool run(const Formula& f, Env& env) const {
    switch (f.op()) {
      case Op::IndEq:
        return ind(env, f.args()[0]) == ind(env, f.args()[1]);
      case Op::PredApp: {
        auto it = env.predicates.find(f.var());
        if (it == env.predicates.end()) throw std::runtime_error("unbound predicate " + f.var());
        std::vector<Atom> t;
        for (const auto& a : f.args()) t.push_back(ind(env, a));
        return it->second(t);
      }
      case Op::Not:
        return !run(f.body(), env);
      case Op::And:
        return run(f.lhs(), env) && run(f.rhs(), env);
      case Op::Or:
        return run(f.lhs(), env) || run(f.rhs(), env);
      case Op::Implies:
        return !run(f.lhs(), env) || run(f.rhs(), env);
      case Op::Iff:
        return run(f.lhs(), env) == run(f.rhs(), env);
      case Op::ForallInd:
      case Op::ExistsInd: {
        bool exists = f.op() == Op::ExistsInd;
        auto saved = env.individuals;
        bool result = !exists;
        for (const auto& a : universe) {
          env.individuals[f.var()] = a;
          if (run(f.body(), env) == exists) {
            result = exists;
            break;
          }
        }
        env.individuals = saved;
        return result;
      }
      case Op::ForallPred:
      case Op::ExistsPred: {
        bool exists = f.op() == Op::ExistsPred;
        std::vector<std::vector<Atom>> tuples{{}};
        for (int i = 0; i < f.arity(); ++i) {
          std::vector<std::vector<Atom>> next;
          for (const auto& t : tuples)
            for (const auto& a : universe) {
              auto u = t;
              u.push_back(a);
              next.push_back(u);
            }
          tuples = next;
        }
        if (tuples.size() > 20) throw std::runtime_error("predicate quantifier too large for the oracle");
        auto saved = env.predicates;
        bool result = !exists;
        for (unsigned long mask = 0; mask < (1ul << tuples.size()); ++mask) {
          auto rel = std::make_shared<std::set<std::vector<Atom>>>();
          for (std::size_t i = 0; i < tuples.size(); ++i)
            if (mask >> i & 1) rel->insert(tuples[i]);
          env.predicates[f.var()] = [rel](const std::vector<Atom>& t) { return rel->count(t) > 0; };
          if (run(f.body(), env) == exists) {
            result = exists;
            break;
          }
        }
        env.predicates = saved;
        return result;
      }
    }
    return false;
  }

  static Atom ind(const Env& env, const std::string& x) {
    auto it = env.individuals.find(x);
    if (it == env.individuals.end()) throw std::runtime_error("unbound individual " + x);
    return it->second;
  }
};

}  // namespace

bool evaluate(const Formula& phi, const std::vector<Atom>& universe, const Env& env) {
  Env copy = env;
  return Evaluator{universe}.run(phi, copy);
}

std::vector<Atom> finite_universe(int k) {
  std::vector<Atom> out;
  for (int i = 1; i <= k; ++i) out.push_back({1, i});
  return out;
}

}  // namespace henkin::oracle
