#include "sampling.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace henkin::oracle {

Atom random_atom(const Structure& s, Rng& rng, int max_index) {
  if (s.is_finite()) {
    auto dom = s.domain();
    return dom[std::uniform_int_distribution<std::size_t>(0, dom.size() - 1)(rng)];
  }
  int sort = std::uniform_int_distribution<int>(1, s.sorts())(rng);
  int index = std::uniform_int_distribution<int>(0, max_index - 1)(rng);
  return {sort, index};
}

OrbitPredicate random_predicate(int arity, const Structure& s, Rng& rng, int max_support, int max_index) {
  SupportSet supp;
  int n = std::uniform_int_distribution<int>(0, max_support)(rng);
  for (int i = 0; i < n; ++i) supp.insert(random_atom(s, rng, max_index));
  auto types = all_orbit_types(arity, supp, s);
  std::vector<OrbitType> chosen;
  std::bernoulli_distribution coin(0.5);
  for (auto& t : types)
    if (coin(rng)) chosen.push_back(t);
  return OrbitPredicate(arity, supp, chosen, s);
}

Assignment random_assignment(const Formula& phi, const Structure& s, Rng& rng, const std::set<std::string>& skip,
                             int max_index) {
  FreeVariables fv = free_variables(phi);
  Assignment f;
  for (const auto& x : fv.individuals)
    if (!skip.count(x)) f.bind(x, random_atom(s, rng, max_index));
  for (const auto& [name, arity] : fv.predicates)
    if (!skip.count(name)) f.bind(name, random_predicate(arity, s, rng, 2, max_index));
  return f;
}

FinitePermutation random_transposition_fixing(const SupportSet& fixed, const Structure& s, Rng& rng, int max_index) {
  std::vector<Atom> pool;
  if (s.is_finite()) {
    for (const auto& a : s.domain())
      if (!fixed.contains(a)) pool.push_back(a);
  } else {
    int top = max_index + 4;
    for (const auto& a : fixed) top = std::max(top, a.index + 4);
    int sort = std::uniform_int_distribution<int>(1, s.sorts())(rng);
    for (int i = 0; i < top; ++i)
      if (!fixed.contains({sort, i})) pool.push_back({sort, i});
  }
  if (pool.size() < 2) return {};
  std::shuffle(pool.begin(), pool.end(), rng);
  return transposition(pool[0], pool[1]);
}

Env to_env(const Assignment& f, const std::vector<Atom>& universe) {
  Env env;
  for (const auto& [x, a] : f.individuals()) env.individuals[x] = a;
  for (const auto& [name, p] : f.predicates()) {
    auto table = std::make_shared<std::set<std::vector<Atom>>>();
    std::vector<std::vector<Atom>> tuples{{}};
    for (int i = 0; i < p.arity(); ++i) {
      std::vector<std::vector<Atom>> next;
      for (const auto& t : tuples)
        for (const auto& a : universe) {
          auto u = t;
          u.push_back(a);
          next.push_back(std::move(u));
        }
      tuples = std::move(next);
    }
    for (const auto& t : tuples)
      if (p.contains(t)) table->insert(t);
    env.predicates[name] = [table](const std::vector<Atom>& t) { return table->count(t) > 0; };
  }
  return env;
}

}  // namespace henkin::oracle
