#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "henkin/atoms.hpp"
#include "henkin/formula.hpp"
#include "henkin/orbit.hpp"

namespace henkin {

/// Values for free variables: individuals to atoms, predicate variables to
/// finitely supported predicates.
class Assignment {
 public:
  Assignment& bind(const std::string& x, const Atom& a);
  Assignment& bind(const std::string& pred, const OrbitPredicate& p);
  void unbind(const std::string& name);

  const Atom* individual(const std::string& x) const;
  const OrbitPredicate* predicate(const std::string& pred) const;

  const std::map<std::string, Atom>& individuals() const { return individuals_; }
  const std::map<std::string, OrbitPredicate>& predicates() const { return predicates_; }

  /// f^π: x ↦ π(f(x)), A ↦ apply_perm(f(A), π).
  Assignment permuted(const FinitePermutation& p) const;

 private:
  std::map<std::string, Atom> individuals_;
  std::map<std::string, OrbitPredicate> predicates_;
};

/// `budget` is the number of fresh atoms per sort admitted into the supports
/// of second-order candidates beyond the context support. A search level
/// whose candidate count exceeds `max_candidates` is not run, and once a
/// single evaluation has tried `max_work` candidates in total no further
/// levels are started; both count as exhausting the budget. Finite
/// structures ignore all three and enumerate exactly.
struct EvalConfig {
  Structure structure = Structure::sigma0();
  int budget = 2;
  std::uint64_t max_candidates = std::uint64_t{1} << 12;
  std::uint64_t max_work = std::uint64_t{1} << 20;
};

struct EvalResult {
  bool value = false;
  /// Set when a second-order search that decided the value was cut off by
  /// the budget, so the value may be wrong.
  bool budget_limited = false;

  friend bool operator==(const EvalResult&, const EvalResult&) = default;
};

/// Henkin evaluation. First-order quantifiers are exact: they range over the
/// atoms of the current context support plus one fresh atom per sort.
/// Second-order quantifiers range over predicates supported by the context
/// plus up to `budget` fresh atoms per sort, smallest level first, and each
/// level in increasing bitmask order over its orbit types.
/// Throws UnboundVariable, ArityError, SortError.
EvalResult eval(const Formula& phi, const Assignment& f, const EvalConfig& cfg);

/// Atoms of the free individual variables plus declared supports of the free
/// predicate variables, skipping the `designated` ones. Truth of phi is
/// invariant under every permutation fixing the result pointwise.
SupportSet stabilizer_of(const Formula& phi, const Assignment& f, const std::set<std::string>& designated = {});

struct WitnessSearch {
  std::optional<OrbitPredicate> witness;
  bool budget_limited = false;
};

/// The first predicate in enumeration order for which `body` holds under
/// f⟨var ↦ D⟩, exactly as `Exists var:arity. body` would find it.
WitnessSearch first_witness(const Formula& body, const std::string& var, int arity, const Assignment& f,
                            const EvalConfig& cfg);

}  // namespace henkin
