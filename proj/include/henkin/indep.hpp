#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "henkin/orbit.hpp"

namespace henkin {

enum class RefutationKind {
  NotInjective,
  NotTotal,
  NotFunction,
  NotSupported,
  OrderFlip,
  NotAntisymmetric,
  NotTransitive,
};

std::string to_string(RefutationKind k);
RefutationKind refutation_kind_from_string(const std::string& s);

/// Witness atoms by kind:
///   NotTotal          [ξ] with no image, or [u, v] not comparable
///   NotFunction       [ξ, η1, η2] two images; [ξ, η] a pair outside I_from × I_to
///   NotInjective      [ξ1, ξ2, η]
///   NotSupported      a tuple whose membership changes under the permutation
///   OrderFlip         [a, b] with a ≤ b, flipped by the transposition (a b)
///   NotAntisymmetric  [u, v]
///   NotTransitive     [u, v, w]
struct Refutation {
  RefutationKind kind = RefutationKind::NotTotal;
  std::vector<Atom> witness_atoms;
  std::optional<FinitePermutation> witness_perm;

  friend bool operator==(const Refutation&, const Refutation&) = default;
};

/// Decides whether τ is the graph of a total injective function
/// I_from → I_to. std::nullopt means Accept. Throws SortError for sorts
/// outside the structure and Error for finite structures.
std::optional<Refutation> check_injection(const OrbitPredicate& tau, int from_sort, int to_sort);

/// Same for a candidate given only as a membership test with a claimed
/// support: the claim is first probed with transpositions of atoms outside
/// it (NotSupported on failure), then the tabulated table is checked.
std::optional<Refutation> check_injection(const SupportSet& claimed_support,
                                          const std::function<bool(const Atom&, const Atom&)>& member,
                                          const Structure& s, int from_sort, int to_sort);

/// Re-evaluates the clause the refutation claims is violated.
bool replay_injection(const OrbitPredicate& tau, int from_sort, int to_sort, const Refutation& r);
bool replay_injection(const SupportSet& claimed_support, const std::function<bool(const Atom&, const Atom&)>& member,
                      const Structure& s, int from_sort, int to_sort, const Refutation& r);

/// Refutation of T as a well-ordering of the atoms (reflexive total order
/// with least elements). std::nullopt never happens for Σ₀ candidates.
std::optional<Refutation> check_well_order(const OrbitPredicate& t);
bool replay_well_order(const OrbitPredicate& t, const Refutation& r);

/// A candidate of a bounded search: the predicate over support pattern
/// `pattern` whose satisfied orbit types are the set bits of `mask` in
/// sorted type order.
struct CandidateId {
  int pattern = 0;
  std::uint64_t mask = 0;

  friend bool operator==(const CandidateId&, const CandidateId&) = default;
};

struct RefutationGroup {
  int pattern = 0;
  int from_sort = 0;  // 0 for well-order reports
  int to_sort = 0;
  RefutationKind kind = RefutationKind::NotTotal;
  std::uint64_t count = 0;
  CandidateId example_candidate;
  Refutation example;
};

struct FullRefutation {
  CandidateId candidate;
  int from_sort = 0;
  int to_sort = 0;
  Refutation refutation;
};

struct RefutationReport {
  std::string claim;  // "not_TR1" or "not_WO1"
  Structure structure = Structure::sigma0();
  int support_bound = 0;
  std::vector<std::vector<int>> patterns;  // support atoms per sort
  std::uint64_t candidates = 0;
  std::uint64_t accepted = 0;
  std::uint64_t refutation_count = 0;
  std::uint64_t replayed = 0;  // refutations whose replay reproduced the violation
  std::vector<RefutationGroup> groups;
  std::vector<FullRefutation> all;  // filled only on request
  std::vector<CandidateId> accepted_candidates;

  OrbitPredicate candidate(const CandidateId& id) const;
};

/// Supports of the form {(j,0), ..., (j,c_j - 1)} for every (c_1..c_k) with
/// Σ c_j ≤ bound, in lexicographic order of the counts.
std::vector<std::vector<int>> support_patterns(int k, int bound);
SupportSet pattern_support(const std::vector<int>& counts);

/// Every binary predicate of kΣ₀ over each support pattern, checked with
/// check_injection in both directions I_1 → I_2 and I_2 → I_1. Throws
/// Error("TR refutation requires k ≥ 2") for k < 2.
RefutationReport refute_tr1(int k, int support_bound, bool keep_all = false, unsigned threads = 0);

/// Every binary predicate of Σ₀ with support of size ≤ bound, checked with
/// check_well_order.
RefutationReport refute_wo1(int support_bound, bool keep_all = false);

/// Finite analogue of check_injection on FiniteStd: f a binary predicate,
/// a and b unary; checks f ⊆ a × b, totality on a, functionality,
/// injectivity by scanning the domain.
std::optional<Refutation> check_injection_finite(const OrbitPredicate& f, const OrbitPredicate& a,
                                                 const OrbitPredicate& b);

/// Well-order check on a finite structure, with least elements checked for
/// every non-empty subset of the domain.
std::optional<Refutation> check_well_order_finite(const OrbitPredicate& t);

}  // namespace henkin
