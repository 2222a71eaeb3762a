#pragma once

#include <compare>
#include <functional>
#include <span>
#include <vector>

#include "henkin/atoms.hpp"

namespace henkin {

/// One coordinate of an orbit type: either a named support atom, or a fresh
/// equivalence class (coordinates sharing a class hold the same atom, distinct
/// classes hold distinct atoms, none of them in the support).
///
/// Ordering follows the JSON encoding: every fresh label sorts before every
/// named label, then fields compare numerically.
struct Label {
  enum class Kind : int { Fresh = 0, Named = 1 };

  Kind kind = Kind::Fresh;
  int first = 0;   // Named: sort.  Fresh: class id.
  int second = 0;  // Named: index. Fresh: sort.

  static Label named(const Atom& a) { return {Kind::Named, a.sort, a.index}; }
  static Label fresh(int class_id, int sort) { return {Kind::Fresh, class_id, sort}; }

  bool is_named() const { return kind == Kind::Named; }
  Atom atom() const { return {first, second}; }
  int class_id() const { return first; }
  int sort() const { return is_named() ? first : second; }

  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;
};

/// Canonical description of a tuple up to permutations fixing a support
/// pointwise. Fresh class ids are 1, 2, ... in order of first occurrence.
struct OrbitType {
  std::vector<Label> labels;

  std::size_t arity() const { return labels.size(); }
  /// Number of fresh classes of the given sort.
  int fresh_classes(int sort) const;

  friend auto operator<=>(const OrbitType&, const OrbitType&) = default;
  friend bool operator==(const OrbitType&, const OrbitType&) = default;
};

std::ostream& operator<<(std::ostream& os, const OrbitType& t);

OrbitType orbit_type_of(std::span<const Atom> tuple, const SupportSet& support);

/// Every orbit type of `arity`-tuples over `support`, sorted. For a finite
/// structure only types realizable inside its domain are produced.
std::vector<OrbitType> all_orbit_types(int arity, const SupportSet& support, const Structure& s);

/// A tuple of the given type whose fresh classes get, per sort, the smallest
/// indices outside `avoid` (which must contain the support of the type).
std::vector<Atom> representative(const OrbitType& t, const SupportSet& avoid, const Structure& s);

/// An n-ary predicate with finite support P, stored as the set of its
/// satisfied orbit types over P. A tuple belongs to the predicate iff its
/// orbit type over P is listed.
///
/// Predicates of a finite structure always carry the whole domain as
/// support, so every tuple is its own orbit.
class OrbitPredicate {
 public:
  /// Validates and canonicalizes the table. Throws ArityError / SortError /
  /// Error on malformed input.
  OrbitPredicate(int arity, SupportSet support, std::vector<OrbitType> satisfied, Structure s);

  /// Trusted constructor: `types` must be sorted, unique, canonical and over
  /// `support`; no validation is done. Used by enumeration loops.
  static OrbitPredicate from_sorted_types(int arity, SupportSet support, std::vector<OrbitType> types,
                                          Structure s);

  /// Tabulates `member` over `support` by testing one representative per
  /// orbit type. `member` must be invariant under permutations fixing
  /// `support`; representatives avoid `support` and `avoid`.
  static OrbitPredicate from_membership(int arity, SupportSet support, Structure s,
                                        const std::function<bool(const std::vector<Atom>&)>& member,
                                        const SupportSet& avoid = {});

  static OrbitPredicate empty(int arity, Structure s);
  static OrbitPredicate full(int arity, Structure s);
  /// Unary predicate holding exactly on the listed atoms.
  static OrbitPredicate finite_set(const SupportSet& atoms, Structure s);
  /// Unary predicate holding on every atom outside `atoms`.
  static OrbitPredicate cofinite_set(const SupportSet& atoms, Structure s);

  int arity() const { return arity_; }
  const SupportSet& support() const { return support_; }
  const std::vector<OrbitType>& satisfied() const { return satisfied_; }
  const Structure& structure() const { return structure_; }
  bool is_empty() const { return satisfied_.empty(); }

  bool contains(std::span<const Atom> tuple) const;

 private:
  OrbitPredicate(int arity, SupportSet support, Structure s)
      : arity_(arity), support_(std::move(support)), structure_(s) {}

  int arity_;
  SupportSet support_;
  std::vector<OrbitType> satisfied_;
  Structure structure_;
};

/// Throws ArityError when the tuple length differs from the arity.
bool member(const OrbitPredicate& pred, std::span<const Atom> tuple);

/// Image {p(t) | t ∈ pred}; its support is p(support(pred)).
OrbitPredicate apply_perm(const OrbitPredicate& pred, const FinitePermutation& p);

/// Same predicate re-expressed over a superset of its support.
OrbitPredicate refine(const OrbitPredicate& pred, const SupportSet& larger);

enum class BoolOp { And, Or, Not, Diff };

/// Pointwise combination over support(a) ∪ support(b). `Not` ignores b.
OrbitPredicate boolean_op(const OrbitPredicate& a, const OrbitPredicate& b, BoolOp op);
OrbitPredicate conjunction(const OrbitPredicate& a, const OrbitPredicate& b);
OrbitPredicate disjunction(const OrbitPredicate& a, const OrbitPredicate& b);
OrbitPredicate complement(const OrbitPredicate& a);
OrbitPredicate difference(const OrbitPredicate& a, const OrbitPredicate& b);

/// The ⊆-minimal support. For a finite structure the stored support (the
/// whole domain) is returned: without spare atoms nothing can be dropped.
SupportSet least_support(const OrbitPredicate& pred);

/// Same predicate re-expressed over its least support.
OrbitPredicate minimize(const OrbitPredicate& pred);

/// Same membership function.
bool equal(const OrbitPredicate& a, const OrbitPredicate& b);

inline bool operator==(const OrbitPredicate& a, const OrbitPredicate& b) { return equal(a, b); }

std::ostream& operator<<(std::ostream& os, const OrbitPredicate& p);

}  // namespace henkin
