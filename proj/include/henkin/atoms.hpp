#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "henkin/error.hpp"

namespace henkin {

/// An individual of sort `sort` with position `index` inside that sort.
struct Atom {
  int sort = 1;
  int index = 0;

  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;
};

std::ostream& operator<<(std::ostream& os, const Atom& a);
std::string to_string(const Atom& a);

/// Finite set of atoms kept sorted (sort-major, index-minor) and deduplicated.
class SupportSet {
 public:
  SupportSet() = default;
  SupportSet(std::initializer_list<Atom> atoms);
  explicit SupportSet(std::vector<Atom> atoms);

  bool contains(const Atom& a) const;
  void insert(const Atom& a);
  void insert(const SupportSet& other);
  void erase(const Atom& a);

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  /// Atoms of the given sort, in index order.
  std::vector<Atom> of_sort(int sort) const;
  bool subset_of(const SupportSet& other) const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;
  friend auto operator<=>(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<Atom> atoms_;
};

SupportSet set_union(const SupportSet& a, const SupportSet& b);
std::ostream& operator<<(std::ostream& os, const SupportSet& s);

/// Sort-preserving bijection of the atoms that moves finitely many of them.
/// Stored as its moved-point map; the identity is the empty map.
class FinitePermutation {
 public:
  FinitePermutation() = default;
  /// Throws SortError when the map is not a sort-preserving bijection of its
  /// moved set. Fixed points in `mapping` are dropped.
  explicit FinitePermutation(const std::map<Atom, Atom>& mapping);

  static FinitePermutation identity() { return {}; }

  Atom operator()(const Atom& a) const;
  std::vector<Atom> operator()(const std::vector<Atom>& tuple) const;
  SupportSet operator()(const SupportSet& s) const;

  bool is_identity() const { return moved_.empty(); }
  const std::map<Atom, Atom>& moved() const { return moved_; }
  SupportSet moved_atoms() const;

  FinitePermutation inverse() const;

  friend bool operator==(const FinitePermutation&, const FinitePermutation&) = default;

 private:
  std::map<Atom, Atom> moved_;
};

/// (outer ∘ inner)(a) = outer(inner(a)).
FinitePermutation compose(const FinitePermutation& outer, const FinitePermutation& inner);

/// Swaps a and b. Throws SortError when the sorts differ.
FinitePermutation transposition(const Atom& a, const Atom& b);

/// Membership test for the pointwise stabilizer of s.
bool fixes_pointwise(const FinitePermutation& p, const SupportSet& s);

std::ostream& operator<<(std::ostream& os, const FinitePermutation& p);

/// The three structure families: the basic Fraenkel model (one sort over ℕ),
/// its k-sorted union, and the finite standard structure on k atoms whose
/// permutation group is trivial.
class Structure {
 public:
  enum class Kind { Sigma0, KSigma0, FiniteStd };

  static Structure sigma0() { return Structure(Kind::Sigma0, 1); }
  static Structure ksigma0(int k);
  static Structure finite(int k);
  /// Parses `sigma0`, `ksigma0:<k>` or `finite:<k>`.
  static Structure parse(const std::string& spec);

  Kind kind() const { return kind_; }
  int k() const { return k_; }
  /// Number of atom sorts (1 except for k-sorted structures).
  int sorts() const { return kind_ == Kind::KSigma0 ? k_ : 1; }
  bool is_finite() const { return kind_ == Kind::FiniteStd; }

  bool valid_atom(const Atom& a) const;
  void check_atom(const Atom& a) const;
  /// All atoms of a finite structure: (1,1)..(1,k).
  std::vector<Atom> domain() const;

  std::string name() const;

  /// Σ₀ and 1Σ₀ are the same structure.
  friend bool operator==(const Structure& a, const Structure& b) {
    return a.kind_ == b.kind_ && a.k_ == b.k_;
  }

 private:
  Structure(Kind kind, int k) : kind_(kind == Kind::KSigma0 && k == 1 ? Kind::Sigma0 : kind), k_(k) {}

  Kind kind_;
  int k_;
};

/// The atom of sort `sort` with minimal index outside `avoid`, over ℕ.
Atom fresh_atom(int sort, const SupportSet& avoid);
/// Same, within a structure; throws SortError for a bad sort and DomainError
/// when a finite structure has no atom left.
Atom fresh_atom(int sort, const SupportSet& avoid, const Structure& s);

}  // namespace henkin
