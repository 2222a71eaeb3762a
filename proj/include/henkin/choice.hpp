#pragma once

#include <string>
#include <vector>

#include "henkin/eval.hpp"

namespace henkin {

/// One block β_e of a P-adequate partition. e = (sort, index): singleton
/// blocks {ν_i} use the 1-based position i of ν_i in P; the co-finite block
/// I_j ∖ P of sort j uses index |P| + 1.
struct Block {
  int sort = 1;
  int index = 1;
  bool cofinite = false;
  Atom rep;

  friend bool operator==(const Block&, const Block&) = default;
};

struct PartitionPlan {
  SupportSet P;
  Structure structure = Structure::sigma0();
  std::vector<Block> blocks;  // singletons in P order, then co-finite blocks by sort
  SupportSet mu;              // P_μ: representatives of the co-finite blocks

  bool in_block(const Block& b, const Atom& a) const;
  /// The block containing a. Throws DomainError for atoms outside the structure.
  const Block& block_of(const Atom& a) const;
  /// α₀: one representative per block.
  SupportSet choice_set() const;
};

/// {ν_1}, ..., {ν_q} and, per sort j, I_j ∖ P with representative
/// μ_j = fresh_atom(j, P). Empty co-finite blocks of finite structures are
/// left out.
PartitionPlan p_adequate_partition(const SupportSet& P, const Structure& s);

/// Per block, the first D in enumeration order with H(ξ_e, D) under
/// f⟨x ↦ ξ_e⟩. Throws WitnessExhausted when the budget runs out and
/// AntecedentError when no witness exists.
std::vector<OrbitPredicate> choose_deltas(const Formula& h, const Assignment& f, const PartitionPlan& plan,
                                          const EvalConfig& cfg, const std::string& x = "x",
                                          const std::string& d = "D");

/// B_e(v): `v = n_i` for the singleton {ν_i}; for a co-finite block
/// `I_j(v) & !(v = n_i) & ...` over the support atoms of its sort (the sort
/// predicate only when there are several sorts).
Formula block_formula(const PartitionPlan& plan, const Block& b, const std::string& v);
/// Values for the free variables of block formulas: n_i ↦ ν_i, I_j ↦ sort j.
Assignment block_env(const PartitionPlan& plan);

/// swap_e(x0, y0, x, y): `x = x0 & y = y0` for singleton blocks, the
/// three-case transposition formula for co-finite ones.
Formula swap_formula(bool cofinite);

struct BlockChoice {
  Block block;
  OrbitPredicate delta;
};

struct ChoiceWitness {
  PartitionPlan plan;
  std::vector<BlockChoice> choices;
  OrbitPredicate sigma;
  SupportSet defining_support;  // P ∪ P_μ ∪ P₀
  /// G(x, y) = ⋁ G'_e(x, y) with its free variables other than x, y bound
  /// in `certificate_env`.
  Formula certificate;
  Assignment certificate_env;
  /// The consequent held, but some second-order quantifier inside H hit the
  /// budget while checking it.
  bool verification_limited = false;
};

/// Builds σ for the 1-1 choice axiom of H(x, D) under f and checks the
/// consequent. Throws AntecedentError, WitnessExhausted, or InternalError
/// when σ or its certificate fail their checks.
ChoiceWitness build_sigma(const Formula& h, const Assignment& f, const EvalConfig& cfg, const std::string& x = "x",
                          const std::string& d = "D");

/// {η | σ(ξ, η)} as a unary predicate.
OrbitPredicate section(const OrbitPredicate& sigma, const Atom& xi);

}  // namespace henkin
