#pragma once

#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "henkin/error.hpp"

namespace henkin {

enum class Op {
  IndEq,       // x = y
  PredApp,     // A(x1, ..., xn)
  Not,
  And,
  Or,
  Implies,
  Iff,
  ForallInd,   // forall x. body
  ExistsInd,   // exists x. body
  ForallPred,  // Forall A:n. body
  ExistsPred,  // Exists A:n. body
};

/// Immutable second-order formula. Copies share structure.
class Formula {
 public:
  static Formula eq(std::string x, std::string y);
  static Formula app(std::string pred, std::vector<std::string> args);
  static Formula negation(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula forall(std::string x, Formula body);
  static Formula exists(std::string x, Formula body);
  static Formula forall_pred(std::string pred, int arity, Formula body);
  static Formula exists_pred(std::string pred, int arity, Formula body);

  /// Left-nested conjunction/disjunction of a non-empty list.
  static Formula conj(const std::vector<Formula>& parts);
  static Formula disj(const std::vector<Formula>& parts);

  Op op() const;
  /// Bound variable of a quantifier, or the predicate of an application.
  const std::string& var() const;
  /// Arity of a predicate quantifier or application.
  int arity() const;
  /// Arguments of an application, or the two sides of an equation.
  const std::vector<std::string>& args() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  /// Operand of Not, body of a quantifier.
  const Formula& body() const;

  bool is_quantifier() const;
  bool is_pred_quantifier() const;
  bool is_binary() const;

  /// Address of the shared node; stable for the lifetime of any copy.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FreeVariables {
  std::set<std::string> individuals;
  std::map<std::string, int> predicates;  // name -> arity

  friend bool operator==(const FreeVariables&, const FreeVariables&) = default;
};

/// Free variables; throws ArityError when a free predicate variable is used
/// with two arities.
FreeVariables free_variables(const Formula& f);

/// Every variable name occurring in f, bound or free, of either kind.
std::set<std::string> all_names(const Formula& f);

/// Nesting depth of first-order quantifiers.
int quantifier_depth(const Formula& f);

/// Parses one formula. Grammar:
///   iff    := imp ('<->' imp)*          (left-assoc)
///   imp    := or ('->' imp)?            (right-assoc)
///   or     := and ('|' and)*
///   and    := unary ('&' unary)*
///   unary  := '!' unary | quant | atom | '(' iff ')'
///   quant  := ('forall'|'exists') x '.' iff | ('Forall'|'Exists') A ':' n '.' iff
///             (lower-case keywords with an `A:n` binder also quantify predicates)
///   atom   := x '=' y | x '!=' y | A '(' x (',' x)* ')'
/// `#` starts a comment running to the end of the line. Throws ParseError
/// with line/column on bad syntax and on arity mismatches against binders.
Formula parse(const std::string& text);

/// Splits on top-level `;` and parses every non-empty piece.
std::vector<Formula> parse_corpus(const std::string& text);

/// Canonical text; parse(print(f)) == f.
std::string print(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

/// True iff `name` occurs bound (as individual or predicate binder) in f.
bool binds(const Formula& f, const std::string& name);

/// The 1-1 Ackermann choice axiom for H(x, D):
///   (forall x. exists D:1. H) -> Exists S:2. forall x. exists D:1.
///       ((forall y. (D(y) <-> S(x,y))) & H)
/// S and y are renamed away from every name in H. Throws Error when x or D
/// is bound in H.
Formula mk_choice_axiom(const Formula& h, const std::string& x = "x", const std::string& d = "D");

/// The consequent body `forall x. exists D:1. ((forall y. (D(y) <-> S(x,y))) & H)`
/// with the chosen name for S returned through `s_name`.
Formula choice_consequent_body(const Formula& h, const std::string& x, const std::string& d,
                               std::string* s_name);

/// [A ≲ B] for n-ary A, B: an injective 2n-ary F from A into B.
Formula mk_injection(const std::string& a, const std::string& b, int n, const std::string& f = "F");

/// TRⁿ = Forall A:n. Forall B:n. ([A ≲ B] | [B ≲ A]). Throws for n < 1.
Formula mk_trichotomy(int n);

/// WOⁿ: some 2n-ary T is a total order on all n-tuples under which every
/// non-empty n-ary predicate has a least element.
Formula mk_well_ordering(int n);

/// The body of WOⁿ with T free: the order axioms and the least-element clause.
Formula well_order_body(const std::string& t, int n);

}  // namespace henkin
