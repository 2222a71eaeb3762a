#include <doctest.h>

#include "henkin/formula.hpp"
#include "support.hpp"

using namespace henkin;
using henkin::testing::corpus;

namespace {

// Binder walk carrying the set of bound names.
void walk(const Formula& f, std::set<std::string> bound_ind, std::set<std::string> bound_pred, FreeVariables& out) {
  switch (f.op()) {
    case Op::IndEq:
      for (const auto& x : f.args())
        if (!bound_ind.count(x)) out.individuals.insert(x);
      return;
    case Op::PredApp:
      if (!bound_pred.count(f.var())) out.predicates[f.var()] = int(f.args().size());
      for (const auto& x : f.args())
        if (!bound_ind.count(x)) out.individuals.insert(x);
      return;
    case Op::Not:
      walk(f.body(), bound_ind, bound_pred, out);
      return;
    case Op::ForallInd:
    case Op::ExistsInd:
      bound_ind.insert(f.var());
      walk(f.body(), bound_ind, bound_pred, out);
      return;
    case Op::ForallPred:
    case Op::ExistsPred:
      bound_pred.insert(f.var());
      walk(f.body(), bound_ind, bound_pred, out);
      return;
    default:
      walk(f.lhs(), bound_ind, bound_pred, out);
      walk(f.rhs(), bound_ind, bound_pred, out);
  }
}

FreeVariables oracle_fv(const Formula& f) {
  FreeVariables out;
  walk(f, {}, {}, out);
  return out;
}

std::vector<Formula> all_corpora() {
  std::vector<Formula> out;
  for (const char* name : {"h_suite.l2", "finite.l2", "sigma0.l2"})
    for (auto& f : corpus(name)) out.push_back(f);
  return out;
}

}  // namespace

TEST_SUITE("lang") {
  TEST_CASE("parse examples") {
    auto f = parse("x = x");
    CHECK(f.op() == Op::IndEq);
    CHECK(f.args() == std::vector<std::string>{"x", "x"});

    auto g = parse("forall x. exists D:1. D(x)");
    REQUIRE(g.op() == Op::ForallInd);
    REQUIRE(g.body().op() == Op::ExistsPred);
    CHECK(g.body().var() == "D");
    CHECK(g.body().arity() == 1);
    CHECK(g.body().body() == Formula::app("D", {"x"}));
    CHECK(g == parse("forall x. Exists D:1. D(x)"));

    auto swap = parse(
        "(x = x0 -> y = y0) & (!(x = x0) -> (((!(y0 = x0) & !(y0 = x)) -> y = y0) & (y0 = x0 -> y = x) & "
        "(y0 = x -> y = x0)))");
    REQUIRE(swap.op() == Op::And);
    CHECK(swap.lhs().op() == Op::Implies);
    CHECK(swap.lhs() == Formula::implies(Formula::eq("x", "x0"), Formula::eq("y", "y0")));
    REQUIRE(swap.rhs().op() == Op::Implies);
    CHECK(swap.rhs().lhs() == Formula::negation(Formula::eq("x", "x0")));
    // Three conjuncts under the second implication.
    const auto& cases = swap.rhs().rhs();
    REQUIRE(cases.op() == Op::And);
    REQUIRE(cases.lhs().op() == Op::And);
    CHECK(cases.rhs() == Formula::implies(Formula::eq("y0", "x"), Formula::eq("y", "x0")));
  }

  TEST_CASE("precedence and associativity") {
    CHECK(parse("!a = b & c = d") == Formula::conj(Formula::negation(Formula::eq("a", "b")), Formula::eq("c", "d")));
    CHECK(parse("a = b | c = d & e = f") ==
          Formula::disj(Formula::eq("a", "b"), Formula::conj(Formula::eq("c", "d"), Formula::eq("e", "f"))));
    CHECK(parse("a = b -> c = d -> e = f") ==
          Formula::implies(Formula::eq("a", "b"), Formula::implies(Formula::eq("c", "d"), Formula::eq("e", "f"))));
    CHECK(parse("a = b <-> c = d <-> e = f") ==
          Formula::iff(Formula::iff(Formula::eq("a", "b"), Formula::eq("c", "d")), Formula::eq("e", "f")));
    CHECK(parse("a = b -> c = d <-> e = f") ==
          Formula::iff(Formula::implies(Formula::eq("a", "b"), Formula::eq("c", "d")), Formula::eq("e", "f")));
    CHECK(parse("x != y") == Formula::negation(Formula::eq("x", "y")));
    // Quantifier bodies extend as far as possible.
    CHECK(parse("forall x. x = x & y = y") ==
          Formula::forall("x", Formula::conj(Formula::eq("x", "x"), Formula::eq("y", "y"))));
  }

  TEST_CASE("parse errors carry positions") {
    try {
      parse("forall x.\n  (x = )");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 8);
    }
    CHECK_THROWS_AS(parse("Exists A:1. A(x, y)"), ParseError);
    CHECK_THROWS_AS(parse("x = y y = z"), ParseError);
    CHECK_THROWS_AS(parse("Forall A:0. x = x"), ParseError);
    CHECK_THROWS_AS(parse("A(x) & A(x, y)"), ParseError);
    CHECK_THROWS_AS(free_variables(Formula::conj(Formula::app("A", {"x"}), Formula::app("A", {"x", "y"}))), ArityError);
  }

  TEST_CASE("comments and corpora") {
    auto fs = parse_corpus("# header\nx = x; # first\n  forall y. y = y ;\n;\n");
    CHECK(fs.size() == 2);
    CHECK(fs[1] == parse("forall y. y = y"));
  }

  TEST_CASE("round trip over the corpora") {
    auto fs = all_corpora();
    CHECK(fs.size() >= 70);
    for (const auto& f : fs) {
      CHECK(parse(print(f)) == f);
      CHECK(print(parse(print(f))) == print(f));
    }
  }

  TEST_CASE("free variables agree with the binder walk") {
    for (const auto& f : all_corpora()) CHECK(free_variables(f) == oracle_fv(f));
    auto f = parse("forall x. (A(x) & exists y. R(x, y)) | z = x");
    FreeVariables fv = free_variables(f);
    CHECK(fv.individuals == std::set<std::string>{"z"});
    CHECK(fv.predicates == std::map<std::string, int>{{"A", 1}, {"R", 2}});
  }

  TEST_CASE("mk_choice_axiom") {
    auto ax = mk_choice_axiom(parse("D(x)"));
    auto expected = parse(
        "(forall x. Exists D:1. D(x)) -> Exists S:2. forall x. Exists D:1. ((forall y. (D(y) <-> S(x, y))) & D(x))");
    CHECK(ax == expected);
    CHECK(free_variables(ax) == FreeVariables{});

    auto single = mk_choice_axiom(parse("forall y. (D(y) <-> y = x)"));
    CHECK(free_variables(single) == FreeVariables{});
    CHECK(binds(single, "S"));

    auto h = parse("forall y. (D(y) <-> (A(y) | y = x))");
    FreeVariables fv = free_variables(mk_choice_axiom(h));
    CHECK(fv.predicates == std::map<std::string, int>{{"A", 1}});
    CHECK(fv.individuals.empty());

    // S and y are renamed away from names of H.
    auto clash = mk_choice_axiom(parse("S(x) & exists y. D(y)"));
    FreeVariables cfv = free_variables(clash);
    CHECK(cfv.predicates == std::map<std::string, int>{{"S", 1}});

    CHECK_THROWS_AS(mk_choice_axiom(parse("forall x. D(x)")), Error);
    CHECK_THROWS_AS(mk_choice_axiom(parse("Exists D:1. D(x)")), Error);
  }

  TEST_CASE("mk_choice_axiom free variables over the H-suite") {
    for (const auto& h : corpus("h_suite.l2")) {
      FreeVariables expect = oracle_fv(h);
      expect.individuals.erase("x");
      expect.predicates.erase("D");
      CHECK(free_variables(mk_choice_axiom(h)) == expect);
    }
  }

  TEST_CASE("trichotomy and well-ordering") {
    auto tr = mk_trichotomy(1);
    CHECK(free_variables(tr) == FreeVariables{});
    CHECK(parse(print(tr)) == tr);
    REQUIRE(tr.op() == Op::ForallPred);
    REQUIRE(tr.body().op() == Op::ForallPred);
    const auto& disj = tr.body().body();
    REQUIRE(disj.op() == Op::Or);
    CHECK(disj.lhs() == mk_injection("A", "B", 1));
    CHECK(disj.rhs() == mk_injection("B", "A", 1));
    REQUIRE(disj.lhs().op() == Op::ExistsPred);
    CHECK(disj.lhs().arity() == 2);
    CHECK_THROWS_AS(mk_trichotomy(0), Error);
    CHECK(mk_trichotomy(2).body().body().lhs().arity() == 4);

    auto wo = mk_well_ordering(1);
    CHECK(free_variables(wo) == FreeVariables{});
    CHECK(parse(print(wo)) == wo);
    CHECK(free_variables(well_order_body("T", 1)).predicates == std::map<std::string, int>{{"T", 2}});
  }

  TEST_CASE("quantifier depth and names") {
    CHECK(quantifier_depth(parse("x = y")) == 0);
    CHECK(quantifier_depth(parse("forall x. exists y. x = y")) == 2);
    CHECK(quantifier_depth(parse("(forall x. x = x) & exists y. y = y")) == 1);
    CHECK(all_names(parse("forall x. Exists A:1. A(z)")) == std::set<std::string>{"x", "A", "z"});
  }
}
