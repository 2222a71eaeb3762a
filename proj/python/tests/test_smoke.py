import pytest

import henkin_atoms as ha

S0 = ha.Structure.sigma0()
K2 = ha.Structure("ksigma0:2")


def test_atoms_and_permutations():
    assert ha.fresh_atom(1, [(1, 3), (1, 5)]) == (1, 0)
    assert ha.fresh_atom(2, [(2, 0), (2, 1), (1, 0)], K2) == (2, 2)
    p = ha.transposition((1, 0), (1, 7))
    assert p((1, 7)) == (1, 0)
    assert p((1, 4)) == (1, 4)
    with pytest.raises(ha.SortError, match="sort-violating permutation"):
        ha.transposition((1, 0), (2, 0))
    with pytest.raises(ha.DomainError, match="no fresh atom"):
        ha.fresh_atom(1, [(1, 1), (1, 2)], ha.Structure.finite(2))


def test_predicates():
    P = [(1, 3), (1, 5)]
    beta = ha.Predicate.cofinite_set(P, S0)
    assert [(1, 4)] in beta
    assert not beta.contains([(1, 3)])
    nu = ha.Predicate.finite_set([(1, 3)], S0)
    union = nu | beta
    assert union == ha.Predicate.cofinite_set([(1, 5)], S0)
    assert (nu & ~nu) == ha.Predicate.empty(1, S0)
    assert beta.refine(P + [(1, 9)]).least_support() == P
    assert ha.Predicate.from_json(beta.to_json(), S0) == beta
    assert beta.to_json() == {"arity": 1, "support": [[1, 3], [1, 5]], "orbits": [[["fresh", 1, 1]]]}
    g1 = ha.Predicate.finite_set([(1, 3), (1, 0)], S0)
    assert g1.apply(ha.transposition((1, 0), (1, 7))) == ha.Predicate.finite_set([(1, 3), (1, 7)], S0)
    diag = ha.Predicate.from_membership(2, [], S0, lambda t: t[0] == t[1])
    assert [(1, 4), (1, 4)] in diag and [(1, 4), (1, 5)] not in diag


def test_formulas_and_eval():
    f = ha.parse("exists x. !(x = y)")
    assert str(ha.parse(str(f))) == str(f)
    assert f.free_variables() == ({"y"}, {})
    assert ha.eval(f, S0, values={"y": (1, 0)}) == (True, False)
    assert ha.eval("forall x. x = x") == (True, False)
    assert ha.eval(ha.choice_axiom("D(x)"), ha.Structure.finite(2)) == (True, False)
    assert ha.eval(ha.well_ordering(1), ha.Structure.finite(3)) == (True, False)
    value, limited = ha.eval(ha.trichotomy(1), K2, budget=1)
    assert not value or limited
    with pytest.raises(ha.ParseError):
        ha.parse("forall x. (x = )")
    with pytest.raises(ha.UnboundVariable):
        ha.eval("x = y")


def test_build_sigma():
    w = ha.build_sigma("forall y. (D(y) <-> y = x)", K2)
    assert w["mu"] == [[1, 0], [2, 0]]
    sigma = w["predicate"]
    assert sigma.least_support() == []
    assert [(2, 3), (2, 3)] in sigma and [(2, 3), (1, 3)] not in sigma
    a = ha.Predicate.finite_set([(1, 3)], S0)
    w = ha.build_sigma("forall y. (D(y) <-> (A(y) | y = x))", S0, values={"A": a})
    assert w["P"] == [[1, 3]]
    assert not w["verificationLimited"]
    with pytest.raises(ha.AntecedentError, match="antecedent fails"):
        ha.build_sigma("D(x) & !D(x)")


def test_refuters():
    rep = ha.refute_tr1(2, 1)
    assert rep["claim"] == "not_TR1" and rep["accepted"] == 0
    assert rep["replayed"] == rep["refutationCount"]
    with pytest.raises(ha.HenkinError, match="requires k"):
        ha.refute_tr1(1, 1)
    wo = ha.refute_wo1(1)
    assert wo["accepted"] == 0
    assert ha.check_injection(ha.Predicate.empty(2, K2), 1, 2)["kind"] == "NotTotal"
    ident = ha.Predicate.from_membership(2, [], K2, lambda t: t[0][0] == 1 and t[0] == t[1])
    assert ha.check_injection(ident, 1, 1) is None
    assert ha.check_well_order(ha.Predicate.empty(2, S0))["kind"] == "NotTotal"
