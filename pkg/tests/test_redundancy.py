import pytest
from hypothesis import given, settings, strategies as st

from parc.redundancy import (
    BOT,
    TOP,
    And,
    Eq,
    EvaluationBound,
    Exists,
    Gt,
    Not,
    Or,
    ThreeVal,
    demod_formula,
    entails,
    eval_ground,
    expand_clause_gt,
    formula_to_prefix,
    ge,
    is_valid,
    parse_formula,
    simplify,
    trivial_joinability,
)
from parc.terms import App, ground_terms

from parc.ordering import KBO

from conftest import clause, paper_signature, term

A, B = App("a", ()), App("b", ())


def test_eval_ground_examples(kbo):
    assert eval_ground(Gt(term("f(a,b)"), term("g(b)")), kbo)
    assert eval_ground(Eq(A, A), kbo)
    fab = term("f(a,b)")
    assert eval_ground(Or((Gt(term("g(f(a,b))"), fab), Gt(A, fab))), kbo)


def test_eval_ground_rejects_free_variables(kbo):
    with pytest.raises(ValueError):
        eval_ground(Eq(term("x"), A), kbo)


def test_eval_ground_exists_without_witness(kbo):
    v = {}
    y = term("y", v)
    with pytest.raises(EvaluationBound):
        eval_ground(Exists((y,), Eq(App("g", (y,)), A)), kbo, depth=1)


def test_entails_examples(kbo):
    v = {}
    x, y = term("x", v), term("y", v)
    assert entails({x: A}, Eq(x, A), kbo) is ThreeVal.HOLDS
    assert entails({}, BOT, kbo) is ThreeVal.FAILS
    assert entails({x: App("g", (y,))}, Gt(x, y), kbo) is ThreeVal.HOLDS
    assert entails({x: B}, Eq(x, A), kbo) is ThreeVal.FAILS


def test_entails_unknown_is_never_claimed_for_open_ordering(kbo):
    v = {}
    x, y = term("x", v), term("y", v)
    # true for some groundings, false for others
    assert entails({}, Gt(x, y), kbo) is ThreeVal.FAILS


def test_simplify_first_example_chain(kbo):
    v = {}
    x, y = term("x", v), term("y", v)
    lhs = term("f(a,y)", v)
    f = Exists(
        (y,),
        And((
            Eq(lhs, term("f(x,b)", v)),
            Gt(lhs, term("g(y)", v)),
            expand_clause_gt(clause("g(f(x,b)) != a", v), lhs),
        )),
    )
    assert simplify(f, kbo) == Eq(x, A)


def test_simplify_second_example_chain(kbo):
    v = {}
    x, y, z, u = (term(n, v) for n in "xyzu")
    l = term("h(z,u)", v)
    f = Exists(
        (z, u),
        And((
            Eq(l, term("h(x,y)", v)),
            Gt(l, term("h(u,z)", v)),
            expand_clause_gt(clause("f(g(y),y) = g(h(x,y))", v), l),
        )),
    )
    assert simplify(f, kbo) == Gt(x, y)


def test_simplify_unit_laws(kbo):
    v = {}
    phi = Gt(term("x", v), term("y", v))
    assert simplify(And((TOP, phi)), kbo) == phi
    assert simplify(Or((BOT, phi)), kbo) == phi
    assert simplify(And((BOT, phi)), kbo) is BOT
    assert simplify(Or((phi, Not(phi))), kbo) is TOP


def test_simplify_equations(kbo):
    v = {}
    assert simplify(Eq(term("f(a,b)"), term("g(a)")), kbo) is BOT
    assert simplify(Eq(term("g(x)", v), term("x", v)), kbo) is BOT
    assert simplify(Eq(term("f(x,b)", v), term("f(a,y)", v)), kbo) == And((Eq(v["x"], A), Eq(v["y"], B)))


def test_expand_clause_gt_examples():
    v = {}
    l = term("f(a,y)", v)
    got = expand_clause_gt(clause("g(f(x,b)) != a", v), l)
    assert got == Or((Gt(term("g(f(x,b))", v), l), Gt(A, l)))
    assert expand_clause_gt(clause("$false"), l) == Or(())
    s, t = term("s1", v), term("t1", v)
    assert expand_clause_gt(clause("s1 = t1", v), l, strict=False) == Or((ge(s, l), ge(t, l)))


def test_expand_empty_clause_simplifies_to_bottom(kbo):
    assert simplify(expand_clause_gt(clause("$false"), A), kbo) is BOT


def _demod(kbo, left, right, occurrence):
    v = {}
    eq = clause(left, v)[0]
    return simplify(demod_formula(eq.lhs, eq.rhs, clause(right, v), occurrence), kbo), v


def test_demod_formula_examples(kbo):
    got, v = _demod(kbo, "f(a,y) = g(y)", "g(f(x,b)) != a", (0, 0, (0,)))
    assert got == Eq(v["x"], A)
    got, v = _demod(kbo, "h(z,u) = h(u,z)", "f(g(y),y) = g(h(x,y))", (0, 1, (0,)))
    assert got == Gt(v["x"], v["y"])
    got, v = _demod(kbo, "f(z,u) = f(u,z)", "g(f(x,a)) = g(f(a,x))", (0, 0, (0,)))
    assert got == Gt(v["x"], A)


def test_trivial_joinability_examples(kbo):
    assert trivial_joinability(clause("g(f(a,x)) = g(f(a,x))"), BOT, kbo) is TOP
    v = {}
    c = clause("g(f(x,a)) = g(f(a,x))", v)
    x = v["x"]
    r = Or((Gt(x, A), Gt(A, x)))
    assert trivial_joinability(c, r, kbo) is None
    assert trivial_joinability(c, r, kbo, case_split=True) is TOP
    assert trivial_joinability(clause("a != b"), BOT, kbo, case_split=True) is None


def test_is_valid_case_split(kbo):
    v = {}
    x, y = term("x", v), term("y", v)
    assert is_valid(Or((Gt(x, y), Gt(y, x), Eq(x, y))), kbo)
    assert not is_valid(Or((Gt(x, y), Eq(x, y))), kbo)


def test_parse_formula_round_trip():
    v = {}
    f = parse_formula("ex y. and(eq(f(a,y),f(x,b)), gt(f(a,y),g(y)), or(top, not(bot)))", v)
    assert isinstance(f, Exists) and "x" in v and "y" not in v
    again = parse_formula(formula_to_prefix(f), {repr(v["x"]): v["x"]})
    renamed = again.body.subst(dict(zip(again.vars, f.vars)))
    assert renamed == f.body


def test_parse_formula_errors():
    with pytest.raises(SyntaxError):
        parse_formula("xor(top, bot)")
    with pytest.raises(SyntaxError):
        parse_formula("not(top, bot)")


# -- properties ----------------------------------------------------------------

_KBO = KBO(paper_signature())
_SHARED = {}
_X, _Y = term("x", _SHARED), term("y", _SHARED)
_GROUND = ground_terms(_KBO.signature, 1)


def _terms():
    leaves = st.sampled_from([_X, _Y, A, B])
    return st.recursive(
        leaves,
        lambda k: st.one_of(
            st.builds(lambda t: App("g", (t,)), k),
            st.builds(lambda s, t: App("f", (s, t)), k, k),
            st.builds(lambda s, t: App("h", (s, t)), k, k),
        ),
        max_leaves=4,
    )


def _formulas():
    atom = st.one_of(st.builds(Eq, _terms(), _terms()), st.builds(Gt, _terms(), _terms()))
    return st.recursive(
        atom,
        lambda k: st.one_of(
            st.builds(Not, k),
            st.builds(lambda a, b: And((a, b)), k, k),
            st.builds(lambda a, b: Or((a, b)), k, k),
        ),
        max_leaves=5,
    )


@settings(max_examples=200, deadline=None)
@given(_formulas(), st.sampled_from(_GROUND), st.sampled_from(_GROUND))
def test_simplify_preserves_ground_truth(f, gx, gy):
    kbo = _KBO
    theta = {_X: gx, _Y: gy}
    assert eval_ground(f.subst(theta), kbo) == eval_ground(simplify(f, kbo).subst(theta), kbo)


@settings(max_examples=150, deadline=None)
@given(_formulas())
def test_entails_verdicts_are_certified(f):
    kbo = _KBO
    verdict = entails({}, f, kbo)
    values = [eval_ground(f.subst({_X: gx, _Y: gy}), kbo) for gx in _GROUND for gy in _GROUND]
    if verdict is ThreeVal.HOLDS:
        assert all(values)
    elif verdict is ThreeVal.FAILS:
        assert not all(values)
