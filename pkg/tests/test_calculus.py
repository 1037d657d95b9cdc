from parc.calculus import (
    Conclusion,
    PartialClause,
    Skip,
    all_inferences,
    equality_factoring,
    equality_resolution,
    replay,
    select,
    superposition,
)
from parc.clauses import is_variant
from parc.redundancy import BOT, TOP, Eq, Gt
from parc.saturation import ProverOptions

from parc.terms import App

from conftest import clause

A = App("a", ())

CRC = ProverOptions(crc=True)
CROC = ProverOptions(crc=True, croc=True)
BASE = ProverOptions()


def pc(id, text, formula=BOT, v=None):
    return PartialClause(id, clause(text, {} if v is None else v), formula)


def conclusions(outs):
    return [o for o in outs if isinstance(o, Conclusion)]


def skips(outs):
    return [o for o in outs if isinstance(o, Skip)]


def test_select_maximal_and_negative_modes(kbo):
    assert select(clause("a != b | a = b"), kbo) == [0]
    assert select(clause("g(a) = b"), kbo) == [0]
    assert select(clause("a != b"), kbo, "neg") == [0]
    assert select(clause("g(a) = b | a != b"), kbo, "neg") == [1]


def test_sup_motivating_inference(kbo):
    left = pc(1, "h(z,u) = h(u,z)")
    right = pc(2, "f(g(y),y) = g(h(x,y))")
    got = conclusions(superposition(left, right, kbo, BASE))
    assert got and all(is_variant(c.clause, clause("f(g(y),y) = g(h(y,x))")) for c in got)


def test_sup_first_example_inference(kbo):
    left = pc(2, "f(a,y) = g(y)")
    right = pc(3, "g(f(x,b)) != a")
    got = conclusions(superposition(left, right, kbo, CRC))
    assert [c.clause for c in got] == [clause("g(g(b)) != a")]


def test_sup_skipped_by_right_formula(kbo):
    v = {}
    right = pc(3, "g(f(x,b)) != a", v=v)
    right.formula = Eq(v["x"], A)
    left = pc(1, "f(a,b) = b")
    outs = list(superposition(left, right, kbo, CRC))
    assert not conclusions(outs)
    (skip,) = [s for s in skips(outs) if s.flag]
    assert (skip.condition, skip.flag, skip.sup.path) == (8, "crc", (0,))
    # the baseline ignores formulas
    assert conclusions(superposition(left, right, kbo, BASE))


def test_sup_left_formula_gives_condition_seven(kbo):
    left = pc(1, "f(a,b) = b", TOP)
    right = pc(3, "g(f(x,b)) != a")
    (skip,) = [s for s in superposition(left, right, kbo, CRC) if isinstance(s, Skip) and s.flag]
    assert skip.condition == 7


def test_sup_ordering_conditions(kbo):
    # b = a can only rewrite a into b from right to left, which condition 3 forbids
    left = pc(1, "b = a")
    right = pc(2, "g(a) != b")
    outs = list(superposition(left, right, kbo, BASE))
    assert [c.clause for c in conclusions(outs)] == [clause("g(b) != b")]


def test_sup_croc_combines_ordering_and_formula(kbo):
    v = {}
    right = pc(2, "f(g(y),y) = g(h(x,y))", v=v)
    right.formula = Gt(v["x"], v["y"])
    left = pc(1, "h(z,u) = h(u,z)")
    outs = list(superposition(left, right, kbo, CROC))
    assert not conclusions(outs)
    assert any(s.flag == "croc" for s in skips(outs))


def test_eqres_examples(kbo):
    assert [c.clause for c in conclusions(equality_resolution(pc(1, "a != a"), kbo, BASE))] == [clause("$false")]
    got = conclusions(equality_resolution(pc(1, "f(x,b) != f(a,y) | g(x) = y"), kbo, BASE))
    assert [c.clause for c in got] == [clause("g(a) = b")]
    outs = list(equality_resolution(pc(1, "x != a", TOP), kbo, CRC))
    assert [(s.condition, s.flag) for s in outs] == [(2, "crc")]


def test_eqfac_examples(kbo):
    got = conclusions(equality_factoring(pc(1, "g(x) = a | g(a) = a"), kbo, BASE))
    assert got and all(is_variant(c.clause, clause("g(a) = a | a != a")) for c in got)
    got = conclusions(equality_factoring(pc(1, "a = b | a = b"), kbo, BASE))
    assert got and all(c.clause == clause("a = b | b != b") for c in got)
    outs = list(equality_factoring(pc(1, "g(x) = a | g(a) = a", TOP), kbo, CRC))
    assert all(isinstance(s, Skip) for s in outs)
    assert [s.condition for s in outs if s.flag] == [5, 5]


def test_all_inferences_without_partners(kbo):
    assert list(all_inferences(pc(1, "a != b"), [], kbo, BASE)) == []


def test_all_inferences_first_example_given_clause(kbo):
    v = {}
    given = pc(3, "g(f(x,b)) != a", v=v)
    given.formula = Eq(v["x"], A)
    outs = list(all_inferences(given, [pc(1, "f(a,b) = b")], kbo, CRC))
    assert any(isinstance(s, Skip) and s.condition == 8 and s.premises == (1, 3) for s in outs)


def test_conclusions_carry_no_formula_and_replay(kbo):
    left, right = pc(1, "f(a,y) = g(y)"), pc(2, "g(f(x,b)) != a")
    for out in conclusions(all_inferences(right, [left], kbo, CRC)):
        premises = {1: left.clause, 2: right.clause}
        assert is_variant(replay(out.record, premises, kbo), out.clause)
