"""Sup, EqRes and EqFac over partial clauses, with every side condition.

Rule functions are generators so that callers can interleave redundancy
steps: each candidate is checked against the premises' *current* formulas
at the moment it is produced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .clauses import Clause, Literal, rename
from .ordering import KBO
from .redundancy import (
    BOT,
    TOP,
    Formula,
    Or,
    expand_clause_gt,
    ge,
    Gt,
    is_valid,
    simplify,
)
from .terms import Substitution, Term, mgu, positions, replace_at, subterm_at


class PartialClause:
    """``C⟨R⟩``. The clause never changes; the formula only ever weakens."""

    __slots__ = ("id", "clause", "formula", "record", "retired", "_selected")

    def __init__(self, id: int, clause: Clause, formula: Formula = BOT, record=None):
        self.id = id
        self.clause = clause
        self.formula = formula
        self.record = record
        self.retired = False
        self._selected = None

    @property
    def age(self) -> int:
        return self.id

    @property
    def weight(self) -> int:
        return self.clause.size

    def __repr__(self):
        if self.formula is BOT:
            return f"{self.id}. {self.clause}"
        return f"{self.id}. {self.clause} ⟨{self.formula}⟩"


@dataclass(frozen=True)
class InferenceRecord:
    rule: str  # "Sup", "EqRes", "EqFac" or "Input"
    premises: tuple
    unifier: Substitution = field(default_factory=Substitution)
    meta: tuple = ()

    def describe(self) -> str:
        if self.rule == "Input":
            return f"[input {self.meta[0]}]" if self.meta else "[input]"
        parents = ",".join(map(str, self.premises))
        return f"[{self.rule}, {parents}, {self.unifier}]"


@dataclass(frozen=True)
class SupMeta:
    """Where a superposition happened. ``left_side``/``right_side`` index the
    literal side playing ``l`` and ``s[l']``; side 1 means right-to-left."""

    left_lit: int
    left_side: int
    right_lit: int
    right_side: int
    path: tuple
    left_renaming: Substitution


@dataclass
class Conclusion:
    rule: str
    clause: Clause
    record: InferenceRecord
    sup: SupMeta | None = None


@dataclass
class Skip:
    rule: str
    condition: int
    flag: str | None  # None: ordering conditions, else the option responsible
    premises: tuple
    sup: SupMeta | None = None
    unifier: Substitution | None = None


# -- selection ----------------------------------------------------------------


def select(c: Clause, kbo: KBO, mode: str = "maximal") -> list[int]:
    """Indices of selected literals.

    ``maximal``: every literal not certified smaller than another one.
    ``neg``: a single heaviest negative literal when there is one.
    """
    if mode == "neg":
        negs = [i for i, lit in enumerate(c) if not lit.positive]
        if negs:
            return [max(negs, key=lambda i: (c[i].size, -i))]
    elif mode != "maximal":
        raise ValueError(f"unknown selection mode {mode!r}")
    return kbo.maximal_literals(c)


def selected(pc: PartialClause, kbo: KBO, mode: str) -> list[int]:
    if pc._selected is None:
        pc._selected = select(pc.clause, kbo, mode)
    return pc._selected


# -- side-condition helpers -----------------------------------------------------


def _ge(kbo: KBO, s: Term, t: Term) -> bool:
    return s == t or kbo.gt(s, t)


def _clause_ge(kbo: KBO, lits, l: Term, strict: bool) -> bool:
    for lit in lits:
        for u in (lit.lhs, lit.rhs):
            if kbo.gt(u, l) or (not strict and u == l):
                return True
    return False


class _Checker:
    """Applies conditions about redundancy formulas according to the flags."""

    def __init__(self, kbo: KBO, opts):
        self.kbo = kbo
        self.crc = bool(getattr(opts, "crc", False))
        self.croc = bool(getattr(opts, "croc", False))
        self.crs = bool(getattr(opts, "crs", False))

    def formula_holds(self, sigma: Substitution, R: Formula) -> tuple[str | None, Formula]:
        """(flag that certified ``σ ⊨ R`` or None, ``Rσ`` simplified)."""
        if R is BOT or not self.crc:
            return None, BOT
        g = simplify(R.subst(sigma.bindings), self.kbo)
        if g is TOP:
            return "crc", g
        return None, g

    def combined(self, conds: list[Formula], rest: list[Formula]) -> bool:
        """Every grounding violates some ordering condition or satisfies a formula."""
        return is_valid(Or(tuple(conds) + tuple(rest)), self.kbo)


# -- rules ------------------------------------------------------------------------


def superposition(
    left: PartialClause,
    right: PartialClause,
    kbo: KBO,
    opts,
    selection: str = "maximal",
) -> Iterator[Conclusion | Skip]:
    """All Sup instances with ``left`` supplying ``l ≈ r`` into ``right``.

    ``left`` is renamed apart; conclusions and formulas use the variables of
    ``right`` plus the fresh ones.
    """
    chk = _Checker(kbo, opts)
    lclause, ren = rename(left.clause)
    rclause = right.clause
    lsel = selected(left, kbo, selection)
    rsel = selected(right, kbo, selection)
    premises = (left.id, right.id)
    for li in lsel:
        llit = lclause[li]
        if not llit.positive:
            continue
        for lside in (0, 1):
            l, r = llit.side(lside), llit.side(1 - lside)
            for ri in rsel:
                rlit = rclause[ri]
                for rside in (0, 1):
                    if rside == 1 and rlit.lhs == rlit.rhs:
                        continue
                    s, t = rlit.side(rside), rlit.side(1 - rside)
                    for path, l_prime in positions(s):
                        if l_prime.is_var:
                            continue  # condition (2)
                        sigma = mgu(l, l_prime)
                        if sigma is None:
                            continue
                        meta = SupMeta(li, lside, ri, rside, path, ren)
                        out = _sup_conditions(
                            chk, left, right, lclause, rclause, li, ri, l, r, s, t,
                            rlit.positive, path, sigma, premises, meta,
                        )
                        if out is not None:
                            yield out


def _sup_conditions(chk, left, right, lclause, rclause, li, ri, l, r, s, t, positive, path, sigma, premises, meta):
    kbo = chk.kbo
    b = sigma.bindings
    ls, rs, ss, ts = l.subst(b), r.subst(b), s.subst(b), t.subst(b)
    c1 = [lit.subst(b) for lit in lclause.without(li)]
    c2 = [lit.subst(b) for lit in rclause.without(ri)]
    if _ge(kbo, rs, ls):
        return Skip("Sup", 3, None, premises, meta, sigma)
    if _ge(kbo, ts, ss):
        return Skip("Sup", 4, None, premises, meta, sigma)
    if _clause_ge(kbo, c1, ls, strict=False):
        return Skip("Sup", 5, None, premises, meta, sigma)
    if positive and _clause_ge(kbo, c2, ss, strict=False):
        return Skip("Sup", 6, None, premises, meta, sigma)
    ren = meta.left_renaming.bindings
    r1 = left.formula.subst(ren) if left.formula is not BOT else BOT
    ok1, g1 = chk.formula_holds(sigma, r1)
    if ok1:
        return Skip("Sup", 7, ok1, premises, meta, sigma)
    ok2, g2 = chk.formula_holds(sigma, right.formula)
    if ok2:
        return Skip("Sup", 8, ok2, premises, meta, sigma)
    if chk.croc or chk.crs:
        conds = [ge(rs, ls), ge(ts, ss), expand_clause_gt(c1, ls, strict=False)]
        if positive:
            conds.append(expand_clause_gt(c2, ss, strict=False))
        forms = [g for g in (g1, g2) if g is not BOT]
        if chk.croc and forms and chk.combined(conds, forms):
            return Skip("Sup", 7 if g1 is not BOT else 8, "croc", premises, meta, sigma)
        if chk.crs and _needs_split(conds, kbo) and chk.combined(conds, []):
            return Skip("Sup", 3, "crs", premises, meta, sigma)
    new_s = replace_at(s, path, r).subst(b)
    lit = Literal(new_s, ts, positive)
    concl = Clause([lit] + c1 + c2)
    rec = InferenceRecord("Sup", premises, sigma, (meta.left_lit, meta.left_side, meta.right_lit, meta.right_side, meta.path))
    return Conclusion("Sup", concl, rec, meta)


def _needs_split(conds, kbo) -> bool:
    # skip the case analysis when no condition mentions a variable comparison
    return any(not (a.s.ground and a.t.ground) for c in conds for a in _gt_atoms(c))


def _gt_atoms(f):
    if isinstance(f, Gt):
        yield f
    elif isinstance(f, Or):
        for a in f.args:
            yield from _gt_atoms(a)


def equality_resolution(pc: PartialClause, kbo: KBO, opts, selection: str = "maximal") -> Iterator[Conclusion | Skip]:
    chk = _Checker(kbo, opts)
    for i in selected(pc, kbo, selection):
        lit = pc.clause[i]
        if lit.positive:
            continue
        sigma = mgu(lit.lhs, lit.rhs)
        if sigma is None:
            continue
        ok, g = chk.formula_holds(sigma, pc.formula)
        if ok:
            yield Skip("EqRes", 2, ok, (pc.id,), unifier=sigma)
            continue
        if chk.croc and g is not BOT and chk.combined([], [g]):
            yield Skip("EqRes", 2, "croc", (pc.id,), unifier=sigma)
            continue
        concl = Clause(x.subst(sigma.bindings) for x in pc.clause.without(i))
        yield Conclusion("EqRes", concl, InferenceRecord("EqRes", (pc.id,), sigma, (i,)))


def equality_factoring(pc: PartialClause, kbo: KBO, opts, selection: str = "maximal") -> Iterator[Conclusion | Skip]:
    chk = _Checker(kbo, opts)
    c = pc.clause
    sel = [i for i in selected(pc, kbo, selection) if c[i].positive]
    for i in sel:
        for j in sel:
            if i == j:
                continue
            for si in (0, 1):
                s, t = c[i].side(si), c[i].side(1 - si)
                for sj in (0, 1):
                    s2, t2 = c[j].side(sj), c[j].side(1 - sj)
                    sigma = mgu(s, s2)
                    if sigma is None:
                        continue
                    b = sigma.bindings
                    ss, ts, t2s = s.subst(b), t.subst(b), t2.subst(b)
                    rest = [x.subst(b) for x in c.without(i, j)]
                    if _ge(kbo, ts, ss):
                        yield Skip("EqFac", 2, None, (pc.id,), unifier=sigma)
                        continue
                    if kbo.gt(t2s, ts):
                        yield Skip("EqFac", 3, None, (pc.id,), unifier=sigma)
                        continue
                    if _clause_ge(kbo, rest, ss, strict=True):
                        yield Skip("EqFac", 4, None, (pc.id,), unifier=sigma)
                        continue
                    ok, g = chk.formula_holds(sigma, pc.formula)
                    if ok:
                        yield Skip("EqFac", 5, ok, (pc.id,), unifier=sigma)
                        continue
                    if chk.croc or chk.crs:
                        conds = [ge(ts, ss), Gt(t2s, ts), expand_clause_gt(rest, ss, strict=True)]
                        if chk.croc and g is not BOT and chk.combined(conds, [g]):
                            yield Skip("EqFac", 5, "croc", (pc.id,), unifier=sigma)
                            continue
                        if chk.crs and _needs_split(conds, kbo) and chk.combined(conds, []):
                            yield Skip("EqFac", 2, "crs", (pc.id,), unifier=sigma)
                            continue
                    concl = Clause([Literal(ss, ts, True), Literal(ts, t2s, False)] + rest)
                    yield Conclusion("EqFac", concl, InferenceRecord("EqFac", (pc.id,), sigma, (i, si, j, sj)))


def all_inferences(given: PartialClause, active, kbo: KBO, opts, selection: str = "maximal"):
    """Every rule instance with ``given`` as a premise, partners drawn from
    ``active`` (newest first). Self-superposition comes last."""
    yield from equality_resolution(given, kbo, opts, selection)
    yield from equality_factoring(given, kbo, opts, selection)
    for partner in sorted(active, key=lambda p: -p.id):
        if partner is given:
            continue
        yield from superposition(partner, given, kbo, opts, selection)
        yield from superposition(given, partner, kbo, opts, selection)
    yield from superposition(given, given, kbo, opts, selection)


def replay(record: InferenceRecord, premises: dict[int, Clause], kbo: KBO) -> Clause | None:
    """Recompute the conclusion of ``record`` from its premise clauses."""
    b = record.unifier.bindings
    if record.rule == "EqRes":
        (i,) = record.meta
        c = premises[record.premises[0]]
        lit = c[i]
        if lit.lhs.subst(b) != lit.rhs.subst(b):
            return None
        return Clause(x.subst(b) for x in c.without(i))
    if record.rule == "EqFac":
        i, si, j, sj = record.meta
        c = premises[record.premises[0]]
        s, t = c[i].side(si), c[i].side(1 - si)
        s2, t2 = c[j].side(sj), c[j].side(1 - sj)
        if s.subst(b) != s2.subst(b):
            return None
        rest = [x.subst(b) for x in c.without(i, j)]
        return Clause([Literal(s.subst(b), t.subst(b)), Literal(t.subst(b), t2.subst(b), False)] + rest)
    if record.rule == "Sup":
        li, lside, ri, rside, path = record.meta
        lc, _ = rename(premises[record.premises[0]])
        rc = premises[record.premises[1]]
        l, r = lc[li].side(lside), lc[li].side(1 - lside)
        s, t = rc[ri].side(rside), rc[ri].side(1 - rside)
        sigma = mgu(l, subterm_at(s, path))
        if sigma is None:
            return None
        b = sigma.bindings
        lit = Literal(replace_at(s, path, r).subst(b), t.subst(b), rc[ri].positive)
        return Clause([lit] + [x.subst(b) for x in lc.without(li)] + [x.subst(b) for x in rc.without(ri)])
    raise ValueError(f"cannot replay {record.rule}")
