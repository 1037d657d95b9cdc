"""Knuth-Bendix order with constant weight, lifted to literals and clauses."""

from __future__ import annotations

import enum
from collections import Counter
from typing import Callable, Sequence

from .clauses import Clause, Literal
from .terms import Signature, Term, occurs, term_vars


class Cmp(enum.Enum):
    GREATER = ">"
    LESS = "<"
    EQUAL = "="
    INCOMPARABLE = "?"

    def flip(self) -> "Cmp":
        return _FLIP[self]


_FLIP = {Cmp.GREATER: Cmp.LESS, Cmp.LESS: Cmp.GREATER, Cmp.EQUAL: Cmp.EQUAL, Cmp.INCOMPARABLE: Cmp.INCOMPARABLE}


def bag_cmp(xs: Sequence, ys: Sequence, elem_cmp: Callable) -> Cmp:
    """Dershowitz-Manna multiset extension of ``elem_cmp``.

    Elements are matched by ``==``; a remaining element of one side must be
    dominated by some remaining element of the other.
    """
    mx, my = Counter(xs), Counter(ys)
    dx = list((mx - my).elements())
    dy = list((my - mx).elements())
    if not dx and not dy:
        return Cmp.EQUAL
    if dominates(dx, dy, elem_cmp):
        return Cmp.GREATER
    if dominates(dy, dx, elem_cmp):
        return Cmp.LESS
    return Cmp.INCOMPARABLE


def dominates(dx: list, dy: list, elem_cmp: Callable) -> bool:
    if not dx:
        return False
    return all(any(elem_cmp(x, y) is Cmp.GREATER for x in dx) for y in dy)


def literal_terms(lit: Literal) -> list[Term]:
    if lit.positive:
        return [lit.lhs, lit.rhs]
    return [lit.lhs, lit.lhs, lit.rhs, lit.rhs]


class KBO:
    """KBO where every symbol and variable weighs 1.

    ``gt(s, t)`` is the usual non-ground KBO: a True answer holds for every
    grounding. On ground terms the order is total and the answers exact.
    """

    def __init__(self, signature: Signature):
        self.signature = signature
        self._rank = signature._rank
        self._cache: dict = {}

    def prec_gt(self, f: str, g: str) -> bool:
        return self._rank[f] > self._rank[g]

    def gt(self, s: Term, t: Term) -> bool:
        if s.is_var:
            return False
        if t.is_var:
            return occurs(t, s)
        if s.size < t.size:
            return False
        key = (s, t)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if len(self._cache) > 200_000:
            self._cache.clear()
        r = self._gt_app(s, t)
        self._cache[key] = r
        return r

    def _gt_app(self, s, t) -> bool:
        if not t.ground:
            vs, vt = term_vars(s), term_vars(t)
            if any(vs[x] < n for x, n in vt.items()):
                return False
        if s.size > t.size:
            return True
        if s.f != t.f:
            return self._rank[s.f] > self._rank[t.f]
        for a, b in zip(s.args, t.args):
            if a != b:
                return self.gt(a, b)
        return False

    def cmp(self, s: Term, t: Term) -> Cmp:
        if s == t:
            return Cmp.EQUAL
        if self.gt(s, t):
            return Cmp.GREATER
        if self.gt(t, s):
            return Cmp.LESS
        return Cmp.INCOMPARABLE

    def ge(self, s: Term, t: Term) -> bool:
        return s == t or self.gt(s, t)

    def cmp_literals(self, l1: Literal, l2: Literal) -> Cmp:
        if l1 == l2:
            return Cmp.EQUAL
        return bag_cmp(literal_terms(l1), literal_terms(l2), self.cmp)

    def cmp_clauses(self, c1: Clause, c2: Clause) -> Cmp:
        return bag_cmp(c1.literals, c2.literals, self.cmp_literals)

    def maximal_literals(self, c: Clause) -> list[int]:
        """Indices of literals not certified smaller than another literal."""
        lits = c.literals
        out = []
        for i, li in enumerate(lits):
            if not any(j != i and self.cmp_literals(lj, li) is Cmp.GREATER for j, lj in enumerate(lits)):
                out.append(i)
        return out


def cmp_terms(s: Term, t: Term, kbo: KBO) -> Cmp:
    return kbo.cmp(s, t)


def cmp_literals(l1: Literal, l2: Literal, kbo: KBO) -> Cmp:
    return kbo.cmp_literals(l1, l2)


def cmp_clauses(c1: Clause, c2: Clause, kbo: KBO) -> Cmp:
    return kbo.cmp_clauses(c1, c2)
