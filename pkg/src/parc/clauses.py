"""Literals and clauses (multisets of literals)."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator

from .terms import Substitution, Term, Var, fresh_var, iter_subterms_pre, match, term_vars


class Literal:
    """``lhs ≈ rhs`` or ``lhs ≉ rhs``; sides form an unordered pair."""

    __slots__ = ("lhs", "rhs", "positive", "_hash")

    def __init__(self, lhs: Term, rhs: Term, positive: bool = True):
        self.lhs = lhs
        self.rhs = rhs
        self.positive = positive
        self._hash = hash(lhs) + hash(rhs) + (0x5BD1E995 if positive else 0)

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not Literal or other.positive != self.positive:
            return False
        return (self.lhs == other.lhs and self.rhs == other.rhs) or (
            self.lhs == other.rhs and self.rhs == other.lhs
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        op = "≈" if self.positive else "≉"
        return f"{self.lhs} {op} {self.rhs}"

    @property
    def sides(self) -> tuple[Term, Term]:
        return (self.lhs, self.rhs)

    def side(self, i: int) -> Term:
        return self.lhs if i == 0 else self.rhs

    def subst(self, bindings) -> "Literal":
        lhs, rhs = self.lhs.subst(bindings), self.rhs.subst(bindings)
        if lhs is self.lhs and rhs is self.rhs:
            return self
        return Literal(lhs, rhs, self.positive)

    def with_side(self, i: int, t: Term) -> "Literal":
        return Literal(t, self.rhs, self.positive) if i == 0 else Literal(self.lhs, t, self.positive)

    @property
    def is_trivial_equation(self) -> bool:
        return self.positive and self.lhs == self.rhs

    def vars(self) -> Counter:
        return term_vars(self.lhs) + term_vars(self.rhs)

    @property
    def size(self) -> int:
        return self.lhs.size + self.rhs.size


def eq(s: Term, t: Term) -> Literal:
    return Literal(s, t, True)


def neq(s: Term, t: Term) -> Literal:
    return Literal(s, t, False)


class Clause:
    """A multiset of literals. The empty clause is □."""

    __slots__ = ("literals", "_hash")

    def __init__(self, literals: Iterable[Literal] = ()):
        self.literals = tuple(literals)
        self._hash = sum(map(hash, self.literals)) & 0xFFFFFFFFFFFF

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, Clause)
            and self._hash == other._hash
            and len(self.literals) == len(other.literals)
            and Counter(self.literals) == Counter(other.literals)
        )

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.literals)

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.literals)

    def __getitem__(self, i) -> Literal:
        return self.literals[i]

    def __repr__(self):
        if not self.literals:
            return "□"
        return " ∨ ".join(map(repr, self.literals))

    @property
    def is_empty(self) -> bool:
        return not self.literals

    def subst(self, bindings) -> "Clause":
        if not bindings:
            return self
        return Clause(lit.subst(bindings) for lit in self.literals)

    def without(self, *indices: int) -> list[Literal]:
        skip = set(indices)
        return [lit for i, lit in enumerate(self.literals) if i not in skip]

    def vars(self) -> set[Var]:
        out: set[Var] = set()
        for lit in self.literals:
            out.update(lit.vars())
        return out

    def terms(self) -> Iterator[Term]:
        for lit in self.literals:
            yield lit.lhs
            yield lit.rhs

    @property
    def size(self) -> int:
        return sum(lit.size for lit in self.literals)

    @property
    def ground(self) -> bool:
        return all(lit.lhs.ground and lit.rhs.ground for lit in self.literals)

    def symbols(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for t in self.terms():
            for sub in iter_subterms_pre(t):
                if not sub.is_var:
                    out.setdefault(sub.f, len(sub.args))
        return out


def rename(c: Clause) -> tuple[Clause, Substitution]:
    """Variant of ``c`` over fresh variables."""
    ren = Substitution({x: fresh_var() for x in sorted(c.vars(), key=lambda v: v.id)})
    return c.subst(ren.bindings), ren


def rename_apart(c1: Clause, c2: Clause) -> tuple[Clause, Substitution]:
    """Return a variant of ``c2`` sharing no variables with ``c1``."""
    if not (c1.vars() & c2.vars()):
        return c2, Substitution()
    return rename(c2)


def _match_literals(ps: list[Literal], ts: list[Literal], b: dict) -> dict | None:
    if not ps:
        return b
    p, rest = ps[0], ps[1:]
    for k, t in enumerate(ts):
        if t.positive != p.positive:
            continue
        for a, c in ((t.lhs, t.rhs), (t.rhs, t.lhs)):
            b2 = match(p.lhs, a, dict(b))
            if b2 is not None:
                b2 = match(p.rhs, c, b2)
            if b2 is not None:
                r = _match_literals(rest, ts[:k] + ts[k + 1 :], b2)
                if r is not None:
                    return r
    return None


def is_variant(c1: Clause, c2: Clause) -> bool:
    """True iff the clauses are equal up to a bijective variable renaming."""
    if len(c1) != len(c2) or c1.size != c2.size:
        return False
    b = _match_literals(list(c1.literals), list(c2.literals), {})
    if b is None:
        return False
    targets = list(b.values())
    return all(t.is_var for t in targets) and len(set(targets)) == len(targets)


def variant_key(c: Clause) -> str:
    """Renaming-invariant key. Equal keys imply variants; the converse can
    fail on symmetric clauses, which only costs a missed duplicate."""

    def blind(t: Term) -> str:
        if t.is_var:
            return "*"
        if not t.args:
            return t.f
        return t.f + "(" + ",".join(blind(a) for a in t.args) + ")"

    names: dict[Var, int] = {}

    def show(t: Term) -> str:
        if t.is_var:
            if t not in names:
                names[t] = len(names)
            return f"#{names[t]}"
        if not t.args:
            return t.f
        return t.f + "(" + ",".join(show(a) for a in t.args) + ")"

    lits = []
    for lit in c.literals:
        a, b = blind(lit.lhs), blind(lit.rhs)
        sides = (lit.lhs, lit.rhs) if a <= b else (lit.rhs, lit.lhs)
        lits.append(((min(a, b), max(a, b), lit.positive), sides, lit.positive))
    lits.sort(key=lambda x: x[0])
    parts = []
    for _, (s, t), pos in lits:
        parts.append(show(s) + ("=" if pos else "!=") + show(t))
    return "|".join(parts)


def clause_of(*lits: Literal) -> Clause:
    return Clause(lits)
