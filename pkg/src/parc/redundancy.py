"""Redundancy formulas over the term algebra extended with ``=`` and ``≻``.

Formulas are built from ``⊤``, ``⊥``, the atoms ``s = t`` and ``s ≻ t``,
negation, conjunction, disjunction and existential quantification. A
substitution ``σ`` *satisfies* ``R`` when every ground instance of ``Rσ``
is true, where ``=`` is syntactic identity of ground terms and ``≻`` is the
ground KBO.

The checkers here are three-valued and sound: ``HOLDS`` and ``FAILS`` are
certified, everything else is ``UNKNOWN``.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass

from .clauses import Clause, Literal
from .ordering import KBO, Cmp
from .terms import (
    App,
    Substitution,
    Term,
    TermReader,
    Var,
    fresh_var,
    ground_terms,
    mgu,
    occurs,
    subterm_at,
    term_vars,
    tokenize,
)


class Formula:
    __slots__ = ()

    def subst(self, bindings) -> "Formula":
        raise NotImplementedError

    def free_vars(self) -> set[Var]:
        raise NotImplementedError

    def __and__(self, other):
        return And((self, other))

    def __or__(self, other):
        return Or((self, other))


@dataclass(frozen=True, slots=True)
class _Const(Formula):
    value: bool

    def subst(self, bindings):
        return self

    def free_vars(self):
        return set()

    def __repr__(self):
        return "⊤" if self.value else "⊥"


TOP = _Const(True)
BOT = _Const(False)


@dataclass(frozen=True, slots=True)
class Eq(Formula):
    s: Term
    t: Term

    def subst(self, bindings):
        return Eq(self.s.subst(bindings), self.t.subst(bindings))

    def free_vars(self):
        return set(term_vars(self.s)) | set(term_vars(self.t))

    def __repr__(self):
        return f"{self.s} = {self.t}"


@dataclass(frozen=True, slots=True)
class Gt(Formula):
    s: Term
    t: Term

    def subst(self, bindings):
        return Gt(self.s.subst(bindings), self.t.subst(bindings))

    def free_vars(self):
        return set(term_vars(self.s)) | set(term_vars(self.t))

    def __repr__(self):
        return f"{self.s} ≻ {self.t}"


@dataclass(frozen=True, slots=True)
class Not(Formula):
    arg: Formula

    def subst(self, bindings):
        return Not(self.arg.subst(bindings))

    def free_vars(self):
        return self.arg.free_vars()

    def __repr__(self):
        if isinstance(self.arg, Eq):
            return f"{self.arg.s} ≠ {self.arg.t}"
        return f"¬({self.arg!r})"


@dataclass(frozen=True, slots=True)
class And(Formula):
    args: tuple

    def subst(self, bindings):
        return And(tuple(a.subst(bindings) for a in self.args))

    def free_vars(self):
        return set().union(*(a.free_vars() for a in self.args))

    def __repr__(self):
        if not self.args:
            return "⊤"
        return " ∧ ".join(_paren(a) for a in self.args)


@dataclass(frozen=True, slots=True)
class Or(Formula):
    args: tuple

    def subst(self, bindings):
        return Or(tuple(a.subst(bindings) for a in self.args))

    def free_vars(self):
        return set().union(*(a.free_vars() for a in self.args))

    def __repr__(self):
        if not self.args:
            return "⊥"
        return " ∨ ".join(_paren(a) for a in self.args)


@dataclass(frozen=True, slots=True)
class Exists(Formula):
    vars: tuple
    body: Formula

    def subst(self, bindings):
        bound = set(self.vars)
        inner = {x: t for x, t in bindings.items() if x not in bound}
        if not inner:
            return self
        range_vars = set().union(*(term_vars(t).keys() for t in inner.values()))
        if range_vars & bound:
            fresh = {v: fresh_var() for v in self.vars}
            return Exists(tuple(fresh.values()), self.body.subst(fresh).subst(inner))
        return Exists(self.vars, self.body.subst(inner))

    def free_vars(self):
        return self.body.free_vars() - set(self.vars)

    def __repr__(self):
        return "∃" + ",".join(map(repr, self.vars)) + ". " + _paren(self.body)


def _paren(f: Formula) -> str:
    if isinstance(f, (And, Or, Exists)) and len(getattr(f, "args", (0, 0))) > 1:
        return f"({f!r})"
    return repr(f)


def ge(s: Term, t: Term) -> Formula:
    """``s ⪰ t``, i.e. ``s ≻ t ∨ s = t``."""
    return Or((Gt(s, t), Eq(s, t)))


def conj(*args: Formula) -> Formula:
    return And(tuple(args))


def disj(*args: Formula) -> Formula:
    return Or(tuple(args))


def atoms(f: Formula):
    if isinstance(f, (Eq, Gt)):
        yield f
    elif isinstance(f, Not):
        yield from atoms(f.arg)
    elif isinstance(f, (And, Or)):
        for a in f.args:
            yield from atoms(a)
    elif isinstance(f, Exists):
        yield from atoms(f.body)


def has_quantifier(f: Formula) -> bool:
    if isinstance(f, Exists):
        return True
    if isinstance(f, Not):
        return has_quantifier(f.arg)
    if isinstance(f, (And, Or)):
        return any(has_quantifier(a) for a in f.args)
    return False


def has_ordering_atoms(f: Formula) -> bool:
    return any(isinstance(a, Gt) for a in atoms(f))


# -- simplification ----------------------------------------------------------


def simplify(f: Formula, kbo: KBO) -> Formula:
    """Equivalence-preserving normalisation over the term algebra.

    Equations are solved by unification, bound variables fixed by an
    equation are eliminated, ordering atoms are folded by the KBO when the
    answer is the same for all groundings, and boolean structure is
    flattened.
    """
    for _ in range(6):
        g = _simp(f, kbo)
        if g == f:
            return g
        f = g
    return f


def _simp(f: Formula, kbo: KBO) -> Formula:
    if isinstance(f, _Const):
        return f
    if isinstance(f, Eq):
        return _simp_eq(f.s, f.t)
    if isinstance(f, Gt):
        return _simp_gt(f.s, f.t, kbo)
    if isinstance(f, Not):
        return _simp_not(_simp(f.arg, kbo), kbo)
    if isinstance(f, And):
        return _simp_and([_simp(a, kbo) for a in f.args], kbo)
    if isinstance(f, Or):
        return _simp_or([_simp(a, kbo) for a in f.args])
    if isinstance(f, Exists):
        return _simp_exists(f.vars, _simp(f.body, kbo), kbo)
    raise TypeError(f"not a formula: {f!r}")


def _orient_eq(x: Var, t: Term) -> Formula:
    if t.is_var and t.id < x.id:
        return Eq(t, x)
    return Eq(x, t)


def _simp_eq(s: Term, t: Term) -> Formula:
    if s == t:
        return TOP
    sigma = mgu(s, t)
    if sigma is None:
        return BOT
    parts = [_orient_eq(x, u) for x, u in sorted(sigma.items(), key=lambda kv: kv[0].id)]
    return parts[0] if len(parts) == 1 else And(tuple(parts))


def _simp_gt(s: Term, t: Term, kbo: KBO) -> Formula:
    c = kbo.cmp(s, t)
    if c is Cmp.GREATER:
        return TOP
    if c is not Cmp.INCOMPARABLE:
        return BOT
    if not s.is_var and not t.is_var and s.size == t.size and term_vars(s) == term_vars(t):
        # weights agree under every grounding: precedence, then lexicographic
        if s.f != t.f:
            return TOP if kbo.prec_gt(s.f, t.f) else BOT
        cases, prefix = [], []
        for a, b in zip(s.args, t.args):
            if a == b:
                continue
            cases.append(And(tuple(prefix) + (Gt(a, b),)))
            prefix.append(Eq(a, b))
        return _simp(Or(tuple(cases)), kbo)
    return Gt(s, t)


def _simp_not(a: Formula, kbo: KBO) -> Formula:
    if a is TOP:
        return BOT
    if a is BOT:
        return TOP
    if isinstance(a, Not):
        return a.arg
    if isinstance(a, And):
        return _simp_or([_simp_not(x, kbo) for x in a.args])
    if isinstance(a, Or):
        return _simp_and([_simp_not(x, kbo) for x in a.args], kbo)
    return Not(a)


def _negation_of(a: Formula) -> Formula:
    return a.arg if isinstance(a, Not) else Not(a)


def _dedupe(items):
    seen, out = set(), []
    for x in items:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out


def _simp_and(args: list, kbo: KBO) -> Formula:
    flat = []
    for a in args:
        if a is BOT:
            return BOT
        if a is TOP:
            continue
        flat.extend(a.args if isinstance(a, And) else (a,))
    flat = _dedupe(flat)
    # propagate solved equations x = t into the other conjuncts
    for _ in range(len(flat) + 1):
        changed = False
        for i, a in enumerate(flat):
            if not (isinstance(a, Eq) and a.s.is_var and not occurs(a.s, a.t)):
                continue
            b = {a.s: a.t}
            rest = []
            for j, c in enumerate(flat):
                if j != i and a.s in c.free_vars():
                    rest.append(_simp(c.subst(b), kbo))
                    changed = True
                else:
                    rest.append(c)
            if changed:
                flat = []
                for c in rest:
                    if c is BOT:
                        return BOT
                    if c is TOP:
                        continue
                    flat.extend(c.args if isinstance(c, And) else (c,))
                flat = _dedupe(flat)
                break
        if not changed:
            break
    present = set(flat)
    for a in flat:
        if _negation_of(a) in present:
            return BOT
        if isinstance(a, Gt) and (Gt(a.t, a.s) in present or Eq(a.s, a.t) in present or Eq(a.t, a.s) in present):
            return BOT
    if not flat:
        return TOP
    if len(flat) == 1:
        return flat[0]
    return And(tuple(flat))


def _simp_or(args: list) -> Formula:
    flat = []
    for a in args:
        if a is TOP:
            return TOP
        if a is BOT:
            continue
        flat.extend(a.args if isinstance(a, Or) else (a,))
    flat = _dedupe(flat)
    present = set(flat)
    for a in flat:
        if _negation_of(a) in present:
            return TOP
    # absorption: A ∨ (A ∧ B) = A
    keep = []
    for a in flat:
        if isinstance(a, And):
            parts = set(a.args)
            if any(b is not a and (b in parts or (isinstance(b, And) and set(b.args) < parts)) for b in flat):
                continue
        keep.append(a)
    if not keep:
        return BOT
    if len(keep) == 1:
        return keep[0]
    return Or(tuple(keep))


def _simp_exists(vs: tuple, body: Formula, kbo: KBO) -> Formula:
    if isinstance(body, Or):
        return _simp_or([_simp_exists(vs, d, kbo) for d in body.args])
    bound = set(vs)
    for _ in range(len(vs) + 1):
        conjuncts = body.args if isinstance(body, And) else (body,)
        target = None
        for i, c in enumerate(conjuncts):
            if not isinstance(c, Eq):
                continue
            if c.s.is_var and c.s in bound and not occurs(c.s, c.t):
                target = (i, c.s, c.t)
            elif c.t.is_var and c.t in bound and not occurs(c.t, c.s):
                target = (i, c.t, c.s)
            if target:
                break
        if target is None:
            break
        i, v, t = target
        rest = conjuncts[:i] + conjuncts[i + 1 :]
        body = _simp(And(rest).subst({v: t}), kbo)
        bound.discard(v)
        if isinstance(body, Or):
            remaining = tuple(v for v in vs if v in bound)
            return _simp_or([_simp_exists(remaining, d, kbo) for d in body.args])
    live = body.free_vars()
    remaining = tuple(v for v in vs if v in bound and v in live)
    if not remaining or isinstance(body, _Const):
        return body
    return Exists(remaining, body)


# -- clause-level abbreviations ----------------------------------------------


def expand_clause_gt(literals, l: Term, strict: bool = True) -> Formula:
    """``C ≻ l`` (or ``C ⪰ l``) as a disjunction over both sides of every literal."""
    lits = literals.literals if isinstance(literals, Clause) else tuple(literals)
    parts = []
    for lit in lits:
        for side in (lit.lhs, lit.rhs):
            parts.append(Gt(side, l) if strict else ge(side, l))
    return Or(tuple(parts))


def demod_formula(l: Term, r: Term, clause: Clause, occurrence: tuple[int, int, tuple]) -> Formula:
    """Unsimplified ``∃ȳ. (l = l' ∧ l ≻ r ∧ C[l'] ≻ l)``.

    ``l ≈ r`` must already be renamed apart from ``clause``; ``occurrence``
    is ``(literal index, side, path)`` of ``l'`` inside ``clause``.
    """
    li, side, path = occurrence
    l_prime = subterm_at(clause[li].side(side), path)
    bound = (set(term_vars(l)) | set(term_vars(r))) - clause.vars()
    body = And((Eq(l, l_prime), Gt(l, r), expand_clause_gt(clause, l, strict=True)))
    if not bound:
        return body
    return Exists(tuple(sorted(bound, key=lambda v: v.id)), body)


def demodulation_step(l: Term, r: Term, clause: Clause, occurrence, kbo: KBO) -> Formula:
    return simplify(demod_formula(l, r, clause, occurrence), kbo)


# -- entailment --------------------------------------------------------------


class ThreeVal(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


def holds(sigma: Substitution | dict, f: Formula, kbo: KBO) -> bool:
    """Cheap certificate: ``Rσ`` simplifies to ``⊤``."""
    if f is BOT:
        return False
    if f is TOP:
        return True
    bindings = sigma.bindings if isinstance(sigma, Substitution) else sigma
    return simplify(f.subst(bindings), kbo) is TOP


def entails(sigma, f: Formula, kbo: KBO, split_depth: int = 4) -> ThreeVal:
    """Three-valued check of ``σ ⊨ R``."""
    bindings = sigma.bindings if isinstance(sigma, Substitution) else (sigma or {})
    g = simplify(f.subst(bindings), kbo)
    if g is TOP:
        return ThreeVal.HOLDS
    if g is BOT:
        return ThreeVal.FAILS
    if is_valid(g, kbo, split_depth):
        return ThreeVal.HOLDS
    if falsifying_grounding(g, kbo) is not None:
        return ThreeVal.FAILS
    return ThreeVal.UNKNOWN


def falsifying_grounding(f: Formula, kbo: KBO, max_tries: int = 2000) -> dict | None:
    """Search small groundings for one that makes ``f`` false."""
    if has_quantifier(f):
        return None
    fv = sorted(f.free_vars(), key=lambda v: v.id)
    if not fv:
        return {} if simplify(f, kbo) is BOT else None
    pool = ground_terms(kbo.signature, 1)[:12]
    for combo in itertools.islice(itertools.product(pool, repeat=len(fv)), max_tries):
        theta = dict(zip(fv, combo))
        if simplify(f.subst(theta), kbo) is BOT:
            return theta
    return None


# -- validity by case analysis on ordering atoms -------------------------------


def is_valid(f: Formula, kbo: KBO, depth: int = 4) -> bool:
    """Certify that every grounding satisfies ``f`` (sound, incomplete).

    Splits on a comparison ``u ? v`` into the three ground cases
    ``u ≻ v``, ``v ≻ u`` and ``u = v`` (the order is total on ground terms);
    the last case is handled by instantiating with ``mgu(u, v)``.
    """
    return _valid(simplify(f, kbo), frozenset(), kbo, depth)


def _valid(f: Formula, facts: frozenset, kbo: KBO, depth: int) -> bool:
    if facts:
        f = simplify(_apply_facts(f, facts, kbo), kbo)
    if f is TOP:
        return True
    if f is BOT or depth == 0 or has_quantifier(f):
        return False
    pair = _pick_split(f)
    if pair is None:
        return False
    u, v = pair
    for a, b in ((u, v), (v, u)):
        if b == a or gt_under(b, a, facts, kbo):
            continue  # case is empty
        if not _valid(f, facts | {(a, b)}, kbo, depth - 1):
            return False
    mu = mgu(u, v)
    if mu is None:
        return True
    new_facts = set()
    for a, b in facts:
        a2, b2 = a.subst(mu.bindings), b.subst(mu.bindings)
        if a2 == b2 or kbo.gt(b2, a2):
            return True  # equality case contradicts an assumption
        new_facts.add((a2, b2))
    return _valid(simplify(f.subst(mu.bindings), kbo), frozenset(new_facts), kbo, depth - 1)


def _pick_split(f: Formula):
    best = None
    for a in atoms(f):
        score = (
            0 if isinstance(a, Gt) else 1,
            0 if (a.s.is_var and a.t.is_var) else 1 if (a.s.is_var or a.t.is_var) else 2,
        )
        if best is None or score < best[0]:
            best = (score, (a.s, a.t))
    return None if best is None else best[1]


def _apply_facts(f: Formula, facts: frozenset, kbo: KBO) -> Formula:
    if isinstance(f, Gt):
        if gt_under(f.s, f.t, facts, kbo):
            return TOP
        if f.s == f.t or gt_under(f.t, f.s, facts, kbo):
            return BOT
        return f
    if isinstance(f, Eq):
        if gt_under(f.s, f.t, facts, kbo) or gt_under(f.t, f.s, facts, kbo):
            return BOT
        return f
    if isinstance(f, Not):
        return Not(_apply_facts(f.arg, facts, kbo))
    if isinstance(f, And):
        return And(tuple(_apply_facts(a, facts, kbo) for a in f.args))
    if isinstance(f, Or):
        return Or(tuple(_apply_facts(a, facts, kbo) for a in f.args))
    return f


def gt_under(s: Term, t: Term, facts, kbo: KBO, _depth: int = 3) -> bool:
    """``s ≻ t`` for every grounding that satisfies all ``(a, b)`` in
    ``facts`` read as ``a ≻ b``."""
    if kbo.gt(s, t):
        return True
    if not facts or s == t:
        return False
    if (s, t) in facts:
        return True
    if _depth > 0:
        for a, b in facts:
            if (a == s or kbo.gt(s, a)) and (b == t or gt_under(b, t, facts, kbo, _depth - 1)):
                return True
    if s.is_var:
        return False
    if t.is_var and occurs(t, s):
        return True
    lb = _weight_lower_bound(s, t, facts)
    if lb is None or lb < 0:
        return False
    if lb > 0:
        return True
    if t.is_var:
        return False
    if s.f != t.f:
        return kbo.prec_gt(s.f, t.f)
    for a, b in zip(s.args, t.args):
        if a != b:
            return gt_under(a, b, facts, kbo, _depth)
    return False


def _weight_lower_bound(s: Term, t: Term, facts) -> int | None:
    """Lower bound on ``w(sθ) - w(tθ)`` over groundings allowed by ``facts``.

    Works on the linear form ``const + Σ coef(x)·w(x)``. A negative
    coefficient is cancelled by a variable known to be larger, or by
    replacing ``w(x)`` with ``w(a)`` for a fact ``a ≻ x`` (weights are
    monotone in the order).
    """
    vs, vt = term_vars(s), term_vars(t)
    const = (s.size - sum(vs.values())) - (t.size - sum(vt.values()))
    coef = Counter(vs)
    coef.subtract(vt)
    above = _var_order_closure(facts)
    lower = {}
    bounds = {}  # x -> terms a with a ≻ x
    for a, b in facts:
        if a.is_var and b.ground:
            lower[a] = max(lower.get(a, 1), b.size)
        if b.is_var and not a.is_var:
            bounds.setdefault(b, []).append(a)
    for _ in range(4 * (len(coef) + len(facts)) + 4):
        neg = next((v for v, n in coef.items() if n < 0), None)
        if neg is None:
            break
        partner = next((u for u, n in coef.items() if n > 0 and (u, neg) in above), None)
        if partner is not None:
            coef[partner] -= 1
            coef[neg] += 1
            continue
        for a in bounds.get(neg, ()):
            va = term_vars(a)
            if neg in va:
                continue
            coef[neg] += 1
            const -= a.size - sum(va.values())
            coef.subtract(va)
            break
        else:
            return None
    else:
        return None
    return const + sum(n * lower.get(u, 1) for u, n in coef.items() if n > 0)


def _var_order_closure(facts) -> set:
    rel = {(a, b) for a, b in facts if a.is_var and b.is_var}
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return rel


# -- trivial joinability -------------------------------------------------------


def trivial_joinability(clause: Clause, formula: Formula, kbo: KBO, case_split: bool = False):
    """Return ``TOP`` when every grounding either satisfies ``formula`` or
    makes some positive equation of ``clause`` an identity; else None."""
    if formula is TOP:
        return TOP
    if any(lit.is_trivial_equation for lit in clause):
        return TOP
    if not case_split:
        return None
    eqs = [Eq(lit.lhs, lit.rhs) for lit in clause if lit.positive]
    if not eqs and formula is BOT:
        return None
    if is_valid(Or((formula, *eqs)), kbo):
        return TOP
    return None


# -- ground evaluation ---------------------------------------------------------


class EvaluationBound(Exception):
    """An existential had no witness within the enumeration depth."""


def eval_ground(f: Formula, kbo: KBO, depth: int = 3) -> bool:
    """Truth value of a closed formula; existentials range over ground terms
    of depth <= ``depth``."""
    if f.free_vars():
        raise ValueError(f"formula has free variables: {f!r}")
    return _eval(f, kbo, depth, None)


def _eval(f: Formula, kbo: KBO, depth: int, pool) -> bool:
    if isinstance(f, _Const):
        return f.value
    if isinstance(f, Eq):
        return f.s == f.t
    if isinstance(f, Gt):
        return kbo.gt(f.s, f.t)
    if isinstance(f, Not):
        return not _eval(f.arg, kbo, depth, pool)
    if isinstance(f, And):
        return all(_eval(a, kbo, depth, pool) for a in f.args)
    if isinstance(f, Or):
        return any(_eval(a, kbo, depth, pool) for a in f.args)
    if isinstance(f, Exists):
        if pool is None:
            pool = ground_terms(kbo.signature, depth)
        for combo in itertools.product(pool, repeat=len(f.vars)):
            if _eval(f.body.subst(dict(zip(f.vars, combo))), kbo, depth, pool):
                return True
        raise EvaluationBound(repr(f))
    raise TypeError(f"not a formula: {f!r}")


# -- prefix syntax ------------------------------------------------------------


def parse_formula(text: str, variables: dict | None = None) -> Formula:
    """Parse ``ex y. and(eq(t1,t2), gt(t1,t2), or(...))`` style formulas.

    Also accepts ``ge``, ``not``, ``top`` and ``bot``. Variables follow the
    term reader's convention (u..z or capitalised names).
    """
    r = TermReader(tokenize(text), variables)
    f = _read_formula(r)
    if r.peek() is not None:
        raise SyntaxError(f"trailing input: {r.peek()!r}")
    return f


def _read_formula(r: TermReader) -> Formula:
    head = r.next()
    if head == "top":
        return TOP
    if head == "bot":
        return BOT
    if head == "ex":
        names = [r.next()]
        while r.peek() == ",":
            r.next()
            names.append(r.next())
        r.expect(".")
        saved = {n: r.variables.get(n) for n in names}
        bound = []
        for n in names:
            r.variables[n] = fresh_var()
            bound.append(r.variables[n])
        body = _read_formula(r)
        for n, old in saved.items():
            if old is None:
                del r.variables[n]
            else:
                r.variables[n] = old
        return Exists(tuple(bound), body)
    r.expect("(")
    if head in ("eq", "gt", "ge"):
        s = r.term()
        r.expect(",")
        t = r.term()
        r.expect(")")
        return {"eq": Eq, "gt": Gt, "ge": ge}[head](s, t)
    args = [_read_formula(r)]
    while r.peek() == ",":
        r.next()
        args.append(_read_formula(r))
    r.expect(")")
    if head == "not":
        if len(args) != 1:
            raise SyntaxError("not/1 expects one argument")
        return Not(args[0])
    if head == "and":
        return And(tuple(args))
    if head == "or":
        return Or(tuple(args))
    raise SyntaxError(f"unknown connective {head!r}")


def formula_to_prefix(f: Formula) -> str:
    if f is TOP:
        return "top"
    if f is BOT:
        return "bot"
    if isinstance(f, Eq):
        return f"eq({f.s},{f.t})"
    if isinstance(f, Gt):
        return f"gt({f.s},{f.t})"
    if isinstance(f, Not):
        return f"not({formula_to_prefix(f.arg)})"
    if isinstance(f, And):
        return "and(" + ",".join(map(formula_to_prefix, f.args)) + ")"
    if isinstance(f, Or):
        return "or(" + ",".join(map(formula_to_prefix, f.args)) + ")"
    if isinstance(f, Exists):
        return "ex " + ",".join(map(repr, f.vars)) + ". " + formula_to_prefix(f.body)
    raise TypeError(f)


def literal_gt(lit: Literal, l: Term, strict: bool = True) -> Formula:
    return expand_clause_gt([lit], l, strict)


__all__ = [
    "App",
    "And",
    "BOT",
    "Eq",
    "Exists",
    "Formula",
    "Gt",
    "Not",
    "Or",
    "TOP",
    "ThreeVal",
    "demod_formula",
    "demodulation_step",
    "entails",
    "eval_ground",
    "expand_clause_gt",
    "ge",
    "holds",
    "is_valid",
    "parse_formula",
    "simplify",
    "trivial_joinability",
]
