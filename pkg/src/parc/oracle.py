"""Brute-force reference machinery for tests and ad-hoc checks.

Everything here works on a bounded set of ground terms and is written
from the definitions, independently of the prover's fast paths: its own
ground KBO, its own multiset comparison, congruence closure for ground
equational consequence and a small case-splitting clause entailment check.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter
from dataclasses import dataclass, field

from .clauses import Clause, Literal
from .redundancy import And, Eq, Exists, Formula, Gt, Not, Or, _Const, atoms, has_quantifier
from .terms import App, Signature, Term, ground_terms, iter_subterms_pre, term_vars


# -- ground orders by definition ---------------------------------------------------


@functools.lru_cache(maxsize=1 << 16)
def weight(t: Term) -> int:
    return 1 if t.is_var or not t.args else 1 + sum(weight(a) for a in t.args)


def kbo_gt_ground(s: Term, t: Term, signature: Signature) -> bool:
    """KBO on ground terms, unit weights, straight from the definition."""
    ws, wt = weight(s), weight(t)
    if ws != wt:
        return ws > wt
    if s.f != t.f:
        return signature.rank(s.f) > signature.rank(t.f)
    for a, b in zip(s.args, t.args):
        if a != b:
            return kbo_gt_ground(a, b, signature)
    return False


def multiset_gt(xs, ys, gt) -> bool:
    """``M > N`` iff ``M ≠ N`` and every element with surplus in ``N`` is
    beaten by some element with surplus in ``M``."""
    m, n = Counter(xs), Counter(ys)
    if m == n:
        return False
    for y in set(n):
        if n[y] > m[y] and not any(m[x] > n[x] and gt(x, y) for x in m):
            return False
    return True


def _lit_bag(lit: Literal) -> list:
    return [lit.lhs, lit.rhs] * (1 if lit.positive else 2)


def literal_gt_ground(l1: Literal, l2: Literal, signature: Signature) -> bool:
    return multiset_gt(_lit_bag(l1), _lit_bag(l2), lambda a, b: kbo_gt_ground(a, b, signature))


def clause_gt_ground(c1: Clause, c2: Clause, signature: Signature) -> bool:
    key = lambda lit: (tuple(sorted(map(repr, lit.sides))), lit.positive)
    a = [key(l) for l in c1]
    b = [key(l) for l in c2]
    lits = {key(l): l for l in list(c1) + list(c2)}
    return multiset_gt(a, b, lambda x, y: literal_gt_ground(lits[x], lits[y], signature))


# -- universes and instances ----------------------------------------------------------


@dataclass
class GroundUniverse:
    signature: Signature
    depth: int
    terms: list = field(init=False)

    def __post_init__(self):
        self.terms = ground_terms(self.signature, self.depth)

    def groundings(self, variables, max_size: int | None = None):
        vs = sorted(variables, key=lambda v: v.id)
        pool = self.terms if max_size is None else [t for t in self.terms if t.size <= max_size]
        for combo in itertools.product(pool, repeat=len(vs)):
            yield dict(zip(vs, combo))


def _free_vars(e) -> set:
    if isinstance(e, Clause):
        return e.vars()
    if isinstance(e, Literal):
        return set(e.vars())
    if isinstance(e, Formula):
        return e.free_vars()
    return set(term_vars(e))


def ground_instances(e, u: GroundUniverse, max_size: int | None = None) -> list:
    return [e.subst(theta) for theta in u.groundings(_free_vars(e), max_size)]


# -- congruence closure -------------------------------------------------------------


class _CC:
    """Incremental congruence closure: union-find plus a signature table."""

    def __init__(self, terms=()):
        self.parent: dict = {}
        self.uses: dict = {}  # root -> terms with an argument in that class
        self.table: dict = {}  # (f, argument roots) -> term
        for t in terms:
            self.add(t)

    def copy(self) -> "_CC":
        other = _CC.__new__(_CC)
        other.parent = dict(self.parent)
        other.uses = {k: list(v) for k, v in self.uses.items()}
        other.table = dict(self.table)
        return other

    def find(self, t):
        root = t
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[t] != root:
            self.parent[t], t = root, self.parent[t]
        return root

    def add(self, t):
        if t in self.parent:
            return
        for a in t.args:
            self.add(a)
        self.parent[t] = t
        self.uses[t] = []
        if t.args:
            for a in t.args:
                self.uses[self.find(a)].append(t)
            key = (t.f, tuple(self.find(a) for a in t.args))
            other = self.table.setdefault(key, t)
            if other is not t:
                self.merge(t, other)

    def merge(self, s, t):
        self.add(s)
        self.add(t)
        pending = [(s, t)]
        while pending:
            a, b = pending.pop()
            ra, rb = self.find(a), self.find(b)
            if ra == rb:
                continue
            if len(self.uses[ra]) > len(self.uses[rb]):
                ra, rb = rb, ra
            self.parent[ra] = rb
            moved = self.uses.pop(ra)
            for u in moved:
                key = (u.f, tuple(self.find(x) for x in u.args))
                other = self.table.setdefault(key, u)
                if other is not u:
                    pending.append((u, other))
            self.uses[rb].extend(moved)

    def close(self, eqs):
        for s, t in eqs:
            self.merge(s, t)
        return self


def cc_entails(eqs, goal) -> bool:
    """``eqs ⊨ goal`` for ground equations given as pairs or literals."""
    pairs = [(e.lhs, e.rhs) if isinstance(e, Literal) else tuple(e) for e in eqs]
    s, t = (goal.lhs, goal.rhs) if isinstance(goal, Literal) else goal
    cc = _CC([s, t]).close(pairs)
    return cc.find(s) == cc.find(t)


def satisfiable(clauses) -> bool:
    """Ground clause set satisfiability with equality (case splitting + CC)."""
    clauses = [list(c) for c in clauses]
    if any(not c for c in clauses):
        return False
    return _sat(clauses, _CC(), [])


def _assert(lit: Literal, cc: _CC, diseqs: list) -> None:
    if lit.positive:
        cc.merge(lit.lhs, lit.rhs)
    else:
        cc.add(lit.lhs)
        cc.add(lit.rhs)
        diseqs.append((lit.lhs, lit.rhs))


def _sat(clauses, cc: _CC, diseqs: list) -> bool:
    """Unit propagation to a fixpoint, then a split on the shortest open
    clause. The call owns ``cc`` and ``diseqs``."""
    for c in clauses:
        for lit in c:
            cc.add(lit.lhs)
            cc.add(lit.rhs)
    while True:
        if any(cc.find(a) == cc.find(b) for a, b in diseqs):
            return False
        dis = {frozenset((cc.find(a), cc.find(b))) for a, b in diseqs}
        pending, units = [], []
        for c in clauses:
            open_lits = []
            for lit in c:
                a, b = cc.find(lit.lhs), cc.find(lit.rhs)
                if lit.positive:
                    if a == b:
                        break
                    if frozenset((a, b)) in dis:
                        continue
                elif frozenset((a, b)) in dis:
                    break
                elif a == b:
                    continue
                open_lits.append(lit)
            else:
                if not open_lits:
                    return False
                (units if len(open_lits) == 1 else pending).append(open_lits)
        if not units:
            break
        for (lit,) in units:
            _assert(lit, cc, diseqs)
        clauses = pending
    if not pending:
        return True
    pending.sort(key=len)
    first, rest = pending[0], pending[1:]
    return any(_sat(rest, *_branch(lit, cc, diseqs)) for lit in first)


def _branch(lit: Literal, cc: _CC, diseqs: list):
    cc, diseqs = cc.copy(), list(diseqs)
    _assert(lit, cc, diseqs)
    return cc, diseqs


class EntailmentChecker:
    """``premises ⊨ goal`` for many ground goals against one ground clause
    set; unit premises are asserted once up front."""

    def __init__(self, premises):
        self.cc = _CC()
        self.diseqs: list = []
        self.rest: list = []
        self.trivial = False  # an empty premise
        for c in premises:
            c = list(c)
            if not c:
                self.trivial = True
            elif len(c) == 1:
                _assert(c[0], self.cc, self.diseqs)
            else:
                self.rest.append(c)

    def entails(self, goal: Clause) -> bool:
        if self.trivial:
            return True
        negated = [[Literal(l.lhs, l.rhs, not l.positive)] for l in goal]
        return not _sat(self.rest + negated, self.cc.copy(), list(self.diseqs))


def clause_entails(premises, goal: Clause) -> bool:
    """``premises ⊨ goal`` for ground clauses: premises plus the negated goal
    literals must be unsatisfiable."""
    return EntailmentChecker(premises).entails(goal)


def _max_size(c: Clause) -> int:
    return max((t.size for t in c.terms()), default=0)


def is_redundant(d: Clause, s, u: GroundUniverse) -> bool:
    """``d`` follows from ground instances (over ``u``) of ``s`` that are
    strictly smaller than ``d``.

    Entailment is monotone in the premise set, so instances built from the
    subterms of ``d`` are tried first; the full universe is only enumerated
    when they do not suffice.
    """
    bound = _max_size(d)
    local = {t for side in d.terms() for t in iter_subterms_pre(side)}
    pools = [sorted(local, key=repr), [t for t in u.terms if t.size <= bound]]
    for pool in pools:
        if clause_entails(_smaller_instances(d, s, pool, bound, u.signature), d):
            return True
    return False


def _smaller_instances(d: Clause, s, pool, bound: int, sig: Signature) -> list:
    out = []
    for c in s:
        vs = sorted(c.vars(), key=lambda v: v.id)
        for combo in itertools.product(pool, repeat=len(vs)):
            inst = c.subst(dict(zip(vs, combo)))
            if _max_size(inst) <= bound and clause_gt_ground(d, inst, sig):
                out.append(inst)
    return out


# -- formulas over the bounded universe ------------------------------------------------


def eval_bounded(f: Formula, u: GroundUniverse, env: dict | None = None) -> bool:
    """Truth of ``f`` under the grounding ``env`` of its free variables.

    ``∃`` ranges over ``u`` plus the ground subterms of the instantiated body
    and one term above each of those, so equations and comparisons against
    terms deeper than the universe still find their witnesses.
    """
    env = {} if env is None else env
    if isinstance(f, _Const):
        return f.value
    if isinstance(f, Eq):
        return f.s.subst(env) == f.t.subst(env)
    if isinstance(f, Gt):
        return kbo_gt_ground(f.s.subst(env), f.t.subst(env), u.signature)
    if isinstance(f, Not):
        return not eval_bounded(f.arg, u, env)
    if isinstance(f, And):
        return all(eval_bounded(a, u, env) for a in _cheap_first(f.args))
    if isinstance(f, Or):
        return any(eval_bounded(a, u, env) for a in _cheap_first(f.args))
    if isinstance(f, Exists):
        free = f.body.free_vars()
        vs = [v for v in f.vars if v in free]  # unused binders range over nothing
        pool = _witnesses(f.body, env, u)
        return any(
            eval_bounded(f.body, u, {**env, **dict(zip(vs, combo))})
            for combo in itertools.product(pool, repeat=len(vs))
        )
    raise TypeError(f)


def _witnesses(body: Formula, env: dict, u: GroundUniverse) -> list:
    """Candidates for an ``∃``: terms taken from the body first (the usual
    witnesses), then the universe."""
    found: dict = {}
    big = next((sym for sym in u.signature.symbols if sym.arity), None)
    for a in atoms(body):
        for side in (a.s.subst(env), a.t.subst(env)):
            for t in iter_subterms_pre(side):
                if t.ground and t not in found:
                    found[t] = None
                    if big is not None:
                        found.setdefault(App(big.name, (t,) * big.arity))
    found.update(dict.fromkeys(u.terms))
    return list(found)


def _cheap_first(args):
    return sorted(args, key=has_quantifier)


def formula_holds_all(sigma, f: Formula, u: GroundUniverse) -> bool:
    """Every grounding over ``u`` of ``fσ`` is true."""
    return falsifying(sigma, f, u) is None


def falsifying(sigma, f: Formula, u: GroundUniverse):
    """A grounding over ``u`` making ``fσ`` false, or None."""
    bindings = getattr(sigma, "bindings", sigma) or {}
    g = f.subst(bindings)
    for theta in u.groundings(g.free_vars()):
        if not eval_bounded(g, u, theta):
            return theta
    return None


def unifiers_brute(s: Term, t: Term, u: GroundUniverse):
    """Ground unifiers of ``s`` and ``t`` over ``u``."""
    vs = set(term_vars(s)) | set(term_vars(t))
    return [theta for theta in u.groundings(vs) if s.subst(theta) == t.subst(theta)]


def entails_clauses(premises, goal: Clause, u: GroundUniverse) -> bool:
    """Every ground instance of ``goal`` over ``u`` follows from the
    ground instances of ``premises`` over ``u``."""
    checker = EntailmentChecker(g for c in premises for g in ground_instances(c, u))
    return all(checker.entails(g) for g in ground_instances(goal, u))


__all__ = [
    "EntailmentChecker",
    "GroundUniverse",
    "cc_entails",
    "clause_entails",
    "clause_gt_ground",
    "entails_clauses",
    "eval_bounded",
    "falsifying",
    "formula_holds_all",
    "ground_instances",
    "is_redundant",
    "kbo_gt_ground",
    "literal_gt_ground",
    "multiset_gt",
    "satisfiable",
    "unifiers_brute",
]
