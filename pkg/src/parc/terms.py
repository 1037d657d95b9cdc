"""Terms, signatures, positions, substitutions and syntactic unification."""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Mapping

_fresh_ids = itertools.count(1)


def fresh_var() -> "Var":
    return Var(next(_fresh_ids))


class Term:
    __slots__ = ()

    is_var = False

    def subst(self, bindings: Mapping["Var", "Term"]) -> "Term":
        raise NotImplementedError


class Var(Term):
    """A first-order variable, identified by a global integer."""

    __slots__ = ("id",)

    is_var = True
    size = 1
    ground = False

    def __init__(self, id: int):
        self.id = id

    def __eq__(self, other):
        return self is other or (type(other) is Var and other.id == self.id)

    def __hash__(self):
        return self.id * 2654435761 & 0xFFFFFFFF

    def __repr__(self):
        return f"X{self.id}"

    def subst(self, bindings):
        return bindings.get(self, self)


class App(Term):
    """Function application; constants are applications with no arguments."""

    __slots__ = ("f", "args", "size", "ground", "_hash", "_vars")

    def __init__(self, f: str, args: tuple = ()):
        self.f = f
        self.args = args
        self.size = 1 + sum(a.size for a in args)
        self.ground = all(a.ground for a in args)
        self._hash = hash((f, args))
        self._vars = None

    def __eq__(self, other):
        if self is other:
            return True
        return (
            type(other) is App
            and self._hash == other._hash
            and self.f == other.f
            and self.args == other.args
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self.args:
            return self.f
        return f"{self.f}({','.join(map(repr, self.args))})"

    def subst(self, bindings):
        if self.ground or not bindings:
            return self
        args = tuple(a.subst(bindings) for a in self.args)
        if all(x is y for x, y in zip(args, self.args)):
            return self
        return App(self.f, args)


def const(name: str) -> App:
    return App(name, ())


def fn(name: str, *args: Term) -> App:
    return App(name, tuple(args))


@dataclass(frozen=True)
class Symbol:
    name: str
    arity: int


@dataclass
class Signature:
    """Function symbols with a strict total precedence (first = greatest)."""

    symbols: list[Symbol] = field(default_factory=list)

    def __post_init__(self):
        names = [s.name for s in self.symbols]
        if len(set(names)) != len(names):
            raise ValueError("duplicate symbol names in signature")
        self._rank = {s.name: len(names) - i for i, s in enumerate(self.symbols)}

    @classmethod
    def from_terms(cls, terms, precedence: list[str] | None = None) -> "Signature":
        arities: dict[str, int] = {}
        for t in terms:
            for sub in iter_subterms_pre(t):
                if not sub.is_var:
                    if arities.setdefault(sub.f, len(sub.args)) != len(sub.args):
                        raise ValueError(f"symbol {sub.f} used with two arities")
        return cls.build(arities, precedence)

    @classmethod
    def build(cls, arities: Mapping[str, int], precedence: list[str] | None = None) -> "Signature":
        """Order ``arities`` (insertion order = descending precedence) with
        ``precedence`` names moved to the front in the given order."""
        order = [n for n in (precedence or []) if n in arities]
        order += [n for n in arities if n not in order]
        syms = [Symbol(n, arities[n]) for n in order]
        if not any(s.arity == 0 for s in syms):
            # term algebra needs a ground term
            syms.append(Symbol("c0", 0))
        return cls(syms)

    def with_symbol(self, sym: Symbol) -> "Signature":
        if sym.name in self._rank:
            return self
        return Signature(self.symbols + [sym])

    def rank(self, name: str) -> int:
        return self._rank[name]

    def arity(self, name: str) -> int:
        for s in self.symbols:
            if s.name == name:
                return s.arity
        raise KeyError(name)

    @property
    def constants(self) -> list[str]:
        return [s.name for s in self.symbols if s.arity == 0]

    def __contains__(self, name):
        return name in self._rank


# -- positions ---------------------------------------------------------------

Position = tuple


class PositionError(ValueError):
    pass


def subterm_at(t: Term, p: Position) -> Term:
    for i in p:
        if t.is_var or not 0 <= i < len(t.args):
            raise PositionError(f"invalid position {p!r}")
        t = t.args[i]
    return t


def replace_at(t: Term, p: Position, s: Term) -> Term:
    if not p:
        return s
    if t.is_var or not 0 <= p[0] < len(t.args):
        raise PositionError(f"invalid position {p!r}")
    i = p[0]
    args = t.args[:i] + (replace_at(t.args[i], p[1:], s),) + t.args[i + 1 :]
    return App(t.f, args)


def iter_subterms_pre(t: Term) -> Iterator[Term]:
    stack = [t]
    while stack:
        u = stack.pop()
        yield u
        if not u.is_var:
            stack.extend(reversed(u.args))


def positions(t: Term, p: Position = ()) -> Iterator[tuple[Position, Term]]:
    """All (position, subterm) pairs in pre-order, root first."""
    yield p, t
    if not t.is_var:
        for i, a in enumerate(t.args):
            yield from positions(a, p + (i,))


def term_vars(t: Term) -> Counter:
    """Multiset of variable occurrences."""
    if t.is_var:
        return Counter({t: 1})
    if t.ground:
        return Counter()
    if t._vars is None:
        c = Counter()
        for a in t.args:
            c.update(term_vars(a))
        t._vars = c
    return t._vars


def occurs(x: Var, t: Term) -> bool:
    if t.is_var:
        return t == x
    if t.ground:
        return False
    return x in term_vars(t)


def depth(t: Term) -> int:
    if t.is_var or not t.args:
        return 0
    return 1 + max(depth(a) for a in t.args)


# -- substitutions -----------------------------------------------------------


class Substitution:
    """Finite map from variables to terms. Identity bindings are dropped."""

    __slots__ = ("bindings",)

    def __init__(self, bindings: Mapping[Var, Term] | None = None):
        self.bindings = {x: t for x, t in (bindings or {}).items() if t != x}

    def __call__(self, e):
        return apply(self, e)

    def __getitem__(self, x: Var) -> Term:
        return self.bindings.get(x, x)

    def __contains__(self, x):
        return x in self.bindings

    def __len__(self):
        return len(self.bindings)

    def __iter__(self):
        return iter(self.bindings)

    def items(self):
        return self.bindings.items()

    def __eq__(self, other):
        return isinstance(other, Substitution) and self.bindings == other.bindings

    def __hash__(self):
        return hash(frozenset(self.bindings.items()))

    def __repr__(self):
        inner = ", ".join(f"{x}↦{t}" for x, t in sorted(self.bindings.items(), key=lambda kv: kv[0].id))
        return "{" + inner + "}"

    def compose(self, other: "Substitution") -> "Substitution":
        """Substitution that applies ``self`` first, then ``other``."""
        out = {x: t.subst(other.bindings) for x, t in self.bindings.items()}
        for x, t in other.bindings.items():
            out.setdefault(x, t)
        return Substitution(out)

    def is_idempotent(self) -> bool:
        dom = set(self.bindings)
        return not any(term_vars(t).keys() & dom for t in self.bindings.values())


def apply(sigma: Substitution | Mapping, e):
    """Apply a substitution to a term, literal, clause or formula."""
    bindings = sigma.bindings if isinstance(sigma, Substitution) else sigma
    return e.subst(bindings)


class UnificationError(Exception):
    pass


def _walk(t: Term, b: dict) -> Term:
    while t.is_var and t in b:
        t = b[t]
    return t


def _occurs_walk(x: Var, t: Term, b: dict) -> bool:
    stack = [t]
    while stack:
        u = _walk(stack.pop(), b)
        if u.is_var:
            if u == x:
                return True
        elif not u.ground:
            stack.extend(u.args)
    return False


def unify_into(pairs, b: dict) -> dict | None:
    """Extend triangular bindings ``b`` to unify all pairs, or return None."""
    stack = list(pairs)
    while stack:
        s, t = stack.pop()
        s, t = _walk(s, b), _walk(t, b)
        if s is t or s == t:
            continue
        if s.is_var:
            if _occurs_walk(s, t, b):
                return None
            b[s] = t
        elif t.is_var:
            if _occurs_walk(t, s, b):
                return None
            b[t] = s
        else:
            if s.f != t.f or len(s.args) != len(t.args):
                return None
            stack.extend(zip(s.args, t.args))
    return b


def _resolve(t: Term, b: dict) -> Term:
    t = _walk(t, b)
    if t.is_var or t.ground:
        return t
    args = tuple(_resolve(a, b) for a in t.args)
    if all(x is y for x, y in zip(args, t.args)):
        return t
    return App(t.f, args)


def solved(b: dict) -> Substitution:
    return Substitution({x: _resolve(x, b) for x in b})


def mgu(s: Term, t: Term) -> Substitution | None:
    """Most general unifier of ``s`` and ``t`` (idempotent), or None."""
    b = unify_into([(s, t)], {})
    if b is None:
        return None
    return solved(b)


def mgu_many(pairs) -> Substitution | None:
    b = unify_into(pairs, {})
    return None if b is None else solved(b)


def match(pattern: Term, target: Term, b: dict | None = None) -> dict | None:
    """One-way matching: bindings ``b`` with pattern·b == target, or None."""
    b = {} if b is None else b
    stack = [(pattern, target)]
    while stack:
        p, t = stack.pop()
        if p.is_var:
            bound = b.get(p)
            if bound is None:
                b[p] = t
            elif bound != t:
                return None
        elif t.is_var or p.f != t.f or len(p.args) != len(t.args):
            return None
        elif p.ground:
            if p != t:
                return None
        else:
            stack.extend(zip(p.args, t.args))
    return b


def renaming(vars_) -> Substitution:
    return Substitution({x: fresh_var() for x in vars_})


# -- small functional-notation parser (tests, debug CLI) ---------------------

_TOKEN = re.compile(r"\s*([A-Za-z_$][A-Za-z0-9_$']*|[(),.])")
_VAR_NAME = re.compile(r"^([A-Z_][A-Za-z0-9_]*|[u-z][0-9']*)$")


def is_var_name(name: str) -> bool:
    """Paper-style names: u..z (optionally suffixed) or Capitalised."""
    return bool(_VAR_NAME.match(name))


def tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise SyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class TermReader:
    """Recursive-descent reader over a token list."""

    def __init__(self, tokens: list[str], variables: dict[str, Var] | None = None):
        self.toks = tokens
        self.i = 0
        self.variables = {} if variables is None else variables

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise SyntaxError("unexpected end of input")
        self.i += 1
        return tok

    def expect(self, tok):
        got = self.next()
        if got != tok:
            raise SyntaxError(f"expected {tok!r}, got {got!r}")

    def term(self) -> Term:
        name = self.next()
        if self.peek() == "(":
            self.next()
            args = [self.term()]
            while self.peek() == ",":
                self.next()
                args.append(self.term())
            self.expect(")")
            return App(name, tuple(args))
        if is_var_name(name):
            if name not in self.variables:
                self.variables[name] = fresh_var()
            return self.variables[name]
        return App(name, ())


def parse_term(text: str, variables: dict[str, Var] | None = None) -> Term:
    r = TermReader(tokenize(text), variables)
    t = r.term()
    if r.peek() is not None:
        raise SyntaxError(f"trailing input: {r.peek()!r}")
    return t


def ground_terms(signature: Signature, max_depth: int) -> list[App]:
    """Every ground term of depth <= ``max_depth``, shallow terms first."""
    by_depth: list[list[App]] = [[App(s.name, ()) for s in signature.symbols if s.arity == 0]]
    every = list(by_depth[0])
    for d in range(1, max_depth + 1):
        layer = []
        for sym in signature.symbols:
            if sym.arity == 0:
                continue
            for args in itertools.product(every, repeat=sym.arity):
                if any(depth(a) == d - 1 for a in args):
                    layer.append(App(sym.name, args))
        by_depth.append(layer)
        every = every + layer
    return every
