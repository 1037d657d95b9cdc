"""A CNF subset of TPTP: reading, printing and the problem container.

Predicate atoms ``p(t1,...,tn)`` become equations ``p(t1,...,tn) = $true``
so that the calculus only ever sees equality literals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .clauses import Clause, Literal, is_variant
from .terms import App, Signature, Term, Var, fresh_var

TRUE = "$true"
ROLES = ("axiom", "hypothesis", "negated_conjecture")


class ParseError(Exception):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"{line}:{col}: {message}" if line else message)
        self.message = message
        self.line = line
        self.col = col


@dataclass
class AnnotatedClause:
    name: str
    role: str
    clause: Clause


@dataclass
class ProblemFile:
    source: str
    clauses: list = field(default_factory=list)
    arities: dict = field(default_factory=dict)  # function symbols, first use order
    predicates: set = field(default_factory=set)

    def __eq__(self, other):
        if not isinstance(other, ProblemFile) or len(self.clauses) != len(other.clauses):
            return False
        return all(
            a.name == b.name and a.role == b.role and is_variant(a.clause, b.clause)
            for a, b in zip(self.clauses, other.clauses)
        )

    def signature(self, precedence: list[str] | None = None) -> Signature:
        arities = {n: k for n, k in self.arities.items() if n != TRUE}
        if TRUE in self.arities:
            arities[TRUE] = 0  # lowest in the default precedence
        return Signature.build(arities, precedence)

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.clauses]

    def split(self):
        """(axioms and hypotheses, negated conjectures)."""
        prem = [c for c in self.clauses if c.role != "negated_conjecture"]
        goals = [c for c in self.clauses if c.role == "negated_conjecture"]
        return prem, goals


_TOKENS = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<block>/\*.*?\*/)
  | (?P<neq>!=)
  | (?P<punct>[(),.|~=\[\]:])
  | (?P<quoted>'(?:[^'\\]|\\.)*')
  | (?P<upper>[A-Z][A-Za-z0-9_]*)
  | (?P<lower>[a-z][A-Za-z0-9_]*)
  | (?P<dollar>\$[a-z][A-Za-z0-9_]*)
  | (?P<number>[0-9]+)
  """,
    re.VERBOSE | re.DOTALL,
)


def _lex(text: str):
    pos, line, line_start = 0, 1, 0
    out = []
    while pos < len(text):
        m = _TOKENS.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment", "block"):
            out.append((kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    out.append(("eof", "", line, pos - line_start + 1))
    return out


class _Parser:
    def __init__(self, text: str, source: str):
        self.toks = _lex(text)
        self.i = 0
        self.problem = ProblemFile(source)
        self.kinds: dict[str, str] = {}  # symbol -> "function" | "predicate"

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], tok[3])

    def expect(self, text):
        tok = self.next()
        if tok[1] != text:
            self.error(f"expected {text!r}, found {tok[1] or 'end of input'!r}", tok)
        return tok

    def parse(self) -> ProblemFile:
        while self.peek()[0] != "eof":
            tok = self.next()
            if tok[1] == "cnf":
                self.annotated()
            elif tok[1] in ("include", "fof", "tff", "thf", "tcf"):
                self.error(f"{tok[1]} is not supported (CNF only)", tok)
            else:
                self.error(f"expected cnf(...), found {tok[1]!r}", tok)
        return self.problem

    def annotated(self):
        self.expect("(")
        name_tok = self.next()
        if name_tok[0] not in ("lower", "quoted", "number", "upper"):
            self.error("expected a clause name", name_tok)
        name = name_tok[1]
        if name in self.problem.names:
            self.error(f"duplicate clause name {name!r}", name_tok)
        self.expect(",")
        role_tok = self.next()
        if role_tok[1] not in ROLES:
            self.error(f"unknown role {role_tok[1]!r}", role_tok)
        self.expect(",")
        variables: dict[str, Var] = {}
        clause = self.disjunction(variables)
        if self.peek()[1] == ",":
            self.skip_annotations()
        self.expect(")")
        self.expect(".")
        self.problem.clauses.append(AnnotatedClause(name, role_tok[1], clause))

    def skip_annotations(self):
        depth = 0
        while True:
            tok = self.peek()
            if tok[0] == "eof":
                self.error("unterminated annotations")
            if tok[1] in "([":
                depth += 1
            elif tok[1] in ")]":
                if depth == 0:
                    return
                depth -= 1
            self.next()

    def disjunction(self, variables) -> Clause:
        if self.peek()[1] == "(":  # terms never start with '('
            self.next()
            c = self.disjunction(variables)
            self.expect(")")
            return c
        lits = [self.literal(variables)]
        while self.peek()[1] == "|":
            self.next()
            lits.append(self.literal(variables))
        return Clause(lit for lit in lits if lit is not None)

    def literal(self, variables) -> Literal | None:
        tok = self.peek()
        if tok[1] == "$false" and self.toks[self.i + 1][1] not in ("=", "!="):
            self.next()
            return None
        if tok[1] == "~":
            self.next()
            if self.peek()[1] == "(":
                self.next()
                lit = self.literal(variables)
                self.expect(")")
            else:
                lit = self.atom(variables)
            return Literal(lit.lhs, lit.rhs, not lit.positive)
        return self.atom(variables)

    def atom(self, variables) -> Literal:
        start = self.peek()
        if start[0] == "dollar" and start[1] == "$true" and self.toks[self.i + 1][1] not in ("=", "!="):
            self.error("propositional constants are not supported", start)
        lhs = self.term(variables, top=True)
        op = self.peek()[1]
        if op in ("=", "!="):
            self.next()
            self._mark(lhs, "function", start)
            rhs = self.term(variables)
            self._mark(rhs, "function", start)
            return Literal(lhs, rhs, op == "=")
        if lhs.is_var:
            self.error("a variable cannot be used as an atom", start)
        self._mark_predicate(lhs, start)
        self.problem.arities.setdefault(TRUE, 0)
        return Literal(lhs, App(TRUE, ()), True)

    def term(self, variables, top=False) -> Term:
        tok = self.next()
        if tok[0] == "upper":
            if tok[1] not in variables:
                variables[tok[1]] = fresh_var()
            return variables[tok[1]]
        if tok[0] not in ("lower", "quoted", "number", "dollar"):
            self.error(f"expected a term, found {tok[1] or 'end of input'!r}", tok)
        args = []
        if self.peek()[1] == "(":
            self.next()
            args.append(self.term(variables))
            while self.peek()[1] == ",":
                self.next()
                args.append(self.term(variables))
            self.expect(")")
        t = App(tok[1], tuple(args))
        seen = self.problem.arities.get(tok[1])
        if seen is not None and seen != len(args):
            self.error(f"symbol {tok[1]} used with arity {len(args)} after arity {seen}", tok)
        if tok[1] == TRUE and args:
            self.error(f"{TRUE} takes no arguments", tok)
        self.problem.arities.setdefault(tok[1], len(args))
        return t

    def _mark(self, t: Term, kind: str, tok):
        if t.is_var:
            return
        prev = self.kinds.setdefault(t.f, kind)
        if prev != kind:
            self.error(f"{t.f} used both as predicate and function", tok)
        for a in t.args:
            self._mark(a, "function", tok)

    def _mark_predicate(self, t: Term, tok):
        prev = self.kinds.setdefault(t.f, "predicate")
        if prev != "predicate":
            self.error(f"{t.f} used both as predicate and function", tok)
        self.problem.predicates.add(t.f)
        for a in t.args:
            self._mark(a, "function", tok)


def parse_cnf(text: str | bytes, source: str = "<input>") -> ProblemFile:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    return _Parser(text, source).parse()


def parse_file(path: str) -> ProblemFile:
    with open(path, encoding="utf-8") as fh:
        return parse_cnf(fh.read(), path)


# -- printing ------------------------------------------------------------------------


def _show(t: Term, names: dict) -> str:
    if t.is_var:
        if t not in names:
            names[t] = f"X{len(names) + 1}"
        return names[t]
    if not t.args:
        return t.f
    return t.f + "(" + ",".join(_show(a, names) for a in t.args) + ")"


def format_literal(lit: Literal, names: dict | None = None) -> str:
    names = {} if names is None else names
    for a, b in ((lit.lhs, lit.rhs), (lit.rhs, lit.lhs)):
        if b == App(TRUE, ()) and not a.is_var and a.f != TRUE:
            return ("" if lit.positive else "~ ") + _show(a, names)
    op = "=" if lit.positive else "!="
    return f"{_show(lit.lhs, names)} {op} {_show(lit.rhs, names)}"


def format_clause(c: Clause, names: dict | None = None) -> str:
    names = {} if names is None else names
    if c.is_empty:
        return "$false"
    return " | ".join(format_literal(lit, names) for lit in c)


def print_cnf(problem: ProblemFile) -> str:
    lines = []
    for ac in problem.clauses:
        lines.append(f"cnf({ac.name}, {ac.role}, ({format_clause(ac.clause)})).")
    return "\n".join(lines) + "\n"
