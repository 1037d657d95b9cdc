import re

import pytest

from parc.clauses import Clause, Literal
from parc.ordering import KBO
from parc.terms import Signature, parse_term

# f, h binary; g unary; a, b constants; precedence f > g > h > a > b
PAPER_ARITIES = {"f": 2, "g": 1, "h": 2, "a": 0, "b": 0}


def paper_signature() -> Signature:
    return Signature.build(PAPER_ARITIES)


def lit(text: str, variables: dict) -> Literal:
    m = re.fullmatch(r"\s*(.+?)\s*(!=|=)\s*(.+?)\s*", text)
    s, op, t = m.groups()
    return Literal(parse_term(s, variables), parse_term(t, variables), op == "=")


def clause(text: str, variables: dict | None = None) -> Clause:
    """``"f(x,b) != a | y = b"``; lower-case u..z are variables."""
    variables = {} if variables is None else variables
    if text.strip() in ("", "$false"):
        return Clause([])
    return Clause(lit(part, variables) for part in text.split("|"))


def term(text: str, variables: dict | None = None):
    return parse_term(text, {} if variables is None else variables)


@pytest.fixture
def sig():
    return paper_signature()


@pytest.fixture
def kbo(sig):
    return KBO(sig)


# -- acceptance reporting ---------------------------------------------------------

_REPORT: dict = {}


@pytest.fixture
def report():
    """``report(n, ok, detail)`` records one acceptance line."""

    def record(n: int, ok: bool, detail: str) -> bool:
        line = f"{'PASS' if ok else 'FAIL'} criterion {n:>2}: {detail}"
        _REPORT[n] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _REPORT:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_REPORT):
            terminalreporter.write_line(_REPORT[n])
