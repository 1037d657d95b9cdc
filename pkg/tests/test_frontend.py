import pytest
from hypothesis import given, settings, strategies as st

from parc.cli import EXIT_DECIDED, EXIT_PARSE, EXIT_UNDECIDED, EXIT_USAGE, main
from parc.clauses import is_variant
from parc.corpus import GROUPS, list_problems, load
from parc.tptp import TRUE, ParseError, parse_cnf, print_cnf

from conftest import clause

EXAMPLE1 = """\
% the first worked example
cnf(c1, axiom, f(a,b) = b).
cnf(c2, axiom, f(a,Y) = g(Y)).
cnf(c3, negated_conjecture, g(f(X,b)) != a).
"""


def test_parse_unit_clauses():
    p = parse_cnf("cnf(c1, axiom, f(a,b) = b).\ncnf(c3, axiom, g(f(X,b)) != a).")
    assert p.clauses[0].clause == clause("f(a,b) = b")
    assert is_variant(p.clauses[1].clause, clause("g(f(x,b)) != a"))
    assert p.arities == {"f": 2, "a": 0, "b": 0, "g": 1}


def test_parse_predicates_become_equations():
    p = parse_cnf("cnf(c, axiom, ~p(X) | q(a)).")
    lits = list(p.clauses[0].clause)
    assert {lit.positive for lit in lits} == {True, False}
    assert all(TRUE in (lit.lhs.f if not lit.lhs.is_var else "", lit.rhs.f) for lit in lits)
    assert p.predicates == {"p", "q"}
    assert p.signature().rank(TRUE) < p.signature().rank("a")


@pytest.mark.parametrize(
    "text",
    [
        "cnf(c1, axiom, f(a,b) = b).\ncnf(bad, axiom, f(a) = b).",
        "cnf(c1, axiom, a = b)",
        "fof(c1, axiom, a = b).",
        "cnf(c1, lemma, a = b).",
        "cnf(c1, axiom, a = b).\ncnf(c1, axiom, b = a).",
        "cnf(c1, axiom, p(a) | p = a).",
        "cnf(c1, axiom, X).",
        "cnf(c1, axiom, a = #).",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_cnf(text)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        parse_cnf("cnf(c1, axiom, a = b).\ncnf(c2, axiom, f(a) = b | f(a,a) = b).")
    assert info.value.line == 2


@pytest.mark.parametrize("group", GROUPS)
def test_corpus_round_trips(group):
    for name in list_problems(group):
        p = load(group, name)
        assert parse_cnf(print_cnf(p)) == p


_NAMES = st.sampled_from(["a", "b", "g(a)", "f(X,a)", "g(Y)", "f(X,Y)", "p(X)"])


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.tuples(_NAMES, _NAMES, st.booleans()), min_size=1, max_size=3), min_size=1, max_size=4))
def test_print_parse_round_trip(clauses):
    lines = []
    for k, lits in enumerate(clauses):
        body = " | ".join(f"{s} {'=' if pos else '!='} {t}" for s, t, pos in lits if "p(" not in s + t)
        body = body or "q(a)"
        lines.append(f"cnf(c{k}, axiom, {body}).")
    p = parse_cnf("\n".join(lines))
    assert parse_cnf(print_cnf(p)) == p


# -- command line ---------------------------------------------------------------------


@pytest.fixture
def problem_file(tmp_path):
    def write(text, name="p.p"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_cli_unsatisfiable_toy(problem_file, capsys):
    path = problem_file("cnf(a1, axiom, a = b).\ncnf(a2, negated_conjecture, a != b).\n")
    assert main([path]) == EXIT_DECIDED
    out = capsys.readouterr().out.splitlines()
    assert out == [f"% SZS status Unsatisfiable for {path}"]


def test_cli_example1_stats(problem_file, capsys):
    path = problem_file(EXAMPLE1)
    assert main(["prove", path, "--crc", "--stats"]) == EXIT_DECIDED
    out = capsys.readouterr().out.splitlines()
    stats = dict(line.split(": ", 1) for line in out[1:])
    assert int(stats["discarded_crc"]) >= 1
    assert {"performed_sup", "discarded_croc", "discarded_crs"} <= set(stats)


def test_cli_proof_output(problem_file, capsys):
    path = problem_file("cnf(a1, axiom, a = b).\ncnf(a2, negated_conjecture, g(a) != g(b)).\n")
    assert main([path, "--proof"]) == EXIT_DECIDED
    out = capsys.readouterr().out
    assert "% proof" in out and "$false" in out.splitlines()[-1]


def test_cli_satisfiable(problem_file, capsys):
    assert main([problem_file("cnf(a1, axiom, a = a).\n")]) == EXIT_DECIDED
    assert "Satisfiable" in capsys.readouterr().out


def test_cli_resource_out(problem_file, capsys):
    path = problem_file("cnf(a1, axiom, f(X,f(Y,Z)) = f(f(X,Y),Z)).\ncnf(a2, axiom, f(g(X),X) = a).\n")
    assert main([path, "--clause-limit", "15"]) == EXIT_UNDECIDED
    assert "ResourceOut" in capsys.readouterr().out


def test_cli_usage_errors(problem_file, capsys):
    path = problem_file("cnf(a1, axiom, a = b).\n")
    assert main([path, "--croc"]) == EXIT_USAGE
    assert main([path, "--crc", "--crs"]) == EXIT_USAGE
    assert main([path, "--selection", "bogus"]) == EXIT_USAGE
    assert main([str(path) + ".missing"]) == EXIT_USAGE


def test_cli_parse_error(problem_file, capsys):
    assert main([problem_file("cnf(a1, axiom, a = ).\n")]) == EXIT_PARSE
    assert "parse error" in capsys.readouterr().err


def test_cli_constraint_simplify(capsys):
    assert main(["constraint", "simplify", "ex y. and(eq(f(a,y),f(x,b)), gt(f(a,y),g(y)))"]) == EXIT_DECIDED
    assert capsys.readouterr().out.strip() == "x = a"


def test_cli_oracle(problem_file, capsys):
    path = problem_file(EXAMPLE1)
    assert main(["oracle", "entails", path]) == EXIT_DECIDED
    out = capsys.readouterr().out
    assert out.splitlines() == ["c3: not entailed (depth 1)", "ground instances satisfiable: yes (depth 1)"]
