"""Command line entry point.

Exit codes: 0 decided (Unsatisfiable or Satisfiable), 1 ResourceOut or
GaveUp, 2 usage error, 3 parse error.
"""

from __future__ import annotations

import argparse
import re
import sys

from .oracle import GroundUniverse, entails_clauses, satisfiable, ground_instances
from .ordering import KBO
from .redundancy import BOT, atoms, parse_formula, simplify
from .saturation import OptionError, ProverOptions, Refutation, saturate
from .terms import Signature, iter_subterms_pre
from .tptp import ParseError, format_clause, parse_cnf

EXIT_DECIDED, EXIT_UNDECIDED, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3
COMMANDS = ("prove", "constraint", "oracle")


def _read(path: str):
    if path == "-":
        return parse_cnf(sys.stdin.read(), "-")
    with open(path, encoding="utf-8") as fh:
        return parse_cnf(fh.read(), path)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="parc", description="Saturation prover with redundancy formulas.")
    sub = p.add_subparsers(dest="command", required=True)

    pr = sub.add_parser("prove", help="run the prover on a TPTP CNF file (default command)")
    pr.add_argument("file", help="problem file, or - for standard input")
    pr.add_argument("--crc", action="store_true", help="skip inferences whose formulas simplify to true")
    pr.add_argument("--croc", action="store_true", help="also use formulas with ordering constraints (needs --crc)")
    pr.add_argument("--crs", action="store_true", help="also run case analysis on orderings (needs --croc)")
    pr.add_argument("--time-limit", type=float, default=10.0, metavar="S")
    pr.add_argument("--clause-limit", type=int, default=20000, metavar="N")
    pr.add_argument("--selection", choices=("maximal", "neg"), default="maximal")
    pr.add_argument("--precedence", default="", help="comma separated symbols, greatest first")
    pr.add_argument("--stats", action="store_true")
    pr.add_argument("--proof", action="store_true")

    co = sub.add_parser("constraint", help="redundancy formula utilities")
    co_sub = co.add_subparsers(dest="action", required=True)
    simp = co_sub.add_parser("simplify", help="simplify a formula in prefix syntax")
    simp.add_argument("formula")
    simp.add_argument("--precedence", default="", help="comma separated symbols, greatest first")

    orc = sub.add_parser("oracle", help="bounded brute-force checks")
    orc_sub = orc.add_subparsers(dest="action", required=True)
    ent = orc_sub.add_parser("entails", help="do axioms entail each negated conjecture clause (bounded)?")
    ent.add_argument("file")
    ent.add_argument("--depth", type=int, default=1)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] not in COMMANDS and argv[0] not in ("-h", "--help"):
        argv.insert(0, "prove")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_DECIDED
    if args.command == "prove":
        return _prove(args)
    if args.command == "constraint":
        return _constraint(args)
    return _oracle(args)


def _prove(args) -> int:
    opts = ProverOptions(
        crc=args.crc,
        croc=args.croc,
        crs=args.crs,
        selection=args.selection,
        time_limit=args.time_limit,
        clause_limit=args.clause_limit,
    )
    try:
        opts.validate()
    except OptionError as e:
        print(f"parc: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        problem = _read(args.file)
    except ParseError as e:
        print(f"parc: parse error: {args.file}:{e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"parc: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    precedence = [s for s in args.precedence.split(",") if s]
    sig = problem.signature(precedence)
    result = saturate(
        [c.clause for c in problem.clauses], opts, sig, names=problem.names
    )
    print(f"% SZS status {result.szs} for {args.file}")
    if args.proof and isinstance(result, Refutation):
        print("% proof")
        for line in result.proof:
            names: dict = {}
            clause = format_clause(line.clause, names)
            rest = "" if line.formula is BOT else f" ⟨{line.formula}⟩"
            rest = _rename_vars(rest + " " + line.record.describe(), {repr(v): n for v, n in names.items()})
            print(f"{line.id}. {clause}{rest}")
    if args.stats:
        for key, value in result.stats.as_dict().items():
            print(f"{key}: {value}")
    return EXIT_DECIDED if result.szs in ("Unsatisfiable", "Satisfiable") else EXIT_UNDECIDED


def _rename_vars(text: str, names: dict) -> str:
    """Replace internal variable names (``X17``) by display names."""
    return re.sub(r"\bX\d+\b", lambda m: names.get(m.group(), m.group()), text)


def _constraint(args) -> int:
    variables: dict = {}
    try:
        f = parse_formula(args.formula, variables)
    except SyntaxError as e:
        print(f"parc: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    arities: dict = {}
    for a in atoms(f):
        for t in (a.s, a.t):
            for sub in iter_subterms_pre(t):
                if not sub.is_var:
                    arities.setdefault(sub.f, len(sub.args))
    precedence = [s for s in args.precedence.split(",") if s]
    kbo = KBO(Signature.build(arities, precedence))
    print(_rename_vars(repr(simplify(f, kbo)), {repr(v): name for name, v in variables.items()}))
    return EXIT_DECIDED


def _oracle(args) -> int:
    try:
        problem = _read(args.file)
    except ParseError as e:
        print(f"parc: parse error: {args.file}:{e}", file=sys.stderr)
        return EXIT_PARSE
    prem, goals = problem.split()
    u = GroundUniverse(problem.signature(), args.depth)
    premises = [c.clause for c in prem]
    for g in goals:
        ok = entails_clauses(premises, g.clause, u)
        print(f"{g.name}: {'entailed' if ok else 'not entailed'} (depth {args.depth})")
    insts = [i for c in problem.clauses for i in ground_instances(c.clause, u)]
    print(f"ground instances satisfiable: {'yes' if satisfiable(insts) else 'no'} (depth {args.depth})")
    return EXIT_DECIDED


if __name__ == "__main__":
    sys.exit(main())
