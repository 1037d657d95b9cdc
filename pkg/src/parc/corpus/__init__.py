"""Bundled CNF problems: ``unsat/`` (all refutable) and ``sat/`` (small,
saturate quickly)."""

from __future__ import annotations

from importlib import resources

from ..tptp import ProblemFile, parse_cnf

GROUPS = ("unsat", "sat")


def list_problems(group: str) -> list[str]:
    if group not in GROUPS:
        raise ValueError(f"unknown corpus group {group!r}")
    root = resources.files(__name__).joinpath(group)
    return sorted(p.name[:-2] for p in root.iterdir() if p.name.endswith(".p"))


def load(group: str, name: str) -> ProblemFile:
    path = resources.files(__name__).joinpath(group, name + ".p")
    return parse_cnf(path.read_text(encoding="utf-8"), f"{group}/{name}.p")
