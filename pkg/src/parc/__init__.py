"""Saturation prover for first-order logic with equality whose clauses carry
redundancy formulas describing which of their ground instances are redundant."""

from .calculus import PartialClause, all_inferences, equality_factoring, equality_resolution, superposition
from .clauses import Clause, Literal
from .ordering import KBO, Cmp, cmp_clauses, cmp_literals, cmp_terms
from .redundancy import BOT, TOP, ThreeVal, entails, simplify
from .saturation import ProverOptions, Refutation, ResourceOut, Saturated, saturate
from .terms import App, Signature, Substitution, Var, mgu
from .tptp import ParseError, parse_cnf

__all__ = [
    "App",
    "BOT",
    "Clause",
    "Cmp",
    "KBO",
    "Literal",
    "ParseError",
    "PartialClause",
    "ProverOptions",
    "Refutation",
    "ResourceOut",
    "Saturated",
    "Signature",
    "Substitution",
    "TOP",
    "ThreeVal",
    "Var",
    "all_inferences",
    "cmp_clauses",
    "cmp_literals",
    "cmp_terms",
    "entails",
    "equality_factoring",
    "equality_resolution",
    "mgu",
    "parse_cnf",
    "saturate",
    "simplify",
    "superposition",
]
