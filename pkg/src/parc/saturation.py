"""Given-clause saturation over partial clauses."""

from __future__ import annotations

import heapq
import logging
import time
from collections import Counter
from dataclasses import dataclass, field

from .calculus import (
    Conclusion,
    InferenceRecord,
    PartialClause,
    Skip,
    all_inferences,
    replay,
)
from .clauses import Clause, is_variant, variant_key
from .ordering import KBO
from .redundancy import (
    BOT,
    TOP,
    Formula,
    Or,
    demod_formula,
    has_ordering_atoms,
    has_quantifier,
    simplify,
    trivial_joinability,
)
from .terms import Signature

log = logging.getLogger("parc.saturation")

# formulas stop growing past this many disjuncts; each extra one makes every
# later check on the clause slower
MAX_DISJUNCTS = 12


class OptionError(ValueError):
    pass


@dataclass
class ProverOptions:
    crc: bool = False
    croc: bool = False
    crs: bool = False
    selection: str = "maximal"
    time_limit: float = 10.0
    clause_limit: int = 20000
    age_weight: tuple = (1, 4)
    retire: bool = True  # turn off to keep ⊤ clauses active

    def validate(self) -> "ProverOptions":
        if self.croc and not self.crc:
            raise OptionError("--croc requires --crc")
        if self.crs and not self.croc:
            raise OptionError("--crs requires --croc")
        if self.selection not in ("maximal", "neg"):
            raise OptionError(f"unknown selection mode {self.selection!r}")
        a, w = self.age_weight
        if a < 0 or w < 0 or a + w == 0:
            raise OptionError("age-weight ratio needs a positive component")
        return self

    @classmethod
    def level(cls, name: str, **kw) -> "ProverOptions":
        """Options for the named configuration: none, crc, croc or crs."""
        flags = {"none": (0, 0, 0), "crc": (1, 0, 0), "croc": (1, 1, 0), "crs": (1, 1, 1)}[name]
        return cls(crc=bool(flags[0]), croc=bool(flags[1]), crs=bool(flags[2]), **kw)


@dataclass
class Statistics:
    performed: Counter = field(default_factory=Counter)
    skipped: Counter = field(default_factory=Counter)  # (rule, condition) -> n
    discarded: Counter = field(default_factory=Counter)  # flag -> n
    sup_by_orientation: Counter = field(default_factory=Counter)  # (clause id, "l"|"s", side) -> n
    flagged: list = field(default_factory=list)  # skips certified by a redundancy formula
    redundancy_steps: int = 0
    retired: int = 0
    duplicates: int = 0
    given: int = 0
    generated: int = 0

    def as_dict(self) -> dict:
        out = {
            "given": self.given,
            "generated": self.generated,
            "performed_sup": self.performed["Sup"],
            "performed_eqres": self.performed["EqRes"],
            "performed_eqfac": self.performed["EqFac"],
            "discarded_crc": self.discarded["crc"],
            "discarded_croc": self.discarded["croc"],
            "discarded_crs": self.discarded["crs"],
            "redundancy_steps": self.redundancy_steps,
            "retired": self.retired,
            "duplicates": self.duplicates,
        }
        for (rule, cond), n in sorted(self.skipped.items()):
            out[f"skipped_{rule.lower()}_{cond}"] = n
        return out


@dataclass(frozen=True)
class RedundancyStep:
    clause_id: int
    added: Formula
    result: Formula
    justification: str
    snapshot: int  # clauses with smaller ids make up the set the step refers to
    support: frozenset = frozenset()  # ids the clause's redundancy relies on so far


@dataclass
class ProverState:
    kbo: KBO
    opts: ProverOptions
    clauses: dict = field(default_factory=dict)  # id -> PartialClause
    active: list = field(default_factory=list)
    passive_age: list = field(default_factory=list)
    passive_weight: list = field(default_factory=list)
    in_passive: set = field(default_factory=set)
    seen: dict = field(default_factory=dict)  # variant key -> id
    stats: Statistics = field(default_factory=Statistics)
    steps: list = field(default_factory=list)
    formula_history: dict = field(default_factory=dict)  # id -> [R1, R1 ∨ R2, ...]
    support: dict = field(default_factory=dict)  # id -> ids used by its redundancy steps
    next_id: int = 1
    picks: int = 0
    empty: PartialClause | None = None

    @property
    def retired(self) -> list[PartialClause]:
        return [pc for pc in self.clauses.values() if pc.retired]

    @property
    def passive(self) -> list[PartialClause]:
        return sorted((self.clauses[i] for i in self.in_passive), key=lambda pc: pc.id)

    def live(self) -> list[PartialClause]:
        return [pc for pc in self.clauses.values() if not pc.retired]

    def find(self, clause: Clause) -> PartialClause | None:
        for pc in self.clauses.values():
            if is_variant(pc.clause, clause):
                return pc
        return None


class SaturationResult:
    status = ""

    def __init__(self, state: ProverState):
        self.state = state

    @property
    def stats(self) -> Statistics:
        return self.state.stats

    @property
    def szs(self) -> str:
        raise NotImplementedError


class Refutation(SaturationResult):
    status = "refutation"

    def __init__(self, state, proof):
        super().__init__(state)
        self.proof = proof

    @property
    def szs(self):
        return "Unsatisfiable"


class Saturated(SaturationResult):
    status = "saturated"

    @property
    def szs(self):
        # a saturated set is only known satisfiable for the complete selection
        return "Satisfiable" if self.state.opts.selection == "maximal" else "GaveUp"


class ResourceOut(SaturationResult):
    status = "resource_out"

    def __init__(self, state, reason: str):
        super().__init__(state)
        self.reason = reason

    @property
    def szs(self):
        return "ResourceOut"


# -- state changes -------------------------------------------------------------


def add_clause(state: ProverState, clause: Clause, record: InferenceRecord) -> PartialClause | None:
    """Insert ``clause⟨⊥⟩`` into passive; None when it duplicates a known clause."""
    key = variant_key(clause)
    if key in state.seen:
        state.stats.duplicates += 1
        return None
    pc = PartialClause(state.next_id, clause, BOT, record)
    state.next_id += 1
    state.clauses[pc.id] = pc
    state.seen[key] = pc.id
    state.formula_history[pc.id] = [BOT]
    if clause.is_empty:
        state.empty = pc
        return pc
    if state.opts.crc and any(lit.is_trivial_equation for lit in clause):
        apply_redundancy_step(state, pc, TOP, "trivial joinability")
        if pc.retired:
            return pc
    state.in_passive.add(pc.id)
    heapq.heappush(state.passive_age, (pc.id, pc.id))
    heapq.heappush(state.passive_weight, (pc.weight, pc.id))
    return pc


def apply_redundancy_step(
    state: ProverState, pc: PartialClause, added: Formula, justification: str, support=()
) -> bool:
    """``C⟨R1⟩ → C⟨R1 ∨ R2⟩``; retires the clause at ⊤. Returns whether
    the formula changed."""
    new = simplify(Or((pc.formula, added)), state.kbo)
    if new == pc.formula:
        return False
    pc.formula = new
    state.stats.redundancy_steps += 1
    used = state.support.get(pc.id, frozenset()) | frozenset(support)
    state.support[pc.id] = used
    state.steps.append(RedundancyStep(pc.id, added, new, justification, state.next_id, used))
    state.formula_history[pc.id].append(new)
    log.debug("redundancy step on %d: %s (%s)", pc.id, new, justification)
    if new is not TOP and state.opts.crs and has_ordering_atoms(new):
        if trivial_joinability(pc.clause, new, state.kbo, case_split=True) is TOP:
            return apply_redundancy_step(state, pc, TOP, "trivial joinability") or True
    if new is TOP:
        retire(state, pc)
    return True


def retire(state: ProverState, pc: PartialClause) -> None:
    if pc.retired or not state.opts.retire:
        return
    pc.retired = True
    state.stats.retired += 1
    state.in_passive.discard(pc.id)
    if pc in state.active:
        state.active.remove(pc)


def attach_after_inference(state: ProverState, concl: Conclusion, concl_id: int) -> None:
    """Redundancy formula for the main premise of a performed superposition
    whose left premise is a positive unit equation. ``concl_id`` names the
    stored conclusion (or the earlier clause it duplicates)."""
    opts = state.opts
    if not opts.crc or concl.rule != "Sup":
        return
    left_id, right_id = concl.record.premises
    left, right = state.clauses[left_id], state.clauses[right_id]
    if len(left.clause) != 1 or not left.clause[0].positive or right.retired:
        return
    m = concl.sup
    lit = left.clause[0].subst(m.left_renaming.bindings)
    l, r = lit.side(m.left_side), lit.side(1 - m.left_side)
    R = simplify(demod_formula(l, r, right.clause, (m.right_lit, m.right_side, m.path)), state.kbo)
    if R is BOT or has_quantifier(R):
        # the checkers cannot use leftover quantifiers, so skip the step
        return
    if not opts.croc and has_ordering_atoms(R):
        return
    if isinstance(right.formula, Or) and len(right.formula.args) >= MAX_DISJUNCTS:
        return
    apply_redundancy_step(state, right, R, f"demodulation by {left_id}", (left_id, concl_id))


def _pop_given(state: ProverState) -> PartialClause | None:
    a, w = state.opts.age_weight
    while state.in_passive:
        use_age = w == 0 or (a > 0 and state.picks % (a + w) < a)
        heap = state.passive_age if use_age else state.passive_weight
        state.picks += 1
        while heap:
            _, cid = heapq.heappop(heap)
            if cid in state.in_passive:
                state.in_passive.discard(cid)
                return state.clauses[cid]
    return None


def given_clause_step(state: ProverState) -> PartialClause | None:
    """One iteration of the loop; returns the given clause (None if passive
    was empty). Sets ``state.empty`` when □ is derived."""
    given = _pop_given(state)
    if given is None:
        return None
    state.stats.given += 1
    opts = state.opts
    for out in all_inferences(given, state.active, state.kbo, opts, opts.selection):
        if isinstance(out, Skip):
            state.stats.skipped[(out.rule, out.condition)] += 1
            if out.flag:
                state.stats.discarded[out.flag] += 1
                state.stats.flagged.append(out)
        else:
            state.stats.performed[out.rule] += 1
            state.stats.generated += 1
            if out.sup is not None:
                state.stats.sup_by_orientation[(out.record.premises[0], "l", out.sup.left_side)] += 1
                state.stats.sup_by_orientation[(out.record.premises[1], "s", out.sup.right_side)] += 1
            pc = add_clause(state, out.clause, out.record)
            if pc is not None and pc.clause.is_empty:
                return given
            concl_id = pc.id if pc is not None else state.seen[variant_key(out.clause)]
            attach_after_inference(state, out, concl_id)
        if given.retired or state.next_id > opts.clause_limit:
            break
    if not given.retired:
        state.active.append(given)
    return given


def saturate(initial, opts: ProverOptions | None = None, signature: Signature | None = None, names=None) -> SaturationResult:
    """Run the given-clause loop on ``initial`` (clauses)."""
    opts = (opts or ProverOptions()).validate()
    initial = list(initial)
    if signature is None:
        signature = Signature.from_terms(t for c in initial for t in c.terms())
    state = ProverState(KBO(signature), opts)
    for k, c in enumerate(initial):
        label = names[k] if names else f"c{k + 1}"
        add_clause(state, c, InferenceRecord("Input", (), meta=(label,)))
        if state.empty:
            return Refutation(state, extract_proof(state))
    deadline = time.monotonic() + opts.time_limit
    while True:
        if time.monotonic() > deadline:
            return ResourceOut(state, "time")
        if state.next_id > opts.clause_limit:
            return ResourceOut(state, "clauses")
        given = given_clause_step(state)
        if state.empty is not None:
            return Refutation(state, extract_proof(state))
        if given is None:
            return Saturated(state)


# -- proofs ----------------------------------------------------------------------


@dataclass(frozen=True)
class ProofLine:
    id: int
    clause: Clause
    formula: Formula
    record: InferenceRecord

    def __str__(self):
        f = "" if self.formula is BOT else f" ⟨{self.formula}⟩"
        return f"{self.id}. {self.clause}{f} {self.record.describe()}"


def extract_proof(state: ProverState) -> list[ProofLine]:
    """Ancestors of □ in increasing id order (parents precede children)."""
    if state.empty is None:
        raise ValueError("no refutation to extract")
    needed, stack = set(), [state.empty.id]
    while stack:
        cid = stack.pop()
        if cid in needed:
            continue
        needed.add(cid)
        stack.extend(state.clauses[cid].record.premises)
    return [
        ProofLine(i, state.clauses[i].clause, state.clauses[i].formula, state.clauses[i].record)
        for i in sorted(needed)
    ]


def check_proof(proof: list[ProofLine], kbo: KBO) -> bool:
    """Replay every inference and compare with the recorded conclusion."""
    known = {}
    for line in proof:
        if line.record.rule != "Input":
            if any(p not in known for p in line.record.premises):
                return False
            got = replay(line.record, known, kbo)
            if got is None or not is_variant(got, line.clause):
                return False
        known[line.id] = line.clause
    return bool(proof) and proof[-1].clause.is_empty
