"""Named verification suites: closed forms versus independent enumeration.

Each suite sweeps a parameter box, recomputes a published closed form by
brute-force enumeration, and records every case.  Disagreements are data,
never suppressed: they flip the ``agree`` flag, surface in the report, and
drive the command-line exit code.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from .hecke_groups import (
    gamma_dim,
    gamma_gamma_codim,
    max_product_dim,
    max_product_dim_by_pairs,
    sp_total_dim,
    two_block_witness_value,
)
from .partitions import (
    SetPartition,
    bell_number,
    integer_partitions,
    iter_all_partitions,
)
from .strata import (
    NONCM_DISPLAY_NOTE,
    DecompositionShape,
    fixedpart_closed_form,
    mdec_codim_fixedpart,
    mdec_codim_product,
    mdec_codim_unitary,
    mdec_codim_unitary_fixedpart,
)


@dataclass
class CaseRecord:
    """One verified case: the input, both values, and the verdict."""

    input: dict
    expected: int | None
    computed: int
    agree: bool
    witness: object = None
    note: str = ""

    def to_dict(self) -> dict:
        out = {
            "input": self.input,
            "expected": self.expected,
            "computed": self.computed,
            "agree": self.agree,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerificationRun:
    """Outcome of one named suite over its parameter box."""

    lemma_id: str
    parameter_range: str
    cases: list[CaseRecord] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def disagreements(self) -> list[CaseRecord]:
        return [c for c in self.cases if not c.agree]

    def summary(self, timing: bool = False) -> dict:
        out = {"cases": len(self.cases), "disagreements": len(self.disagreements)}
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def to_dict(self, timing: bool = False) -> dict:
        # run-level notes ride at the top level of the report payload
        return {
            "lemma_id": self.lemma_id,
            "parameter_range": self.parameter_range,
            "cases": [c.to_dict() for c in self.cases],
            "summary": self.summary(timing),
        }


def _sorted_tuples(values: range, max_len: int):
    for length in range(1, max_len + 1):
        yield from itertools.combinations_with_replacement(values, length)


def run_product_min(g_max: int = 6) -> VerificationRun:
    """Minimal codimension in pure products equals 2*g1 - 2."""
    run = VerificationRun("L3.1", f"sorted tuples, entries in [2,{g_max}], length <= 4")
    for dims in _sorted_tuples(range(2, g_max + 1), 4):
        result = mdec_codim_product(dims)
        expected = 2 * dims[0] - 2
        run.cases.append(
            CaseRecord(
                {"varying_dims": list(dims)},
                expected,
                result.codim,
                result.codim == expected,
                witness=result.witness.label,
            )
        )
    return run


def run_fixedpart_min(g_max: int = 6) -> VerificationRun:
    """Fixed-part minimum equals its closed form wherever that is asserted.

    Shapes whose fixed part exceeds some varying factor have empty
    absorption strata; there the closed form is not asserted and the case
    is recorded as flagged with the enumeration as the value of record.
    """
    run = VerificationRun("L3.2", f"fixed/varying dims <= {g_max}, <= 3 factors each")
    fixed_choices = [()] + list(_sorted_tuples(range(1, g_max + 1), 3))
    varying_choices = list(_sorted_tuples(range(2, g_max + 1), 3))
    flagged = 0
    for fixed in fixed_choices:
        for varying in varying_choices:
            shape = DecompositionShape(fixed, varying)
            result = mdec_codim_fixedpart(shape)
            closed = fixedpart_closed_form(shape)
            if closed is None:
                flagged += 1
                agree = result.codim >= varying[0]
                note = "closed form not asserted (empty absorption strata); bound check only"
            else:
                agree = result.codim == closed
                note = ""
            run.cases.append(
                CaseRecord(
                    {"fixed_dims": list(fixed), "varying_dims": list(varying)},
                    closed,
                    result.codim,
                    agree,
                    witness=result.witness.label,
                    note=note,
                )
            )
    run.notes.append(f"{flagged} shapes flagged with empty absorption strata")
    return run


def run_unitary_min(g_max: int = 8) -> VerificationRun:
    """Unitary minimal codimension versus min(2p, p+q-2, 2q)."""
    run = VerificationRun("L3.3", f"1 <= p, q <= {g_max}, p+q >= 3")
    run.notes.append(NONCM_DISPLAY_NOTE)
    for p in range(1, g_max + 1):
        for q in range(1, g_max + 1):
            if p + q < 3:
                continue
            result = mdec_codim_unitary(p, q)
            run.cases.append(
                CaseRecord(
                    {"p": p, "q": q},
                    result.closed_form,
                    result.codim,
                    result.agrees,
                    witness=result.witness.label,
                    note="; ".join(result.notes),
                )
            )
    return run


def run_unitary_fixedpart_min(g_max: int = 8) -> VerificationRun:
    """Fixed elliptic factors leave the unitary minimum unchanged."""
    run = VerificationRun("L3.4", f"r in 0..3, 1 <= p, q <= {g_max}, p+q >= 3")
    run.notes.append(NONCM_DISPLAY_NOTE)
    for r in range(0, 4):
        for p in range(1, g_max + 1):
            for q in range(1, g_max + 1):
                if p + q < 3:
                    continue
                result = mdec_codim_unitary_fixedpart(r, p, q)
                base = mdec_codim_unitary(p, q)
                agree = result.agrees and result.codim == base.codim
                run.cases.append(
                    CaseRecord(
                        {"elliptic_count": r, "p": p, "q": q},
                        result.closed_form,
                        result.codim,
                        agree,
                        witness=result.witness.label,
                    )
                )
    return run


def run_gamma_increment(g_max: int = 6) -> VerificationRun:
    """Inserting one element into a block of size l adds exactly 4l + 3.

    For every partition of every ground size up to g_max and every
    insertion position (including a new singleton block), the subgroup
    dimension grows by 4l + 3.
    """
    run = VerificationRun("C5.3-increment", f"all partitions on grounds 2..{g_max}, all insertions")
    for g in range(2, g_max + 1):
        checks = 0
        failures = 0
        for part in iter_all_partitions(g):
            base = gamma_dim(part)
            blocks = [list(b) for b in part.blocks]
            for idx in range(len(blocks) + 1):
                if idx < len(blocks):
                    grown = [list(b) for b in blocks]
                    grown[idx].append(g + 1)
                    l = len(blocks[idx])
                else:
                    grown = [list(b) for b in blocks] + [[g + 1]]
                    l = 0
                extended = SetPartition.from_blocks(grown, g + 1)
                checks += 1
                if gamma_dim(extended) - base != 4 * l + 3:
                    failures += 1
        run.cases.append(
            CaseRecord({"ground": g}, checks, checks - failures, failures == 0)
        )
    return run


def run_max_product(g_max: int = 8) -> VerificationRun:
    """Maximum product dimension equals 2g^2 + g - 4.

    Canonical matrix types are exhausted for every g; for g <= 7 the value
    is recomputed by direct enumeration over all proper partition pairs,
    and the two-block witness family is checked to attain the maximum.
    """
    run = VerificationRun("L5.5", f"g in 2..{g_max}")
    for g in range(2, g_max + 1):
        result = max_product_dim(g)
        expected = sp_total_dim(g) - 4
        agree = result.value == expected
        notes = []
        if g <= 7:
            pair_value, pair = max_product_dim_by_pairs(g)
            agree = agree and pair_value == result.value
            notes.append(f"pair sweep over {(bell_number(g) - 1) ** 2} pairs gives {pair_value}")
        witness_value = two_block_witness_value(g)
        agree = agree and witness_value == expected
        notes.append(f"two-block family attains {witness_value}")
        run.cases.append(
            CaseRecord(
                {"g": g},
                expected,
                result.value,
                agree,
                witness=[list(r) for r in result.witness.entries],
                note="; ".join(notes),
            )
        )
    return run


def run_translate_margin(g_max: int = 7) -> VerificationRun:
    """Translate codimension is at least 4 for every proper partition.

    The value depends only on the block-size multiset, so each multiset
    class is verified once and covers all its partitions.
    """
    run = VerificationRun("C5.6", f"g in 2..{g_max}, all proper partition classes")
    for g in range(2, g_max + 1):
        for sizes in integer_partitions(g):
            if len(sizes) < 2:
                continue
            blocks = []
            start = 1
            for s in sizes:
                blocks.append(tuple(range(start, start + s)))
                start += s
            lam = SetPartition.from_blocks(blocks, g)
            codim = gamma_gamma_codim(g, lam)
            run.cases.append(
                CaseRecord(
                    {"g": g, "block_sizes": list(sizes)},
                    4,
                    codim,
                    codim >= 4,
                    note="lower bound; equality expected only at g = 2",
                )
            )
    run.notes.append("class values cover every partition with the same block sizes")
    return run


@dataclass(frozen=True)
class CheckSpec:
    runner: Callable[[int], VerificationRun]
    default_g_max: int
    description: str


CHECKS: dict[str, CheckSpec] = {
    "L3.1": CheckSpec(run_product_min, 6, "product minimum = 2*g1 - 2"),
    "L3.2": CheckSpec(run_fixedpart_min, 6, "fixed-part minimum matches its closed form"),
    "L3.3": CheckSpec(run_unitary_min, 8, "unitary minimum vs min(2p, p+q-2, 2q)"),
    "L3.4": CheckSpec(run_unitary_fixedpart_min, 8, "fixed elliptic factors do not change the unitary minimum"),
    "C5.3-increment": CheckSpec(run_gamma_increment, 6, "subgroup dimension grows by 4l + 3 per insertion"),
    "L5.5": CheckSpec(run_max_product, 8, "maximum product dimension = 2g^2 + g - 4"),
    "C5.6": CheckSpec(run_translate_margin, 7, "translate codimension >= 4"),
}


def run_check(check_id: str, g_max: int | None = None) -> VerificationRun:
    """Run one named suite; unknown ids raise KeyError."""
    spec = CHECKS[check_id]
    start = time.perf_counter()
    run = spec.runner(g_max if g_max is not None else spec.default_g_max)
    run.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return run
