"""Randomized self-check of the incremental engine against the oracle.

Every trial builds a random table, applies a random edit through the
incremental path and compares the complete resulting state against a
batch enumeration of the edited table.  The two sides share nothing but
the context primitives, so agreement is meaningful.  On a mismatch the
failing instance is shrunk greedily before it is reported.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import engine, oracle
from .bitset import BitVec
from .compare import state_mismatches
from .context import AttributeColumn, FormalContext, apposition, split_column

DENSITIES = (0.2, 0.4, 0.6)


@dataclass
class TrialFailure:
    trial: int
    operation: str  # "insert" | "remove" | "round-trip"
    objects: list[str]
    attributes: list[str]
    rows: list[str]
    column_name: str
    column_extent: list[str] | None  # None when the column is in the table
    mismatches: list[str]

    def as_dict(self) -> dict:
        return {
            "trial": self.trial,
            "operation": self.operation,
            "objects": self.objects,
            "attributes": self.attributes,
            "rows": self.rows,
            "columnName": self.column_name,
            "columnExtent": self.column_extent,
            "mismatches": self.mismatches,
        }


@dataclass
class VerifyReport:
    trials: int
    failures: list[TrialFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {"trials": self.trials, "ok": self.ok,
                "failures": [f.as_dict() for f in self.failures]}


def _row_strings(ctx: FormalContext) -> list[str]:
    return ["".join("X" if row >> j & 1 else "."
                    for j in range(len(ctx.attributes)))
            for row in ctx.rows]


def _random_table(rng: random.Random, max_objects: int,
                  max_attributes: int) -> FormalContext:
    density = rng.choice(DENSITIES)
    n_obj = rng.randint(1, max_objects)
    n_attr = rng.randint(1, max_attributes)
    objects = [f"g{i + 1}" for i in range(n_obj)]
    attributes = [f"m{j + 1}" for j in range(n_attr)]
    rows = []
    for _ in range(n_obj):
        mask = 0
        for j in range(n_attr):
            if rng.random() < density:
                mask |= 1 << j
        rows.append(mask)
    return FormalContext(objects, attributes, rows)


def _random_extent(rng: random.Random, size: int) -> BitVec:
    bits = 0
    density = rng.random()
    for i in range(size):
        if rng.random() < density:
            bits |= 1 << i
    return BitVec(bits, size)


def _insert_mismatches(ctx: FormalContext, column: AttributeColumn) -> list[str]:
    try:
        state = engine.build_state(ctx)
        new, _ = engine.insert_column(state, column)
        return state_mismatches(new, oracle.snapshot(apposition(ctx, column)))
    except Exception as exc:  # a crash is as good a reproduction as a diff
        return [f"raised {type(exc).__name__}: {exc}"]


def _remove_mismatches(ctx: FormalContext, name: str) -> list[str]:
    try:
        state = engine.build_state(ctx)
        new, _ = engine.remove_column(state, name)
        rest, _ = split_column(ctx, name)
        return state_mismatches(new, oracle.snapshot(rest))
    except Exception as exc:
        return [f"raised {type(exc).__name__}: {exc}"]


def _drop_object(ctx: FormalContext, i: int,
                 extent: BitVec | None) -> tuple[FormalContext, BitVec | None]:
    objects = [g for k, g in enumerate(ctx.objects) if k != i]
    rows = [row for k, row in enumerate(ctx.rows) if k != i]
    smaller = FormalContext(objects, list(ctx.attributes), rows)
    if extent is None:
        return smaller, None
    low = extent.bits & ((1 << i) - 1)
    high = extent.bits >> i + 1 << i
    return smaller, BitVec(low | high, extent.size - 1)


def _drop_attribute(ctx: FormalContext, j: int) -> FormalContext:
    attributes = [m for k, m in enumerate(ctx.attributes) if k != j]
    low = (1 << j) - 1
    rows = [(row & low) | (row >> j + 1 << j) for row in ctx.rows]
    return FormalContext(list(ctx.objects), attributes, rows)


def shrink_instance(ctx: FormalContext, extent: BitVec | None,
                    keep: str | None,
                    fails: Callable[[FormalContext, BitVec | None], bool],
                    ) -> tuple[FormalContext, BitVec | None]:
    """Greedily drop objects and attributes while the failure survives.

    extent is the loose column for insert failures (None for remove);
    keep names the one attribute a remove failure must not lose.
    """
    changed = True
    while changed:
        changed = False
        i = len(ctx.objects) - 1
        while i >= 0 and len(ctx.objects) > 1:
            smaller, column = _drop_object(ctx, i, extent)
            if fails(smaller, column):
                ctx, extent = smaller, column
                changed = True
            i -= 1
        j = len(ctx.attributes) - 1
        while j >= 0 and len(ctx.attributes) > 1:
            if ctx.attributes[j] != keep:
                smaller = _drop_attribute(ctx, j)
                if fails(smaller, extent):
                    ctx = smaller
                    changed = True
            j -= 1
    return ctx, extent


def _record(failures: list[TrialFailure], trial: int, operation: str,
            ctx: FormalContext, column: AttributeColumn | None,
            name: str) -> None:
    if column is not None:
        def fails(c, ext):
            return bool(_insert_mismatches(c, AttributeColumn(name, ext)))
        ctx, extent = shrink_instance(ctx, column.extent, None, fails)
        mism = _insert_mismatches(ctx, AttributeColumn(name, extent))
        shown = list(ctx.object_names(extent))
    else:
        def fails(c, _ext):
            return bool(_remove_mismatches(c, name))
        ctx, _ = shrink_instance(ctx, None, name, fails)
        mism = _remove_mismatches(ctx, name)
        shown = None
    failures.append(TrialFailure(
        trial=trial, operation="insert" if column is not None else "remove",
        objects=list(ctx.objects), attributes=list(ctx.attributes),
        rows=_row_strings(ctx), column_name=name, column_extent=shown,
        mismatches=mism))


def run_trials(trials: int, seed: int, max_objects: int = 12,
               max_attributes: int = 10,
               log: Callable[[str], None] | None = None,
               stop_after: int = 1,
               table: FormalContext | None = None) -> VerifyReport:
    """Alternate insert and remove trials; stop early after enough failures.

    With a fixed table, every trial edits that table instead of a fresh
    random one; the columns stay random.
    """
    rng = random.Random(seed)
    report = VerifyReport(trials=0)
    for trial in range(trials):
        ctx = table if table is not None \
            else _random_table(rng, max_objects, max_attributes)
        column = AttributeColumn("n", _random_extent(rng, len(ctx.objects)))
        mism = _insert_mismatches(ctx, column)
        operation = "insert"
        if not mism:
            operation = "remove"
            victim = rng.choice(ctx.attributes)
            mism = _remove_mismatches(ctx, victim)
        report.trials += 1
        if mism:
            if operation == "insert":
                _record(report.failures, trial, operation, ctx, column, "n")
            else:
                _record(report.failures, trial, operation, ctx, None, victim)
            if log:
                log(f"trial {trial}: FAIL ({operation}: {mism[0]})")
            if len(report.failures) >= stop_after:
                break
        elif log:
            log(f"trial {trial}: ok")
    return report
