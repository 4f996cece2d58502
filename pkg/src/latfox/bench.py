"""Incremental updates against rebuild-from-scratch, on one edit trace.

Both paths replay the identical trace.  The incremental side applies
each edit to the running diagram state; the rebuild side re-enumerates
the edited table from nothing each time, which is what a batch tool
would have to do.  The instrumentation deltas go into the report so a
test can hold the incremental side to zero full enumerations.
"""

from __future__ import annotations

import random
import time
from typing import Any

from . import engine
from .bitset import BitVec
from .context import AttributeColumn, FormalContext, apposition, split_column
from .instrumentation import COUNTERS

DEFAULT_DENSITY = 0.2  # keeps a 60x40 table in the hundreds of concepts


def _random_table(rng: random.Random, n_objects: int, n_attributes: int,
                  density: float) -> FormalContext:
    objects = [f"g{i + 1}" for i in range(n_objects)]
    attributes = [f"m{j + 1}" for j in range(n_attributes)]
    rows = []
    for _ in range(n_objects):
        mask = 0
        for j in range(n_attributes):
            if rng.random() < density:
                mask |= 1 << j
        rows.append(mask)
    return FormalContext(objects, attributes, rows)


def _make_trace(rng: random.Random, base: FormalContext, ops: int,
                density: float) -> list[tuple[str, str, BitVec | None]]:
    """Edit script as plain data, so both paths replay the same thing."""
    names = list(base.attributes)
    n_obj = len(base.objects)
    trace: list[tuple[str, str, BitVec | None]] = []
    for k in range(ops):
        if names and rng.random() < 0.5 and len(names) > 1:
            victim = rng.choice(names)
            names.remove(victim)
            trace.append(("remove", victim, None))
        else:
            name = f"n{k + 1}"
            bits = 0
            for i in range(n_obj):
                if rng.random() < density:
                    bits |= 1 << i
            names.append(name)
            trace.append(("insert", name, BitVec(bits, n_obj)))
    return trace


def run_bench(n_objects: int = 60, n_attributes: int = 40, ops: int = 40,
              seed: int = 0, density: float = DEFAULT_DENSITY) -> dict[str, Any]:
    rng = random.Random(seed)
    base = _random_table(rng, n_objects, n_attributes, density)
    trace = _make_trace(rng, base, ops, density)

    state = engine.build_state(base)
    initial_concepts = len(state.concepts)

    before = COUNTERS.snapshot()
    per_op_inc = []
    total_inc = 0.0
    for op, name, extent in trace:
        t0 = time.perf_counter()
        if op == "insert":
            state, _ = engine.insert_column(state, AttributeColumn(name, extent))
        else:
            state, _ = engine.remove_column(state, name)
        dt = time.perf_counter() - t0
        total_inc += dt
        per_op_inc.append({"op": op, "name": name, "seconds": dt,
                           "concepts": len(state.concepts)})
    counters_inc = COUNTERS.delta(before)

    before = COUNTERS.snapshot()
    per_op_full = []
    total_full = 0.0
    ctx = base
    for op, name, extent in trace:
        t0 = time.perf_counter()
        if op == "insert":
            ctx = apposition(ctx, AttributeColumn(name, extent))
        else:
            ctx, _ = split_column(ctx, name)
        rebuilt = engine.build_state(ctx)
        dt = time.perf_counter() - t0
        total_full += dt
        per_op_full.append({"op": op, "name": name, "seconds": dt,
                            "concepts": len(rebuilt.concepts)})
    counters_full = COUNTERS.delta(before)

    return {
        "objects": n_objects,
        "attributes": n_attributes,
        "ops": len(trace),
        "seed": seed,
        "density": density,
        "initialConcepts": initial_concepts,
        "incremental": {"seconds": total_inc, "counters": counters_inc,
                        "perOp": per_op_inc},
        "rebuild": {"seconds": total_full, "counters": counters_full,
                    "perOp": per_op_full},
        "speedup": total_full / total_inc if total_inc > 0 else float("inf"),
    }


def format_report(report: dict[str, Any]) -> str:
    inc, full = report["incremental"], report["rebuild"]
    lines = [
        "bench {objects}x{attributes}, {ops} ops, seed {seed}, "
        "density {density}".format_map(report),
        f"  initial concepts: {report['initialConcepts']}",
        f"  incremental: {inc['seconds']:.3f}s, "
        f"full enumerations {inc['counters']['full_enumerations']}, "
        f"subset tests {inc['counters']['subset_tests']}",
        f"  rebuild:     {full['seconds']:.3f}s, "
        f"full enumerations {full['counters']['full_enumerations']}, "
        f"subset tests {full['counters']['subset_tests']}",
        f"  speedup:     {report['speedup']:.1f}x",
    ]
    return "\n".join(lines)
