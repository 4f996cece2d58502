"""Shared test contexts.

Small hand-checked tables plus the three-generator distributive-lattice
sample used by the regression tests.  Expected values asserted in the
test modules were derived from these tables by hand before the engine
existed; keep them in sync with nothing.
"""

from __future__ import annotations

import random

from latfox.bitset import BitVec
from latfox.context import AttributeColumn, FormalContext, apposition


def k2() -> FormalContext:
    return FormalContext.from_strings(["g1", "g2"], ["a", "b"], ["XX", ".X"])


def column_c(ctx: FormalContext) -> AttributeColumn:
    # Duplicates the extent of a: redundant.
    return AttributeColumn("c", ctx.object_set(["g1"]))


def column_d(ctx: FormalContext) -> AttributeColumn:
    return AttributeColumn("d", ctx.object_set(["g2"]))


def k2c() -> FormalContext:
    return apposition(k2(), column_c(k2()))


def k2d() -> FormalContext:
    return apposition(k2(), column_d(k2()))


def k4() -> FormalContext:
    return FormalContext.from_strings(
        ["1", "2", "3", "4"], ["a", "b"], ["XX", "XX", "X.", ".."])


def k4_column_n(ctx: FormalContext) -> AttributeColumn:
    return AttributeColumn("n", ctx.object_set(["1", "2", "4"]))


FCD3_OBJECTS = ["xyz", "yz", "xz", "xy", "z", "y", "x", "top"]
FCD3_ATTRIBUTES = ["x|y|z", "x|y", "x|z", "y|z", "x", "y", "z"]
FCD3_ROWS = [
    "XXXXXXX",  # xyz
    "XXXX.XX",  # yz
    "XXXXX.X",  # xz
    "XXXXXX.",  # xy
    "X.XX..X",  # z
    "XX.X.X.",  # y
    "XXX.X..",  # x
    ".......",  # top
]


def fcd3_full() -> FormalContext:
    return FormalContext.from_strings(FCD3_OBJECTS, FCD3_ATTRIBUTES, FCD3_ROWS)


def fcd3_old() -> FormalContext:
    rows = [r[:-1] for r in FCD3_ROWS]
    return FormalContext.from_strings(FCD3_OBJECTS, FCD3_ATTRIBUTES[:-1], rows)


def fcd3_column_z() -> AttributeColumn:
    ctx = fcd3_old()
    extent = [g for g, r in zip(FCD3_OBJECTS, FCD3_ROWS) if r[-1] == "X"]
    return AttributeColumn("z", ctx.object_set(extent))


def random_context(rng: random.Random, n_objects: int, n_attributes: int,
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


def random_column(rng: random.Random, ctx: FormalContext,
                  density: float = 0.5, name: str = "n") -> AttributeColumn:
    size = len(ctx.objects)
    bits = 0
    for i in range(size):
        if rng.random() < density:
            bits |= 1 << i
    return AttributeColumn(name, BitVec(bits, size))
