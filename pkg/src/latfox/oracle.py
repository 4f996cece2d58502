"""Batch lattice construction, the reference the incremental engine is
checked against.

Everything here recomputes from the context alone: concepts by lectic
closure enumeration, covers by direct order reduction, labels and
arrows by their definitions.  None of the incremental update rules are
used, so agreement between the two paths is meaningful evidence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import BitVec
from .context import AttributeColumn, FormalContext
from .instrumentation import COUNTERS


@dataclass(frozen=True)
class Concept:
    """A maximal extent/intent rectangle of some context."""

    id: int
    extent: BitVec
    intent: BitVec


@dataclass(frozen=True)
class LatticeSnapshot:
    """Complete batch-computed diagram data for one context."""

    context: FormalContext
    concepts: tuple[Concept, ...]
    upper: dict[int, frozenset[int]]
    lower: dict[int, frozenset[int]]
    gamma: dict[str, int]
    mu: dict[str, int]
    irreducibles: frozenset[str]
    up_arrows: frozenset[tuple[str, str]]
    down_arrows: frozenset[tuple[str, str]]

    def concept_by_extent(self, extent: BitVec) -> Concept:
        for c in self.concepts:
            if c.extent == extent:
                return c
        raise KeyError(f"no concept with extent {extent!r}")


def enumerate_concepts(ctx: FormalContext) -> list[Concept]:
    """All concepts of ctx, intents in lectic order (top first)."""
    COUNTERS.full_enumerations += 1
    n_attr = len(ctx.attributes)
    n_obj = len(ctx.objects)
    cols = ctx.cols
    full_obj = (1 << n_obj) - 1
    rows = ctx.rows
    full_attr = (1 << n_attr) - 1

    def extent_of(intent: int) -> int:
        e = full_obj
        bits = intent
        while bits:
            low = bits & -bits
            e &= cols[low.bit_length() - 1]
            bits ^= low
        return e

    def intent_of(extent: int) -> int:
        b = full_attr
        bits = extent
        while bits:
            low = bits & -bits
            b &= rows[low.bit_length() - 1]
            bits ^= low
        return b

    concepts = []
    extent = extent_of(0)
    intent = intent_of(extent)
    COUNTERS.closures += 1
    concepts.append(Concept(0, BitVec(extent, n_obj), BitVec(intent, n_attr)))
    while intent != full_attr:
        for i in range(n_attr - 1, -1, -1):
            if intent >> i & 1:
                continue
            lower_mask = (1 << i) - 1
            candidate_extent = extent_of((intent & lower_mask) | 1 << i)
            candidate = intent_of(candidate_extent)
            COUNTERS.closures += 1
            # Lectic successor: nothing new below position i.
            if candidate & lower_mask & ~intent == 0:
                extent, intent = candidate_extent, candidate
                concepts.append(Concept(len(concepts),
                                        BitVec(extent, n_obj),
                                        BitVec(intent, n_attr)))
                break
        else:
            raise AssertionError("closure enumeration failed to advance")
    COUNTERS.concepts_enumerated += len(concepts)
    return concepts


def covering_relation(concepts: list[Concept]) -> dict[int, frozenset[int]]:
    """Upper covers per concept id, by pairwise order reduction."""
    order = sorted(concepts, key=lambda c: len(c.extent))
    upper: dict[int, frozenset[int]] = {}
    tests = 0
    for c in concepts:
        ce = c.extent.bits
        covers: list[Concept] = []
        for d in order:
            de = d.extent.bits
            if de == ce or ce & ~de:
                continue
            tests += 1
            # d is a cover unless some accepted cover sits below it.
            if all(u.extent.bits & ~de for u in covers):
                covers.append(d)
        upper[c.id] = frozenset(u.id for u in covers)
    COUNTERS.subset_tests += tests
    return upper


def lower_covers(upper: dict[int, frozenset[int]]) -> dict[int, frozenset[int]]:
    lower: dict[int, set[int]] = {cid: set() for cid in upper}
    for cid, ups in upper.items():
        for u in ups:
            lower[u].add(cid)
    return {cid: frozenset(v) for cid, v in lower.items()}


def object_concepts(ctx: FormalContext, concepts: list[Concept]) -> dict[str, int]:
    by_extent = {c.extent.bits: c.id for c in concepts}
    gamma = {}
    for gi, g in enumerate(ctx.objects):
        extent = ctx.derive_attributes(ctx.object_row(gi))
        gamma[g] = by_extent[extent.bits]
    return gamma


def attribute_concepts(ctx: FormalContext, concepts: list[Concept]) -> dict[str, int]:
    by_extent = {c.extent.bits: c.id for c in concepts}
    return {m: by_extent[ctx.cols[mi]]
            for mi, m in enumerate(ctx.attributes)}


def irreducible_attributes(ctx: FormalContext) -> frozenset[str]:
    """Attributes whose extent is not an intersection of strictly
    larger attribute extents (the empty intersection being all of G)."""
    full = (1 << len(ctx.objects)) - 1
    result = []
    for mi, m in enumerate(ctx.attributes):
        e = ctx.cols[mi]
        meet = full
        for ai in range(len(ctx.attributes)):
            a = ctx.cols[ai]
            if a != e and e & ~a == 0:
                meet &= a
        if meet != e:
            result.append(m)
    return frozenset(result)


def strict_row_supersets(ctx: FormalContext) -> list[int]:
    """Per object g, the mask of objects h with g' a proper subset of h'."""
    n_obj = len(ctx.objects)
    rows = ctx.rows
    masks = [0] * n_obj
    for gi in range(n_obj):
        r = rows[gi]
        for hi in range(n_obj):
            h = rows[hi]
            if h != r and r & ~h == 0:
                masks[gi] |= 1 << hi
    return masks


def strict_col_supersets(ctx: FormalContext) -> list[int]:
    """Per attribute m, the mask of attributes k with m' a proper subset of k'."""
    n_attr = len(ctx.attributes)
    cols = ctx.cols
    masks = [0] * n_attr
    for mi in range(n_attr):
        c = cols[mi]
        for ki in range(n_attr):
            k = cols[ki]
            if k != c and c & ~k == 0:
                masks[mi] |= 1 << ki
    return masks


def down_arrows(ctx: FormalContext) -> frozenset[tuple[str, str]]:
    """Pairs (g, m) where g is maximally non-incident to m."""
    above = strict_row_supersets(ctx)
    out = []
    for gi, g in enumerate(ctx.objects):
        for mi, m in enumerate(ctx.attributes):
            if ctx.rows[gi] >> mi & 1:
                continue
            if above[gi] & ~ctx.cols[mi] == 0:
                out.append((g, m))
    return frozenset(out)


def up_arrows(ctx: FormalContext) -> frozenset[tuple[str, str]]:
    """Pairs (g, m) where m is maximally non-incident to g."""
    right = strict_col_supersets(ctx)
    out = []
    for gi, g in enumerate(ctx.objects):
        for mi, m in enumerate(ctx.attributes):
            if ctx.rows[gi] >> mi & 1:
                continue
            if right[mi] & ~ctx.rows[gi] == 0:
                out.append((g, m))
    return frozenset(out)


def is_redundant_column(ctx: FormalContext, column: AttributeColumn) -> bool:
    """True when the column extent is already a closed object set of ctx."""
    return ctx.closure_objects(column.extent) == column.extent


def snapshot(ctx: FormalContext) -> LatticeSnapshot:
    """Batch-compute the full diagram data for one context."""
    concepts = enumerate_concepts(ctx)
    upper = covering_relation(concepts)
    return LatticeSnapshot(
        context=ctx,
        concepts=tuple(concepts),
        upper=upper,
        lower=lower_covers(upper),
        gamma=object_concepts(ctx, concepts),
        mu=attribute_concepts(ctx, concepts),
        irreducibles=irreducible_attributes(ctx),
        up_arrows=up_arrows(ctx),
        down_arrows=down_arrows(ctx),
    )
