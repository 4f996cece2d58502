"""Comparing an incrementally maintained state against batch results.

Concept ids are private to a state, so everything is keyed by extent
before comparing.  Returns human-readable mismatch strings; an empty
list means the two views agree exactly.
"""

from __future__ import annotations

from .engine import DiagramState
from .oracle import LatticeSnapshot


def _extent_key(ctx, extent):
    return frozenset(ctx.object_names(extent))


def state_mismatches(state: DiagramState, snap: LatticeSnapshot) -> list[str]:
    """All disagreements between a diagram state and a batch snapshot."""
    out: list[str] = []
    ctx = state.context
    if ctx != snap.context:
        out.append("contexts differ")
        return out

    mine = {_extent_key(ctx, c.extent): c for c in state.concepts.values()}
    theirs = {_extent_key(ctx, c.extent): c for c in snap.concepts}
    if len(mine) != len(state.concepts):
        out.append("duplicate extents in state")
    for key in mine.keys() - theirs.keys():
        out.append(f"extra concept {sorted(key)}")
    for key in theirs.keys() - mine.keys():
        out.append(f"missing concept {sorted(key)}")
    for key in mine.keys() & theirs.keys():
        if mine[key].intent != theirs[key].intent:
            out.append(f"intent differs at {sorted(key)}")

    def edge_keys(concepts, upper):
        pairs = set()
        for lo, ups in upper.items():
            for up in ups:
                pairs.add((_extent_key(ctx, concepts[lo].extent),
                           _extent_key(ctx, concepts[up].extent)))
        return pairs

    mine_edges = edge_keys(state.concepts, state.upper)
    snap_concepts = {c.id: c for c in snap.concepts}
    their_edges = edge_keys(snap_concepts, snap.upper)
    for lo, up in mine_edges - their_edges:
        out.append(f"extra edge {sorted(lo)} -> {sorted(up)}")
    for lo, up in their_edges - mine_edges:
        out.append(f"missing edge {sorted(lo)} -> {sorted(up)}")

    for g in ctx.objects:
        a = _extent_key(ctx, state.concepts[state.gamma[g]].extent)
        b = _extent_key(ctx, snap_concepts[snap.gamma[g]].extent)
        if a != b:
            out.append(f"object label {g!r} at {sorted(a)}, expected {sorted(b)}")
    for m in ctx.attributes:
        a = _extent_key(ctx, state.concepts[state.mu[m]].extent)
        b = _extent_key(ctx, snap_concepts[snap.mu[m]].extent)
        if a != b:
            out.append(f"attribute label {m!r} at {sorted(a)}, expected {sorted(b)}")

    if state.irreducibles != snap.irreducibles:
        out.append(f"irreducibles {sorted(state.irreducibles)}, "
                   f"expected {sorted(snap.irreducibles)}")
    if set(state.seeds) != set(state.irreducibles):
        out.append("seed domain differs from irreducibles")
    if state.up_arrows != snap.up_arrows:
        out.append(f"up arrows differ: extra {sorted(state.up_arrows - snap.up_arrows)}, "
                   f"missing {sorted(snap.up_arrows - state.up_arrows)}")
    if state.down_arrows != snap.down_arrows:
        out.append(f"down arrows differ: extra {sorted(state.down_arrows - snap.down_arrows)}, "
                   f"missing {sorted(snap.down_arrows - state.down_arrows)}")
    return out
