"""Incremental maintenance of a lattice diagram under column edits.

The diagram state is a value: inserting or removing an attribute column
returns a fresh state plus a ChangeSet describing exactly what changed.
Concepts that survive an edit keep their ids, so downstream consumers
can track nodes across edits without diffing extents.

The update never re-enumerates the lattice.  Each stage works from the
edit classification of the existing concepts: which concepts stay as
they are, which take the new attribute into their intent, and which
spawn (or retire) a companion concept.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .bitset import BitVec
from .context import AttributeColumn, FormalContext, apposition, split_column
from .errors import LatfoxError, NotFound
from .instrumentation import COUNTERS
from .layout import Vec2, default_seed_for
from .oracle import Concept, LatticeSnapshot


class InvalidSeed(LatfoxError):
    """Seed assignment to a reducible attribute or with non-finite parts."""


class PreClass(str, Enum):
    """Role of an existing concept when a column is inserted."""

    OLD = "old"
    VARYING = "varying"
    GENERATING = "generating"  # old, and about to spawn a companion


class PostClass(str, Enum):
    """Role of an existing concept when a column is removed."""

    OLD = "old"
    VARIED = "varied"
    GENERATED = "generated"  # exists only because of the column


@dataclass(frozen=True)
class DiagramState:
    """Complete diagram data for one context."""

    context: FormalContext
    concepts: dict[int, Concept]
    upper: dict[int, frozenset[int]]
    lower: dict[int, frozenset[int]]
    gamma: dict[str, int]
    mu: dict[str, int]
    irreducibles: frozenset[str]
    seeds: dict[str, Vec2]
    up_arrows: frozenset[tuple[str, str]]
    down_arrows: frozenset[tuple[str, str]]
    version: int
    next_id: int

    def concept_id_by_extent(self, extent: BitVec) -> int:
        for cid, c in self.concepts.items():
            if c.extent == extent:
                return cid
        raise KeyError(f"no concept with extent {extent!r}")


@dataclass(frozen=True)
class ChangeSet:
    """Exact delta between two consecutive diagram states.

    created maps each impacted concept to its companion on the other
    side of the edit: generator id to generated id, for both insert and
    remove.  All other fields are plain set or map deltas.
    """

    direction: str
    column_name: str
    column_extent: tuple[str, ...]
    pre_class: dict[int, str]
    created: dict[int, int]
    retired: frozenset[int]
    edges_added: frozenset[tuple[int, int]]
    edges_removed: frozenset[tuple[int, int]]
    gamma_moves: dict[str, tuple[int, int]]
    mu_added: dict[str, int]
    mu_removed: dict[str, int]
    seeds_added: dict[str, Vec2]
    seeds_removed: dict[str, Vec2]
    up_added: frozenset[tuple[str, str]]
    up_removed: frozenset[tuple[str, str]]
    down_added: frozenset[tuple[str, str]]
    down_removed: frozenset[tuple[str, str]]
    redundant: bool


def state_from_snapshot(snap: LatticeSnapshot,
                        seeds: dict[str, Vec2] | None = None) -> DiagramState:
    """Wrap batch-computed lattice data into a fresh diagram state."""
    if seeds is None:
        seeds = {m: default_seed_for(snap.context.attributes, snap.irreducibles, m)
                 for m in snap.context.attributes if m in snap.irreducibles}
    else:
        if set(seeds) != set(snap.irreducibles):
            raise InvalidSeed("seed domain must equal the irreducible attributes")
        seeds = dict(seeds)
    return DiagramState(
        context=snap.context,
        concepts={c.id: c for c in snap.concepts},
        upper=dict(snap.upper),
        lower=dict(snap.lower),
        gamma=dict(snap.gamma),
        mu=dict(snap.mu),
        irreducibles=snap.irreducibles,
        seeds=seeds,
        up_arrows=snap.up_arrows,
        down_arrows=snap.down_arrows,
        version=0,
        next_id=len(snap.concepts),
    )


def build_state(ctx: FormalContext,
                seeds: dict[str, Vec2] | None = None) -> DiagramState:
    """Batch-build a diagram state (the only full enumeration path)."""
    from . import oracle
    return state_from_snapshot(oracle.snapshot(ctx), seeds)


def with_seed(state: DiagramState, name: str, seed: Vec2) -> DiagramState:
    """Replace one seed vector; a new state version is produced."""
    if not state.context.has_attribute(name):
        raise NotFound(f"unknown attribute {name!r}")
    if name not in state.irreducibles:
        raise InvalidSeed(f"attribute {name!r} is reducible and has no seed")
    seed = Vec2(float(seed[0]), float(seed[1]))
    if not seed.is_finite():
        raise InvalidSeed("seed components must be finite")
    seeds = dict(state.seeds)
    seeds[name] = seed
    return DiagramState(
        context=state.context, concepts=state.concepts, upper=state.upper,
        lower=state.lower, gamma=state.gamma, mu=state.mu,
        irreducibles=state.irreducibles, seeds=seeds,
        up_arrows=state.up_arrows, down_arrows=state.down_arrows,
        version=state.version + 1, next_id=state.next_id)


# ---------------------------------------------------------------------------
# classification

def classify_insert(state: DiagramState,
                    column: AttributeColumn) -> dict[int, PreClass]:
    """Classify every current concept against an incoming column."""
    ctx = state.context
    out = {}
    for cid, c in state.concepts.items():
        if c.extent.issubset(column.extent):
            out[cid] = PreClass.VARYING
        elif ctx.derive_objects(c.extent & column.extent) == c.intent:
            out[cid] = PreClass.GENERATING
        else:
            out[cid] = PreClass.OLD
    return out


def classify_remove(state: DiagramState, name: str) -> dict[int, PostClass]:
    """Classify every current concept against removing one of its columns."""
    ctx = state.context
    rest, _ = split_column(ctx, name)
    ni = ctx.attribute_index(name)
    out = {}
    for cid, c in state.concepts.items():
        if ni not in c.intent:
            out[cid] = PostClass.OLD
        else:
            shrunk = BitVec(_squeeze_bit(c.intent.bits, ni), len(rest.attributes))
            if rest.derive_attributes(shrunk) == c.extent:
                out[cid] = PostClass.VARIED
            else:
                out[cid] = PostClass.GENERATED
    return out


def _squeeze_bit(bits: int, index: int) -> int:
    low = (1 << index) - 1
    return (bits & low) | (bits >> index + 1) << index


# ---------------------------------------------------------------------------
# insert

def insert_column(state: DiagramState,
                  column: AttributeColumn) -> tuple[DiagramState, ChangeSet]:
    ctx = state.context
    n_obj = len(ctx.objects)
    if column.extent.size != n_obj:
        from .errors import UniverseMismatch
        raise UniverseMismatch("column extent is over a different object set")
    new_ctx = apposition(ctx, column)  # raises NameCollision on a taken name
    nJ = column.extent
    n_idx = len(ctx.attributes)
    n_name = column.name

    pre_class = classify_insert(state, column)
    generators = [cid for cid, k in pre_class.items() if k is PreClass.GENERATING]
    varying = [cid for cid, k in pre_class.items() if k is PreClass.VARYING]
    redundant = ctx.closure_objects(nJ) == nJ

    # concepts: survivors keep their ids, every generator gets a companion
    n_attr2 = n_idx + 1
    n_bit = 1 << n_idx
    concepts2: dict[int, Concept] = {}
    for cid in state.concepts:
        c = state.concepts[cid]
        bits = c.intent.bits | (n_bit if pre_class[cid] is PreClass.VARYING else 0)
        concepts2[cid] = Concept(cid, c.extent, BitVec(bits, n_attr2))
    created: dict[int, int] = {}
    next_id = state.next_id
    for cid in generators:
        c = state.concepts[cid]
        concepts2[next_id] = Concept(next_id, c.extent & nJ,
                                     BitVec(c.intent.bits | n_bit, n_attr2))
        created[cid] = next_id
        next_id += 1

    edges_added, edges_removed = _insert_edges(state, pre_class, generators,
                                               varying, created)
    edges2 = _apply_edge_delta(state, edges_added, edges_removed)

    # labels: objects inside the column drop from generators to companions
    gamma2 = dict(state.gamma)
    gamma_moves: dict[str, tuple[int, int]] = {}
    for gi in nJ:
        g = ctx.objects[gi]
        cid = gamma2[g]
        if pre_class[cid] is PreClass.GENERATING:
            gamma2[g] = created[cid]
            gamma_moves[g] = (cid, created[cid])
    mu2 = dict(state.mu)
    if redundant:
        target = next(cid for cid in varying
                      if state.concepts[cid].extent == nJ)
    else:
        closure = ctx.closure_objects(nJ)
        tau = state.concept_id_by_extent(closure)
        if pre_class[tau] is not PreClass.GENERATING:
            raise AssertionError("closure of an irredundant column must generate")
        for cid in generators:
            if not state.concepts[cid].extent.issubset(closure):
                raise AssertionError("generator set has no greatest element")
        target = created[tau]
    mu2[n_name] = target

    # reducibility and seeds
    irr2, seeds2, seeds_added, seeds_removed = _insert_reducibility(
        state, pre_class, n_name, target, edges2, new_ctx)

    up2 = _insert_up_arrows(state, new_ctx, nJ, n_name)
    down2 = _insert_down_arrows(state, new_ctx, nJ, n_idx, n_name)

    new_state = DiagramState(
        context=new_ctx, concepts=concepts2,
        upper=_uppers_of(edges2, concepts2), lower=_lowers_of(edges2, concepts2),
        gamma=gamma2, mu=mu2, irreducibles=irr2, seeds=seeds2,
        up_arrows=up2, down_arrows=down2,
        version=state.version + 1, next_id=next_id)
    change = ChangeSet(
        direction="insert", column_name=n_name,
        column_extent=ctx.object_names(nJ),
        pre_class={cid: k.value for cid, k in pre_class.items()},
        created=created, retired=frozenset(),
        edges_added=frozenset(edges_added), edges_removed=frozenset(edges_removed),
        gamma_moves=gamma_moves, mu_added={n_name: target}, mu_removed={},
        seeds_added=seeds_added, seeds_removed=seeds_removed,
        up_added=up2 - state.up_arrows, up_removed=state.up_arrows - up2,
        down_added=down2 - state.down_arrows,
        down_removed=state.down_arrows - down2,
        redundant=redundant)
    return new_state, change


def _insert_edges(state, pre_class, generators, varying, created):
    """Neighbourhood delta for an insert.

    Removed: every edge from a varying up to a generating concept.
    Added: each companion under its generator, companion chains where no
    third generator intervenes, and varying-to-companion edges where
    neither a generator nor a varying concept intervenes.
    """
    concepts = state.concepts
    added: set[tuple[int, int]] = set()
    removed: set[tuple[int, int]] = set()
    for lo, ups in state.upper.items():
        if pre_class[lo] is not PreClass.VARYING:
            continue
        for up in ups:
            if pre_class[up] is PreClass.GENERATING:
                removed.add((lo, up))

    for cid in generators:
        added.add((created[cid], cid))

    gen_extents = [(cid, concepts[cid].extent.bits) for cid in generators]
    blockers = gen_extents + [(cid, concepts[cid].extent.bits) for cid in varying]
    tests = 0
    for a, abits in gen_extents:
        for b, bbits in gen_extents:
            if abits == bbits or abits & ~bbits:
                continue
            tests += 1
            if not any(cbits != abits and cbits != bbits
                       and abits & ~cbits == 0 and cbits & ~bbits == 0
                       for _, cbits in gen_extents):
                added.add((created[a], created[b]))
    for a in varying:
        abits = concepts[a].extent.bits
        for b, bbits in gen_extents:
            if abits & ~bbits:
                continue
            tests += 1
            if not any(cbits != abits and cbits != bbits
                       and abits & ~cbits == 0 and cbits & ~bbits == 0
                       for _, cbits in blockers):
                added.add((a, created[b]))
    COUNTERS.subset_tests += tests
    return added, removed


def _insert_reducibility(state, pre_class, n_name, mu_n, edges2, new_ctx):
    """Apply the one possible flip direction on insert: irreducible
    attributes may become reducible; reducible ones never come back."""
    flipped: list[str] = []
    for m in state.irreducibles:
        v = state.mu[m]
        if pre_class[v] is not PreClass.VARYING:
            continue
        ups = state.upper[v]
        if len(ups) != 1:
            raise AssertionError(f"irreducible {m!r} lost its unique upper cover")
        (u,) = ups
        if pre_class[u] is not PreClass.OLD:
            continue
        u_ext = state.concepts[u].extent
        if any(pre_class[s] is PreClass.GENERATING
               and u_ext.issubset(state.concepts[s].extent)
               for s in state.concepts):
            flipped.append(m)

    irr = set(state.irreducibles) - set(flipped)
    n_uppers = sum(1 for lo, _ in edges2 if lo == mu_n)
    if n_uppers == 1:
        irr.add(n_name)
    irr2 = frozenset(irr)

    seeds2 = {m: v for m, v in state.seeds.items() if m not in flipped}
    seeds_removed = {m: state.seeds[m] for m in flipped}
    seeds_added: dict[str, Vec2] = {}
    if n_name in irr2:
        seed = default_seed_for(new_ctx.attributes, irr2, n_name)
        seeds2[n_name] = seed
        seeds_added[n_name] = seed
    return irr2, seeds2, seeds_added, seeds_removed


def _insert_up_arrows(state, new_ctx, nJ, n_name):
    """Up arrows after an insert: the block of outside objects against
    attributes properly inside the column empties, the new column gets a
    direct scan, everything else carries over."""
    ctx = state.context
    inner = {m for mi, m in enumerate(ctx.attributes)
             if ctx.cols[mi] != nJ.bits and ctx.cols[mi] & ~nJ.bits == 0}
    out = set()
    for g, m in state.up_arrows:
        if m in inner and state.context.object_index(g) not in nJ:
            continue
        out.add((g, m))
    right_n = 0
    for ki in range(len(ctx.attributes)):
        col = ctx.cols[ki]
        if col != nJ.bits and nJ.bits & ~col == 0:
            right_n |= 1 << ki
    for gi in range(len(ctx.objects)):
        if gi in nJ:
            continue
        if right_n & ~ctx.rows[gi] == 0:
            out.add((ctx.objects[gi], n_name))
    return frozenset(out)


def _insert_down_arrows(state, new_ctx, nJ, n_idx, n_name):
    """Down arrows after an insert.

    Outside the column an arrow survives iff no row-equal object sits
    inside the column, and nothing appears there.  Inside the column
    arrows can both die and appear (an object gaining the new attribute
    may leapfrog its old strict row supersets), so that strip is taken
    from the definition, with the cheap persistence condition as a fast
    path.  The fresh column gets a definitional scan of its own.
    """
    ctx = state.context
    rows = ctx.rows
    n_obj = len(ctx.objects)
    above_old = _strict_supersets(rows)
    above_new = _strict_supersets(new_ctx.rows)
    cols_new = new_ctx.cols
    old = state.down_arrows
    out = set()
    for g, m in old:
        gi = ctx.object_index(g)
        if gi in nJ:
            continue  # strip below decides these
        mi = new_ctx.attribute_index(m)
        row_twin_inside = any(rows[hi] == rows[gi] and hi in nJ
                              for hi in range(n_obj))
        if not row_twin_inside or above_new[gi] & ~cols_new[mi] == 0:
            out.add((g, m))
    for gi in nJ:
        g = ctx.objects[gi]
        for mi in range(len(ctx.attributes)):
            if rows[gi] >> mi & 1:
                continue
            m = ctx.attributes[mi]
            if (g, m) in old and above_old[gi] & ~nJ.bits == 0:
                out.add((g, m))
            elif above_new[gi] & ~cols_new[mi] == 0:
                out.add((g, m))
    for gi in range(n_obj):
        if gi not in nJ and above_new[gi] & ~nJ.bits == 0:
            out.add((ctx.objects[gi], n_name))
    return frozenset(out)


def _strict_supersets(rows) -> list[int]:
    n = len(rows)
    masks = [0] * n
    for gi in range(n):
        r = rows[gi]
        for hi in range(n):
            h = rows[hi]
            if h != r and r & ~h == 0:
                masks[gi] |= 1 << hi
    COUNTERS.subset_tests += n * n
    return masks


# ---------------------------------------------------------------------------
# remove

def remove_column(state: DiagramState, name: str) -> tuple[DiagramState, ChangeSet]:
    ctx = state.context
    new_ctx, column = split_column(ctx, name)  # raises NotFound
    ni = ctx.attribute_index(name)
    nJ = column.extent
    n_attr2 = len(new_ctx.attributes)

    post_class = classify_remove(state, name)
    generated = [cid for cid, k in post_class.items() if k is PostClass.GENERATED]
    varied = [cid for cid, k in post_class.items() if k is PostClass.VARIED]

    # each retiring concept hands over to the concept of its shrunk intent
    generator_of: dict[int, int] = {}
    by_extent = {c.extent.bits: cid for cid, c in state.concepts.items()}
    for cid in generated:
        c = state.concepts[cid]
        shrunk = BitVec(_squeeze_bit(c.intent.bits, ni), n_attr2)
        target = new_ctx.derive_attributes(shrunk)
        generator_of[cid] = by_extent[target.bits]
    generator_ids = set(generator_of.values())
    really_old = [cid for cid, k in post_class.items()
                  if k is PostClass.OLD and cid not in generator_ids]
    redundant = not generated

    concepts2 = {}
    for cid, c in state.concepts.items():
        if post_class[cid] is PostClass.GENERATED:
            continue
        concepts2[cid] = Concept(cid, c.extent,
                                 BitVec(_squeeze_bit(c.intent.bits, ni), n_attr2))

    edges_added, edges_removed = _remove_edges(state, post_class, generated,
                                               generator_of, really_old)
    edges2 = _apply_edge_delta(state, edges_added, edges_removed)

    retired = frozenset(generated)
    gamma2 = dict(state.gamma)
    gamma_moves = {}
    for g, cid in state.gamma.items():
        if cid in retired:
            gamma2[g] = generator_of[cid]
            gamma_moves[g] = (cid, generator_of[cid])
    mu2 = dict(state.mu)
    mu_removed = {name: mu2.pop(name)}

    irr2, seeds2, seeds_added, seeds_removed, flip_cover = _remove_reducibility(
        state, post_class, name, generator_of, new_ctx)

    up2 = _remove_up_arrows(state, post_class, generator_of, new_ctx, nJ, name,
                            flip_cover)
    down2 = _remove_down_arrows(state, new_ctx, nJ, name)

    created = {gen: ret for ret, gen in generator_of.items()}
    new_state = DiagramState(
        context=new_ctx, concepts=concepts2,
        upper=_uppers_of(edges2, concepts2), lower=_lowers_of(edges2, concepts2),
        gamma=gamma2, mu=mu2, irreducibles=irr2, seeds=seeds2,
        up_arrows=up2, down_arrows=down2,
        version=state.version + 1, next_id=state.next_id)
    change = ChangeSet(
        direction="remove", column_name=name,
        column_extent=ctx.object_names(nJ),
        pre_class={cid: k.value for cid, k in post_class.items()},
        created=created, retired=retired,
        edges_added=frozenset(edges_added), edges_removed=frozenset(edges_removed),
        gamma_moves=gamma_moves, mu_added={}, mu_removed=mu_removed,
        seeds_added=seeds_added, seeds_removed=seeds_removed,
        up_added=up2 - state.up_arrows, up_removed=state.up_arrows - up2,
        down_added=down2 - state.down_arrows,
        down_removed=state.down_arrows - down2,
        redundant=redundant)
    return new_state, change


def _remove_edges(state, post_class, generated, generator_of, really_old):
    """Neighbourhood delta for a remove: drop everything incident to a
    retiring concept, then bridge each varied lower cover of a retiring
    concept to that concept's generator unless a really-old concept sits
    strictly between them."""
    concepts = state.concepts
    retired = set(generated)
    removed = set()
    for lo, ups in state.upper.items():
        for up in ups:
            if lo in retired or up in retired:
                removed.add((lo, up))
    added = set()
    old_extents = [concepts[cid].extent.bits for cid in really_old]
    tests = 0
    for cid in generated:
        gen = generator_of[cid]
        gen_bits = concepts[gen].extent.bits
        for a in state.lower[cid]:
            if post_class[a] is not PostClass.VARIED:
                continue
            abits = concepts[a].extent.bits
            tests += 1
            if not any(cbits != abits and cbits != gen_bits
                       and abits & ~cbits == 0 and cbits & ~gen_bits == 0
                       for cbits in old_extents):
                added.add((a, gen))
    COUNTERS.subset_tests += tests
    return added, removed


def _remove_reducibility(state, post_class, n_name, generator_of, new_ctx):
    """Flips on remove go one way: reducible attributes may recover
    irreducibility.  A reducible attribute comes back exactly when its
    concept is varied, covers one surviving old concept, and every other
    cover is retiring toward a generator above that old concept."""
    flipped: list[str] = []
    flip_cover: dict[str, int] = {}
    for m in state.context.attributes:
        if m == n_name or m in state.irreducibles:
            continue
        v = state.mu[m]
        if post_class[v] is not PostClass.VARIED:
            continue
        olds = [u for u in state.upper[v] if post_class[u] is PostClass.OLD]
        gens = [u for u in state.upper[v] if post_class[u] is PostClass.GENERATED]
        if len(olds) != 1 or len(olds) + len(gens) != len(state.upper[v]):
            continue
        anchor = olds[0]
        anchor_ext = state.concepts[anchor].extent
        if all(anchor_ext.issubset(state.concepts[generator_of[u]].extent)
               for u in gens):
            flipped.append(m)
            flip_cover[m] = anchor

    irr = set(state.irreducibles) - {n_name} | set(flipped)
    irr2 = frozenset(irr)
    seeds2 = {m: v for m, v in state.seeds.items() if m != n_name}
    seeds_removed = {}
    if n_name in state.seeds:
        seeds_removed[n_name] = state.seeds[n_name]
    seeds_added = {}
    for m in flipped:
        seed = default_seed_for(new_ctx.attributes, irr2, m)
        seeds2[m] = seed
        seeds_added[m] = seed
    return irr2, seeds2, seeds_added, seeds_removed, flip_cover


def _remove_up_arrows(state, post_class, generator_of, new_ctx, nJ, n_name,
                      flip_cover):
    """Up arrows after a remove: the outside-objects block against
    attributes properly inside the column is recomputed from the new
    unique upper cover of each such attribute; the rest carries over."""
    ctx = state.context
    inner = set()
    for mi, m in enumerate(ctx.attributes):
        if m != n_name and ctx.cols[mi] != nJ.bits and ctx.cols[mi] & ~nJ.bits == 0:
            inner.add(m)
    out = set()
    for g, m in state.up_arrows:
        if m == n_name:
            continue
        if m in inner and ctx.object_index(g) not in nJ:
            continue  # provably absent; dropped for symmetry with insert
        out.add((g, m))
    for m in inner:
        if m in flip_cover:
            cover = flip_cover[m]
        elif m in state.irreducibles:
            ups = state.upper[state.mu[m]]
            if len(ups) != 1:
                raise AssertionError(f"irreducible {m!r} lost its unique upper cover")
            (u,) = ups
            cover = generator_of[u] if post_class[u] is PostClass.GENERATED else u
        else:
            continue  # stays reducible, cannot take an up arrow
        cover_ext = state.concepts[cover].extent
        for gi in range(len(ctx.objects)):
            if gi not in nJ and gi in cover_ext:
                out.add((ctx.objects[gi], m))
    return frozenset(out)


def _remove_down_arrows(state, new_ctx, nJ, n_name):
    """Down arrows after a remove: arrows at objects outside the column
    survive; everything else, the inside strip and previous non-arrows,
    is re-evaluated against the definition on the shrunk context."""
    out = {(g, m) for g, m in state.down_arrows
           if m != n_name and new_ctx.object_index(g) not in nJ}
    above = _strict_supersets(new_ctx.rows)
    for gi, g in enumerate(new_ctx.objects):
        row = new_ctx.rows[gi]
        for mi, m in enumerate(new_ctx.attributes):
            if row >> mi & 1 or (g, m) in out:
                continue
            if above[gi] & ~new_ctx.cols[mi] == 0:
                out.add((g, m))
    return frozenset(out)


# ---------------------------------------------------------------------------
# shared edge plumbing

def _apply_edge_delta(state, added, removed):
    edges = {(lo, up) for lo, ups in state.upper.items() for up in ups}
    edges -= removed
    edges |= added
    return edges


def _uppers_of(edges, concepts) -> dict[int, frozenset[int]]:
    ups: dict[int, set[int]] = {cid: set() for cid in concepts}
    for lo, up in edges:
        ups[lo].add(up)
    return {cid: frozenset(v) for cid, v in ups.items()}


def _lowers_of(edges, concepts) -> dict[int, frozenset[int]]:
    lows: dict[int, set[int]] = {cid: set() for cid in concepts}
    for lo, up in edges:
        lows[up].add(lo)
    return {cid: frozenset(v) for cid, v in lows.items()}
