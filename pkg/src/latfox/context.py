"""Formal contexts: object/attribute tables with derivation operators.

A context is a finite binary relation between named objects and named
attributes.  Rows and columns are kept as int bitmasks so derivations
are a handful of word operations.  Names are the external identity of
objects and attributes; bit positions are an internal detail that may
shift when columns come and go.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitset import BitVec
from .errors import NameCollision, NotFound, UniverseMismatch


@dataclass(frozen=True)
class AttributeColumn:
    """A single named attribute column: its name and object extent."""

    name: str
    extent: BitVec


class FormalContext:
    """Immutable object/attribute incidence table.

    Attributes:
        objects: object names, in row order.
        attributes: attribute names, in column order.
        rows: per object, the bitmask of its attributes.
        cols: per attribute, the bitmask of its objects.
    """

    __slots__ = ("objects", "attributes", "rows", "cols",
                 "_object_index", "_attribute_index")

    def __init__(self, objects: Sequence[str], attributes: Sequence[str],
                 rows: Sequence[int]):
        objects = tuple(objects)
        attributes = tuple(attributes)
        if len(set(objects)) != len(objects):
            raise NameCollision("duplicate object name")
        if len(set(attributes)) != len(attributes):
            raise NameCollision("duplicate attribute name")
        if len(rows) != len(objects):
            raise ValueError("one row mask per object required")
        full = (1 << len(attributes)) - 1
        for r in rows:
            if r < 0 or r & ~full:
                raise ValueError("row mask outside attribute universe")
        cols = [0] * len(attributes)
        for gi, r in enumerate(rows):
            bits = r
            while bits:
                low = bits & -bits
                cols[low.bit_length() - 1] |= 1 << gi
                bits ^= low
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "attributes", attributes)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "cols", tuple(cols))
        object.__setattr__(self, "_object_index",
                           {g: i for i, g in enumerate(objects)})
        object.__setattr__(self, "_attribute_index",
                           {m: i for i, m in enumerate(attributes)})

    def __setattr__(self, name, value):
        raise AttributeError("FormalContext is immutable")

    @classmethod
    def from_pairs(cls, objects: Sequence[str], attributes: Sequence[str],
                   pairs: Iterable[tuple[str, str]]) -> "FormalContext":
        """Build from explicit (object, attribute) incidence pairs."""
        oindex = {g: i for i, g in enumerate(objects)}
        aindex = {m: i for i, m in enumerate(attributes)}
        rows = [0] * len(objects)
        for g, m in pairs:
            if g not in oindex:
                raise NotFound(f"unknown object {g!r}")
            if m not in aindex:
                raise NotFound(f"unknown attribute {m!r}")
            rows[oindex[g]] |= 1 << aindex[m]
        return cls(objects, attributes, rows)

    @classmethod
    def from_strings(cls, objects: Sequence[str], attributes: Sequence[str],
                     rows: Sequence[str]) -> "FormalContext":
        """Build from '.'/'X' row strings, one per object."""
        masks = []
        for r in rows:
            mask = 0
            for j, ch in enumerate(r):
                if ch == "X":
                    mask |= 1 << j
                elif ch != ".":
                    raise ValueError(f"illegal incidence character {ch!r}")
            if len(r) != len(attributes):
                raise ValueError("row length does not match attribute count")
            masks.append(mask)
        return cls(objects, attributes, masks)

    # identity helpers ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FormalContext)
                and self.objects == other.objects
                and self.attributes == other.attributes
                and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.objects, self.attributes, self.rows))

    def object_index(self, name: str) -> int:
        try:
            return self._object_index[name]
        except KeyError:
            raise NotFound(f"unknown object {name!r}") from None

    def attribute_index(self, name: str) -> int:
        try:
            return self._attribute_index[name]
        except KeyError:
            raise NotFound(f"unknown attribute {name!r}") from None

    def has_attribute(self, name: str) -> bool:
        return name in self._attribute_index

    def object_set(self, names: Iterable[str]) -> BitVec:
        return BitVec.from_indices(
            (self.object_index(g) for g in names), len(self.objects))

    def attribute_set(self, names: Iterable[str]) -> BitVec:
        return BitVec.from_indices(
            (self.attribute_index(m) for m in names), len(self.attributes))

    def object_names(self, aset: BitVec) -> tuple[str, ...]:
        if aset.size != len(self.objects):
            raise UniverseMismatch("not an object set of this context")
        return tuple(self.objects[i] for i in aset)

    def attribute_names(self, bset: BitVec) -> tuple[str, ...]:
        if bset.size != len(self.attributes):
            raise UniverseMismatch("not an attribute set of this context")
        return tuple(self.attributes[i] for i in bset)

    def incident(self, gi: int, mi: int) -> bool:
        return bool(self.rows[gi] >> mi & 1)

    def object_row(self, gi: int) -> BitVec:
        return BitVec(self.rows[gi], len(self.attributes))

    def attribute_extent(self, mi: int) -> BitVec:
        return BitVec(self.cols[mi], len(self.objects))

    def column(self, name: str) -> AttributeColumn:
        return AttributeColumn(name, self.attribute_extent(
            self.attribute_index(name)))

    # derivation operators --------------------------------------------

    def derive_objects(self, aset: BitVec) -> BitVec:
        """Attributes common to every object in aset (all of M if empty)."""
        if aset.size != len(self.objects):
            raise UniverseMismatch("not an object set of this context")
        mask = (1 << len(self.attributes)) - 1
        for gi in aset:
            mask &= self.rows[gi]
        return BitVec(mask, len(self.attributes))

    def derive_attributes(self, bset: BitVec) -> BitVec:
        """Objects having every attribute in bset (all of G if empty)."""
        if bset.size != len(self.attributes):
            raise UniverseMismatch("not an attribute set of this context")
        mask = (1 << len(self.objects)) - 1
        for mi in bset:
            mask &= self.cols[mi]
        return BitVec(mask, len(self.objects))

    def closure_attributes(self, bset: BitVec) -> BitVec:
        return self.derive_objects(self.derive_attributes(bset))

    def closure_objects(self, aset: BitVec) -> BitVec:
        return self.derive_attributes(self.derive_objects(aset))


def apposition(ctx: FormalContext, column: AttributeColumn) -> FormalContext:
    """Append a fresh attribute column to a context."""
    if ctx.has_attribute(column.name):
        raise NameCollision(f"attribute {column.name!r} already present")
    if column.extent.size != len(ctx.objects):
        raise UniverseMismatch("column extent is over a different object set")
    n = len(ctx.attributes)
    rows = [r | (1 << n if gi in column.extent else 0)
            for gi, r in enumerate(ctx.rows)]
    return FormalContext(ctx.objects, ctx.attributes + (column.name,), rows)


def split_column(ctx: FormalContext, name: str) -> tuple[FormalContext, AttributeColumn]:
    """Detach one attribute column, returning the remainder and the column."""
    mi = ctx.attribute_index(name)
    column = AttributeColumn(name, ctx.attribute_extent(mi))
    low = (1 << mi) - 1
    rows = [(r & low) | (r >> (mi + 1)) << mi for r in ctx.rows]
    attributes = ctx.attributes[:mi] + ctx.attributes[mi + 1:]
    return FormalContext(ctx.objects, attributes, rows), column
