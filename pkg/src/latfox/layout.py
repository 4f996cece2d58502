"""Additive diagram geometry.

Every irreducible attribute owns a seed vector; a concept sits at the
sum of the seeds of the irreducible attributes in its intent.  Nothing
else about geometry is stored, so node positions of untouched concepts
cannot drift when the diagram is edited.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple


class Vec2(NamedTuple):
    x: float
    y: float

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)


SEED_SPACING = 2.0


def default_seed(rank: int, count: int) -> Vec2:
    """Seed for the rank-th of count irreducibles: a fan one level down."""
    width = SEED_SPACING * (count - 1)
    return Vec2(rank * SEED_SPACING - width / 2, -1.0)


def default_seed_for(attribute_order: Iterable[str], irreducibles: frozenset[str],
                     name: str) -> Vec2:
    ranked = [m for m in attribute_order if m in irreducibles]
    return default_seed(ranked.index(name), len(ranked))


def position(attribute_order: Iterable[str], intent_names: frozenset[str],
             seeds: dict[str, Vec2]) -> Vec2:
    pos = Vec2(0.0, 0.0)
    for m in attribute_order:
        if m in intent_names and m in seeds:
            pos = pos + seeds[m]
    return pos
