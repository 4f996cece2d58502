"""Fixed-universe bit vectors backed by Python integers.

Every set of objects or attributes in the package is a BitVec over a
universe of known size.  Mixing vectors from different universes is a
programming error and raises UniverseMismatch instead of silently
producing garbage.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import UniverseMismatch


class BitVec:
    """Immutable subset of {0, ..., size-1} stored as an int bitmask."""

    __slots__ = ("bits", "size")

    def __init__(self, bits: int, size: int):
        if size < 0:
            raise ValueError("size must be non-negative")
        if bits < 0 or bits >> size:
            raise ValueError("bits outside universe")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "size", size)

    def __setattr__(self, name, value):
        raise AttributeError("BitVec is immutable")

    @classmethod
    def empty(cls, size: int) -> "BitVec":
        return cls(0, size)

    @classmethod
    def full(cls, size: int) -> "BitVec":
        return cls((1 << size) - 1, size)

    @classmethod
    def from_indices(cls, indices: Iterable[int], size: int) -> "BitVec":
        bits = 0
        for i in indices:
            if not 0 <= i < size:
                raise ValueError(f"index {i} outside universe of size {size}")
            bits |= 1 << i
        return cls(bits, size)

    def _check(self, other: "BitVec") -> None:
        if self.size != other.size:
            raise UniverseMismatch(
                f"universe sizes differ: {self.size} vs {other.size}"
            )

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.size and bool(self.bits >> index & 1)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitVec)
            and self.bits == other.bits
            and self.size == other.size
        )

    def __hash__(self) -> int:
        return hash((self.bits, self.size))

    def __and__(self, other: "BitVec") -> "BitVec":
        self._check(other)
        return BitVec(self.bits & other.bits, self.size)

    def __or__(self, other: "BitVec") -> "BitVec":
        self._check(other)
        return BitVec(self.bits | other.bits, self.size)

    def __sub__(self, other: "BitVec") -> "BitVec":
        self._check(other)
        return BitVec(self.bits & ~other.bits, self.size)

    def complement(self) -> "BitVec":
        return BitVec(self.bits ^ (1 << self.size) - 1, self.size)

    def add(self, index: int) -> "BitVec":
        if not 0 <= index < self.size:
            raise ValueError(f"index {index} outside universe of size {self.size}")
        return BitVec(self.bits | 1 << index, self.size)

    def remove(self, index: int) -> "BitVec":
        if not 0 <= index < self.size:
            raise ValueError(f"index {index} outside universe of size {self.size}")
        return BitVec(self.bits & ~(1 << index), self.size)

    def issubset(self, other: "BitVec") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def ispropersubset(self, other: "BitVec") -> bool:
        self._check(other)
        return self.bits != other.bits and self.bits & ~other.bits == 0

    def isdisjoint(self, other: "BitVec") -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def __repr__(self) -> str:
        return f"BitVec({{{', '.join(map(str, self))}}}, size={self.size})"
