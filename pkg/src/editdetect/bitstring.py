"""Immutable bit strings with 1-based positional access.

All public position arguments in this package are 1-based: ``bit(1)`` is the
first bit, ``bit(len(s))`` the last, and ``substring(i, j)`` is inclusive on
both ends.  The empty range ``i == j + 1`` is allowed and yields the empty
string.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class BitString:
    """An immutable, hashable sequence of bits stored as a '0'/'1' text."""

    bits: str

    def __post_init__(self) -> None:
        if self.bits.strip("01"):
            bad = self.bits.strip("01")[0]
            raise ValueError(f"bit strings may contain only '0' and '1', got {bad!r}")

    @classmethod
    def from_ints(cls, values: Iterable[int]) -> "BitString":
        return cls("".join("1" if v else "0" for v in values))

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    def __iter__(self) -> Iterator[int]:
        return (ord(c) - 48 for c in self.bits)

    def __add__(self, other: "BitString") -> "BitString":
        return BitString(self.bits + other.bits)

    def bit(self, i: int) -> int:
        """Return bit at 1-based position ``i``."""
        if not 1 <= i <= len(self.bits):
            raise IndexError(f"position {i} outside [1, {len(self.bits)}]")
        return ord(self.bits[i - 1]) - 48

    def substring(self, i: int, j: int) -> "BitString":
        """Return bits ``i..j`` inclusive; ``i == j + 1`` gives the empty string."""
        if not (1 <= i <= j + 1 and j <= len(self.bits)):
            raise IndexError(f"range [{i}, {j}] invalid for length {len(self.bits)}")
        return BitString(self.bits[i - 1 : j])

    def block(self, j: int, ell: int) -> "BitString":
        """Return the ``j``-th consecutive block of ``ell`` bits (1-based ``j``)."""
        return self.substring((j - 1) * ell + 1, j * ell)


def as_bits(y: "BitString | str") -> str:
    """Accept either a BitString or a raw '0'/'1' text and return the text."""
    return y.bits if isinstance(y, BitString) else y
