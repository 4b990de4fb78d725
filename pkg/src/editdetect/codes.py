"""The four code constructions: fixed positions, membership, and encoding.

Every family is a fixed-position code: a codeword is any length-``n`` string
that carries prescribed bit values at a prescribed set of positions.  The
anchor runs per family (1-based positions inside each block):

* DELETION ``D_delta``: block 1 ends with ``1^delta``; interior blocks start
  with ``0^(delta+1)`` and end with ``1^delta``; the last block starts with
  ``0^(delta+1)``.
* INSERT1 ``I_1``: block 1 ends with ``1``; interior blocks start with ``0``
  and end with ``1``; the last block starts with ``0``.
* INSERT2 ``I_2``: block 1 ends with ``011``; blocks 2..m all start with
  ``00111`` and end with ``011``.
* MIXED1 ``C_1``: block 1 ends with ``011``; interior blocks start with
  ``000`` and end with ``011``; the last block starts with ``000``.

Encoding is systematic: message bits fill the unconstrained positions in
increasing position order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .bitstring import BitString, as_bits
from .errors import LengthMismatch, TooLarge
from .params import CodeParams, Family, redundancy

# Enumeration guards: free-message width for codeword streams, total string
# count for full-space membership scans.
MAX_MESSAGE_BITS = 30
MAX_SCAN_N = 24


@dataclass(frozen=True)
class FixedPositionMap:
    """Sorted (position, bit) constraints defining one code instance."""

    entries: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def mask_value(self, n: int) -> tuple[int, int]:
        """Integer (mask, value) with position 1 at the most significant bit."""
        mask = 0
        value = 0
        for pos, bit in self.entries:
            weight = 1 << (n - pos)
            mask |= weight
            if bit:
                value |= weight
        return mask, value


def _anchor_runs(params: CodeParams) -> tuple[str, str]:
    """(head, tail) anchor strings for a block that carries them."""
    if params.family is Family.DELETION:
        d = params.delta
        return "0" * (d + 1), "1" * d  # type: ignore[operator]
    if params.family is Family.INSERT1:
        return "0", "1"
    if params.family is Family.INSERT2:
        return "00111", "011"
    return "000", "011"


@lru_cache(maxsize=None)
def fixed_positions(params: CodeParams) -> FixedPositionMap:
    """Materialize the construction of ``params`` as position constraints."""
    head, tail = _anchor_runs(params)
    ell, m = params.ell, params.m
    # INSERT2 anchors both ends of the last block; the other families only
    # anchor its head.
    last_has_tail = params.family is Family.INSERT2
    entries: list[tuple[int, int]] = []

    def put(base: int, offset: int, run: str) -> None:
        for k, c in enumerate(run):
            entries.append((base + offset + k, ord(c) - 48))

    for j in range(1, m + 1):
        base = (j - 1) * ell
        if j > 1:
            put(base, 1, head)
        if j < m or last_has_tail:
            put(base, ell - len(tail) + 1, tail)
    entries.sort()
    fp = FixedPositionMap(tuple(entries))
    assert len(fp) == redundancy(params)
    return fp


@lru_cache(maxsize=None)
def free_positions(params: CodeParams) -> tuple[int, ...]:
    """Unconstrained positions in increasing order; these carry the message."""
    fixed = set(fixed_positions(params).positions)
    return tuple(p for p in range(1, params.n + 1) if p not in fixed)


def is_codeword(params: CodeParams, x: BitString | str) -> bool:
    """True iff ``x`` has length ``n`` and matches every fixed position."""
    bits = as_bits(x)
    if len(bits) != params.n:
        return False
    return all(ord(bits[pos - 1]) - 48 == bit for pos, bit in fixed_positions(params).entries)


def encode(params: CodeParams, message: BitString | str) -> BitString:
    """Place ``message`` on the free positions and the anchors everywhere else."""
    msg = as_bits(message)
    free = free_positions(params)
    if len(msg) != len(free):
        raise LengthMismatch(
            f"{params.label()} takes {len(free)} message bits, got {len(msg)}"
        )
    chars = [""] * params.n
    for pos, bit in fixed_positions(params).entries:
        chars[pos - 1] = "1" if bit else "0"
    for pos, c in zip(free, msg):
        chars[pos - 1] = c
    return BitString("".join(chars))


def message_bits(params: CodeParams, x: BitString | str) -> BitString:
    """Read back the free positions of ``x`` (the inverse of :func:`encode`)."""
    bits = as_bits(x)
    if len(bits) != params.n:
        raise LengthMismatch(f"expected length {params.n}, got {len(bits)}")
    return BitString("".join(bits[p - 1] for p in free_positions(params)))


def enumerate_codewords(
    params: CodeParams, max_message_bits: int = MAX_MESSAGE_BITS
) -> Iterator[BitString]:
    """Yield all codewords in lexicographic message order."""
    k = params.n - redundancy(params)
    if k > max_message_bits:
        raise TooLarge(f"{2 ** k} codewords exceed the enumeration guard")
    for v in range(1 << k):
        yield encode(params, format(v, f"0{k}b") if k else "")


def scan_codewords(params: CodeParams, max_n: int = 16) -> list[str]:
    """Membership scan over all ``2^n`` strings (small ``n`` only)."""
    if params.n > max_n:
        raise TooLarge(f"full scan of 2^{params.n} strings refused")
    n = params.n
    return [
        w
        for v in range(1 << n)
        if is_codeword(params, w := format(v, f"0{n}b"))
    ]


def count_codewords_by_scan(params: CodeParams, max_n: int = MAX_SCAN_N) -> int:
    """Count members among all ``2^n`` strings via a vectorized mask compare.

    Equivalent to ``len(scan_codewords(params))`` but feasible up to
    ``n = MAX_SCAN_N``; agreement with the per-string scan is covered by
    tests at small ``n``.
    """
    if params.n > max_n:
        raise TooLarge(f"full scan of 2^{params.n} strings refused")
    mask, value = fixed_positions(params).mask_value(params.n)
    total = 0
    chunk = 1 << 20
    for start in range(0, 1 << params.n, chunk):
        stop = min(start + chunk, 1 << params.n)
        vals = np.arange(start, stop, dtype=np.uint64)
        total += int(np.count_nonzero((vals & np.uint64(mask)) == np.uint64(value)))
    return total
