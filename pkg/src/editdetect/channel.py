"""The per-block adversarial edit channel.

An :class:`ErrorPattern` lists, block by block, which original positions are
deleted and which (gap, bit) insertions are woven in.  Gap ``g`` places the
new bit immediately after original in-block position ``g``; gap ``0`` puts it
before the block's first original bit.  Gap ``ell`` (just past the block) and
gap ``0`` of the following block describe the same received string; such
aliases are resolved positionally when counts are attributed (see
:func:`model_count_vector` and the :mod:`editdetect.oracle` module).

The module also provides exhaustive and seeded-random pattern generators and
the text grammar used by the CLI: comma-separated entries ``B=del@P`` or
``B=ins@G:V`` with 1-based block ``B``, in-block position ``P``, gap ``G``,
and bit value ``V``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .bitstring import BitString, as_bits
from .errors import (
    BudgetExceeded,
    GapOutOfRange,
    LengthMismatch,
    PatternSyntaxError,
    TooLarge,
)
from .params import CodeParams, CountVector, Family


@dataclass(frozen=True)
class BlockEdit:
    """Edits applied to one block: sorted deletions and ordered insertions."""

    deletions: tuple[int, ...] = ()
    insertions: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if any(a >= b for a, b in zip(self.deletions, self.deletions[1:])):
            raise GapOutOfRange("deletion positions must be strictly increasing")
        gaps = [g for g, _ in self.insertions]
        if any(a > b for a, b in zip(gaps, gaps[1:])):
            raise GapOutOfRange("insertion gaps must be non-decreasing")
        if any(b not in (0, 1) for _, b in self.insertions):
            raise GapOutOfRange("inserted bits must be 0 or 1")

    @property
    def counts(self) -> tuple[int, int]:
        return len(self.deletions), len(self.insertions)

    def is_empty(self) -> bool:
        return not self.deletions and not self.insertions


EMPTY_EDIT = BlockEdit()


@dataclass(frozen=True)
class ErrorPattern:
    """One channel realization: a :class:`BlockEdit` per block."""

    blocks: tuple[BlockEdit, ...] = field(default_factory=tuple)

    def is_empty(self) -> bool:
        return all(b.is_empty() for b in self.blocks)

    def validate(self, params: CodeParams) -> "ErrorPattern":
        """Check block count, position ranges, and per-block budgets."""
        if len(self.blocks) != params.m:
            raise BudgetExceeded(
                f"pattern has {len(self.blocks)} blocks, code has {params.m}"
            )
        for j, edit in enumerate(self.blocks, start=1):
            d, i = edit.counts
            if params.single_edit_per_block:
                if d + i > 1:
                    raise BudgetExceeded(f"block {j}: at most one edit allowed")
            else:
                if d > params.del_budget:
                    raise BudgetExceeded(f"block {j}: {d} deletions exceed budget")
                if i > params.ins_budget:
                    raise BudgetExceeded(f"block {j}: {i} insertions exceed budget")
            if any(not 1 <= p <= params.ell for p in edit.deletions):
                raise GapOutOfRange(f"block {j}: deletion position outside [1, ell]")
            if any(not 0 <= g <= params.ell for g, _ in edit.insertions):
                raise GapOutOfRange(f"block {j}: insertion gap outside [0, ell]")
        return self


def apply_block(segment: str, edit: BlockEdit) -> str:
    """Apply one block's edits: drop deletions, then weave insertions."""
    if edit.is_empty():
        return segment
    deleted = set(edit.deletions)
    ins: dict[int, list[int]] = {}
    for g, b in edit.insertions:
        ins.setdefault(g, []).append(b)
    out: list[str] = []
    for g in range(len(segment) + 1):
        if g > 0 and g not in deleted:
            out.append(segment[g - 1])
        for b in ins.get(g, ()):
            out.append("1" if b else "0")
    return "".join(out)


def apply_pattern(
    params: CodeParams, x: BitString | str, pattern: ErrorPattern
) -> BitString:
    """Corrupt ``x`` block by block; any length-``n`` input is accepted."""
    bits = as_bits(x)
    if len(bits) != params.n:
        raise LengthMismatch(f"expected length {params.n}, got {len(bits)}")
    pattern.validate(params)
    ell = params.ell
    parts = [
        apply_block(bits[(j - 1) * ell : j * ell], edit)
        for j, edit in enumerate(pattern.blocks, start=1)
    ]
    return BitString("".join(parts))


def true_count_vector(pattern: ErrorPattern) -> CountVector:
    """Structural per-block counts, read straight off the pattern."""
    return CountVector(tuple(edit.counts for edit in pattern.blocks))


def model_count_vector(params: CodeParams, pattern: ErrorPattern) -> CountVector:
    """Per-block counts with boundary insertions attributed positionally.

    An insertion at gap ``ell`` of block ``j < m`` lands after the last
    original bit of block ``j``, so it counts toward block ``j + 1``.  For
    patterns without gap-``ell`` entries this equals
    :func:`true_count_vector`.
    """
    m = params.m
    dels = [len(e.deletions) for e in pattern.blocks]
    inss = [0] * m
    for j, edit in enumerate(pattern.blocks):
        for g, _ in edit.insertions:
            if g == params.ell and j < m - 1:
                inss[j + 1] += 1
            else:
                inss[j] += 1
    return CountVector(tuple(zip(dels, inss)))


# ---------------------------------------------------------------------------
# Exhaustive per-block edit spaces


def _deletion_edits(ell: int, budget: int) -> list[BlockEdit]:
    out = []
    for k in range(1, budget + 1):
        for combo in itertools.combinations(range(1, ell + 1), k):
            out.append(BlockEdit(deletions=combo))
    return out


def _insertion_edits(max_gap: int, budget: int) -> list[BlockEdit]:
    out = []
    gaps = range(max_gap + 1)
    if budget >= 1:
        for g in gaps:
            for b in (0, 1):
                out.append(BlockEdit(insertions=((g, b),)))
    if budget >= 2:
        for g1 in gaps:
            for g2 in range(g1, max_gap + 1):
                for b1 in (0, 1):
                    for b2 in (0, 1):
                        out.append(BlockEdit(insertions=((g1, b1), (g2, b2))))
    return out


@lru_cache(maxsize=None)
def block_edit_space(params: CodeParams, alias_free: bool = False) -> tuple[BlockEdit, ...]:
    """All budget-respecting edits of a single block, deterministic order.

    With ``alias_free=True`` insertion gaps stop at ``ell - 1``: every
    received string remains reachable (a gap-``ell`` insertion equals a
    gap-0 insertion of the next block), and structural counts coincide with
    the positional attribution of :func:`model_count_vector`.  The last
    block has no successor, so callers must keep the full space for it.
    """
    max_gap = params.ell - 1 if alias_free else params.ell
    edits: list[BlockEdit] = [EMPTY_EDIT]
    edits.extend(_deletion_edits(params.ell, params.del_budget))
    edits.extend(_insertion_edits(max_gap, params.ins_budget))
    return tuple(edits)


def block_edit_spaces(params: CodeParams, alias_free: bool) -> list[tuple[BlockEdit, ...]]:
    """Per-block edit spaces; alias-free trimming never applies to block m."""
    full = block_edit_space(params, alias_free=False)
    if not alias_free:
        return [full] * params.m
    trimmed = block_edit_space(params, alias_free=True)
    return [trimmed] * (params.m - 1) + [full]


def pattern_count(params: CodeParams, alias_free: bool = False) -> int:
    spaces = block_edit_spaces(params, alias_free)
    count = 1
    for s in spaces:
        count *= len(s)
    return count


def enumerate_patterns(
    params: CodeParams, limit: int = 10_000_000, alias_free: bool = False
) -> Iterator[ErrorPattern]:
    """Yield every budget-respecting pattern exactly once, empty one first."""
    total = pattern_count(params, alias_free)
    if total > limit:
        raise TooLarge(f"{total} patterns exceed the enumeration limit {limit}")
    spaces = block_edit_spaces(params, alias_free)
    for blocks in itertools.product(*spaces):
        yield ErrorPattern(blocks=blocks)


# ---------------------------------------------------------------------------
# Pattern text grammar


def format_pattern(pattern: ErrorPattern) -> str:
    parts = []
    for j, edit in enumerate(pattern.blocks, start=1):
        for p in edit.deletions:
            parts.append(f"{j}=del@{p}")
        for g, b in edit.insertions:
            parts.append(f"{j}=ins@{g}:{b}")
    return ",".join(parts)


def parse_pattern(text: str, params: CodeParams) -> ErrorPattern:
    """Parse the ``B=del@P`` / ``B=ins@G:V`` grammar and validate budgets."""
    dels: dict[int, list[int]] = {}
    inss: dict[int, list[tuple[int, int]]] = {}
    for raw in text.split(","):
        entry = raw.strip()
        if not entry:
            continue
        try:
            block_part, op_part = entry.split("=", 1)
            j = int(block_part)
            if op_part.startswith("del@"):
                dels.setdefault(j, []).append(int(op_part[4:]))
            elif op_part.startswith("ins@"):
                g_part, v_part = op_part[4:].split(":", 1)
                inss.setdefault(j, []).append((int(g_part), int(v_part)))
            else:
                raise ValueError("entry must use del@ or ins@")
        except ValueError as exc:
            raise PatternSyntaxError(f"bad pattern entry {entry!r}: {exc}") from exc
    for j in set(dels) | set(inss):
        if not 1 <= j <= params.m:
            raise PatternSyntaxError(f"block {j} outside [1, {params.m}]")
    blocks = []
    for j in range(1, params.m + 1):
        d = tuple(sorted(dels.get(j, ())))
        if len(set(d)) != len(d):
            raise PatternSyntaxError(f"block {j}: duplicate deletion position")
        i = tuple(sorted(inss.get(j, ()), key=lambda gi: gi[0]))
        try:
            blocks.append(BlockEdit(deletions=d, insertions=i))
        except GapOutOfRange as exc:
            raise PatternSyntaxError(str(exc)) from exc
    return ErrorPattern(blocks=tuple(blocks)).validate(params)


# ---------------------------------------------------------------------------
# Seeded random patterns (splitmix64)

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    """The splitmix64 finalizer: a 64-bit avalanche mix."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Minimal splitmix64 stream; identical output on every platform."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)

    def below(self, bound: int) -> int:
        """Unbiased uniform draw in ``[0, bound)`` via rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % bound


def block_stream(seed: int, block_index: int) -> SplitMix64:
    """Split an independent per-block stream off a master seed."""
    return SplitMix64(_mix64(seed) ^ _mix64((block_index + 1) * _GOLDEN))


def random_pattern(params: CodeParams, seed: int) -> ErrorPattern:
    """Deterministic pattern with one uniform per-block edit per stream."""
    space = block_edit_space(params)
    blocks = tuple(
        space[block_stream(seed, j).below(len(space))] for j in range(params.m)
    )
    return ErrorPattern(blocks=blocks)
