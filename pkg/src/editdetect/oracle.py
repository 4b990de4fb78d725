"""Ground-truth attribution of edits to blocks by exhaustive enumeration.

Different channel realizations can produce the same received string.  The
decoding convention resolves ties in three ordered steps: among all
realizations consistent with a (codeword, received) pair, (1) keep the
vectors with the fewest total edits, (2) of those, keep the vectors with the
lexicographically largest per-block insertion counts, and (3) break the
remaining ties by the lexicographically smallest deletion counts.  Step (1)
only matters for the mixed family, where deleting a bit and re-inserting its
value across a block boundary reproduces the sent string: the convention
reads that as "no errors".  Steps (2) and (3) pull insertions toward earlier
blocks and push deletions toward later blocks, which is exactly the
"leftmost equivalent edit" reading used by the decoders: an inserted bit
that duplicates a block's final bit is charged to that block, and a boundary
transposition is read as insert-early / delete-late.

Enumeration runs over alias-free patterns (insertion gaps up to ``ell - 1``
except in the last block).  Every reachable string stays reachable, since a
gap-``ell`` insertion produces the same string as a gap-0 insertion of the
next block, and structural pattern counts then agree with the positional
attribution of :func:`editdetect.channel.model_count_vector`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .bitstring import BitString, as_bits
from .channel import apply_block, block_edit_spaces
from .errors import LengthMismatch, Unreachable
from .params import CodeParams, CountVector


RawVector = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class AttributionResult:
    """All consistent count vectors for one (codeword, received) pair."""

    vectors: frozenset[CountVector]
    canonical: CountVector


def block_options(
    params: CodeParams, x: BitString | str
) -> list[list[tuple[str, tuple[int, int]]]]:
    """Per block: deduplicated (edited segment, counts) alternatives."""
    bits = as_bits(x)
    if len(bits) != params.n:
        raise LengthMismatch(f"expected length {params.n}, got {len(bits)}")
    ell = params.ell
    options: list[list[tuple[str, tuple[int, int]]]] = []
    for j, space in enumerate(block_edit_spaces(params, alias_free=True)):
        seg = bits[j * ell : (j + 1) * ell]
        seen: dict[tuple[str, tuple[int, int]], None] = {}
        for edit in space:
            seen.setdefault((apply_block(seg, edit), edit.counts), None)
        options.append(list(seen))
    return options


@lru_cache(maxsize=128)
def _segment_maps_cached(
    params: CodeParams, xbits: str
) -> tuple[dict[str, frozenset[tuple[int, int]]], ...]:
    maps: list[dict[str, frozenset[tuple[int, int]]]] = []
    for opts in block_options(params, xbits):
        acc: dict[str, set[tuple[int, int]]] = {}
        for seg, counts in opts:
            acc.setdefault(seg, set()).add(counts)
        maps.append({seg: frozenset(c) for seg, c in acc.items()})
    return tuple(maps)


def segment_maps(
    params: CodeParams, x: BitString | str
) -> tuple[dict[str, frozenset[tuple[int, int]]], ...]:
    """Per block: edited segment -> all per-block counts that produce it."""
    return _segment_maps_cached(params, as_bits(x))


def consistent_raw(params: CodeParams, x: BitString | str, y: BitString | str) -> set[RawVector]:
    """All count vectors of admissible realizations mapping ``x`` to ``y``.

    Walks the blocks left to right; a block's edited segment is one of a few
    known lengths, so candidate segments are sliced off the received string
    and looked up in the per-block segment maps.
    """
    ys = as_bits(y)
    maps = segment_maps(params, x)
    lengths = [sorted({len(seg) for seg in mp}) for mp in maps]
    m = params.m
    found: set[RawVector] = set()

    def walk(j: int, pos: int, acc: list[frozenset[tuple[int, int]]]) -> None:
        if j == m:
            if pos == len(ys):
                for combo in _expand(acc):
                    found.add(combo)
            return
        for length in lengths[j]:
            counts = maps[j].get(ys[pos : pos + length]) if pos + length <= len(ys) else None
            if counts:
                walk(j + 1, pos + length, acc + [counts])

    walk(0, 0, [])
    return found


def _expand(choice_sets: list[frozenset[tuple[int, int]]]) -> list[RawVector]:
    out: list[RawVector] = [()]
    for counts in choice_sets:
        out = [v + (c,) for v in out for c in counts]
    return out


def consistent_vectors(
    params: CodeParams, x: BitString | str, y: BitString | str
) -> frozenset[CountVector]:
    """Public wrapper over :func:`consistent_raw`; empty iff unreachable."""
    return frozenset(CountVector(v) for v in consistent_raw(params, x, y))


def canonical_from_raw(vectors: Sequence[RawVector] | set[RawVector]) -> RawVector:
    """Fewest edits, then lexicographically maximal insertions, then minimal deletions."""
    if not vectors:
        raise Unreachable("no consistent count vector")
    least = min(sum(d + i for d, i in v) for v in vectors)
    pool = [v for v in vectors if sum(d + i for d, i in v) == least]
    best_ins = max(tuple(i for _, i in v) for v in pool)
    ties = [v for v in pool if tuple(i for _, i in v) == best_ins]
    return min(ties, key=lambda v: tuple(d for d, _ in v))


def canonical_vector(
    params: CodeParams, x: BitString | str, y: BitString | str
) -> CountVector:
    """The convention-selected vector for ``(x, y)``; raises if unreachable."""
    return CountVector(canonical_from_raw(consistent_raw(params, x, y)))


def attribution(
    params: CodeParams, x: BitString | str, y: BitString | str
) -> AttributionResult:
    raw = consistent_raw(params, x, y)
    return AttributionResult(
        vectors=frozenset(CountVector(v) for v in raw),
        canonical=CountVector(canonical_from_raw(raw)),
    )


def reachable_map(params: CodeParams, x: BitString | str) -> dict[str, set[RawVector]]:
    """Every string reachable from ``x`` mapped to its consistent vectors.

    Equivalent to running :func:`consistent_raw` on each reachable string,
    but grouped in one product sweep over the per-block alternatives.
    """
    acc: dict[str, set[RawVector]] = {"": {()}}
    for opts in block_options(params, x):
        nxt: dict[str, set[RawVector]] = {}
        for prefix, vecs in acc.items():
            for seg, counts in opts:
                key = prefix + seg
                bucket = nxt.get(key)
                if bucket is None:
                    bucket = nxt[key] = set()
                for v in vecs:
                    bucket.add(v + (counts,))
        acc = nxt
    return acc
