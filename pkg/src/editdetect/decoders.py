"""Block-by-block decoders for the four code families.

Each decoder reads only the received string and outputs the per-block edit
counts.  A cursor ``alpha`` tracks the start of the current block inside the
received string; after block ``j`` is classified, the cursor advances by
``ell + ins_j - del_j``.  The last block is classified from the number of
bits that remain past its start.

Probe positions are expressed as offsets from ``alpha``.  Every probe has a
name and an adjustable shift (``probe_shifts``), which exists purely so tests
can knock a probe off by one and confirm the exhaustive checker catches it.
"""

from __future__ import annotations

from functools import partial
from typing import Callable, Mapping

from .bitstring import BitString
from .errors import MalformedReceived
from .params import CodeParams, CountVector, Family

ProbeShifts = Mapping[str, int] | None

# Probe names per family, used by mutation tests and the CLI's test hook.
PROBE_NAMES: dict[Family, tuple[str, ...]] = {
    Family.DELETION: ("window",),
    Family.INSERT1: ("probe",),
    Family.INSERT2: ("pair0", "pair1", "zwin", "fresh"),
    Family.MIXED1: ("next", "tail", "inner"),
}


def _reader(y: BitString | str) -> tuple[Callable[[int], int], int]:
    """(1-based bit accessor, length) for either input type."""
    if isinstance(y, BitString):
        return y.bit, len(y)
    return (lambda i: ord(y[i - 1]) - 48), len(y)


def decode_deletions(
    params: CodeParams, y: BitString | str, probe_shifts: ProbeShifts = None
) -> CountVector:
    """Count deletions per block by scanning each block's trailing window.

    For block ``j`` the decoder reads the ``delta`` bits ending at
    ``alpha + ell - 1`` left to right.  All ones means the block arrived
    intact; otherwise a first zero at window offset ``beta`` means
    ``delta - beta + 1`` bits are missing, because the following block's
    leading zero run has shifted left by exactly that amount.
    """
    if params.family is not Family.DELETION:
        raise ValueError("decode_deletions requires a deletion-family code")
    shift = (probe_shifts or {}).get("window", 0)
    bit, total = _reader(y)
    ell, delta, m = params.ell, params.delta, params.m
    alpha = 1
    counts = []
    for _ in range(m - 1):
        d = 0
        for k in range(delta):
            idx = alpha + ell - delta + k + shift
            if not 1 <= idx <= total:
                raise MalformedReceived(f"probe {idx} outside received string")
            if bit(idx) == 0:
                d = delta - k
                break
        counts.append(d)
        alpha += ell - d
    d_last = (alpha + ell - 1) - total
    if not 0 <= d_last <= delta:
        raise MalformedReceived(f"last block implies {d_last} deletions")
    counts.append(d_last)
    return CountVector(tuple((d, 0) for d in counts))


def decode_ins1(
    params: CodeParams, y: BitString | str, probe_shifts: ProbeShifts = None
) -> CountVector:
    """Count single insertions per block with one probe past each block.

    ``y[alpha + ell]`` is the first position after an intact block-``j``
    window.  It reads 1 only when an insertion is charged to block ``j``
    (the block's final anchor 1 was pushed right, or an equivalent leftmost
    reading of a boundary insertion); otherwise the following block's
    leading anchor 0 sits there.
    """
    if params.family is not Family.INSERT1:
        raise ValueError("decode_ins1 requires an INSERT1 code")
    shift = (probe_shifts or {}).get("probe", 0)
    bit, total = _reader(y)
    ell, m = params.ell, params.m
    alpha = 1
    counts = []
    for _ in range(m - 1):
        idx = alpha + ell + shift
        if not 1 <= idx <= total:
            raise MalformedReceived(f"probe {idx} outside received string")
        i = bit(idx)
        counts.append(i)
        alpha += ell + i
    i_last = total - (alpha + ell - 1)
    if not 0 <= i_last <= 1:
        raise MalformedReceived(f"last block implies {i_last} insertions")
    counts.append(i_last)
    return CountVector(tuple((0, i) for i in counts))


def _pair(bit, total, a: int, b: int) -> tuple[int | None, int | None]:
    """Read two positions, mapping out-of-range reads to ``None``."""
    va = bit(a) if 1 <= a <= total else None
    vb = bit(b) if 1 <= b <= total else None
    return va, vb


def decode_ins2(
    params: CodeParams, y: BitString | str, probe_shifts: ProbeShifts = None
) -> CountVector:
    """Count up to two insertions per block.

    The pair just past the unextended block window separates the easy cases:
    ``(0,0)`` intact, ``(1,0)`` one insertion, ``(1,1)`` two.  The pair
    ``(0,1)`` is ambiguous between two insertions ending in ``...0,1`` and an
    intact block followed by a ``1`` inserted behind the next block's leading
    zero; the zero count ``z`` of the four bits after the pair separates all
    but ``z == 2``, which is settled by asking whether a fresh block can
    still open right after the pair (:func:`_fresh_block_viable`).  When it
    can, the tie goes to charging both insertions to the current block,
    matching the leftmost-attribution convention.
    """
    if params.family is not Family.INSERT2:
        raise ValueError("decode_ins2 requires an INSERT2 code")
    shifts = probe_shifts or {}
    s_pair0 = shifts.get("pair0", 0)
    s_pair1 = shifts.get("pair1", 0)
    s_zwin = shifts.get("zwin", 0)
    s_fresh = shifts.get("fresh", 0)
    bit, total = _reader(y)
    ell, m = params.ell, params.m
    alpha = 1
    counts = []
    for j in range(1, m):
        a = alpha + ell + s_pair0
        b = alpha + ell + 1 + s_pair1
        if not (1 <= a <= total and 1 <= b <= total):
            raise MalformedReceived("boundary pair outside received string")
        pair = (bit(a), bit(b))
        if pair == (0, 0):
            i = 0
        elif pair == (1, 0):
            i = 1
        elif pair == (1, 1):
            i = 2
        else:
            start = alpha + ell + 2 + s_zwin
            if not 1 <= start + 3 <= total:
                raise MalformedReceived("zero-count window outside received string")
            w = tuple(bit(start + k) for k in range(4))
            z = 4 - sum(w)
            if z <= 1:
                i = 0
            elif z >= 3:
                i = 2
            else:
                fresh = _fresh_block_viable(
                    bit, total, alpha + ell + 2 + s_fresh, ell, last=(j + 1 == m)
                )
                i = 2 if fresh else 0
        counts.append(i)
        alpha += ell + i
    i_last = total - (alpha + ell - 1)
    if not 0 <= i_last <= 2:
        raise MalformedReceived(f"last block implies {i_last} insertions")
    counts.append(i_last)
    return CountVector(tuple((0, i) for i in counts))


# Anchor template of an interior/last block: head 00111, tail 011, free middle.
def _anchor(ell: int, c: int) -> int | None:
    if c <= 5:
        return 0 if c <= 2 else 1
    if c >= ell - 2:
        return 0 if c == ell - 2 else 1
    return None


def _fresh_block_viable(bit, total: int, start: int, ell: int, last: bool) -> bool:
    """Can a block open at ``start`` with ``t ∈ [0,2]`` insertions woven in?

    Matches the received bits against the block's anchor template (head
    ``00111``, tail ``011``), allowing up to ``t`` extra bits anywhere
    before the block's final anchor 1.  For the last block ``t`` is pinned
    by the number of remaining bits, and the extra bits may also trail the
    final anchor (a last block has no successor to own them).
    """
    if last:
        t = total - (start + ell - 1)
        candidates = (t,) if 0 <= t <= 2 else ()
    else:
        candidates = tuple(t for t in (0, 1, 2) if start + ell + t - 1 <= total)
    for t in candidates:
        # states: set of content cursors c after consuming r received bits
        cursors = {0}
        for r in range(ell + t):
            v = bit(start + r)
            nxt = set()
            for c in cursors:
                want = _anchor(ell, c + 1)
                if c < ell and (want is None or want == v):
                    nxt.add(c + 1)
                if (r - c) < t and (c < ell or last):  # this bit as an insertion
                    nxt.add(c)
            cursors = nxt
            if not cursors:
                break
        if ell in cursors:
            return True
    return False


def decode_mixed1(
    params: CodeParams, y: BitString | str, probe_shifts: ProbeShifts = None
) -> CountVector:
    """Classify each block as intact, one deletion, or one insertion.

    Probes relative to the block start ``alpha``: ``next`` at
    ``alpha + ell`` (first position past an intact block), ``tail`` at
    ``alpha + ell - 1`` (the block's final anchor 1 when intact), and
    ``inner`` at ``alpha + ell - 3`` (the anchor 0 of the block's trailing
    011 when intact).  An intact block shows (next, tail, inner) =
    (0, 1, 0): the following block's leading zeros sit on ``next``.  A lost
    bit drags zeros left onto ``tail`` (or, when the loss is inside the
    trailing anchor, flips ``inner`` to 1).  An insertion charged to the
    block pushes the final anchor 1 onto ``next``; ``next`` can also read an
    inserted 1 sitting two bits behind a shortened block, which the
    ``tail``/``inner`` pair exposes as a deletion.
    """
    if params.family is not Family.MIXED1:
        raise ValueError("decode_mixed1 requires a MIXED1 code")
    shifts = probe_shifts or {}
    s_next = shifts.get("next", 0)
    s_tail = shifts.get("tail", 0)
    s_inner = shifts.get("inner", 0)
    bit, total = _reader(y)
    ell, m = params.ell, params.m
    alpha = 1
    counts: list[tuple[int, int]] = []
    for _ in range(m - 1):
        p_next = alpha + ell + s_next
        p_tail = alpha + ell - 1 + s_tail
        p_inner = alpha + ell - 3 + s_inner
        for idx in (p_next, p_tail, p_inner):
            if not 1 <= idx <= total:
                raise MalformedReceived(f"probe {idx} outside received string")
        nxt, tail, inner = bit(p_next), bit(p_tail), bit(p_inner)
        if nxt == 1:
            d, i = (1, 0) if (tail, inner) == (0, 1) else (0, 1)
        else:
            d, i = (0, 0) if (tail, inner) == (1, 0) else (1, 0)
        counts.append((d, i))
        alpha += ell + i - d
    remaining = total - (alpha - 1)
    if remaining == ell:
        counts.append((0, 0))
    elif remaining == ell - 1:
        counts.append((1, 0))
    elif remaining == ell + 1:
        counts.append((0, 1))
    else:
        raise MalformedReceived(f"last block has {remaining} bits")
    return CountVector(tuple(counts))


_DECODERS = {
    Family.DELETION: decode_deletions,
    Family.INSERT1: decode_ins1,
    Family.INSERT2: decode_ins2,
    Family.MIXED1: decode_mixed1,
}


def decode(
    params: CodeParams, y: BitString | str, probe_shifts: ProbeShifts = None
) -> CountVector:
    """Dispatch to the family's decoder."""
    return _DECODERS[params.family](params, y, probe_shifts)


def decoder_for(params: CodeParams) -> Callable[[BitString | str], CountVector]:
    """A picklable single-argument decoder bound to ``params``."""
    return partial(decode, params)


def shifted_decoder(
    params: CodeParams, probe: str, shift: int
) -> Callable[[BitString | str], CountVector]:
    """A decoder with one named probe knocked off by ``shift`` (tests only)."""
    if probe not in PROBE_NAMES[params.family]:
        raise ValueError(f"unknown probe {probe!r} for {params.family.value}")
    return partial(decode, params, probe_shifts={probe: shift})
