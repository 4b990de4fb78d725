"""Ground-truth validation: exhaustive decoder checks, code-validity and
block-decodability checkers, converse-bound formulas, necessary-condition
audits, and exact maximum-code search at tiny parameters.

Everything here is exact: decoders are compared against the enumeration
oracle scenario by scenario, and the maximum-code search solves a maximum
independent set on the full confusability graph by branch and bound.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .bitstring import BitString, as_bits
from .channel import format_pattern
from .codes import enumerate_codewords
from .decoders import decoder_for
from .errors import MalformedReceived, RangeViolation, TooLarge
from .oracle import block_options, canonical_from_raw, reachable_map
from .params import CodeParams, CountVector, redundancy


@dataclass
class VerificationReport:
    """Outcome of one verification run, JSON-serializable.

    ``counterexample`` is present exactly when a decoder/validity check
    failed; audits and searches report through ``metrics``/``witness``.
    """

    kind: str
    params: dict
    passed: bool
    counterexample: dict | None = None
    metrics: dict = field(default_factory=dict)
    witness: tuple[str, ...] | None = None
    detail: str | None = None

    def to_json_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "params": self.params,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "metrics": self.metrics,
        }
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class BoundValues:
    """Redundancy lower bounds (bits) for codes counting per-block deletions."""

    bound1: float
    bound_thm2: float
    bound_thm3: float
    epsilon: float
    construction_redundancy: int
    m: int
    thm2_applicable: bool

    def size_cap(self, n: int, block_decodable: bool) -> int:
        """Largest code size compatible with the applicable bounds."""
        bound = self.bound_thm3 if block_decodable else self.bound1
        if not block_decodable and self.thm2_applicable:
            bound = max(bound, self.bound_thm2)
        return math.floor(2 ** (n - bound) + 1e-9)


def bounds(delta: int, ell: int, n: int) -> BoundValues:
    """Evaluate the converse bounds for deletion-counting codes."""
    if delta < 1 or 2 * delta >= ell:
        raise RangeViolation(f"2*delta < ell required, got delta={delta}, ell={ell}")
    if n % ell != 0 or 2 * ell > n:
        raise RangeViolation(f"ell must divide n with ell <= n/2, got {ell}, {n}")
    m = n // ell
    eps = 2 * delta - math.log2(2 ** (2 * delta) - 1)
    return BoundValues(
        bound1=float(2 * delta * (m - 1)),
        bound_thm2=2 * delta * (m - 1) + eps * (m - 2),
        bound_thm3=float((2 * delta + 1) * (m - 1)),
        epsilon=eps,
        construction_redundancy=(2 * delta + 1) * (m - 1),
        m=m,
        thm2_applicable=m >= 3,
    )


# ---------------------------------------------------------------------------
# Exhaustive decoder check


def _params_dict(params: CodeParams) -> dict:
    return {
        "family": params.family.value,
        "delta": params.delta,
        "ell": params.ell,
        "n": params.n,
    }


def _find_pattern_for(params: CodeParams, x: str, y: str) -> str:
    """One alias-free pattern mapping x to y, for counterexample reports."""
    from .channel import apply_block, block_edit_spaces

    ell, m = params.ell, params.m
    spaces = block_edit_spaces(params, alias_free=True)

    def walk(j: int, pos: int, acc: tuple) -> tuple | None:
        if j == m:
            return acc if pos == len(y) else None
        seg0 = x[j * ell : (j + 1) * ell]
        for edit in spaces[j]:
            seg = apply_block(seg0, edit)
            if y.startswith(seg, pos):
                got = walk(j + 1, pos + len(seg), acc + (edit,))
                if got is not None:
                    return got
        return None

    blocks = walk(0, 0, ())
    if blocks is None:
        return "<unreachable>"
    from .channel import ErrorPattern

    return format_pattern(ErrorPattern(blocks=blocks))


def check_decoder_exhaustive(
    params: CodeParams,
    decoder: Callable[[str], CountVector] | None = None,
    limit: int = 50_000_000,
    jobs: int = 1,
) -> VerificationReport:
    """Compare a decoder with the canonical oracle on every scenario.

    Iterates every codeword and every admissible channel realization
    (grouped by received string) and asserts the decoder output equals the
    canonical vector.  Fails with the first counterexample in codeword
    order.
    """
    from .channel import pattern_count

    k = params.n - redundancy(params)
    per_word = pattern_count(params, alias_free=True)
    total = (1 << k) * per_word
    if total > limit:
        raise TooLarge(f"about {total} scenarios exceed the limit {limit}")
    decoder = decoder or decoder_for(params)

    t0 = time.perf_counter()
    if jobs > 1:
        failure, n_words, n_y, n_scen = _exhaustive_parallel(params, decoder, jobs)
    else:
        failure, n_words, n_y, n_scen = _exhaustive_chunk(
            params, decoder, 0, 1 << k
        )
    metrics = {
        "codewords": n_words,
        "received_strings": n_y,
        "scenarios": n_scen,
        "elapsed_s": round(time.perf_counter() - t0, 3),
    }
    if failure is None:
        return VerificationReport(
            kind="DecoderExhaustive",
            params=_params_dict(params),
            passed=True,
            metrics=metrics,
        )
    x, y, expected, got = failure
    return VerificationReport(
        kind="DecoderExhaustive",
        params=_params_dict(params),
        passed=False,
        counterexample={
            "x": x,
            "pattern": _find_pattern_for(params, x, y),
            "received": y,
            "expected": expected,
            "got": got,
        },
        metrics=metrics,
    )


def _exhaustive_chunk(
    params: CodeParams,
    decoder: Callable[[str], CountVector],
    lo: int,
    hi: int,
) -> tuple[tuple | None, int, int, int]:
    """Scan codewords with message index in [lo, hi); first failure wins."""
    from .codes import encode

    k = params.n - redundancy(params)
    n_y = 0
    n_scen = 0
    for v in range(lo, hi):
        x = encode(params, format(v, f"0{k}b") if k else "").bits
        rm = reachable_map(params, x)
        n_y += len(rm)
        for y, vecs in sorted(rm.items()):
            n_scen += len(vecs)
            expected = canonical_from_raw(vecs)
            try:
                got = decoder(y).pairs
            except MalformedReceived as exc:
                got = f"MalformedReceived: {exc}"
            if got != expected:
                return (
                    (x, y, _vec_str(expected), got if isinstance(got, str) else _vec_str(got)),
                    v - lo + 1,
                    n_y,
                    n_scen,
                )
    return None, hi - lo, n_y, n_scen


def _vec_str(pairs: tuple) -> str:
    return CountVector(tuple(pairs)).format_plain()


def _worker(args):
    params, decoder, lo, hi = args
    return _exhaustive_chunk(params, decoder, lo, hi)


def _exhaustive_parallel(params, decoder, jobs):
    """Deterministic parallel scan: chunk by codeword index, merge in order."""
    import multiprocessing as mp

    k = params.n - redundancy(params)
    total = 1 << k
    step = max(1, (total + jobs - 1) // jobs)
    chunks = [(params, decoder, lo, min(lo + step, total)) for lo in range(0, total, step)]
    with mp.Pool(processes=min(jobs, len(chunks))) as pool:
        results = pool.map(_worker, chunks)
    n_words = n_y = n_scen = 0
    first_failure = None
    for (failure, w, ys, sc), (_, _, lo, _hi) in zip(results, chunks):
        n_words += w
        n_y += ys
        n_scen += sc
        if failure is not None and first_failure is None:
            first_failure = failure
    return first_failure, n_words, n_y, n_scen


# ---------------------------------------------------------------------------
# Deletion-channel validity and block decodability for arbitrary string sets


def _deletion_scenarios(words: Sequence[str], ell: int, delta: int, limit: int):
    """Yield (index, y, vector) over all per-block <=delta deletion patterns."""
    if not words:
        return
    n = len(words[0])
    if n % ell != 0:
        raise RangeViolation(f"ell={ell} does not divide word length {n}")
    m = n // ell
    per_block = [()] + [
        combo for k in range(1, delta + 1) for combo in itertools.combinations(range(1, ell + 1), k)
    ]
    if len(words) * len(per_block) ** m > limit:
        raise TooLarge("deletion scenario count exceeds the limit")
    for idx, w in enumerate(words):
        if len(w) != n:
            raise RangeViolation("all words must share one length")
        blocks = [w[j * ell : (j + 1) * ell] for j in range(m)]
        segs = [
            [("".join(c for p, c in enumerate(b, 1) if p not in set(combo)), len(combo))
             for combo in per_block]
            for b in blocks
        ]
        for choice in itertools.product(*segs):
            y = "".join(s for s, _ in choice)
            vec = tuple(d for _, d in choice)
            yield idx, y, vec


def check_code_validity(
    code: Iterable[BitString | str], ell: int, delta: int, limit: int = 20_000_000
) -> VerificationReport:
    """A set of words counts deletions per block iff no received string is
    reachable under two different count vectors (across all word pairs,
    including a word with itself)."""
    words = sorted({as_bits(w) for w in code})
    t0 = time.perf_counter()
    seen: dict[str, tuple[tuple[int, ...], int]] = {}
    counterexample = None
    scenarios = 0
    for idx, y, vec in _deletion_scenarios(words, ell, delta, limit):
        scenarios += 1
        prior = seen.get(y)
        if prior is None:
            seen[y] = (vec, idx)
        elif prior[0] != vec and counterexample is None:
            counterexample = {
                "x": words[idx],
                "pattern": f"deletions per block {vec}",
                "received": y,
                "expected": f"deletions per block {prior[0]} (from {words[prior[1]]})",
                "got": f"deletions per block {vec}",
            }
            break
    metrics = {
        "code_size": len(words),
        "scenarios": scenarios,
        "received_strings": len(seen),
        "elapsed_s": round(time.perf_counter() - t0, 3),
    }
    return VerificationReport(
        kind="CodeValidity",
        params={"ell": ell, "delta": delta, "n": len(words[0]) if words else 0},
        passed=counterexample is None,
        counterexample=counterexample,
        metrics=metrics,
    )


def check_block_decodable(
    code: Iterable[BitString | str], ell: int, delta: int, limit: int = 20_000_000
) -> VerificationReport:
    """Per-block counts must be a function of the block-aligned window.

    For every scenario, block ``j`` starts at its true position ``alpha_j``
    in the received string; the code is block-by-block decodable iff no two
    scenarios show the same ``ell``-bit window at some ``j`` with different
    deletion counts for block ``j``.
    """
    words = sorted({as_bits(w) for w in code})
    t0 = time.perf_counter()
    n = len(words[0]) if words else 0
    m = n // ell if ell else 0
    seen: dict[tuple[int, str], tuple[int, int]] = {}
    counterexample = None
    scenarios = 0
    for idx, y, vec in _deletion_scenarios(words, ell, delta, limit):
        scenarios += 1
        alpha = 1
        for j in range(m):
            window = y[alpha - 1 : alpha - 1 + ell]
            prior = seen.get((j, window))
            if prior is None:
                seen[(j, window)] = (vec[j], idx)
            elif prior[0] != vec[j]:
                counterexample = {
                    "x": words[idx],
                    "pattern": f"deletions per block {vec}",
                    "received": y,
                    "expected": f"block {j + 1} count {prior[0]} (from {words[prior[1]]})",
                    "got": f"block {j + 1} count {vec[j]} on window {window!r}",
                }
                break
            alpha += ell - vec[j]
        if counterexample:
            break
    metrics = {
        "code_size": len(words),
        "scenarios": scenarios,
        "windows": len(seen),
        "elapsed_s": round(time.perf_counter() - t0, 3),
    }
    return VerificationReport(
        kind="BlockDecodable",
        params={"ell": ell, "delta": delta, "n": n},
        passed=counterexample is None,
        counterexample=counterexample,
        metrics=metrics,
    )


# ---------------------------------------------------------------------------
# Exact maximum-code search


def max_code_search(
    ell: int,
    n: int,
    delta: int,
    block_decodable: bool = False,
    limit: int = 4096,
) -> VerificationReport:
    """Exact maximum size of a deletion-counting code on F_2^n.

    Stage 1 drops words whose own deletion patterns already collide; stage 2
    links two words whenever they can produce one received string under
    different count vectors (and, if requested, whenever two scenarios share
    a block-aligned window with different counts); stage 3 finds a maximum
    independent set of the conflict graph by branch and bound with greedy
    colouring bounds.  Deterministic: identical inputs give identical sizes
    and witnesses.
    """
    if (1 << n) > limit:
        raise TooLarge(f"2^{n} strings exceed the search limit {limit}")
    cap = bounds(delta, ell, n)
    t0 = time.perf_counter()
    m = n // ell
    words = [format(v, f"0{n}b") for v in range(1 << n)]

    survivors: list[str] = []
    observations: list[list[tuple[str, tuple[int, ...]]]] = []
    for w in words:
        obs: dict[str, tuple[int, ...]] = {}
        wins: dict[tuple[int, str], int] = {}
        ok = True
        for _, y, vec in _deletion_scenarios([w], ell, delta, limit):
            prior = obs.get(y)
            if prior is None:
                obs[y] = vec
            elif prior != vec:
                ok = False
                break
            if block_decodable:
                alpha = 1
                for j in range(m):
                    window = y[alpha - 1 : alpha - 1 + ell]
                    prior_d = wins.get((j, window))
                    if prior_d is None:
                        wins[(j, window)] = vec[j]
                    elif prior_d != vec[j]:
                        ok = False
                        break
                    alpha += ell - vec[j]
                if not ok:
                    break
        if ok:
            survivors.append(w)
            observations.append(sorted(obs.items()))

    nv = len(survivors)
    adj = [0] * nv
    by_y: dict[str, list[tuple[int, tuple[int, ...]]]] = {}
    for i, obs in enumerate(observations):
        for y, vec in obs:
            by_y.setdefault(y, []).append((i, vec))
    for entries in by_y.values():
        for (i, vi), (k, vk) in itertools.combinations(entries, 2):
            if vi != vk:
                adj[i] |= 1 << k
                adj[k] |= 1 << i
    if block_decodable:
        by_win: dict[tuple[int, str], list[tuple[int, int]]] = {}
        for i, obs in enumerate(observations):
            for y, vec in obs:
                alpha = 1
                for j in range(m):
                    window = y[alpha - 1 : alpha - 1 + ell]
                    by_win.setdefault((j, window), []).append((i, vec[j]))
                    alpha += ell - vec[j]
        for entries in by_win.values():
            for (i, di), (k, dk) in itertools.combinations(entries, 2):
                if di != dk:
                    adj[i] |= 1 << k
                    adj[k] |= 1 << i

    edges = sum(bin(a).count("1") for a in adj) // 2
    size, nodes = _max_independent_set_size(adj)
    best, extra_nodes = _lex_min_independent_set(adj, size)
    nodes += extra_nodes
    witness = tuple(survivors[i] for i in best)
    size_cap = cap.size_cap(n, block_decodable)
    metrics = {
        "max_size": size,
        "survivors": nv,
        "conflict_edges": edges,
        "search_nodes": nodes,
        "size_cap_from_bounds": size_cap,
        "construction_size": 1 << (n - cap.construction_redundancy),
        "elapsed_s": round(time.perf_counter() - t0, 3),
    }
    return VerificationReport(
        kind="MaxCodeSearch",
        params={"ell": ell, "delta": delta, "n": n, "block_decodable": block_decodable},
        passed=size <= size_cap,
        metrics=metrics,
        witness=witness,
    )


def _clique_search(comp: list[int], start: int, target: int | None) -> tuple[int, int]:
    """Max clique size on adjacency bitmasks, branch and bound.

    ``start`` is the initial candidate mask.  With ``target`` set, the
    search stops as soon as a clique of that size is found (feasibility
    mode).  Returns (best size found, nodes explored).
    """
    best = 0
    nodes = 0

    def expand(depth: int, cand: int) -> bool:
        nonlocal best, nodes
        nodes += 1
        if not cand:
            if depth > best:
                best = depth
            return target is not None and best >= target
        # greedy colouring of candidates; colours ascend along order_c
        order_c: list[int] = []
        colours: list[int] = []
        un = cand
        colour = 0
        while un:
            colour += 1
            q = un
            while q:
                b = q & -q
                v = b.bit_length() - 1
                q &= ~(comp[v] | b)
                un &= ~b
                order_c.append(v)
                colours.append(colour)
        cutoff = target if target is not None else None
        for i in range(len(order_c) - 1, -1, -1):
            limit = best if cutoff is None else min(best, cutoff - 1)
            if depth + colours[i] <= limit:
                return False
            v = order_c[i]
            if expand(depth + 1, cand & comp[v]):
                return True
            cand &= ~(1 << v)
        return False

    expand(0, start)
    return best, nodes


def _complement(adj: list[int]) -> tuple[list[int], int]:
    nv = len(adj)
    full = (1 << nv) - 1
    return [(~adj[v]) & full & ~(1 << v) for v in range(nv)], full


def _max_independent_set_size(adj: list[int]) -> tuple[int, int]:
    """Exact MIS size: maximum clique on the complement graph."""
    if not adj:
        return 0, 0
    comp, full = _complement(adj)
    return _clique_search(comp, full, None)


def _lex_min_independent_set(adj: list[int], size: int) -> tuple[list[int], int]:
    """The lexicographically smallest maximum independent set.

    Vertices are indexed in sorted word order, so greedily keeping every
    vertex that still extends to a maximum independent set yields the
    lexicographically smallest witness.
    """
    comp, full = _complement(adj)
    chosen: list[int] = []
    cand = full
    need = size
    nodes = 0
    for v in range(len(adj)):
        if need == 0:
            break
        if not (cand >> v) & 1:
            continue
        rest = cand & comp[v]
        got, used = _clique_search(comp, rest, need - 1)
        nodes += used
        if got >= need - 1:
            chosen.append(v)
            cand = rest
            need -= 1
    return chosen, nodes


# ---------------------------------------------------------------------------
# Necessary-condition audits


def audit_necessary_conditions(
    code: Iterable[BitString | str],
    ell: int,
    delta: int,
    block_decodable: bool = False,
) -> VerificationReport:
    """Audit the structural conditions every valid code must satisfy.

    (a) each boundary's adjacent runs differ: the last ``delta`` bits of a
        block never equal any of the next block's first ``delta`` bits;
    (b) boundary polarity is shared code-wide (per boundary, every word
        fixes the same run values);
    (c) block-decodable codes extend (a) to the next block's bit
        ``delta + 1``;
    (d) for three or more blocks (and ``3*delta <= ell``), the bits
        ``delta+1 .. 3*delta`` of an interior block differ from the
        boundary runs read across its left boundary.
    """
    words = sorted({as_bits(w) for w in code})
    n = len(words[0]) if words else 0
    m = n // ell if ell else 0
    results = {"condition2": 1, "polarity": 1, "condition3": 1 if block_decodable else -1,
               "combi": 1 if (m >= 3 and 3 * delta <= ell) else -1}
    detail = None

    def blk(w: str, j: int) -> str:
        return w[(j - 1) * ell : j * ell]

    polarity: dict[int, tuple[str, str]] = {}
    for w in words:
        for j in range(1, m):
            tail = blk(w, j)[ell - delta :]
            head = blk(w, j + 1)[:delta]
            if results["condition2"] == 1 and any(
                t == h for t in tail for h in head
            ):
                results["condition2"] = 0
                detail = detail or f"condition2 fails at word {w}, boundary {j}"
            prior = polarity.get(j)
            if prior is None:
                polarity[j] = (tail, head)
            elif prior != (tail, head) and results["polarity"] == 1:
                results["polarity"] = 0
                detail = detail or f"polarity differs at boundary {j}: {prior} vs {(tail, head)}"
            if block_decodable and results["condition3"] == 1:
                probe = blk(w, j + 1)[delta]
                if any(probe == t for t in tail):
                    results["condition3"] = 0
                    detail = detail or f"condition3 fails at word {w}, boundary {j}"
            if results["combi"] == 1 and j <= m - 2:
                red = blk(w, j + 1)[delta : 3 * delta]
                blue = blk(w, j)[ell - delta :] + blk(w, j + 1)[:delta]
                if red == blue:
                    results["combi"] = 0
                    detail = detail or f"combi constraint fails at word {w}, boundary {j}"
    passed = all(v != 0 for v in results.values())
    return VerificationReport(
        kind="ConstraintAudit",
        params={"ell": ell, "delta": delta, "n": n, "block_decodable": block_decodable},
        passed=passed,
        metrics={"code_size": len(words), **results},
        detail=detail,
    )
