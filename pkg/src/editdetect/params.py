"""Code families, parameter validation, and per-block count vectors.

A parameter set fixes a family, a block length ``ell``, a codeword length
``n`` (with ``ell`` dividing ``n``, so codewords split into ``m = n // ell``
blocks), and for the deletion family a per-block deletion budget ``delta``.
The other families carry fixed budgets: up to one insertion per block
(INSERT1), up to two insertions per block (INSERT2), or at most one edit of
either kind per block (MIXED1).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import NonDivisible, RangeViolation


class Family(Enum):
    """The four supported code families."""

    DELETION = "del"
    INSERT1 = "ins1"
    INSERT2 = "ins2"
    MIXED1 = "mix1"


# Lower bound on the block length, strict: family -> ell must exceed this.
_MIN_ELL_EXCLUSIVE = {Family.INSERT1: 2, Family.INSERT2: 8, Family.MIXED1: 6}


@dataclass(frozen=True)
class CodeParams:
    """Validated parameters of one code instance.

    ``delta`` is meaningful only for ``Family.DELETION`` and must be ``None``
    otherwise.  Instances are immutable and hashable, so they can key caches.
    """

    family: Family
    ell: int
    n: int
    delta: int | None = None

    def __post_init__(self) -> None:
        if self.ell < 1 or self.n < 1:
            raise RangeViolation("ell and n must be positive")
        if self.n % self.ell != 0:
            raise NonDivisible(f"ell={self.ell} does not divide n={self.n}")
        if 2 * self.ell > self.n:
            raise RangeViolation(f"ell <= n/2 required, got ell={self.ell}, n={self.n}")
        if self.family is Family.DELETION:
            if self.delta is None or self.delta < 1:
                raise RangeViolation("deletion family requires delta >= 1")
            if 2 * self.delta >= self.ell:
                raise RangeViolation(
                    f"2*delta < ell required, got delta={self.delta}, ell={self.ell}"
                )
        else:
            if self.delta is not None:
                raise RangeViolation(f"family {self.family.value} takes no delta")
            low = _MIN_ELL_EXCLUSIVE[self.family]
            if self.ell <= low:
                raise RangeViolation(
                    f"family {self.family.value} requires ell > {low}, got {self.ell}"
                )

    @property
    def m(self) -> int:
        """Number of blocks per codeword."""
        return self.n // self.ell

    @property
    def del_budget(self) -> int:
        """Maximum deletions per block the channel may apply."""
        if self.family is Family.DELETION:
            return self.delta  # type: ignore[return-value]
        return 1 if self.family is Family.MIXED1 else 0

    @property
    def ins_budget(self) -> int:
        """Maximum insertions per block the channel may apply."""
        return {
            Family.DELETION: 0,
            Family.INSERT1: 1,
            Family.INSERT2: 2,
            Family.MIXED1: 1,
        }[self.family]

    @property
    def single_edit_per_block(self) -> bool:
        """True when deletions and insertions share one per-block budget."""
        return self.family is Family.MIXED1

    def label(self) -> str:
        if self.family is Family.DELETION:
            return f"D_{self.delta}({self.ell},{self.n})"
        name = {Family.INSERT1: "I_1", Family.INSERT2: "I_2", Family.MIXED1: "C_1"}
        return f"{name[self.family]}({self.ell},{self.n})"


def validate_params(
    family: Family | str, delta: int | None, ell: int, n: int
) -> CodeParams:
    """Build a validated :class:`CodeParams`.

    ``delta`` is ignored for families with a fixed budget; callers that want
    to surface that (for example a CLI) should warn before calling.
    """
    fam = Family(family) if not isinstance(family, Family) else family
    if fam is not Family.DELETION:
        delta = None
    return CodeParams(family=fam, ell=ell, n=n, delta=delta)


def redundancy(params: CodeParams) -> int:
    """Number of redundant (fixed) bits of the construction for ``params``."""
    m = params.m
    if params.family is Family.DELETION:
        return (2 * params.delta + 1) * (m - 1)  # type: ignore[operator]
    if params.family is Family.INSERT1:
        return 2 * (m - 1)
    if params.family is Family.INSERT2:
        return 8 * m - 5
    return 6 * (m - 1)


@dataclass(frozen=True)
class CountVector:
    """Per-block (deletions, insertions) counts, one pair per block."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def deletions(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.pairs)

    @property
    def insertions(self) -> tuple[int, ...]:
        return tuple(i for _, i in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __getitem__(self, idx: int) -> tuple[int, int]:
        return self.pairs[idx]

    def total_deletions(self) -> int:
        return sum(self.deletions)

    def total_insertions(self) -> int:
        return sum(self.insertions)

    def respects(self, params: CodeParams) -> bool:
        """Check the per-block budgets of ``params``."""
        if len(self.pairs) != params.m:
            return False
        for d, i in self.pairs:
            if d < 0 or i < 0:
                return False
            if params.single_edit_per_block:
                if d + i > 1:
                    return False
            elif d > params.del_budget or i > params.ins_budget:
                return False
        return True

    def format_plain(self) -> str:
        dels = ",".join(str(d) for d in self.deletions)
        inss = ",".join(str(i) for i in self.insertions)
        return f"del=({dels}) ins=({inss})"
