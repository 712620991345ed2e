"""Border-strip complexes of Eisenbud-Floystad-Weyman and the numerical side
of realizing pure tables.

For partitions ``lam`` and ``mu`` differing by boxes in a single row ``r``,
:func:`box_setup` lays out the chain of shapes ``alpha(0) < ... < alpha(k)``
of an EFW complex together with twists ``d_i`` and an auxiliary weight
``beta`` chosen so that ``S_beta(S)(d_i)`` is acyclic for every ``i`` except
``r-1`` and ``r``.  :func:`verify_linear_case` runs Borel-Weil-Bott over the
whole complex and checks that exactly the expected two groups survive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import prod
from typing import NamedTuple, Union

from .bwb import Cohomology, Vanishes, cohomology, solve_beta
from .errors import (
    BadIndices,
    BadRow,
    BadShape,
    BWBMismatch,
    InvalidBorderChoice,
    MismatchedLength,
    NegativeBox,
    NegativePart,
    NotComparable,
)
from .schur import _padded, weyl_dim
from .young_lattice import (
    Sequence,
    SequenceLike,
    contains,
    det_twist,
    make_sequence,
    outer_border_squares,
    saturated_chain,
)


class Construction(enum.Enum):
    SINGLE_BOX = "single_box"
    CHAIN = "chain"
    SMALL_RESOLUTION = "small_resolution"
    STRIP = "strip"


@dataclass(frozen=True)
class Realization:
    """Numerical data of a resolution ``S_lo(V)^c0 (x) R <- S_hi(V)^c1 (x) R``."""

    lo: Sequence
    hi: Sequence
    c0: int
    c1: int
    construction: Construction

    def __post_init__(self):
        k = self.lo.k
        if self.c0 <= 0 or self.c1 <= 0:
            raise ValueError("multiplicities must be positive")
        if self.c0 * weyl_dim(self.lo, k) != self.c1 * weyl_dim(self.hi, k):
            raise ValueError(f"ranks disagree for {self}")

    @property
    def k(self) -> int:
        return self.lo.k


@dataclass(frozen=True)
class ConditionFailed:
    """``lo_1 <= hi_k`` fails; ``i`` and ``j`` are the witnessing rows."""

    i: int
    j: int
    lo_value: int
    hi_value: int


@dataclass(frozen=True)
class EFWData:
    mu: Sequence
    r: int
    lam: Sequence
    shapes: tuple[Sequence, ...]
    e: tuple[int, ...]
    d: tuple[int, ...]
    beta: Sequence
    m: int = 1

    @property
    def k(self) -> int:
        return self.mu.k


def box_setup(mu: SequenceLike, r: int, k: int | None = None, m: int = 1) -> EFWData:
    """Shapes, border counts, twists and ``beta`` for removing ``m`` boxes from
    row ``r`` (1-based) of ``mu``.

    Row ``i < r`` receives the inner border strip of ``mu`` in that row, row
    ``r`` its last ``m`` boxes, and row ``i > r`` the outer border strip of
    ``lam``.  Sequences with negative parts are shifted to partitions first
    and shifted back afterwards; everything here commutes with the shift.
    """
    mu = make_sequence(mu)
    if k is not None and k != mu.k:
        mu = Sequence(_padded(mu, k))
    k = mu.k
    if k < 2:
        raise BadShape("need k >= 2")
    if not 1 <= r <= k:
        raise BadRow(f"row {r} outside 1..{k}")
    if m < 1:
        raise BadRow("must remove at least one box")
    shift = 0 if mu.is_partition else 1 - mu[-1]
    p = det_twist(mu, shift).parts
    below = p[r] if r < k else 0
    if p[r - 1] == 0:
        raise NegativeBox(f"row {r} of {mu} is empty")
    if p[r - 1] - m < below:
        raise BadRow(f"cannot remove {m} box(es) from row {r} of {mu}")

    lam = list(p)
    lam[r - 1] -= m
    e, lo_shape, hi_shape = [], [], []
    for i in range(1, k + 1):
        if i < r:
            e.append(1 + p[i - 1] - p[i])
            lo_shape.append(p[i] - 1)
            hi_shape.append(p[i - 1])
        elif i == r:
            e.append(m)
            lo_shape.append(p[i - 1] - m)
            hi_shape.append(p[i - 1])
        else:
            e.append(1 + lam[i - 2] - lam[i - 1])
            lo_shape.append(p[i - 1])
            hi_shape.append(lam[i - 2] + 1)
    d = [p[0]]
    for ei in e:
        d.append(d[-1] - ei)
    shapes = [
        Sequence(tuple(hi_shape[:j] + lo_shape[j:])) for j in range(k + 1)
    ]
    beta = solve_beta([d[i] for i in range(k + 1) if i not in (r - 1, r)], k)

    return EFWData(
        mu=mu,
        r=r,
        lam=det_twist(Sequence(tuple(lam)), -shift),
        shapes=tuple(det_twist(s, -shift) for s in shapes),
        e=tuple(e),
        d=tuple(x - shift for x in d),
        beta=det_twist(beta, -shift),
        m=m,
    )


def verify_linear_case(data: EFWData) -> Realization:
    """Check the Borel-Weil-Bott pattern behind the linear pure resolution and
    return its multiplicities ``c0 = dim S_mu``, ``c1 = dim S_lam``.

    Every twist except ``d_{r-1}`` and ``d_r`` must be acyclic; those two must
    have their only cohomology in degree ``r-1``, equal to ``S_mu`` at
    ``d_{r-1}`` and ``S_lam`` at ``d_r``.
    """
    k, r = data.k, data.r
    for i, di in enumerate(data.d):
        res = cohomology(data.beta, di, k)
        if i not in (r - 1, r):
            if not isinstance(res, Vanishes):
                raise BWBMismatch(f"twist d_{i} = {di} is not acyclic: {res}")
            continue
        expected = data.mu if i == r - 1 else data.lam
        if not isinstance(res, Cohomology) or res.degree != r - 1 or res.weight != expected:
            raise BWBMismatch(
                f"twist d_{i} = {di}: expected H^{r - 1} = S_{expected}, got {res}"
            )
    diff = [a - b for a, b in zip(data.mu, data.lam)]
    if diff != [data.m if i == r - 1 else 0 for i in range(k)]:
        raise BWBMismatch(f"{data.mu} and {data.lam} do not differ in row {r} only")
    return Realization(
        lo=data.lam,
        hi=data.mu,
        c0=weyl_dim(data.mu, k),
        c1=weyl_dim(data.lam, k),
        construction=Construction.SINGLE_BOX,
    )


def _pair(lam0: SequenceLike, lam1: SequenceLike, k: int | None):
    lam0, lam1 = make_sequence(lam0), make_sequence(lam1)
    if k is not None:
        lam0, lam1 = Sequence(_padded(lam0, k)), Sequence(_padded(lam1, k))
    if lam0.k != lam1.k:
        raise MismatchedLength(f"{lam0} and {lam1} differ in length")
    if not contains(lam0, lam1, strict=True):
        raise NotComparable(f"{lam0} is not strictly contained in {lam1}")
    return lam0, lam1


def chain_realization(lam0: SequenceLike, lam1: SequenceLike, k: int | None = None) -> Realization:
    """Compose single-box resolutions along a saturated chain from ``lam0`` to
    ``lam1``.  The multiplicities are products of Schur dimensions along the
    chain, so the two ranks agree identically.
    """
    lam0, lam1 = _pair(lam0, lam1, k)
    k = lam0.k
    chain = saturated_chain(lam0, lam1)
    dims = [weyl_dim(a, k) for a in chain]
    return Realization(
        lo=lam0,
        hi=lam1,
        c0=prod(dims[1:]),
        c1=prod(dims[:-1]),
        construction=Construction.CHAIN,
    )


def small_resolution(
    lam0: SequenceLike, lam1: SequenceLike, k: int | None = None
) -> Union[Realization, ConditionFailed]:
    """The bi-equivariant resolution with ``c0 = dim S_lam1``, ``c1 = dim S_lam0``,
    available when some ``d`` separates the parts: ``(lam0)_1 <= (lam1)_k``.
    """
    lam0, lam1 = _pair(lam0, lam1, k)
    k = lam0.k
    if lam0[0] > lam1[k - 1]:
        return ConditionFailed(1, k, lam0[0], lam1[k - 1])
    return Realization(
        lo=lam0,
        hi=lam1,
        c0=weyl_dim(lam1, k),
        c1=weyl_dim(lam0, k),
        construction=Construction.SMALL_RESOLUTION,
    )


def is_border_strip(lo: SequenceLike, hi: SequenceLike) -> bool:
    """True iff the skew diagram ``hi / lo`` is nonempty, rookwise connected and
    contains no 2x2 square.
    """
    lo, hi = make_sequence(lo), make_sequence(hi)
    if lo.k != hi.k or not contains(lo, hi, strict=True):
        return False
    cells = {(i, j) for i in range(lo.k) for j in range(lo[i] + 1, hi[i] + 1)}
    for i, j in cells:
        if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells:
            return False
    start = min(cells)
    seen, stack = {start}, [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen == cells


class StripAnalysis(NamedTuple):
    beta: Sequence
    survivors: list
    two_term: bool
    strip_ok: bool
    realization: Realization | None


def strip_analysis(data: EFWData, p: int, q: int) -> StripAnalysis:
    """Keep only the twists ``d_p`` and ``d_q`` of the complex alive.

    Each survivor is reported as ``(position, weight)``, where position is the
    complex column minus the cohomological degree.  When the survivors land in
    positions 0 and 1 and their weights differ by a connected border strip, a
    :class:`Realization` tagged ``STRIP`` is attached.
    """
    k = data.k
    if not 0 <= p < q <= k:
        raise BadIndices(f"need 0 <= p < q <= {k}, got p={p}, q={q}")
    beta = solve_beta([data.d[i] for i in range(k + 1) if i not in (p, q)], k)
    survivors = []
    for col in (p, q):
        res = cohomology(beta, data.d[col], k)
        if not isinstance(res, Cohomology):
            raise BWBMismatch(f"twist d_{col} unexpectedly acyclic")
        survivors.append((col - res.degree, res.weight))
    two_term = [pos for pos, _ in survivors] == [0, 1]
    hi, lo = survivors[0][1], survivors[1][1]
    strip_ok = is_border_strip(lo, hi)
    realization = None
    if two_term and strip_ok:
        realization = Realization(
            lo=lo, hi=hi, c0=weyl_dim(hi, k), c1=weyl_dim(lo, k),
            construction=Construction.STRIP,
        )
    return StripAnalysis(beta, survivors, two_term, strip_ok, realization)


def efw_shapes(alpha: SequenceLike, alpha_p: SequenceLike, k: int | None = None) -> list[Sequence]:
    """Shapes of the EFW complex from ``alpha`` to ``alpha_p``.

    ``alpha_p`` must add at least one border square in row 1 and every outer
    border square of ``alpha`` in rows 2..k.  Shape ``j`` takes rows ``1..j``
    from ``alpha_p`` and the rest from ``alpha``.
    """
    alpha, alpha_p = make_sequence(alpha), make_sequence(alpha_p)
    if k is not None:
        alpha, alpha_p = Sequence(_padded(alpha, k)), Sequence(_padded(alpha_p, k))
    if alpha.k != alpha_p.k:
        raise MismatchedLength(f"{alpha} and {alpha_p} differ in length")
    if not (alpha.is_partition and alpha_p.is_partition):
        raise NegativePart("EFW shapes are partitions")
    border = outer_border_squares(alpha)
    if alpha_p[0] < border.first_row_from:
        raise InvalidBorderChoice(1, "no border square added in row 1")
    for i in range(2, alpha.k + 1):
        added = list(range(alpha[i - 1] + 1, alpha_p[i - 1] + 1))
        if added != border.row(i):
            raise InvalidBorderChoice(
                i, f"row {i} must gain columns {border.row(i)}, got {added}"
            )
    k = alpha.k
    return [Sequence(alpha_p.parts[:j] + alpha.parts[j:]) for j in range(k + 1)]


# -- JSON ---------------------------------------------------------------------


def efw_to_json(data: EFWData) -> dict:
    return {
        "mu": list(data.mu),
        "r": data.r,
        "m": data.m,
        "lambda": list(data.lam),
        "shapes": [list(s) for s in data.shapes],
        "e": list(data.e),
        "d": list(data.d),
        "beta": list(data.beta),
    }


def realization_to_json(R: Realization) -> dict:
    return {
        "lo": list(R.lo),
        "hi": list(R.hi),
        "c0": R.c0,
        "c1": R.c1,
        "construction": R.construction.value,
    }
