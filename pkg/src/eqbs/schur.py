"""Representation-theoretic arithmetic for GL_k: Schur functor dimensions,
Littlewood-Richardson and Pieri coefficients, the Cauchy decomposition of the
coordinate ring of k x n matrices, and equivariant maps between free modules.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import MismatchedLength, NegativePart, TooLarge
from .young_lattice import (
    Sequence,
    SequenceLike,
    contains,
    det_twist,
    make_sequence,
    partition_twist,
)

SSYT_MAX_SIZE = 30


def _padded(lam: SequenceLike, k: int) -> tuple[int, ...]:
    """Parts of ``lam`` as a length-``k`` tuple; partitions may be zero-padded."""
    lam = make_sequence(lam)
    if lam.k == k:
        return lam.parts
    if lam.k < k and lam.is_partition:
        return lam.parts + (0,) * (k - lam.k)
    if lam.k > k and all(p == 0 for p in lam.parts[k:]):
        return lam.parts[:k]
    raise MismatchedLength(f"{lam} cannot be viewed as a sequence with {k} parts")


def weyl_dim(lam: SequenceLike, k: int | None = None) -> int:
    """Dimension of the irreducible GL_k representation with highest weight ``lam``.

    Uses the Weyl product ``prod_{i<j} (l_i - l_j + j - i) / (j - i)``, which is
    valid for negative parts as well.
    """
    lam = make_sequence(lam)
    if k is None:
        k = lam.k
    parts = _padded(lam, k)
    num = Fraction(1)
    for i in range(k):
        for j in range(i + 1, k):
            num *= Fraction(parts[i] - parts[j] + j - i, j - i)
    assert num.denominator == 1
    return int(num)


def ssyt_count(lam: SequenceLike, k: int) -> int:
    """Count semistandard tableaux of shape ``lam`` with entries in ``1..k`` by
    explicit row-by-row enumeration.  Independent of :func:`weyl_dim`.
    """
    lam = make_sequence(lam)
    if not lam.is_partition:
        raise NegativePart(f"{lam} is not a partition")
    if lam.size > SSYT_MAX_SIZE:
        raise TooLarge(f"|{lam}| = {lam.size} exceeds {SSYT_MAX_SIZE}")
    shape = tuple(p for p in lam.parts if p > 0)
    if len(shape) > k:
        return 0

    def rows(length, above):
        # weakly increasing rows of the given length, strictly below `above`
        out = []

        def extend(row):
            c = len(row)
            if c == length:
                out.append(tuple(row))
                return
            low = row[-1] if row else 1
            if above is not None:
                low = max(low, above[c] + 1)
            for v in range(low, k + 1):
                row.append(v)
                extend(row)
                row.pop()

        extend([])
        return out

    @lru_cache(maxsize=None)
    def count(i, above):
        if i == len(shape):
            return 1
        return sum(count(i + 1, row) for row in rows(shape[i], above))

    return count(0, None)


@dataclass(frozen=True)
class LRQuery:
    lam: Sequence
    mu: Sequence
    nu: Sequence

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            s = make_sequence(getattr(self, name))
            if not s.is_partition:
                raise NegativePart(f"{s} is not a partition")
            object.__setattr__(self, name, s)
        if not self.lam.k == self.mu.k == self.nu.k:
            raise MismatchedLength("LR query needs three sequences of equal length")


def lr_coefficient(q: LRQuery | None = None, *, lam=None, mu=None, nu=None) -> int:
    """Multiplicity of ``S_nu`` in ``S_lam (x) S_mu``.

    Counts Littlewood-Richardson tableaux: fillings of the skew shape
    ``nu / lam`` with content ``mu``, rows weakly increasing, columns strictly
    increasing, whose right-to-left, top-to-bottom reading word is a lattice
    word.
    """
    if q is None:
        q = LRQuery(lam, mu, nu)
    return _lr(q.lam.parts, q.mu.parts, q.nu.parts)


@lru_cache(maxsize=65536)
def _lr(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if not (contains(lam, nu) and contains(mu, nu)):
        return 0
    k = len(nu)
    n_letters = len([m for m in mu if m > 0])
    total = 0

    def fill_row(i, counts, prev_row):
        nonlocal total
        if i == k:
            if tuple(counts[:n_letters]) == mu[:n_letters]:
                total += 1
            return
        start, stop = lam[i], nu[i]
        width = stop - start
        for row in _row_fillings(width, start, prev_row, i, n_letters):
            new_counts = list(counts)
            ok = True
            for v in reversed(row):
                new_counts[v - 1] += 1
                if new_counts[v - 1] > mu[v - 1]:
                    ok = False
                    break
                if v > 1 and new_counts[v - 1] > new_counts[v - 2]:
                    ok = False
                    break
            if ok:
                filled = {start + c: v for c, v in enumerate(row)}
                fill_row(i + 1, new_counts, filled)

    fill_row(0, [0] * max(n_letters, 1), {})
    return total


def _row_fillings(width, start, above, i, n_letters):
    """Weakly increasing rows of ``width`` cells beginning at column ``start``
    whose entries exceed the filled cell directly above (if any).  Entries in
    row ``i`` (0-based) never exceed ``i + 1`` in an LR tableau.
    """
    top = min(n_letters, i + 1)
    out = []

    def extend(row):
        c = len(row)
        if c == width:
            out.append(tuple(row))
            return
        low = row[-1] if row else 1
        col = start + c
        if col in above:
            low = max(low, above[col] + 1)
        for v in range(low, top + 1):
            row.append(v)
            extend(row)
            row.pop()

    extend([])
    return out


def pieri(mu: SequenceLike, d: int, k: int | None = None) -> list[Sequence]:
    """All ``nu`` with ``nu / mu`` a horizontal strip of ``d`` boxes, i.e. the
    interlacing ``nu_1 >= mu_1 >= nu_2 >= mu_2 >= ...``.  Sorted descending.
    """
    mu = make_sequence(mu)
    if not mu.is_partition:
        raise NegativePart(f"{mu} is not a partition")
    k = mu.k if k is None else k
    parts = _padded(mu, k)
    out = []

    def extend(i, acc, left):
        if i == k:
            if left == 0:
                out.append(Sequence(tuple(acc)))
            return
        upper = parts[i - 1] if i > 0 else parts[0] + left
        for v in range(parts[i], min(upper, parts[i] + left) + 1):
            acc.append(v)
            extend(i + 1, acc, left - (v - parts[i]))
            acc.pop()

    extend(0, [], d)
    return sorted(out, reverse=True)


def partitions(d: int, max_parts: int, k: int | None = None) -> list[Sequence]:
    """Partitions of ``d`` with at most ``max_parts`` nonzero parts, padded to
    length ``k`` (default ``max_parts``), in decreasing lexicographic order.
    """
    k = max_parts if k is None else k
    out = []

    def extend(acc, left, cap):
        if left == 0:
            out.append(Sequence(tuple(acc) + (0,) * (k - len(acc))))
            return
        if len(acc) == max_parts:
            return
        for v in range(min(left, cap), 0, -1):
            acc.append(v)
            extend(acc, left - v, v)
            acc.pop()

    extend([], d, d)
    return out


def cauchy_level(k: int, n: int, d: int) -> list[tuple[Sequence, int, int]]:
    """Degree-``d`` piece of Sym(V (x) W*) as ``[(nu, dim S_nu(V), dim S_nu(W))]``
    with ``dim V = k`` and ``dim W = n``.
    """
    m = min(k, n)
    return [(nu, weyl_dim(nu, k), weyl_dim(nu, n)) for nu in partitions(d, m, k)]


def cauchy_total(k: int, n: int, d: int) -> int:
    """Number of degree-``d`` monomials in ``k * n`` variables."""
    return comb(k * n + d - 1, d)


class MapType(enum.Enum):
    NONE = "none"
    ISOMORPHISM = "isomorphism"
    MINIMAL = "minimal"


def map_type(mu: SequenceLike, lam: SequenceLike) -> MapType:
    """Kind of nonzero equivariant map ``S_mu(V) (x) R -> S_lam(V) (x) R``, if any."""
    mu, lam = make_sequence(mu), make_sequence(lam)
    if mu.k != lam.k:
        raise MismatchedLength(f"{mu} and {lam} differ in length")
    if mu == lam:
        return MapType.ISOMORPHISM
    if contains(lam, mu):
        return MapType.MINIMAL
    return MapType.NONE


def hom_dimension(mu: SequenceLike, lam: SequenceLike, k: int, n: int) -> int:
    """Dimension of the space of GL(V)-equivariant R-module maps
    ``S_mu(V) (x) R -> S_lam(V) (x) R``, where ``R = Sym(V (x) W*)``.

    Equals ``sum_nu c^mu_{lam,nu} * dim S_nu(W)`` over partitions ``nu`` of
    ``|mu| - |lam|``.
    """
    mu, lam = make_sequence(mu), make_sequence(lam)
    if not mu.k == lam.k == k:
        raise MismatchedLength(f"{mu}, {lam} must both have {k} parts")
    shift = partition_twist(mu, lam)
    mu, lam = det_twist(mu, shift), det_twist(lam, shift)
    d = mu.size - lam.size
    if d < 0:
        return 0
    total = 0
    for nu in partitions(d, min(k, n), k):
        c = _lr(lam.parts, nu.parts, mu.parts)
        if c:
            total += c * weyl_dim(nu, n)
    return total
