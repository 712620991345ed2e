"""The extended Young's lattice: weakly decreasing integer sequences of a fixed
length, ordered by componentwise containment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, NamedTuple, Union

from .errors import (
    EmptyRange,
    MismatchedLength,
    NegativePart,
    NotComparable,
    NotWeaklyDecreasing,
)


@dataclass(frozen=True, order=True)
class Sequence:
    """A weakly decreasing integer vector ``(l_1 >= ... >= l_k)``.

    Trailing zeros are explicit: ``(3, 1)`` and ``(3, 1, 0)`` are different
    objects with different ``k``.  Ordering is lexicographic on ``parts``.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise NotWeaklyDecreasing("a sequence needs at least one part")
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise NotWeaklyDecreasing(
                    f"parts {list(parts)} increase at position {i + 1}"
                )

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def is_partition(self) -> bool:
        return self.parts[-1] >= 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self) -> str:
        return f"Sequence({self.parts!r})"


SequenceLike = Union[Sequence, Iterable[int]]


def make_sequence(parts: SequenceLike) -> Sequence:
    if isinstance(parts, Sequence):
        return parts
    return Sequence(tuple(parts))


def _check_k(*seqs: Sequence) -> int:
    k = seqs[0].k
    for s in seqs[1:]:
        if s.k != k:
            raise MismatchedLength(f"{s} has {s.k} parts, expected {k}")
    return k


def contains(a: SequenceLike, b: SequenceLike, strict: bool = False) -> bool:
    """True iff ``a`` is contained in ``b`` (``a_i <= b_i`` for every ``i``).

    With ``strict=True`` the two must also differ.
    """
    a, b = make_sequence(a), make_sequence(b)
    _check_k(a, b)
    if strict and a == b:
        return False
    return all(x <= y for x, y in zip(a.parts, b.parts))


def size(lam: SequenceLike) -> int:
    return make_sequence(lam).size


def det_twist(lam: SequenceLike, a: int) -> Sequence:
    """Shift every part by ``a`` (tensoring with the ``a``-th determinant power)."""
    return Sequence(tuple(p + a for p in make_sequence(lam).parts))


def partition_twist(*seqs: Sequence) -> int:
    """Smallest nonnegative shift that turns every given sequence into a partition."""
    return max(0, -min(s.parts[-1] for s in seqs))


@dataclass(frozen=True)
class IdealSpec:
    """An order ideal of the extended Young's lattice, given by its maximal
    elements.  Dominated generators are dropped on construction.
    """

    generators: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        gens = frozenset(make_sequence(g) for g in self.generators)
        if gens:
            _check_k(*gens)
        top = frozenset(
            g for g in gens if not any(contains(g, h, strict=True) for h in gens)
        )
        object.__setattr__(self, "generators", top)

    @classmethod
    def of(cls, *generators: SequenceLike) -> "IdealSpec":
        return cls(frozenset(make_sequence(g) for g in generators))

    def __contains__(self, lam) -> bool:
        lam = make_sequence(lam)
        return any(contains(lam, g) for g in self.generators)

    def in_interior(self, lam: SequenceLike) -> bool:
        lam = make_sequence(lam)
        return any(contains(lam, g, strict=True) for g in self.generators)

    def sorted_generators(self) -> list[Sequence]:
        return sorted(self.generators)


def ideal_restrict(
    spec: IdealSpec, support: Iterable[SequenceLike]
) -> tuple[set[Sequence], set[Sequence]]:
    """Split ``support`` into the members of the ideal and of its strict interior."""
    support = [make_sequence(s) for s in support]
    if support and spec.generators:
        _check_k(*support, *spec.generators)
    in_ideal = {s for s in support if s in spec}
    in_interior = {s for s in in_ideal if spec.in_interior(s)}
    return in_ideal, in_interior


class BorderSquare(NamedTuple):
    row: int
    col: int


class OuterBorder(NamedTuple):
    """Outer border squares of a partition.

    Row 1 contributes every column from ``first_row_from`` on, an infinite
    family kept symbolic; ``squares`` holds the finite part in rows 2..k.
    """

    first_row_from: int
    squares: frozenset

    def __contains__(self, square) -> bool:
        row, col = square
        if row == 1:
            return col >= self.first_row_from
        return BorderSquare(row, col) in self.squares

    def row(self, i: int) -> list[int]:
        """Columns of the border squares in row ``i`` (``i >= 2``)."""
        return sorted(s.col for s in self.squares if s.row == i)


def outer_border_squares(lam: SequenceLike) -> OuterBorder:
    """Squares ``(i, j)`` outside ``lam`` with ``(i-1, j-1)`` inside it, or
    with ``i = 1`` or ``j = 1``; rows are restricted to ``1..k``.
    """
    lam = make_sequence(lam)
    if not lam.is_partition:
        raise NegativePart(f"{lam} is not a partition")
    squares = set()
    for i in range(2, lam.k + 1):
        # (i, j) outside lam, and j = 1 or (i-1, j-1) inside lam
        for j in range(lam[i - 1] + 1, lam[i - 2] + 2):
            squares.add(BorderSquare(i, j))
    return OuterBorder(lam[0] + 1, frozenset(squares))


def enumerate_box(k: int, lo: int, hi: int) -> list[Sequence]:
    """All weakly decreasing length-``k`` sequences with parts in ``[lo, hi]``,
    in lexicographic order.
    """
    if lo > hi:
        raise EmptyRange(f"empty range [{lo}, {hi}]")
    if k < 1:
        raise EmptyRange("k must be positive")
    out = [
        Sequence(tuple(sorted(c, reverse=True)))
        for c in combinations_with_replacement(range(lo, hi + 1), k)
    ]
    out.sort()
    return out


def saturated_chain(lam0: SequenceLike, lam1: SequenceLike) -> list[Sequence]:
    """A maximal chain from ``lam0`` up to ``lam1`` adding one box per step.

    The box always goes in the topmost row that can still grow without
    breaking monotonicity.
    """
    lam0, lam1 = make_sequence(lam0), make_sequence(lam1)
    if not contains(lam0, lam1, strict=True):
        raise NotComparable(f"{lam0} is not strictly contained in {lam1}")
    cur = list(lam0.parts)
    chain = [lam0]
    target = lam1.parts
    while tuple(cur) != target:
        for j in range(len(cur)):
            if cur[j] < target[j] and (j == 0 or cur[j - 1] > cur[j]):
                cur[j] += 1
                break
        chain.append(Sequence(tuple(cur)))
    return chain
