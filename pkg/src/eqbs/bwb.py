"""Borel-Weil-Bott on projective space.

For the rank ``k-1`` tautological subbundle ``S`` on ``P(W*)`` with
``dim W = k``, the bundle ``S_beta(S)(d)`` has at most one nonzero cohomology
group.  It is found by sorting ``(d, beta) - (0, 1, ..., k-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import BadShape, DuplicateDegree, NotWeaklyDecreasing
from .schur import weyl_dim
from .young_lattice import Sequence, SequenceLike, make_sequence


@dataclass(frozen=True)
class Vanishes:
    vanishes = True


@dataclass(frozen=True)
class Cohomology:
    degree: int
    weight: Sequence
    dim: int
    vanishes = False


BWBResult = Union[Vanishes, Cohomology]


def _beta(beta, k: int) -> tuple[int, ...]:
    if k < 2:
        raise BadShape("k must be at least 2")
    if isinstance(beta, Sequence):
        parts = beta.parts
    else:
        parts = tuple(int(b) for b in beta)
    if len(parts) != k - 1:
        raise BadShape(f"beta needs {k - 1} parts, got {len(parts)}")
    try:
        make_sequence(parts)
    except NotWeaklyDecreasing as exc:
        raise BadShape(str(exc)) from exc
    return parts


def cohomology(beta: SequenceLike, d: int, k: int) -> BWBResult:
    """Cohomology of ``S_beta(S)(d)`` on ``P(W*)``, ``dim W = k``."""
    parts = _beta(beta, k)
    a = [x - i for i, x in enumerate((d, *parts))]
    if len(set(a)) < k:
        return Vanishes()
    inversions = sum(1 for i in range(k) for j in range(i + 1, k) if a[i] < a[j])
    weight = Sequence(tuple(x + i for i, x in enumerate(sorted(a, reverse=True))))
    return Cohomology(inversions, weight, weyl_dim(weight, k))


def solve_beta(forbidden: Iterable[int], k: int) -> Sequence:
    """The ``beta`` for which ``S_beta(S)(d)`` has no cohomology exactly when
    ``d`` is one of the ``k-1`` given twists.
    """
    if k < 2:
        raise BadShape("k must be at least 2")
    f = [int(x) for x in forbidden]
    if len(set(f)) != len(f):
        raise DuplicateDegree(f"repeated twist in {sorted(f)}")
    if len(f) != k - 1:
        raise BadShape(f"need exactly {k - 1} twists, got {len(f)}")
    return Sequence(tuple(x + i + 1 for i, x in enumerate(sorted(f, reverse=True))))


def result_to_json(res: BWBResult) -> dict:
    if isinstance(res, Vanishes):
        return {"vanishes": True}
    return {"degree": res.degree, "weight": list(res.weight), "dim": res.dim}
