"""Equivariant Betti tables and the linear conditions on them.

A table is a finitely supported map ``(i, lam) -> value`` with exact rational
values.  Row ``i`` is the homological index; ``lam`` ranges over sequences of
one fixed length ``k``.  Cone tables use rows 0 and 1 only; other rows appear
as outputs of :func:`pairing`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import ClassVar, Iterable, Mapping, NamedTuple

from .errors import BadIndex, EqbsError, MismatchedLength, NotComparable
from .schur import weyl_dim
from .young_lattice import IdealSpec, Sequence, SequenceLike, contains, make_sequence

Key = tuple[int, Sequence]


def as_rational(x) -> Fraction:
    """Exact conversion; floats are refused because the cone is rational."""
    if isinstance(x, bool):
        raise EqbsError(f"not a rational number: {x!r}")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise EqbsError(f"not a rational number: {x!r}") from exc
    raise EqbsError(f"not an exact rational: {x!r}")


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class _Table:
    k: int
    entries: Mapping[Key, Fraction] = field(default_factory=dict)

    kind: ClassVar[str] = ""

    def __post_init__(self):
        clean: dict[Key, Fraction] = {}
        for (i, lam), v in dict(self.entries).items():
            lam = make_sequence(lam)
            if lam.k != self.k:
                raise MismatchedLength(f"{lam} has {lam.k} parts, table has k={self.k}")
            self._check_index(int(i))
            v = as_rational(v)
            key = (int(i), lam)
            v = clean.get(key, Fraction(0)) + v
            if v:
                clean[key] = v
            else:
                clean.pop(key, None)
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def _check_index(self, i: int) -> None:
        pass

    def __hash__(self):
        return hash((type(self), self.k, tuple(self.entries.items())))

    def _like(self, entries) -> "_Table":
        return type(self)(self.k, entries)

    def value(self, i: int, lam: SequenceLike) -> Fraction:
        return self.entries.get((i, make_sequence(lam)), Fraction(0))

    def row(self, i: int) -> dict[Sequence, Fraction]:
        return {lam: v for (j, lam), v in self.entries.items() if j == i}

    def indices(self) -> list[int]:
        return sorted({i for i, _ in self.entries})

    def support(self) -> set[Sequence]:
        return {lam for _, lam in self.entries}

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __add__(self, other: "_Table") -> "_Table":
        if type(other) is not type(self):
            return NotImplemented
        if other.k != self.k:
            raise MismatchedLength(f"k={self.k} vs k={other.k}")
        merged = dict(self.entries)
        for key, v in other.entries.items():
            merged[key] = merged.get(key, Fraction(0)) + v
        return self._like(merged)

    def __neg__(self) -> "_Table":
        return self._like({key: -v for key, v in self.entries.items()})

    def __sub__(self, other: "_Table") -> "_Table":
        return self + (-other)

    def __mul__(self, c) -> "_Table":
        c = as_rational(c)
        return self._like({key: c * v for key, v in self.entries.items()})

    __rmul__ = __mul__

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.entries.values())

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.entries.values())


class MultBettiTable(_Table):
    """Multiplicities of ``S_lam(V) (x) R`` in each step of a resolution."""

    kind = "mult"


class RankBettiTable(_Table):
    """Ranks of the ``lam``-isotypic summands: multiplicity times ``dim S_lam``."""

    kind = "rank"


@dataclass(frozen=True)
class CohomologyTable:
    """``gamma[q, lam]``: dimension of the ``q``-th cohomology of a bundle
    twisted by ``S_lam`` of the tautological subbundle on Gr(k, n).
    """

    k: int
    n: int
    entries: Mapping[Key, Fraction] = field(default_factory=dict)

    kind: ClassVar[str] = "cohomology"

    def __post_init__(self):
        top = self.k * (self.n - self.k)
        clean = {}
        for (q, lam), v in dict(self.entries).items():
            lam = make_sequence(lam)
            if lam.k != self.k:
                raise MismatchedLength(f"{lam} has {lam.k} parts, table has k={self.k}")
            if not 0 <= q <= top:
                raise BadIndex(f"cohomological index {q} outside [0, {top}]")
            v = as_rational(v)
            if v:
                clean[(int(q), lam)] = v
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __hash__(self):
        return hash((self.k, self.n, tuple(self.entries.items())))

    def __add__(self, other: "CohomologyTable") -> "CohomologyTable":
        if not isinstance(other, CohomologyTable):
            return NotImplemented
        if (other.k, other.n) != (self.k, self.n):
            raise MismatchedLength(f"Gr({self.k},{self.n}) vs Gr({other.k},{other.n})")
        merged = dict(self.entries)
        for key, v in other.entries.items():
            merged[key] = merged.get(key, Fraction(0)) + v
        return CohomologyTable(self.k, self.n, merged)

    def __mul__(self, c) -> "CohomologyTable":
        c = as_rational(c)
        return CohomologyTable(self.k, self.n, {key: c * v for key, v in self.entries.items()})

    __rmul__ = __mul__


class CheckResult(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    ok: bool


@dataclass(frozen=True, order=True)
class PureTable:
    """A positive multiple of the two-entry table with ``1`` at ``(0, lo)`` and
    ``(1, hi)``, where ``lo`` is strictly contained in ``hi``.
    """

    lo: Sequence
    hi: Sequence
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        lo, hi = make_sequence(self.lo), make_sequence(self.hi)
        if lo.k != hi.k:
            raise MismatchedLength(f"{lo} and {hi} differ in length")
        if not contains(lo, hi, strict=True):
            raise NotComparable(f"{lo} is not strictly contained in {hi}")
        scale = as_rational(self.scale)
        if scale <= 0:
            raise EqbsError(f"pure table scale must be positive, got {scale}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "scale", scale)

    def table(self) -> RankBettiTable:
        return RankBettiTable(self.lo.k, {(0, self.lo): self.scale, (1, self.hi): self.scale})


def pure_table(lo: SequenceLike, hi: SequenceLike, scale=1) -> RankBettiTable:
    return PureTable(make_sequence(lo), make_sequence(hi), as_rational(scale)).table()


def is_pure(T: RankBettiTable) -> PureTable | None:
    """The pure type of ``T`` if it is a positive multiple of a pure table."""
    if set(T.indices()) != {0, 1}:
        return None
    row0, row1 = T.row(0), T.row(1)
    if len(row0) != 1 or len(row1) != 1:
        return None
    (lo, a), (hi, b) = next(iter(row0.items())), next(iter(row1.items()))
    if a != b or a <= 0 or not contains(lo, hi, strict=True):
        return None
    return PureTable(lo, hi, a)


def to_rank(B: MultBettiTable) -> RankBettiTable:
    return RankBettiTable(
        B.k, {(i, lam): v * weyl_dim(lam, B.k) for (i, lam), v in B.entries.items()}
    )


def to_mult(T: RankBettiTable) -> MultBettiTable:
    return MultBettiTable(
        T.k, {(i, lam): v / weyl_dim(lam, T.k) for (i, lam), v in T.entries.items()}
    )


def _require_cone_rows(T: _Table) -> None:
    bad = [i for i in T.indices() if i not in (0, 1)]
    if bad:
        raise BadIndex(f"homological indices {bad} outside {{0, 1}}")


def rank_defect(T: RankBettiTable) -> Fraction:
    """``sum(row 0) - sum(row 1)``; a torsion module has defect zero."""
    _require_cone_rows(T)
    return sum(T.row(0).values(), Fraction(0)) - sum(T.row(1).values(), Fraction(0))


def antichain_check(T: RankBettiTable, spec: IdealSpec) -> CheckResult:
    """Compare row 0 summed over the strict interior of the ideal with row 1
    summed over the whole ideal; a realizable table has ``lhs >= rhs``.
    """
    _require_cone_rows(T)
    if spec.generators and next(iter(spec.generators)).k != T.k:
        raise MismatchedLength("ideal and table have different k")
    lhs = sum((v for lam, v in T.row(0).items() if spec.in_interior(lam)), Fraction(0))
    rhs = sum((v for lam, v in T.row(1).items() if lam in spec), Fraction(0))
    return CheckResult(lhs, rhs, lhs >= rhs)


def upward_check(T: RankBettiTable, min_generators: Iterable[SequenceLike]) -> CheckResult:
    """Dual inequality for the up-set ``U`` generated by ``min_generators``:
    row 0 over ``U`` must not exceed row 1 over the strict up-interior of ``U``.
    """
    _require_cone_rows(T)
    gens = [make_sequence(g) for g in min_generators]
    if any(g.k != T.k for g in gens):
        raise MismatchedLength("generators and table have different k")

    def in_up(lam):
        return any(contains(g, lam) for g in gens)

    def in_up_interior(lam):
        return any(contains(g, lam, strict=True) for g in gens)

    lhs = sum((v for lam, v in T.row(0).items() if in_up(lam)), Fraction(0))
    rhs = sum((v for lam, v in T.row(1).items() if in_up_interior(lam)), Fraction(0))
    return CheckResult(lhs, rhs, lhs <= rhs)


def pairing(B: MultBettiTable, G: CohomologyTable) -> RankBettiTable:
    """Derived rank table ``phi[i, lam] = sum_{p - q = i} beta[p, lam] * gamma[q, lam]``."""
    if B.k != G.k:
        raise MismatchedLength(f"Betti table k={B.k}, cohomology table k={G.k}")
    out: dict[Key, Fraction] = {}
    by_lam: dict[Sequence, list[tuple[int, Fraction]]] = {}
    for (q, lam), g in G.entries.items():
        by_lam.setdefault(lam, []).append((q, g))
    for (p, lam), b in B.entries.items():
        for q, g in by_lam.get(lam, ()):
            key = (p - q, lam)
            out[key] = out.get(key, Fraction(0)) + b * g
    return RankBettiTable(B.k, out)


# -- JSON ---------------------------------------------------------------------

_KINDS = {"rank": RankBettiTable, "mult": MultBettiTable}


def table_to_json(T) -> dict:
    if isinstance(T, CohomologyTable):
        return {
            "kind": "cohomology",
            "k": T.k,
            "n": T.n,
            "entries": [
                {"q": q, "lambda": list(lam), "value": format_rational(v)}
                for (q, lam), v in T.entries.items()
            ],
        }
    return {
        "kind": T.kind,
        "k": T.k,
        "entries": [
            {"i": i, "lambda": list(lam), "value": format_rational(v)}
            for (i, lam), v in T.entries.items()
        ],
    }


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise EqbsError(f"{what} must be an integer, got {x!r}")
    return x


def sequence_from_json(x) -> Sequence:
    if not isinstance(x, list) or not x:
        raise EqbsError(f"a sequence must be a nonempty integer array, got {x!r}")
    return Sequence(tuple(_int(p, "sequence part") for p in x))


def table_from_json(doc):
    """Inverse of :func:`table_to_json`.  Values may be ``"p/q"`` strings or
    JSON integers; duplicate keys are summed.
    """
    if not isinstance(doc, dict):
        raise EqbsError("table document must be a JSON object")
    kind = doc.get("kind")
    k = _int(doc.get("k"), "k")
    if k < 1:
        raise EqbsError("k must be positive")
    raw = doc.get("entries")
    if not isinstance(raw, list):
        raise EqbsError("'entries' must be an array")
    index_key = "q" if kind == "cohomology" else "i"
    items: dict[Key, Fraction] = {}
    for e in raw:
        if not isinstance(e, dict):
            raise EqbsError("each entry must be an object")
        try:
            idx = _int(e[index_key], index_key)
            lam = sequence_from_json(e["lambda"])
            val = as_rational(e["value"])
        except KeyError as exc:
            raise EqbsError(f"entry missing field {exc}") from exc
        key = (idx, lam)
        items[key] = items.get(key, Fraction(0)) + val
    if kind == "cohomology":
        return CohomologyTable(k, _int(doc.get("n"), "n"), items)
    if kind not in _KINDS:
        raise EqbsError(f"unknown table kind {kind!r}")
    return _KINDS[kind](k, items)
