"""Membership in the square-matrix Boij-Soderberg cone.

A rank table with integral entries is a sum of pure tables exactly when the
bipartite graph joining each row-0 label to every strictly larger row-1 label
has a perfect matching.  Labels are aggregated into single nodes with
capacities, and matchings are computed as integral max flows, so the work
depends on the size of the support and not on the magnitude of the entries.
When no perfect matching exists, the deficient side of a minimum cut gives an
order ideal whose antichain inequality fails.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple, Union

from .betti_tables import (
    PureTable,
    RankBettiTable,
    _require_cone_rows,
    antichain_check,
    format_rational,
    rank_defect,
    sequence_from_json,
    as_rational,
)
from .errors import EqbsError, MismatchedLength, NoViolation, NonIntegerEntry, RankDefectError
from .young_lattice import IdealSpec, Sequence, SequenceLike, contains, make_sequence


@dataclass(frozen=True)
class ConeGraph:
    left: tuple[tuple[Sequence, int], ...]
    right: tuple[tuple[Sequence, int], ...]
    edges: tuple[tuple[Sequence, Sequence], ...]

    @property
    def left_total(self) -> int:
        return sum(c for _, c in self.left)

    @property
    def right_total(self) -> int:
        return sum(c for _, c in self.right)

    def neighbors(self, lam: Sequence) -> list[Sequence]:
        return [r for l, r in self.edges if l == lam]


def _graph(row0: dict[Sequence, int], row1: dict[Sequence, int]) -> ConeGraph:
    left = tuple(sorted(row0.items()))
    right = tuple(sorted(row1.items()))
    edges = tuple(
        (l, r) for l, _ in left for r, _ in right if contains(l, r, strict=True)
    )
    return ConeGraph(left, right, edges)


def build_graph(T: RankBettiTable) -> ConeGraph:
    """Aggregated bipartite graph of an integral, rank-balanced table."""
    _require_cone_rows(T)
    for (i, lam), v in T.entries.items():
        if v.denominator != 1 or v < 0:
            raise NonIntegerEntry(f"entry ({i}, {lam}) = {v} is not a nonnegative integer")
    defect = rank_defect(T)
    if defect:
        raise RankDefectError(f"row sums differ by {defect}")
    return _graph(
        {lam: int(v) for lam, v in T.row(0).items()},
        {lam: int(v) for lam, v in T.row(1).items()},
    )


class Matching(NamedTuple):
    size: int
    flow: dict
    # nodes on the sink side of the final residual network, used for certificates
    sink_side: frozenset


_S, _T = ("s",), ("t",)


def max_matching(G: ConeGraph) -> Matching:
    """Maximum capacitated matching via Edmonds-Karp.

    Nodes are visited in lexicographic order of their labels, so the result is
    a deterministic function of the graph.
    """
    inf = G.left_total + G.right_total + 1
    adj: dict[tuple, list[tuple]] = {_S: [], _T: []}
    cap: dict[tuple[tuple, tuple], int] = {}

    def add(u, v, c):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
        cap[(u, v)] = cap.get((u, v), 0) + c
        cap.setdefault((v, u), 0)

    for lam, c in G.left:
        add(_S, ("L", lam), c)
    for l, r in G.edges:
        add(("L", l), ("R", r), inf)
    for lam, c in G.right:
        add(("R", lam), _T, c)
    for u in adj:
        # deterministic BFS order; sink and source sort apart from labelled nodes
        adj[u] = sorted(set(adj[u]), key=lambda node: (len(node), node))

    size = 0
    while True:
        parent = {_S: None}
        queue = deque([_S])
        while queue and _T not in parent:
            u = queue.popleft()
            for v in adj[u]:
                if v not in parent and cap[(u, v)] > 0:
                    parent[v] = u
                    queue.append(v)
        if _T not in parent:
            break
        path = []
        v = _T
        while parent[v] is not None:
            path.append((parent[v], v))
            v = parent[v]
        push = min(cap[e] for e in path)
        for u, v in path:
            cap[(u, v)] -= push
            cap[(v, u)] += push
        size += push

    flow = {}
    for l, r in G.edges:
        f = inf - cap[(("L", l), ("R", r))]
        if f:
            flow[(l, r)] = f

    # nodes that can still reach the sink in the residual network
    sink_side = {_T}
    queue = deque([_T])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in sink_side and cap[(u, v)] > 0:
                sink_side.add(u)
                queue.append(u)
    return Matching(size, flow, frozenset(sink_side))


def hall_violator(G: ConeGraph, matching: Matching | None = None) -> IdealSpec:
    """An order ideal, generated by row-1 labels, whose antichain inequality
    fails for the table behind ``G``.

    The right nodes that can still reach unused sink capacity form a set ``S``
    with fewer neighbours than members.  Taking the ideal generated by their
    labels only adds right nodes whose neighbours are already neighbours of
    ``S``, so the inequality still fails for the whole ideal.
    """
    if matching is None:
        matching = max_matching(G)
    if matching.size == G.right_total:
        raise NoViolation("the graph has a perfect matching")
    labels = [lam for lam, _ in G.right if ("R", lam) in matching.sink_side]
    return IdealSpec(frozenset(labels))


# -- verdicts -------------------------------------------------------------------


@dataclass(frozen=True)
class RankDefect:
    value: Fraction


@dataclass(frozen=True)
class NegativeEntry:
    i: int
    lam: Sequence
    value: Fraction


@dataclass(frozen=True)
class AntichainViolation:
    spec: IdealSpec
    lhs: Fraction
    rhs: Fraction


Reason = Union[RankDefect, NegativeEntry, AntichainViolation]


@dataclass(frozen=True)
class Member:
    decomposition: tuple[PureTable, ...]
    member = True


@dataclass(frozen=True)
class NotMember:
    reason: Reason
    member = False


Verdict = Union[Member, NotMember]


def resum(decomposition: Iterable[PureTable], k: int | None = None) -> RankBettiTable:
    parts = list(decomposition)
    if k is None:
        if not parts:
            raise EqbsError("cannot infer k from an empty decomposition")
        k = parts[0].lo.k
    total = RankBettiTable(k)
    for p in parts:
        total = total + p.table()
    return total


def membership(T: RankBettiTable) -> Verdict:
    """Decide whether ``T`` lies in the cone.

    Members come with a decomposition into pure tables that sums back to ``T``
    exactly.  Non-members come with the first failed condition: a negative
    entry, a nonzero rank defect, or a violated antichain inequality.
    """
    _require_cone_rows(T)
    for (i, lam), v in T.entries.items():
        if v < 0:
            return NotMember(NegativeEntry(i, lam, v))
    defect = rank_defect(T)
    if defect:
        return NotMember(RankDefect(defect))
    scale = lcm(*(v.denominator for v in T.entries.values())) if T.entries else 1
    G = build_graph(T * scale)
    m = max_matching(G)
    if m.size == G.right_total:
        parts = tuple(
            PureTable(l, r, Fraction(f, scale)) for (l, r), f in sorted(m.flow.items())
        )
        return Member(parts)
    spec = hall_violator(G, m)
    lhs, rhs, _ = antichain_check(T, spec)
    return NotMember(AntichainViolation(spec, lhs, rhs))


def enumerate_rays(support: Iterable[SequenceLike]) -> list[tuple[Sequence, Sequence]]:
    """All comparable pairs ``lo < hi`` within ``support``, lexicographically."""
    pts = sorted({make_sequence(s) for s in support})
    if pts and len({p.k for p in pts}) > 1:
        raise MismatchedLength("support mixes sequence lengths")
    return [(a, b) for a in pts for b in pts if contains(a, b, strict=True)]


# -- JSON ---------------------------------------------------------------------


def pure_to_json(p: PureTable) -> dict:
    return {"lo": list(p.lo), "hi": list(p.hi), "scale": format_rational(p.scale)}


def pure_from_json(doc) -> PureTable:
    if not isinstance(doc, dict):
        raise EqbsError("pure table must be a JSON object")
    try:
        return PureTable(
            sequence_from_json(doc["lo"]),
            sequence_from_json(doc["hi"]),
            as_rational(doc.get("scale", 1)),
        )
    except KeyError as exc:
        raise EqbsError(f"pure table missing field {exc}") from exc


def reason_to_json(reason: Reason) -> dict:
    if isinstance(reason, AntichainViolation):
        return {
            "type": "antichain",
            "generators": [list(g) for g in reason.spec.sorted_generators()],
            "lhs": format_rational(reason.lhs),
            "rhs": format_rational(reason.rhs),
        }
    if isinstance(reason, RankDefect):
        return {"type": "rank_defect", "value": format_rational(reason.value)}
    return {
        "type": "negative_entry",
        "i": reason.i,
        "lambda": list(reason.lam),
        "value": format_rational(reason.value),
    }


def verdict_to_json(v: Verdict) -> dict:
    if isinstance(v, Member):
        return {"member": True, "decomposition": [pure_to_json(p) for p in v.decomposition]}
    return {"member": False, "reason": reason_to_json(v.reason)}
