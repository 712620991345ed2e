"""Plain-text rendering: Young diagrams, transposed Betti tables, and EFW
border strips.
"""

from __future__ import annotations

from .betti_tables import format_rational
from .efw import EFWData
from .young_lattice import Sequence, det_twist, partition_twist

MARK_INNER, MARK_BOX, MARK_OUTER, MARK_CORE = "@", "*", "o", "."


def young_diagram(lam: Sequence) -> list[str]:
    """English-notation diagram, one ``#`` per box.  Sequences with negative
    parts are drawn after the smallest determinant twist making them
    partitions, and the twist is noted.
    """
    shift = partition_twist(lam)
    shown = det_twist(lam, shift)
    rows = ["#" * p for p in shown.parts if p > 0] or ["(empty)"]
    if shift:
        rows.append(f"(twisted by det^{shift})")
    return rows


def table_grid(T) -> str:
    """The table transposed: one line per homological row, one column per shape."""
    cols = sorted(T.support())
    idx = T.indices()
    head = [""] + [str(c) for c in cols]
    body = []
    for i in idx:
        row = T.row(i)
        body.append([f"{i}:"] + [format_rational(row[c]) if c in row else "." for c in cols])
    widths = [max(len(r[j]) for r in [head] + body) for j in range(len(head))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in [head] + body]
    return "\n".join(lines)


def table_report(T) -> str:
    out = [table_grid(T)]
    for lam in sorted(T.support()):
        out.append("")
        out.append(str(lam))
        out.extend("  " + line for line in young_diagram(lam))
    return "\n".join(out)


def efw_diagram(data: EFWData) -> str:
    """The largest shape with the added squares marked: ``@`` for the inner
    strip above row ``r``, ``*`` in row ``r``, ``o`` for the outer strip below,
    ``.`` for the core shape ``alpha(0)``.
    """
    lo, hi = data.shapes[0], data.shapes[-1]
    shift = partition_twist(lo)
    lo, hi = det_twist(lo, shift), det_twist(hi, shift)
    lines = []
    for i in range(data.k):
        mark = MARK_INNER if i + 1 < data.r else MARK_BOX if i + 1 == data.r else MARK_OUTER
        lines.append(MARK_CORE * lo[i] + mark * (hi[i] - lo[i]))
    if shift:
        lines.append(f"(twisted by det^{shift})")
    legend = f"legend: {MARK_CORE} alpha(0)  {MARK_INNER} inner strip  {MARK_BOX} row r  {MARK_OUTER} outer strip"
    return "\n".join(lines + [legend])


def efw_report(data: EFWData) -> str:
    out = [efw_diagram(data), ""]
    for i, (shape, d) in enumerate(zip(data.shapes, data.d)):
        marker = "  <- removed box" if i == data.r else ""
        out.append(f"alpha({i}) = {shape}  twist {d}{marker}")
    out.append(f"beta = {data.beta}")
    return "\n".join(out)
