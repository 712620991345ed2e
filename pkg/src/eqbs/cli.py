"""Command-line front end.

Every subcommand prints one JSON document on stdout.  Exit status is 0 on
success, 1 when the answer is mathematically negative (a table outside the
cone, a failed small-resolution condition) and 2 on bad input.
"""

from __future__ import annotations

import argparse
import io
import json
import re
import sys

from . import render
from .betti_tables import (
    CohomologyTable,
    MultBettiTable,
    RankBettiTable,
    as_rational,
    pairing,
    pure_table,
    rank_defect,
    sequence_from_json,
    table_from_json,
    table_to_json,
    to_rank,
)
from .bwb import cohomology, result_to_json, solve_beta
from .cone import (
    Member,
    enumerate_rays,
    membership,
    pure_from_json,
    reason_to_json,
    resum,
    verdict_to_json,
)
from .efw import (
    ConditionFailed,
    box_setup,
    chain_realization,
    efw_to_json,
    realization_to_json,
    small_resolution,
    strip_analysis,
    verify_linear_case,
)
from .errors import EqbsError
from .schur import cauchy_level, cauchy_total, hom_dimension, lr_coefficient, map_type, pieri, weyl_dim
from .young_lattice import Sequence, enumerate_box, make_sequence


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _seq(text: str) -> Sequence:
    try:
        return make_sequence(int(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad sequence {text!r}: {exc}") from exc


def _ints(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from exc


_NEGATIVE_LIST = re.compile(r"^-\d+(,-?\d+)*$")


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse would read "--d -1" or "--beta -1,-2" as a new option
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if (
            tok.startswith("--")
            and "=" not in tok
            and i + 1 < len(argv)
            and _NEGATIVE_LIST.match(argv[i + 1])
        ):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _read_json(source: str, stdin) -> object:
    try:
        if source == "-":
            text = stdin.read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {source}: {exc.msg} at line {exc.lineno}") from exc


def _read_rank_table(source, stdin) -> RankBettiTable:
    T = table_from_json(_read_json(source, stdin))
    if isinstance(T, MultBettiTable):
        return to_rank(T)
    if not isinstance(T, RankBettiTable):
        raise UsageError("expected a Betti table (kind 'rank' or 'mult')")
    return T


# -- subcommands ----------------------------------------------------------------
# Each returns (exit code, JSON payload, optional human-readable text).


def cmd_dim(a, stdin):
    return 0, {"dim": weyl_dim(a.lam, a.k)}, "\n".join(render.young_diagram(a.lam))


def cmd_lr(a, stdin):
    return 0, {"coefficient": lr_coefficient(lam=a.lam, mu=a.mu, nu=a.nu)}, None


def cmd_pieri(a, stdin):
    shapes = pieri(a.mu, a.d, a.k)
    return 0, {"shapes": [list(s) for s in shapes]}, None


def cmd_hom(a, stdin):
    k = a.mu.k
    n = a.n if a.n is not None else k
    return 0, {
        "dim": hom_dimension(a.mu, a.lam, k, n),
        "map_type": map_type(a.mu, a.lam).value,
        "degree": a.mu.size - a.lam.size,
    }, None


def cmd_cauchy(a, stdin):
    terms = cauchy_level(a.k, a.n, a.d)
    return 0, {
        "terms": [{"nu": list(nu), "dim_v": dv, "dim_w": dw} for nu, dv, dw in terms],
        "total": sum(dv * dw for _, dv, dw in terms),
        "monomials": cauchy_total(a.k, a.n, a.d),
    }, None


def cmd_check(a, stdin):
    T = _read_rank_table(a.table, stdin)
    v = membership(T)
    out = {"member": v.member, "rank_defect": str(rank_defect(T))}
    if not v.member:
        out["reason"] = reason_to_json(v.reason)
    return (0 if v.member else 1), out, render.table_report(T)


def cmd_decompose(a, stdin):
    T = _read_rank_table(a.table, stdin)
    v = membership(T)
    text = render.table_report(T)
    if isinstance(v, Member):
        text += "\n\n" + "\n".join(
            f"{p.scale} * P({p.lo}, {p.hi})" for p in v.decomposition
        )
    return (0 if v.member else 1), verdict_to_json(v), text


def cmd_sum(a, stdin):
    doc = _read_json(a.decomposition, stdin)
    if isinstance(doc, dict):
        if doc.get("member") is False:
            raise UsageError("input is a non-member verdict; nothing to sum")
        doc = doc.get("decomposition")
    if not isinstance(doc, list):
        raise UsageError("expected a decomposition array or a member verdict")
    parts = [pure_from_json(p) for p in doc]
    if not parts and a.k is None:
        raise UsageError("empty decomposition needs --k")
    T = resum(parts, a.k)
    return 0, table_to_json(T), render.table_report(T)


def cmd_pure(a, stdin):
    T = pure_table(a.lo, a.hi, as_rational(a.scale))
    return 0, table_to_json(T), render.table_report(T)


def cmd_rays(a, stdin):
    if a.support is not None:
        doc = _read_json(a.support, stdin)
        if not isinstance(doc, list):
            raise UsageError("support must be a JSON array of sequences")
        support = [sequence_from_json(s) for s in doc]
    else:
        if a.k is None or a.lo is None or a.hi is None:
            raise UsageError("rays needs --support or all of --k, --lo, --hi")
        support = enumerate_box(a.k, a.lo, a.hi)
    rays = enumerate_rays(support)
    return 0, {"rays": [{"lo": list(l), "hi": list(h)} for l, h in rays]}, None


def cmd_bwb(a, stdin):
    res = cohomology(a.beta, a.d, a.k)
    text = None
    if not res.vanishes:
        text = f"H^{res.degree} = S_{res.weight}(W)\n" + "\n".join(render.young_diagram(res.weight))
    return 0, result_to_json(res), text


def cmd_bwb_solve(a, stdin):
    return 0, {"beta": list(solve_beta(a.forbidden, a.k))}, None


def cmd_efw(a, stdin):
    data = box_setup(a.mu, a.r, a.k, a.m)
    R = verify_linear_case(data)
    out = efw_to_json(data)
    out["realization"] = realization_to_json(R)
    return 0, out, render.efw_report(data)


def cmd_chain(a, stdin):
    R = chain_realization(a.lo, a.hi, a.k)
    return 0, realization_to_json(R), None


def cmd_small(a, stdin):
    res = small_resolution(a.lo, a.hi, a.k)
    if isinstance(res, ConditionFailed):
        return 1, {"condition_failed": {
            "i": res.i, "j": res.j, "lo_i": res.lo_value, "hi_j": res.hi_value,
        }}, None
    return 0, realization_to_json(res), None


def cmd_strip(a, stdin):
    data = box_setup(a.mu, a.r, a.k, a.m)
    res = strip_analysis(data, a.p, a.q)
    out = {
        "beta": list(res.beta),
        "survivors": [{"position": pos, "weight": list(w)} for pos, w in res.survivors],
        "two_term": res.two_term,
        "strip_ok": res.strip_ok,
        "realization": realization_to_json(res.realization) if res.realization else None,
    }
    return 0, out, render.efw_report(data)


def cmd_pair(a, stdin):
    B = table_from_json(_read_json(a.betti, stdin))
    G = table_from_json(_read_json(a.cohomology, stdin))
    if not isinstance(B, MultBettiTable):
        raise UsageError("--betti must be a multiplicity table (kind 'mult')")
    if not isinstance(G, CohomologyTable):
        raise UsageError("--cohomology must be a table of kind 'cohomology'")
    T = pairing(B, G)
    return 0, table_to_json(T), render.table_report(T)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eqbs", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="append diagrams and aligned tables after the JSON line")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = add("dim", cmd_dim, "dimension of S_lambda(C^k)")
    p.add_argument("--lambda", dest="lam", type=_seq, required=True)
    p.add_argument("--k", type=int)

    p = add("lr", cmd_lr, "Littlewood-Richardson coefficient")
    p.add_argument("--lambda", dest="lam", type=_seq, required=True)
    p.add_argument("--mu", type=_seq, required=True)
    p.add_argument("--nu", type=_seq, required=True)

    p = add("pieri", cmd_pieri, "shapes in S_mu (x) Sym^d")
    p.add_argument("--mu", type=_seq, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int)

    p = add("hom", cmd_hom, "equivariant maps S_mu(V)(x)R -> S_lambda(V)(x)R")
    p.add_argument("--mu", type=_seq, required=True)
    p.add_argument("--lambda", dest="lam", type=_seq, required=True)
    p.add_argument("--n", type=int)

    p = add("cauchy", cmd_cauchy, "degree-d piece of the coordinate ring")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    for name, func, help_ in (
        ("check", cmd_check, "cone membership with certificate"),
        ("decompose", cmd_decompose, "decompose into pure tables"),
    ):
        p = add(name, func, help_)
        p.add_argument("--table", default="-", help="JSON table file, '-' for stdin")

    p = add("sum", cmd_sum, "re-sum a decomposition into a rank table")
    p.add_argument("--decomposition", default="-")
    p.add_argument("--k", type=int)

    p = add("pure", cmd_pure, "pure rank table")
    p.add_argument("--lo", type=_seq, required=True)
    p.add_argument("--hi", type=_seq, required=True)
    p.add_argument("--scale", default="1")

    p = add("rays", cmd_rays, "extremal rays supported in a window")
    p.add_argument("--support")
    p.add_argument("--k", type=int)
    p.add_argument("--lo", type=int)
    p.add_argument("--hi", type=int)

    p = add("bwb", cmd_bwb, "cohomology of S_beta(S)(d) on projective space")
    p.add_argument("--beta", type=_ints, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("bwb-solve", cmd_bwb_solve, "beta killing the given twists")
    p.add_argument("--forbidden", type=_ints, required=True)
    p.add_argument("--k", type=int, required=True)

    for name, func, help_ in (
        ("efw", cmd_efw, "border-strip complex for one removed box"),
        ("strip", cmd_strip, "keep two arbitrary terms of the complex"),
    ):
        p = add(name, func, help_)
        p.add_argument("--mu", type=_seq, required=True)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--m", type=int, default=1)
        p.add_argument("--k", type=int)
        if name == "strip":
            p.add_argument("--p", type=int, required=True)
            p.add_argument("--q", type=int, required=True)

    for name, func, help_ in (
        ("chain", cmd_chain, "realization along a saturated chain"),
        ("small", cmd_small, "small bi-equivariant resolution"),
    ):
        p = add(name, func, help_)
        p.add_argument("--lo", type=_seq, required=True)
        p.add_argument("--hi", type=_seq, required=True)
        p.add_argument("--k", type=int)

    p = add("pair", cmd_pair, "pair a Betti table with a cohomology table")
    p.add_argument("--betti", required=True)
    p.add_argument("--cohomology", required=True)
    return parser


def run(argv: list[str], stdin=None) -> tuple[int, str, str]:
    """Run one command; returns ``(exit code, stdout, stderr)``.

    ``stdin`` is a string or a text stream; it is only read by commands whose
    input file is ``-``.
    """
    if stdin is None or isinstance(stdin, str):
        stdin_stream = io.StringIO(stdin or "")
    else:
        stdin_stream = stdin
    try:
        args = build_parser().parse_args(_glue_negative_values(list(argv)))
        code, payload, text = args.func(args, stdin_stream)
    except (UsageError, EqbsError, argparse.ArgumentTypeError) as exc:
        reason = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        return 2, "", f"eqbs: error: {reason}\n"
    out = json.dumps(payload) + "\n"
    if args.pretty and text:
        out += "\n" + text + "\n"
    return code, out, ""


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    code, out, err = run(argv, sys.stdin)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
