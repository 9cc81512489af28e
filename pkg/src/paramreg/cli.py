"""Command-line entry point: ``paramreg {check,witness,hull,radius,suffcond} FILE``.

Exit codes: 0 regular or computed, 2 singular, 3 inconclusive, 1 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from decimal import ROUND_CEILING, ROUND_FLOOR, ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction

from .core import OutsideBox, ParametricMatrix, SubproblemKey, evaluate, normalize
from .exactla import det_exact
from .hull import HullResult, solve_hull
from .oracle import det_poly_bruteforce, grid_scan_singular, sample_hull_inner
from .problem import ProblemError, ProblemFile, format_scalar, load_problem, parse_scalar
from .radius import RadiusKind, RadiusResult, regularity_radius
from .realroots import RealRoot
from .regularity import (
    CenterSingular,
    RegularityVerdict,
    Status,
    Witness,
    check_regularity,
    check_regularity_reduced_sufficient,
    sufficient_condition_rho,
)

EXIT_OK, EXIT_ERROR, EXIT_SINGULAR, EXIT_UNKNOWN = 0, 1, 2, 3

log = logging.getLogger("paramreg")


# -- formatting ------------------------------------------------------------------


def _dec(x: Fraction, digits: int, rounding=ROUND_HALF_EVEN) -> str:
    ctx = Context(prec=digits, rounding=rounding)
    d = ctx.divide(Decimal(x.numerator), Decimal(x.denominator))
    return format(d, f".{digits}g") if d != 0 else "0"


def _num(x: Fraction, digits: int) -> str:
    """Exact ratio when short, otherwise a decimal to ``digits`` significant digits."""
    x = Fraction(x)
    s = format_scalar(x)
    return s if len(s) <= 12 else _dec(x, digits)


def _vec(v, digits: int) -> str:
    return "(" + ", ".join(_num(x, digits) for x in v) + ")"


def _pair(lo, hi) -> list[str]:
    return [format_scalar(lo), format_scalar(hi)]


def _bracket(r: RealRoot) -> list[str]:
    return _pair(r.lo, r.hi)


def _key_dict(key: SubproblemKey | None, pm: ParametricMatrix) -> dict | None:
    if key is None:
        return None
    pm = normalize(pm)  # keys index the normalized parameters
    fixed = [pm.original_index(i) for i in key.fixed_indices(pm.K)]
    eps = dict(zip(fixed, key.eps))
    return {
        "k": [pm.original_index(i) + 1 for i in key.q],
        "eps": [eps[i] for i in sorted(eps)],
    }


def _key_label(key: SubproblemKey | None, pm: ParametricMatrix) -> str:
    d = _key_dict(key, pm)
    if d is None:
        return "center"
    free = ",".join(str(i) for i in d["k"])
    signs = ",".join("+1" if e > 0 else "-1" for e in d["eps"])
    return f"k={free} eps=({signs})"


def _witness_dict(w: Witness, pm: ParametricMatrix) -> dict:
    return {
        "slice": _key_dict(w.key, pm),
        "exact": w.exact,
        "whole_slice": w.whole_slice,
        "params": [format_scalar(x) for x in w.params],
        "params_lo": [format_scalar(x) for x in w.params_lo],
        "params_hi": [format_scalar(x) for x in w.params_hi],
    }


def _witness_text(w: Witness, pm: ParametricMatrix, digits: int) -> str:
    where = _key_label(w.key, pm)
    if w.exact:
        vec = "(" + ", ".join(format_scalar(x) for x in w.params) + ")"
        return f"p = {vec} on {where} (exact)"
    lo, hi = _vec(w.params_lo, digits), _vec(w.params_hi, digits)
    return f"p ~ {_vec(w.params, digits)} on {where}, bracket {lo} .. {hi}"


# -- commands ------------------------------------------------------------------


def _verdict_report(v: RegularityVerdict, pm: ParametricMatrix, digits: int) -> tuple[dict, list[str]]:
    nroots = sum(max(c.roots, 0) for c in v.certificate)
    machine = {
        "status": v.status.value,
        "slices": v.slices,
        "slices_checked": len(v.certificate),
        "roots": nroots,
        "center_singular": v.center_singular,
        "certificate": [
            {
                "slice": _key_dict(c.key, pm),
                "polynomial": [format_scalar(x) for x in c.polynomial.coeffs],
                "roots": c.roots,
            }
            for c in v.certificate
        ],
        "witnesses": [_witness_dict(w, pm) for w in v.witnesses],
    }
    if v.center_singular:
        lines = ["Singular, center matrix is singular", "  " + _witness_text(v.witnesses[0], pm, digits)]
        return machine, lines
    lines = [f"{v.status.value}, {v.slices} slices, {nroots} roots"]
    for c in v.certificate:
        roots = "identically zero" if c.roots < 0 else f"{c.roots} roots"
        lines.append(f"  {_key_label(c.key, pm)}: det = {c.polynomial}, {roots}")
    for w in v.witnesses:
        lines.append("  witness " + _witness_text(w, pm, digits))
    return machine, lines


def _selfcheck_regularity(pm: ParametricMatrix, v: RegularityVerdict) -> list[str]:
    problems = []
    g = grid_scan_singular(pm, 9)
    if g is not None and v.status is Status.REGULAR:
        problems.append(f"grid scan found a singular point near {tuple(float(x) for x in g.params)}")
    if pm.n <= 4:
        npm = normalize(pm)
        for c in v.certificate:
            if det_poly_bruteforce(npm, c.key) != c.polynomial:
                problems.append(f"cofactor expansion disagrees on {_key_label(c.key, npm)}")
    for w in v.witnesses:
        if w.exact and det_exact(evaluate(pm, w.params, strict=False)) != 0:
            problems.append(f"witness {w.params} does not re-verify")
    return problems


def cmd_check(prob: ProblemFile, args) -> tuple[int, dict, list[str]]:
    pm = prob.matrix
    if args.at is not None:
        p = [parse_scalar(s, f"--at[{i}]") for i, s in enumerate(args.at.split(","))]
        if len(p) != pm.K:
            raise ProblemError(f"--at: expected {pm.K} values, got {len(p)}")
        d = det_exact(evaluate(pm, p, strict=not args.lax))
        machine = {"command": "check", "at": [format_scalar(x) for x in p], "det": format_scalar(d), "singular": d == 0}
        text = [f"det = {format_scalar(d)} ({'singular' if d == 0 else 'nonsingular'})"]
        return (EXIT_SINGULAR if d == 0 else EXIT_OK), machine, text
    exhaustive = args.exhaustive or args.command == "witness"
    v = check_regularity(pm, args.tol, exhaustive, args.parallel, args.heuristic_order)
    machine, text = _verdict_report(v, pm, args.digits)
    machine = {"command": args.command, **machine}
    if args.selfcheck:
        problems = _selfcheck_regularity(pm, v)
        machine["selfcheck"] = problems
        text.append("selfcheck: ok" if not problems else "selfcheck: MISMATCH: " + "; ".join(problems))
    return (EXIT_OK if v.regular else EXIT_SINGULAR), machine, text


def _hull_report(prob: ProblemFile, h: HullResult, args) -> tuple[dict, list[str]]:
    pm = prob.matrix
    if h.singular:
        machine = {"status": "singular", "witness": _witness_dict(h.witness, pm)}
        return machine, ["Singular, no bounded hull", "  witness " + _witness_text(h.witness, pm, args.digits)]
    machine = {
        "status": "hull",
        "hull": [_pair(iv.lo, iv.hi) for iv in h.hull],
        "range_calls": h.range_calls,
        "attaining": [
            {
                "component": i + 1,
                "low": {"slice": _key_dict(lo.key, pm), "t": _bracket(lo.t)},
                "high": {"slice": _key_dict(hi.key, pm), "t": _bracket(hi.t)},
            }
            for i, (lo, hi) in enumerate(h.attaining)
        ],
    }
    text = ["Hull"]
    for i, iv in enumerate(h.hull):
        lo = _dec(iv.lo, args.digits, ROUND_FLOOR)
        hi = _dec(iv.hi, args.digits, ROUND_CEILING)
        text.append(f"  x{i + 1} in [{lo}, {hi}]")
    return machine, text


def cmd_hull(prob: ProblemFile, args) -> tuple[int, dict, list[str]]:
    sys_ = prob.system()
    h = solve_hull(sys_, args.tol, args.parallel)
    machine, text = _hull_report(prob, h, args)
    machine = {"command": "hull", **machine}
    if args.selfcheck and not h.singular:
        inner = sample_hull_inner(sys_, 200)
        bad = [i + 1 for i, (a, b) in enumerate(zip(inner, h.hull)) if not (b.lo <= a.lo and a.hi <= b.hi)]
        machine["selfcheck"] = [f"sampled solutions escape component {i}" for i in bad]
        text.append("selfcheck: ok" if not bad else f"selfcheck: MISMATCH in components {bad}")
    return (EXIT_SINGULAR if h.singular else EXIT_OK), machine, text


def _radius_report(pm: ParametricMatrix, r: RadiusResult, digits: int) -> tuple[dict, list[str]]:
    machine: dict = {"kind": r.kind.value, "certified": r.certified}
    if r.kind is RadiusKind.ZERO:
        w = r.center_witness
        machine.update(value=["0", "0"], witness={"params": [format_scalar(x) for x in w]})
        return machine, ["r* = 0", f"  center matrix is singular at p = {_vec(w, digits)}"]
    if r.kind is RadiusKind.INFINITE:
        return machine, ["r* = inf", "  no slice pencil has a nonzero real eigenvalue"]
    best = r.rho0.argmax
    machine.update(
        value=_bracket(r.value),
        value_decimal=_dec(r.value.mid, digits),
        rho0=_bracket(r.rho0.max),
        slice=_key_dict(best.key, pm),
    )
    text = [f"r* = {_dec(r.value.mid, digits)}", f"  max rho0 = {_dec(r.rho0.max.mid, digits)} on {_key_label(best.key, pm)}"]
    w = r.witness
    if w is not None:
        machine["witness"] = {
            "params": [format_scalar(x) for x in w.params],
            "params_lo": [format_scalar(x) for x in w.params_lo],
            "params_hi": [format_scalar(x) for x in w.params_hi],
            "scale": _bracket(w.scale) if w.scale is not None else None,
            "validated": w.validated,
        }
        text.append(f"  singular matrix at p ~ {_vec(w.params, digits)} ({'validated' if w.validated else 'not validated'})")
    if not r.certified:
        text.append("  warning: value from sampling, not certified")
    return machine, text


def cmd_radius(prob: ProblemFile, args) -> tuple[int, dict, list[str]]:
    r = regularity_radius(prob.matrix, args.tol, args.parallel)
    machine, text = _radius_report(prob.matrix, r, args.digits)
    machine = {"command": "radius", **machine}
    if args.selfcheck and r.kind is RadiusKind.FINITE:
        ok = r.value.reciprocal().bracket.lo <= r.rho0.max.hi and r.rho0.max.lo <= r.value.reciprocal().bracket.hi
        ok = ok and (r.witness is None or r.witness.validated)
        machine["selfcheck"] = [] if ok else ["reciprocal identity or witness validation failed"]
        text.append("selfcheck: ok" if ok else "selfcheck: MISMATCH")
    return EXIT_OK, machine, text


def cmd_suffcond(prob: ProblemFile, args) -> tuple[int, dict, list[str]]:
    pm = prob.matrix
    try:
        s = sufficient_condition_rho(pm, args.tol)
        red = check_regularity_reduced_sufficient(pm, args.reduce, args.tol)
    except CenterSingular as e:
        machine = {"command": "suffcond", "status": "Singular", "center_singular": True, "witness": [format_scalar(x) for x in e.witness]}
        return EXIT_SINGULAR, machine, ["Singular, center matrix is singular", f"  p = {_vec(e.witness, args.digits)}"]
    rho_txt = _dec(s.rho.mid, args.digits)
    status = Status.REGULAR if s.holds or red.status is Status.REGULAR else Status.UNKNOWN
    machine = {
        "command": "suffcond",
        "status": status.value,
        "rho": _bracket(s.rho),
        "holds": s.holds,
        "reduced": {
            "t": args.reduce,
            "status": red.status.value,
            "max": _bracket(red.max_rho) if red.max_rho is not None else None,
            "slices": [{"slice": _key_dict(k, pm), "rho": _bracket(v)} for k, v in red.slices],
        },
    }
    text = [
        f"{status.value}",
        f"  global rho = {rho_txt} ({'< 1, regular' if s.holds else '>= 1, inconclusive'})",
    ]
    mx = _dec(red.max_rho.mid, args.digits) if red.max_rho is not None else "n/a"
    text.append(f"  reduced t={args.reduce}: {red.status.value}, max slice rho = {mx}")
    return (EXIT_OK if status is Status.REGULAR else EXIT_UNKNOWN), machine, text


COMMANDS = {"check": cmd_check, "witness": cmd_check, "hull": cmd_hull, "radius": cmd_radius, "suffcond": cmd_suffcond}


def _positive_fraction(s: str) -> Fraction:
    try:
        v = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("problem", help="problem file (JSON)")
    common.add_argument("--tol", type=_positive_fraction, default=Fraction(1, 10**9), help="bracket width for irrational roots")
    common.add_argument("--digits", type=int, default=6, help="significant digits in text output")
    common.add_argument("--parallel", type=int, default=1, metavar="N", help="worker processes")
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--selfcheck", action="store_true", help="cross-check with the brute-force oracles")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="paramreg", description="Exact regularity checks for interval parametric matrices.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("check", "witness"):
        p = sub.add_parser(name, parents=[common], help="decide regularity" if name == "check" else "list every singular slice")
        p.add_argument("--exhaustive", action="store_true", help="report all witnesses")
        p.add_argument("--heuristic-order", action="store_true", help="visit likely-singular slices first")
        p.add_argument("--at", metavar="P1,P2,...", help="only evaluate det A(p) at this parameter vector")
        p.add_argument("--lax", action="store_true", help="allow --at outside the box")
    sub.add_parser("hull", parents=[common], help="interval hull of the solution set")
    sub.add_parser("radius", parents=[common], help="regularity radius")
    p = sub.add_parser("suffcond", parents=[common], help="spectral-radius sufficient conditions")
    p.add_argument("--reduce", type=int, default=1, metavar="T", help="parameters freed per reduced subproblem")
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.digits < 1 or args.parallel < 1:
        print("error: --digits and --parallel must be positive", file=sys.stderr)
        return EXIT_ERROR
    try:
        prob = load_problem(args.problem)
        code, machine, text = COMMANDS[args.command](prob, args)
    except (ProblemError, OutsideBox, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    if args.format == "machine":
        out.write(json.dumps(machine, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
