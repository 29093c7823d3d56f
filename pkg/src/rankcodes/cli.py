"""Command-line interface: constructions, analyses, bounds, and figure data.

Output is deterministic: identical argv and inputs give byte-identical
output.  Exact rationals in bound curves are serialized as decimals with
12 significant digits (round-half-even); counts are exact decimal
integers.  Exit codes: 0 success, 2 usage or argument error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from pathlib import Path

from . import bounds, codes, counting, coverage
from .errors import RankCodesError, ResourceLimit
from .field import parse_field_spec


class _UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------


def format_decimal(x: Fraction) -> str:
    """Decimal with <= 12 significant digits, round-half-even, no exponent."""
    with localcontext() as ctx:
        ctx.prec = 12
        ctx.rounding = ROUND_HALF_EVEN
        d = Decimal(x.numerator) / Decimal(x.denominator)
    if d == d.to_integral_value():
        return str(int(d))
    return format(d.normalize(), "f")


def format_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _vector_literal(text: str) -> list[int]:
    return [int(x) for x in text.split(",")]


def _emit(path: str | None, lines: list[str]):
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _load_code(path: str) -> codes.LinearCode:
    return codes.load_code(Path(path).read_text())


# ---------------------------------------------------------------------------
# figure data
# ---------------------------------------------------------------------------

_FIGURE_B = {
    "bounds-b1": Fraction(1),
    "bounds-b4": Fraction(4),
    "bounds-b025": Fraction(1, 4),
}
FIGURE_IDS = (*_FIGURE_B, "vectors32")


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    out: str | None
    step: Fraction


def _curve_lines(b: Fraction, step: Fraction) -> list[str]:
    lines = ["delta,gv,sphere_packing,singleton"]
    for p in bounds.asym_curve(b, step):
        lines.append(
            f"{format_decimal(p.delta)},{format_decimal(p.gv)},"
            f"{format_decimal(p.sphere_packing)},{format_decimal(p.singleton)}"
        )
    return lines


def _count_lines(q: int, m: int, n: int, label: str = "w") -> list[str]:
    lines = [f"{label},rank_count,hamming_count"]
    for w in range(n + 1):
        rc = counting.count_rank_weight(q, m, n, w).value
        hc = counting.count_hamming_weight(q, m, n, w).value
        lines.append(f"{w},{rc},{hc}")
    return lines


def emit_figure(spec: FigureSpec):
    if spec.figure_id == "vectors32":
        lines = _count_lines(2, 32, 32, label="r")
    else:
        lines = _curve_lines(_FIGURE_B[spec.figure_id], spec.step)
    _emit(spec.out, lines)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_count(args):
    if args.csv is not None:
        _emit(args.csv, _count_lines(args.q, args.m, args.n))
        return 0
    if args.w is None:
        raise _UsageError("count needs --w (or --csv for the full table)")
    print(counting.count_rank_weight(args.q, args.m, args.n, args.w).value)
    return 0


def _cmd_volume(args):
    if args.csv is not None:
        _emit(args.csv, _count_lines(args.q, args.m, args.n))
        return 0
    if args.w is None:
        raise _UsageError("volume needs --w (or --csv for the full table)")
    print(counting.ball_volume(args.q, args.m, args.n, args.w).value)
    return 0


def _cmd_bounds(args):
    rep = bounds.finite_bounds(args.q, args.m, args.n, args.d)
    print(f"q={rep.q} m={rep.m} n={rep.n} d={rep.d}")
    print(f"t={rep.t}")
    print(f"singleton_dmax={rep.singleton_dmax}")
    print(f"gilbert_lower={format_fraction(rep.gilbert_lower)}")
    print(f"gilbert_lower_ceil={rep.gilbert_lower_ceil}")
    print(f"sphere_packing_upper={format_fraction(rep.sphere_packing_upper)}")
    print(f"sphere_packing_upper_floor={rep.sphere_packing_upper_floor}")
    return 0


def _cmd_asymptotic(args):
    _emit(args.csv, _curve_lines(args.b, args.step))
    return 0


def _cmd_mkcode_gabidulin(args):
    field = parse_field_spec(args.field)
    if args.g is not None:
        g = tuple(field.from_int(c) for c in args.g)
    else:
        g = codes.default_generator_vector(field, args.n)
    code = codes.make_gabidulin(field, g, args.k, args.a)
    _emit(args.out, codes.dump_code(code).splitlines())
    return 0


def _cmd_mkcode_cartesian(args):
    base = _load_code(args.base)
    code = codes.cartesian_power(base, args.l)
    _emit(args.out, codes.dump_code(code).splitlines())
    return 0


def _cmd_analyze(args):
    code = _load_code(args.code)
    ana = codes.analyze(code, budget=args.budget)
    print(f"q={code.field.q} m={code.field.m} n={code.n} k={code.k}")
    print(f"d_rank={ana.d_rank}")
    print(f"d_hamming={ana.d_hamming}")
    print(f"singleton_dmax={ana.singleton_dmax}")
    print(f"is_mrd={_bool(ana.is_mrd)}")
    print("min_weight_codeword=" + ",".join(map(str, ana.min_weight_codeword.to_ints())))
    return 0


def _cmd_covering(args):
    code = _load_code(args.code)
    rep = coverage.covering_radius(code, budget=args.budget, workers=args.workers)
    print(f"radius={rep.radius}")
    print("deep_hole=" + ",".join(map(str, rep.deep_hole.to_ints())))
    print(f"is_maximal={_bool(rep.is_maximal)}")
    if rep.radius_bound_maximal is not None:
        print(f"radius_bound_maximal={rep.radius_bound_maximal}")
    return 0


def _cmd_maximal(args):
    code = _load_code(args.code)
    witness = coverage.find_extension_vector(
        code, budget=args.budget, workers=args.workers
    )
    print(f"is_maximal={_bool(witness is None)}")
    if witness is not None:
        print("extension_vector=" + ",".join(map(str, witness.to_ints())))
    return 0


def _cmd_translate(args):
    sub = _load_code(args.sub)
    sup = _load_code(args.super)
    tw = coverage.translate_weights(sup, sub, budget=args.budget)
    print(f"little_m={tw.little_m}")
    print(f"big_m={tw.big_m}")
    return 0


def _cmd_weights(args):
    code = _load_code(args.code)
    dist = coverage.weight_distribution(code, budget=args.budget)
    lines = ["w,count"] + [f"{w},{c}" for w, c in enumerate(dist)]
    _emit(args.csv, lines)
    return 0


def _cmd_figure(args):
    emit_figure(FigureSpec(figure_id=args.id, out=args.out, step=args.step))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_counting_args(p):
    p.add_argument("--q", type=int, required=True, help="prime base field size")
    p.add_argument("--m", type=int, required=True, help="extension degree")
    p.add_argument("--n", type=int, required=True, help="vector length")


def _add_budget(p, default):
    p.add_argument(
        "--budget",
        type=int,
        default=default,
        help=f"enumeration cap (default {default})",
    )


def _add_workers(p):
    p.add_argument(
        "--workers",
        type=int,
        default=1,
        help=(
            "parallel sweep workers; results are identical for any count, "
            "speedup depends on the platform's threading"
        ),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankcodes",
        description="Exact toolkit for codes with the rank metric.",
        epilog=(
            "Fields are given as 'q^m' (default modulus) or 'q^m/c0,c1,...' "
            "with modulus coefficients low-degree first.  Vectors and "
            "generator entries are comma-separated integers encoding base-q "
            "coefficient vectors, low digit first.  Bound curves are written "
            "as decimals with 12 significant digits, round-half-even."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of vectors of given rank weight")
    _add_counting_args(p)
    p.add_argument("--w", type=int, help="rank weight")
    p.add_argument("--csv", metavar="PATH", help="write w,rank_count,hamming_count table")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("volume", help="ball volume in the rank metric")
    _add_counting_args(p)
    p.add_argument("--w", type=int, help="ball radius")
    p.add_argument("--csv", metavar="PATH", help="write w,rank_count,hamming_count table")
    p.set_defaults(func=_cmd_volume)

    p = sub.add_parser("bounds", help="finite Gilbert/sphere-packing bounds")
    _add_counting_args(p)
    p.add_argument("--d", type=int, required=True, help="minimum rank distance")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("asymptotic", help="asymptotic bound curves on a delta grid")
    p.add_argument("--b", type=_fraction, required=True, help="aspect ratio lim n/m")
    p.add_argument("--step", type=_fraction, required=True, help="delta grid step")
    p.add_argument("--csv", metavar="PATH", help="output file (default stdout)")
    p.set_defaults(func=_cmd_asymptotic)

    p = sub.add_parser("mkcode", help="construct a code and print/save it")
    mk = p.add_subparsers(dest="construction", required=True)

    g = mk.add_parser("gabidulin", help="(generalized) Gabidulin code")
    g.add_argument("--field", required=True, help="field spec, e.g. 2^3")
    g.add_argument("--n", type=int, required=True, help="code length (n <= m)")
    g.add_argument("--k", type=int, required=True, help="code dimension")
    g.add_argument("--a", type=int, default=1, help="Frobenius step, gcd(a, m) = 1")
    g.add_argument(
        "--g",
        type=_vector_literal,
        help="generator vector as encoded integers (default: 1,x,...,x^(n-1))",
    )
    g.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    g.set_defaults(func=_cmd_mkcode_gabidulin)

    c = mk.add_parser("cartesian", help="l-fold cartesian power of a saved code")
    c.add_argument("--base", required=True, metavar="PATH", help="base code file")
    c.add_argument("--l", type=int, required=True, help="number of factors")
    c.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    c.set_defaults(func=_cmd_mkcode_cartesian)

    p = sub.add_parser("analyze", help="exhaustive distances and MRD verdict")
    p.add_argument("--code", required=True, metavar="PATH")
    _add_budget(p, codes.DEFAULT_ANALYZE_BUDGET)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("covering", help="exhaustive covering radius")
    p.add_argument("--code", required=True, metavar="PATH")
    _add_budget(p, coverage.DEFAULT_SWEEP_BUDGET)
    _add_workers(p)
    p.set_defaults(func=_cmd_covering)

    p = sub.add_parser("maximal", help="maximality test with early exit")
    p.add_argument("--code", required=True, metavar="PATH")
    _add_budget(p, coverage.DEFAULT_SWEEP_BUDGET)
    _add_workers(p)
    p.set_defaults(func=_cmd_maximal)

    p = sub.add_parser("translate", help="translate-leader weights m and M")
    p.add_argument("--sub", required=True, metavar="PATH", help="subcode file")
    p.add_argument("--super", required=True, metavar="PATH", help="supercode file")
    _add_budget(p, codes.DEFAULT_ANALYZE_BUDGET)
    p.set_defaults(func=_cmd_translate)

    p = sub.add_parser("weights", help="rank weight distribution of a code")
    p.add_argument("--code", required=True, metavar="PATH")
    p.add_argument("--csv", metavar="PATH", help="output file (default stdout)")
    _add_budget(p, codes.DEFAULT_ANALYZE_BUDGET)
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("figure", help="canned bound-curve and weight-count figure data")
    p.add_argument("--id", required=True, choices=FIGURE_IDS, help="figure id")
    p.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    p.add_argument(
        "--step",
        type=_fraction,
        default=Fraction(1, 100),
        help="delta grid step for bound figures (default 1/100)",
    )
    p.set_defaults(func=_cmd_figure)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RankCodesError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
