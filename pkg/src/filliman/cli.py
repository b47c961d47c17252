"""Command-line front end.

Exit codes form a stable contract: 0 on success, 1 when a verification
property fails (the report carries a witness point when one was found), 2 on
input or precondition errors.  All randomized behavior is fully determined
by --seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import (
    CodegeneratePolytope,
    FillimanError,
    NoNonCodegenerateTriangulation,
)
from .exact import RandomSource, format_rational, rational, sample_rational
from .chains import SimplexChain, measure_equal, moment_signature
from .convex import (
    ConvexPolytope,
    fan_triangulation,
    polar_body,
    triangulate_non_codegenerate,
)
from .dissection import random_refine
from .duality import dualize_chain, dualize_polytope, separation_count
from .render import chain_to_svg
from .serialize import (
    chain_from_dict,
    chain_to_dict,
    dumps,
    load_document,
    point_to_list,
    polytope_from_dict,
)
from .transforms import (
    direct_volume,
    filliman_volume,
    fourier_transform,
    lawrence_volume,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2


def _load_input(path: str) -> SimplexChain | ConvexPolytope:
    data = load_document(path)
    if "terms" in data:
        return chain_from_dict(data)
    if "vertices" in data:
        return polytope_from_dict(data)
    raise ValueError(f"{path}: neither a chain file nor a polytope file")


def _as_chain(obj, source: RandomSource) -> SimplexChain:
    if isinstance(obj, SimplexChain):
        return obj
    return triangulate_non_codegenerate(obj, source).chain


def _emit(report: dict) -> None:
    sys.stdout.write(dumps(report))


def _error_report(command: str, exc: Exception) -> dict:
    return {
        "command": command,
        "status": "error",
        "error": {"type": type(exc).__name__, "message": str(exc)},
    }


def _cmd_dualize(args) -> int:
    source = RandomSource(args.seed)
    loaded = _load_input(args.input)
    if isinstance(loaded, SimplexChain):
        histogram_source = loaded
        result = dualize_chain(loaded)
    else:
        try:
            histogram_source = triangulate_non_codegenerate(loaded, source).chain
        except CodegeneratePolytope as exc:
            raise NoNonCodegenerateTriangulation(str(exc)) from exc
        result = dualize_chain(histogram_source)
    histogram: dict[str, int] = {}
    for _, s in histogram_source.terms:
        key = str(separation_count(s))
        histogram[key] = histogram.get(key, 0) + 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(dumps(chain_to_dict(result)))
    _emit(
        {
            "command": "dualize",
            "status": "ok",
            "term_count": len(result.terms),
            "sigma_histogram": histogram,
            "total_measure": format_rational(moment_signature(result).total),
            "chain": chain_to_dict(result),
            "output": args.out,
        }
    )
    return EXIT_OK


def _generic_functional(p: ConvexPolytope, source: RandomSource):
    from .errors import NonGenericFunctional

    for _ in range(64):
        c = tuple(sample_rational(-8, 8, source, 1 << 16) for _ in range(p.dim))
        try:
            return lawrence_volume(p, c), c
        except NonGenericFunctional:
            continue
    raise NonGenericFunctional("no generic functional found")


def _cmd_volume(args) -> int:
    source = RandomSource(args.seed)
    loaded = _load_input(args.input)
    if not isinstance(loaded, ConvexPolytope):
        raise ValueError("volume expects a polytope file")
    if args.method == "direct":
        tri = fan_triangulation(loaded, loaded.vertices[0])
        value, terms = direct_volume(tri.chain), len(tri.cells)
    elif args.method == "filliman":
        report = filliman_volume(loaded, source)
        value, terms = report.value, report.term_count
    else:
        report, _ = _generic_functional(loaded, source)
        value, terms = report.value, report.term_count
    _emit(
        {
            "command": "volume",
            "status": "ok",
            "method": args.method,
            "value": format_rational(value),
            "term_count": terms,
        }
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    source = RandomSource(args.seed)
    checks = []
    verdicts = []
    if args.check == "involution":
        chain = _as_chain(_load_input(args.input), source.split(1))
        twice = dualize_chain(dualize_chain(chain))
        formal = twice == chain
        verdict = measure_equal(twice, chain, args.samples, source.split(2))
        checks.append(("fixed canonical terms", formal))
        checks.append(("double dual measure-equal", verdict.equal))
        verdicts.append(verdict)
    elif args.check == "polar":
        loaded = _load_input(args.input)
        if not isinstance(loaded, ConvexPolytope):
            raise ValueError("polar check expects a polytope file")
        dual_chain = dualize_polytope(loaded, source.split(1))
        polar_tri = triangulate_non_codegenerate(polar_body(loaded), source.split(2))
        verdict = measure_equal(
            dual_chain, polar_tri.chain, args.samples, source.split(3)
        )
        checks.append(("dual chain matches polar body", verdict.equal))
        verdicts.append(verdict)
    elif args.check == "split":
        chain = _as_chain(_load_input(args.input), source.split(1))
        refined = random_refine(chain, steps=8, source=source.split(2))
        verdict = measure_equal(chain, refined, args.samples, source.split(3))
        checks.append(("refinement measure-equal", verdict.equal))
        verdicts.append(verdict)
        dual_verdict = measure_equal(
            dualize_chain(chain),
            dualize_chain(refined),
            args.samples,
            source.split(4),
        )
        checks.append(("dual of refinement measure-equal", dual_verdict.equal))
        verdicts.append(dual_verdict)
    else:  # equal
        if not args.second:
            raise ValueError("equal check needs two input files")
        a = _as_chain(_load_input(args.input), source.split(1))
        b = _as_chain(_load_input(args.second), source.split(2))
        verdict = measure_equal(a, b, args.samples, source.split(3))
        checks.append(("chains measure-equal", verdict.equal))
        verdicts.append(verdict)

    passed = all(ok for _, ok in checks)
    witness = next((v.witness for v in verdicts if v.witness is not None), None)
    report = {
        "command": "verify",
        "check": args.check,
        "status": "ok" if passed else "violation",
        "samples": args.samples,
        "checks": [{"name": name, "passed": ok} for name, ok in checks],
    }
    if witness is not None:
        report["witness"] = point_to_list(witness)
    _emit(report)
    return EXIT_OK if passed else EXIT_VIOLATION


def _parse_rationals(text: str) -> tuple[Fraction, ...]:
    return tuple(rational(part.strip()) for part in text.split(","))


def _cmd_fourier(args) -> int:
    source = RandomSource(args.seed)
    chain = _as_chain(_load_input(args.input), source)
    xi = _parse_rationals(args.frequency)
    value = fourier_transform(chain, xi)
    _emit(
        {
            "command": "fourier",
            "status": "ok",
            "frequency": [format_rational(x) for x in value.frequency],
            "value": {
                "re": format(value.value.real, ".17g"),
                "im": format(value.value.imag, ".17g"),
            },
        }
    )
    return EXIT_OK


def _cmd_render(args) -> int:
    loaded = _load_input(args.input)
    if not isinstance(loaded, SimplexChain):
        raise ValueError("render expects a chain file")
    viewport = _parse_rationals(args.viewport) if args.viewport else None
    if viewport is not None and len(viewport) != 4:
        raise ValueError("viewport must be minx,miny,maxx,maxy")
    svg = chain_to_svg(loaded, viewport=viewport, scale=args.scale)
    if not args.out:
        raise ValueError("render needs --out PATH for the SVG file")
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(svg)
    _emit(
        {
            "command": "render",
            "status": "ok",
            "output": args.out,
            "term_count": len(loaded.terms),
        }
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="filliman",
        description="Exact polytope duality pipelines over JSON files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0, help="seed for all randomness")
        p.add_argument("--samples", type=int, default=1000, help="sample budget")
        p.add_argument("--out", default=None, help="output file path")

    p_dual = sub.add_parser("dualize", help="apply the duality involution")
    common(p_dual)
    p_dual.add_argument("input")

    p_vol = sub.add_parser("volume", help="volume of a polytope")
    common(p_vol)
    p_vol.add_argument(
        "--method", choices=["direct", "filliman", "lawrence"], default="direct"
    )
    p_vol.add_argument("input")

    p_ver = sub.add_parser("verify", help="run a property check")
    common(p_ver)
    p_ver.add_argument(
        "--check",
        choices=["involution", "polar", "split", "equal"],
        default="involution",
    )
    p_ver.add_argument("input")
    p_ver.add_argument("second", nargs="?", default=None)

    p_fou = sub.add_parser("fourier", help="Fourier transform at a frequency")
    common(p_fou)
    p_fou.add_argument("--frequency", required=True, help="comma-separated rationals")
    p_fou.add_argument("input")

    p_ren = sub.add_parser("render", help="render a planar chain to SVG")
    common(p_ren)
    p_ren.add_argument("--viewport", default=None, help="minx,miny,maxx,maxy")
    p_ren.add_argument("--scale", type=int, default=120, help="pixels per unit")
    p_ren.add_argument("input")

    return parser


_HANDLERS = {
    "dualize": _cmd_dualize,
    "volume": _cmd_volume,
    "verify": _cmd_verify,
    "fourier": _cmd_fourier,
    "render": _cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (FillimanError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        _emit(_error_report(args.command, exc))
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
