"""Acceptance suite: one pass/fail line per criterion, fixed seeds throughout.

Heavier randomized batches live here rather than in the per-module tests;
every tolerance is pinned in the assertions below.
"""

import io
import contextlib
import json
import math
from fractions import Fraction
from pathlib import Path

import pytest
from scipy.integrate import quad

from filliman.chains import (
    SimplexChain,
    measure_equal,
    moment_signature,
    multiplicity,
)
from filliman.cli import main as cli_main
from filliman.convex import (
    Region,
    fan_triangulation,
    polar_body,
    region_of_point,
    triangulate_non_codegenerate,
)
from filliman.duality import (
    dualize_chain,
    dualize_polytope,
    polar_simplex,
    separation_count,
)
from filliman.errors import NonGenericFrequency, NonGenericPoint
from filliman.exact import RandomSource, format_rational, sample_rational
from filliman.geometry import point, simplex
from filliman.sampling import (
    random_chain,
    random_noncodegenerate_simplex,
    random_polytope,
    random_rational_point,
    random_relator,
    random_simple_polytope,
)
from filliman.transforms import (
    direct_volume,
    filliman_volume,
    fourier_transform,
    lawrence_volume,
)
from filliman.dissection import relator_chain

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def report(name: str, passed: bool, detail: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {status}: {name}{suffix}")
    assert passed, f"{name}{suffix}"


def test_involution_on_random_chains():
    failures = 0
    total = 0
    for d in (1, 2, 3):
        src = RandomSource(1000 + d)
        for trial in range(100):
            c = random_chain(d, src.split(trial), max_terms=6)
            total += 1
            twice = dualize_chain(dualize_chain(c))
            if twice != c:
                failures += 1
                continue
            if not measure_equal(twice, c, 200, src.split(10_000 + trial)).equal:
                failures += 1
    report(
        "involution fixes every canonical chain (100 chains per dimension 1-3)",
        failures == 0,
        f"{total} chains, {failures} failures",
    )


def test_involution_on_random_simplices():
    failures = 0
    src = RandomSource(77)
    counts = {1: 334, 2: 333, 3: 333}
    for d, n in counts.items():
        for trial in range(n):
            s = random_noncodegenerate_simplex(d, src.split(1000 * d + trial))
            polar = polar_simplex(s)
            if separation_count(polar) != separation_count(s):
                failures += 1
            if polar_simplex(polar).vertices != s.vertices:
                failures += 1
    report(
        "polar simplex is involutive and preserves the separation count "
        "(1000 random simplices)",
        failures == 0,
        f"{failures} failures",
    )


def test_well_definedness_across_triangulations():
    failures = 0
    checked = 0
    for d in (2, 3):
        src = RandomSource(2000 + d)
        for trial in range(25):
            p = random_polytope(d, src.split(trial))
            t1 = triangulate_non_codegenerate(
                p, src.split(100 + trial), use_vertex_fans=False
            )
            t2 = triangulate_non_codegenerate(
                p, src.split(200 + trial), use_vertex_fans=False
            )
            assert t1.chain != t2.chain, "drawn triangulations must differ"
            verdict = measure_equal(
                dualize_chain(t1.chain),
                dualize_chain(t2.chain),
                500,
                src.split(300 + trial),
            )
            checked += 1
            if not verdict.equal:
                failures += 1
    report(
        "dual is independent of the triangulation (25 polytopes per dimension 2-3, "
        "500 samples)",
        failures == 0,
        f"{checked} pairs, {failures} failures",
    )


def _generic_probe(chain, region_test, box, src, want_inside):
    index = 0
    while True:
        child = src.split(index)
        index += 1
        p = tuple(
            sample_rational(box[0][k], box[1][k], child, 2**20)
            for k in range(len(box[0]))
        )
        if region_test(p) is not (Region.INSIDE if want_inside else Region.OUTSIDE):
            continue
        try:
            return p, multiplicity(chain, p)
        except NonGenericPoint:
            continue


def test_polar_body_realization():
    failures = 0
    for d in (2, 3):
        src = RandomSource(3000 + d)
        for trial in range(25):
            p = random_polytope(d, src.split(trial))
            dual = dualize_polytope(p, src.split(100 + trial))
            polar = polar_body(p)
            lo = tuple(x * Fraction(3, 2) for x in _box_of(polar)[0])
            hi = tuple(x * Fraction(3, 2) for x in _box_of(polar)[1])
            probe_src = src.split(200 + trial)
            for k in range(200):
                _, inside_mult = _generic_probe(
                    dual,
                    lambda q: region_of_point(polar, q),
                    _box_of(polar),
                    probe_src.split(k),
                    want_inside=True,
                )
                if inside_mult != 1:
                    failures += 1
                _, outside_mult = _generic_probe(
                    dual,
                    lambda q: region_of_point(polar, q),
                    (lo, hi),
                    probe_src.split(10_000 + k),
                    want_inside=False,
                )
                if outside_mult != 0:
                    failures += 1
            polar_tri = triangulate_non_codegenerate(polar, src.split(300 + trial))
            if moment_signature(dual) != moment_signature(polar_tri.chain):
                failures += 1
    report(
        "dual of a polytope containing the origin realizes its polar body "
        "(50 polytopes, 200 interior + 200 exterior probes each, exact moments)",
        failures == 0,
        f"{failures} failures",
    )


def _box_of(p):
    from filliman.geometry import points_box

    return points_box(p.vertices)


def test_offset_square_figure(offset_split_chain):
    dual = dualize_chain(offset_split_chain)
    checks = [
        (point(Fraction(1, 2), Fraction(1, 6)), -1),
        (point(2, 0), 0),
        (point(Fraction(-1, 4), 0), 0),
    ]
    ok = all(multiplicity(dual, p) == expected for p, expected in checks)
    report(
        "right-offset square dual: multiplicity -1 inside the dart, 0 outside",
        ok,
    )


def test_offset_square_boundary_probe(offset_split_chain):
    """Probe at (1/4, -1/4), stated to have multiplicity -1.

    That point satisfies 3x - y = 1 exactly, i.e. it lies on the segment from
    (0, -1) to (1/3, 0) -- an edge of the support of the dual measure (the
    measure jumps from -1 to 0 across it), so every chain realizing this
    measure has it on a term boundary and the evaluation is non-generic.
    Kept as stated; expected to fail.
    """
    dual = dualize_chain(offset_split_chain)
    probe = point(Fraction(1, 4), Fraction(-1, 4))
    try:
        value = multiplicity(dual, probe)
    except NonGenericPoint:
        report(
            "right-offset square dual: multiplicity -1 at (1/4, -1/4)",
            False,
            "the point lies on the support boundary 3x - y = 1; "
            "evaluation is non-generic for every realization of this measure",
        )
    else:
        report(
            "right-offset square dual: multiplicity -1 at (1/4, -1/4)",
            value == -1,
            f"multiplicity {value}",
        )


def test_diagonal_square_figure(diag_split_chain):
    third = Fraction(1, 3)
    expected = SimplexChain.from_words(
        2,
        [
            (1, [(1, 0), (0, 1), (third, third)]),
            (-1, [(0, Fraction(1, 2)), (Fraction(1, 2), 0), (third, third)]),
        ],
    )
    dual = dualize_chain(diag_split_chain)
    ok = (
        dual == expected
        and multiplicity(dual, point(Fraction(1, 2), third)) == 1
        and multiplicity(dual, point(Fraction(5, 18), Fraction(5, 18))) == -1
    )
    report(
        "diagonally offset square dual equals the difference of the two "
        "hand-computed triangles",
        ok,
    )


def test_pentagon_sign_pattern(pentagon):
    polar = polar_body(pentagon)
    tri = fan_triangulation(polar, polar.vertices[0])
    counts = sorted(separation_count(c) for c in tri.cells)
    value = filliman_volume(pentagon).value
    direct = direct_volume(fan_triangulation(pentagon, pentagon.vertices[0]).chain)
    report(
        "pentagon: polar fan has exactly one origin cell and dual volume matches",
        counts == [0, 1, 1] and value == direct,
        f"separation counts {counts}, volume {format_rational(value)}",
    )


def test_split_relators_and_their_duals():
    failures = 0
    for d in (1, 2, 3):
        src = RandomSource(5000 + d)
        for trial in range(50):
            r = random_relator(d, src.split(trial))
            chain = relator_chain(r)
            empty = SimplexChain.empty(d)
            if not measure_equal(chain, empty, 300, src.split(1000 + trial)).equal:
                failures += 1
            if not measure_equal(
                dualize_chain(chain), empty, 300, src.split(2000 + trial)
            ).equal:
                failures += 1
    report(
        "split relators and their duals are measure-zero "
        "(50 relators per dimension 1-3, 300 samples each)",
        failures == 0,
        f"{failures} failures",
    )


def test_volume_methods_agree_exactly():
    failures = 0
    for d in (2, 3):
        src = RandomSource(6000 + d)
        for trial in range(25):
            p = random_simple_polytope(d, src.split(trial))
            direct = format_rational(
                direct_volume(fan_triangulation(p, p.vertices[0]).chain)
            )
            dual = format_rational(filliman_volume(p, src.split(100 + trial)).value)
            func_src = src.split(200 + trial)
            while True:
                c = tuple(
                    sample_rational(-9, 9, func_src, 2**12) for _ in range(d)
                )
                try:
                    lawrence = format_rational(lawrence_volume(p, c).value)
                    break
                except Exception:
                    continue
            if not (direct == dual == lawrence):
                failures += 1
    report(
        "direct, dual, and vertex-formula volumes agree as reduced fractions "
        "(25 polytopes per dimension 2-3)",
        failures == 0,
        f"{failures} failures",
    )


def test_fourier_against_quadrature():
    chain = SimplexChain.of(simplex((0,), (1,)))
    worst = 0.0
    for xi in (1.0, math.pi, 10.0):
        closed = fourier_transform(chain, (xi,)).value
        re, _ = quad(lambda x: math.cos(xi * x), 0, 1, epsabs=1e-13)
        im, _ = quad(lambda x: -math.sin(xi * x), 0, 1, epsabs=1e-13)
        worst = max(worst, abs(closed - complex(re, im)))
    report(
        "segment transform matches adaptive quadrature at frequencies 1, pi, 10",
        worst < 1e-9,
        f"worst absolute deviation {worst:.3e}",
    )


def test_fourier_primal_dual_agreement():
    failures = 0
    worst = 0.0
    src = RandomSource(7000)
    for trial in range(10):
        p = random_polytope(2, src.split(trial))
        primal = fan_triangulation(p, p.vertices[0]).chain
        dual = dualize_chain(
            triangulate_non_codegenerate(polar_body(p), src.split(100 + trial)).chain
        )
        freq_src = src.split(200 + trial)
        accepted = 0
        index = 0
        while accepted < 25:
            child = freq_src.split(index)
            index += 1
            xi = tuple(sample_rational(-4, 4, child, 2**12) for _ in range(2))
            try:
                a = fourier_transform(primal, xi).value
                b = fourier_transform(dual, xi).value
            except NonGenericFrequency:
                continue
            accepted += 1
            rel = abs(a - b) / max(abs(a), abs(b), 1e-300)
            worst = max(worst, rel)
            if rel > 1e-9:
                failures += 1
    report(
        "measure-equal chains have matching transforms "
        "(10 polytopes, 25 frequencies each, 1e-9 relative)",
        failures == 0,
        f"worst relative deviation {worst:.3e}",
    )


def _run_cli(args):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(args)
    return code, buf.getvalue()


def test_cli_contract(tmp_path):
    ok = True
    details = []

    out_chain = tmp_path / "dual.json"
    code, text = _run_cli(
        [
            "dualize",
            str(DATA / "offset_square.json"),
            "--seed",
            "0",
            "--out",
            str(out_chain),
        ]
    )
    expected = json.loads((GOLDEN / "dualize_offset_square.json").read_text())
    expected["output"] = str(out_chain)
    ok &= code == 0 and json.loads(text) == expected
    details.append(f"dualize exit {code}")

    for method, name in (
        ("direct", "volume_direct.json"),
        ("filliman", "volume_filliman.json"),
        ("lawrence", "volume_lawrence.json"),
    ):
        seed = ["--seed", "1"] if method == "lawrence" else []
        code, text = _run_cli(
            ["volume", str(DATA / "square.json"), "--method", method, *seed]
        )
        ok &= code == 0 and text == (GOLDEN / name).read_text()
    details.append("volume byte-stable")

    code, text = _run_cli(
        [
            "verify",
            "--check",
            "involution",
            str(DATA / "diag_chain.json"),
            "--samples",
            "120",
            "--seed",
            "5",
        ]
    )
    ok &= code == 0 and text == (GOLDEN / "verify_involution.json").read_text()

    code, text = _run_cli(
        ["fourier", str(DATA / "square.json"), "--frequency", "1,2"]
    )
    ok &= code == 0 and text == (GOLDEN / "fourier_square.json").read_text()

    svg_path = tmp_path / "dual.svg"
    code, _ = _run_cli(
        ["render", str(GOLDEN / "dual_offset_chain.json"), "--out", str(svg_path)]
    )
    ok &= code == 0 and svg_path.read_text() == (GOLDEN / "dual_offset.svg").read_text()
    details.append("render byte-stable")

    # exit-code matrix: 1 = property violation with witness, 2 = bad input
    corrupted = json.loads((GOLDEN / "dual_offset_chain.json").read_text())
    corrupted["terms"][0]["coeff"] += 1
    bad = tmp_path / "corrupted.json"
    bad.write_text(json.dumps(corrupted))
    code, text = _run_cli(
        [
            "verify",
            "--check",
            "equal",
            str(GOLDEN / "dual_offset_chain.json"),
            str(bad),
            "--samples",
            "200",
            "--seed",
            "9",
        ]
    )
    ok &= code == 1 and "witness" in json.loads(text)
    details.append(f"violation exit {code}")

    code, _ = _run_cli(
        ["volume", str(DATA / "offset_square.json"), "--method", "filliman"]
    )
    ok &= code == 2
    code, _ = _run_cli(["dualize", str(DATA / "garbage.json")])
    ok &= code == 2
    details.append("error exits 2")

    report(
        "CLI contract: golden outputs for all five commands and the 0/1/2 exit matrix",
        bool(ok),
        "; ".join(details),
    )
