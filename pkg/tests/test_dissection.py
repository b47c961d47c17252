from fractions import Fraction

import pytest

from filliman.chains import (
    SimplexChain,
    measure_equal,
    moment_signature,
)
from filliman.dissection import (
    SplitRelator,
    elementary_split,
    random_refine,
    relator_chain,
)
from filliman.duality import dualize_chain
from filliman.errors import CutNotOnOpenEdge, DegenerateConfiguration
from filliman.exact import RandomSource
from filliman.geometry import point, simplex, volume
from filliman.sampling import random_chain, random_relator
from filliman.transforms import direct_volume


def test_split_segment():
    a, b = elementary_split(simplex((1,), (3,)), 0, 1, point(2))
    assert a.vertices == (point(1), point(2))
    assert b.vertices == (point(2), point(3))


def test_split_triangle_example():
    s = simplex((-1, -1), (2, 0), (0, 2))
    cut = point(Fraction(4, 3), Fraction(2, 3))
    a, b = elementary_split(s, 1, 2, cut)
    assert a.vertices == (point(-1, -1), point(2, 0), cut)
    assert b.vertices == (point(-1, -1), cut, point(0, 2))


def test_split_cut_at_vertex_rejected():
    with pytest.raises(CutNotOnOpenEdge):
        elementary_split(simplex((1,), (3,)), 0, 1, point(3))


def test_split_cut_off_edge_rejected():
    s = simplex((0, 0), (2, 0), (0, 2))
    with pytest.raises(CutNotOnOpenEdge):
        elementary_split(s, 0, 1, point(1, 1))
    with pytest.raises(CutNotOnOpenEdge):
        elementary_split(s, 0, 1, point(3, 0))


def test_split_bad_indices():
    with pytest.raises(ValueError):
        elementary_split(simplex((1,), (3,)), 0, 0, point(2))


def test_split_preserves_volume_and_moments():
    src = RandomSource(43)
    for d in (1, 2, 3):
        for trial in range(10):
            child = src.split(10 * d + trial)
            from filliman.sampling import random_simplex
            from filliman.exact import sample_rational
            from filliman.geometry import vadd, vscale, vsub

            s = random_simplex(d, child)
            i = child.randrange(d + 1)
            j = child.randrange(d)
            if j >= i:
                j += 1
            t = sample_rational(0, 1, child, 64)
            cut = vadd(s.vertices[i], vscale(vsub(s.vertices[j], s.vertices[i]), t))
            a, b = elementary_split(s, i, j, cut)
            assert volume(a) + volume(b) == volume(s)
            whole = SimplexChain.of(s)
            parts = SimplexChain.from_terms(d, [(1, a), (1, b)])
            assert moment_signature(whole) == moment_signature(parts)
            assert measure_equal(whole, parts, 40, child).equal


def test_relator_chain_is_measure_zero():
    r = SplitRelator(
        base=(point(-1, -1),),
        collinear=(point(2, 0), point(Fraction(4, 3), Fraction(2, 3)), point(0, 2)),
    )
    chain = relator_chain(r)
    assert direct_volume(chain) == 0
    verdict = measure_equal(chain, SimplexChain.empty(2), 100, RandomSource(44))
    assert verdict.equal


def test_relator_dual_is_measure_zero():
    r = random_relator(2, RandomSource(45))
    chain = relator_chain(r)
    dual = dualize_chain(chain)
    assert measure_equal(dual, SimplexChain.empty(2), 100, RandomSource(46)).equal


def test_relator_with_middle_point_outside_segment():
    # x2 beyond x3 on the common line: signed cancellation still holds
    chain = SimplexChain.from_words(
        2,
        [
            (1, [(-1, -1), (2, 0), (4, 0)]),
            (1, [(-1, -1), (4, 0), (1, 0)]),
            (1, [(-1, -1), (1, 0), (2, 0)]),
        ],
    )
    assert measure_equal(chain, SimplexChain.empty(2), 100, RandomSource(47)).equal


def test_relator_validation():
    with pytest.raises(DegenerateConfiguration):
        SplitRelator(base=(), collinear=(point(1, 0), point(2, 0), point(3, 0)))
    with pytest.raises(DegenerateConfiguration):
        SplitRelator(
            base=(point(0, 0),),
            collinear=(point(1, 0), point(1, 1), point(0, 1)),
        )
    with pytest.raises(DegenerateConfiguration):
        SplitRelator(
            base=(point(0, 0),),
            collinear=(point(1, 0), point(2, 0), point(2, 0)),
        )


def test_dual_commutes_with_splits():
    """Dualizing a simplex agrees with dualizing the two halves of any split."""
    from filliman.exact import sample_rational
    from filliman.geometry import is_codegenerate, vadd, vscale, vsub
    from filliman.sampling import random_noncodegenerate_simplex

    for d in (1, 2, 3):
        src = RandomSource(600 + d)
        done = 0
        index = 0
        while done < 50:
            child = src.split(index)
            index += 1
            s = random_noncodegenerate_simplex(d, child)
            i = child.randrange(d + 1)
            j = child.randrange(d)
            if j >= i:
                j += 1
            t = sample_rational(0, 1, child, 64)
            cut = vadd(s.vertices[i], vscale(vsub(s.vertices[j], s.vertices[i]), t))
            a, b = elementary_split(s, i, j, cut)
            if is_codegenerate(a) or is_codegenerate(b):
                continue
            whole = dualize_chain(SimplexChain.of(s))
            parts = dualize_chain(SimplexChain.from_terms(d, [(1, a), (1, b)]))
            assert measure_equal(whole, parts, 60, child).equal
            done += 1


def test_random_refine_zero_steps_is_identity():
    c = random_chain(2, RandomSource(48))
    assert random_refine(c, 0, RandomSource(49)) == c


def test_random_refine_measure_equal():
    c = random_chain(2, RandomSource(50))
    refined = random_refine(c, 6, RandomSource(51))
    assert measure_equal(c, refined, 100, RandomSource(52)).equal


def test_random_refine_cell_count_and_volume():
    c = SimplexChain.of(simplex((1, 1), (4, 1), (1, 4)))
    refined = random_refine(c, 5, RandomSource(53))
    assert len(refined.terms) == 6
    assert direct_volume(refined) == direct_volume(c)
