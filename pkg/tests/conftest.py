from fractions import Fraction

import pytest

from filliman import SimplexChain, convex_hull


@pytest.fixture
def unit_square():
    """[-1, 1]^2, origin strictly interior."""
    return convex_hull([(-1, -1), (1, -1), (1, 1), (-1, 1)])


@pytest.fixture
def right_offset_square():
    """[1, 3] x [-1, 1]; the origin lies to its left."""
    return convex_hull([(1, -1), (3, -1), (3, 1), (1, 1)])


@pytest.fixture
def diag_offset_square():
    """[1, 2]^2; its main diagonal line passes through the origin."""
    return convex_hull([(1, 1), (2, 1), (2, 2), (1, 2)])


@pytest.fixture
def pentagon():
    """Rational convex pentagon strictly containing the origin."""
    f = Fraction
    return convex_hull(
        [(1, 0), (f(1, 3), 1), (-1, f(2, 3)), (-1, -f(2, 3)), (f(1, 3), -1)]
    )


@pytest.fixture
def diag_split_chain():
    """The diagonally offset square split along its anti-diagonal."""
    return SimplexChain.from_words(
        2, [(1, [(1, 1), (2, 1), (1, 2)]), (1, [(2, 1), (2, 2), (1, 2)])]
    )


@pytest.fixture
def offset_split_chain():
    """The right-offset square split along the diagonal from (1,-1) to (3,1)."""
    return SimplexChain.from_words(
        2, [(1, [(1, -1), (3, -1), (3, 1)]), (1, [(1, -1), (3, 1), (1, 1)])]
    )
