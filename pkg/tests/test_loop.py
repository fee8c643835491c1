import numpy as np
import pytest

from npatch import BezierCurve, make_loop, opposite_curve
from npatch.errors import ClosureError
from npatch.fixtures import polygon_corners, random_loop, square_loop, straight_loop


def test_square_loop_valid():
    loop = square_loop()
    assert loop.n == 4
    assert np.all(loop.corner_gaps == 0)


def test_open_corner_rejected():
    curves = [
        BezierCurve([(0, 0, 0), (1, 0, 0)]),
        BezierCurve([(1, 1e-3, 0), (0.5, 1, 0)]),  # gap at corner 1
        BezierCurve([(0.5, 1, 0), (0, 0, 0)]),
    ]
    with pytest.raises(ClosureError, match="sides 1 and 2"):
        make_loop(curves, weld_tolerance=1e-9)


def test_too_few_sides():
    seg = BezierCurve([(0, 0, 0), (1, 0, 0)])
    with pytest.raises(ClosureError, match="at least 3"):
        make_loop([seg, seg])


def test_welding_averages_perturbed_corners():
    corners = polygon_corners(5)
    rng = np.random.default_rng(3)
    curves = []
    ends = []
    for i in range(5):
        a = corners[(i - 1) % 5] + rng.normal(scale=1e-12, size=3)
        b = corners[i] + rng.normal(scale=1e-12, size=3)
        curves.append(BezierCurve([a, 0.5 * (a + b), b]))
        ends.append((a, b))
    loop = make_loop(curves, weld_tolerance=1e-9)
    for i in range(5):
        expected = 0.5 * (ends[i][1] + ends[(i + 1) % 5][0])
        assert np.array_equal(loop.corner(i), expected)
        # shared corners stored bit-identically
        assert np.array_equal(loop.side(i).end_point(), loop.side(i + 1).start_point())


def test_welding_idempotent():
    loop = make_loop(list(random_loop(5, 3, np.random.default_rng(4)).sides))
    again = make_loop(list(loop.sides))
    for a, b in zip(loop.sides, again.sides):
        assert np.array_equal(a.control_points, b.control_points)


def test_opposite_curve_n3_is_constant_point():
    loop = straight_loop(polygon_corners(3))
    for i in range(3):
        opp = opposite_curve(loop, i)
        assert opp.degree == 0
        assert np.array_equal(opp.eval(0.0), loop.side(i + 1).end_point())
        # for a triangle the two far corners coincide
        assert np.allclose(opp.eval(1.0), loop.side(i - 1).start_point(), atol=0)


def test_opposite_curve_n4_reproduces_far_side():
    loop = random_loop(4, 3, np.random.default_rng(5))
    for i in range(4):
        opp = opposite_curve(loop, i)
        far = loop.side(i + 2)
        assert np.allclose(opp.control_points, far.control_points, atol=1e-14)


def test_opposite_curve_pentagon_hand_computed():
    corners = polygon_corners(5)
    loop = straight_loop(corners)
    i = 0
    opp = opposite_curve(loop, i)
    # endpoints: the two far corners
    p0 = corners[1]
    p3 = corners[3]
    # far edges are straight: derivative = chord vector
    p1 = p0 + (corners[2] - corners[1]) / 3.0
    p2 = p3 - (corners[3] - corners[2]) / 3.0
    assert np.allclose(opp.control_points, [p0, p1, p2, p3], atol=1e-14)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8])
def test_opposite_curve_endpoints(n):
    loop = random_loop(n, 3, np.random.default_rng(n))
    for i in range(n):
        opp = opposite_curve(loop, i)
        assert np.array_equal(opp.eval(0.0), loop.side(i + 1).end_point())
        assert np.array_equal(opp.eval(1.0), loop.side(i - 1).start_point())
