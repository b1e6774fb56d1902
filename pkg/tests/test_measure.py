import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import dirac, random_measure
from nsharp.errors import EvaluationError, InputError
from nsharp.measure import (
    CountingMeasure,
    ball_mass,
    boundary_mass,
    closed_ball_mass,
    integrate,
    restriction,
    set_mass,
)
from nsharp.sets import Box, ClosedBall, Difference, Everything, Nothing, Union, set_from_dict
from nsharp.space import MetricContext

LINE = MetricContext.euclidean(1)


def test_coalescing_and_order():
    mu = CountingMeasure(LINE, [((0.5,), 1), ((0.0,), 1), ((0.5,), 2)])
    assert mu.atoms == (((0.0,), 1), ((0.5,), 3))
    assert mu.total_mass == 4
    assert mu == CountingMeasure(LINE, [((0.0,), 1), ((0.5,), 3)])


@pytest.mark.parametrize("mult", [0, -1, 1.5, True])
def test_bad_multiplicity(mult):
    with pytest.raises(InputError):
        CountingMeasure(LINE, [((0.0,), mult)])


def test_wrong_dimension_atom():
    with pytest.raises(InputError):
        CountingMeasure(LINE, [((0.0, 1.0), 1)])


def test_restriction_examples():
    mu = dirac(LINE, 0, 0.5)
    assert restriction(mu, 0.5) == dirac(LINE, 0)
    assert restriction(mu, 0) == CountingMeasure.empty(LINE)
    assert restriction(dirac(LINE, 0.5), 0.6) == dirac(LINE, 0.5)
    with pytest.raises(InputError):
        restriction(mu, -1)


def test_ball_mass_examples():
    assert ball_mass(dirac(LINE, 0, 0.5), 0.5) == 1
    assert ball_mass(dirac(LINE, 0, 0.5), 0) == 0
    assert ball_mass(dirac(LINE, 0, mult=2) + dirac(LINE, 0.5), 1) == 3
    with pytest.raises(InputError):
        ball_mass(dirac(LINE, 0), -0.1)


def test_boundary_mass_examples():
    assert boundary_mass(dirac(LINE, 0.5), 0.5) == 1
    assert boundary_mass(dirac(LINE, 0.5), 0.7) == 0
    assert boundary_mass(CountingMeasure.empty(LINE), 3) == 0
    with pytest.raises(InputError):
        boundary_mass(dirac(LINE, 0.5), 0)


def test_integrate_examples():
    f = lambda p: 10 * p[0] + 1
    assert integrate(dirac(LINE, 0), f) == f((0.0,))
    assert integrate(dirac(LINE, 1, mult=2) + dirac(LINE, 2), f) == 2 * f((1.0,)) + f((2.0,))
    assert integrate(CountingMeasure.empty(LINE), f) == 0
    with pytest.raises(EvaluationError):
        integrate(dirac(LINE, 1), lambda p: math.nan)
    with pytest.raises(EvaluationError):
        integrate(dirac(LINE, 1), lambda p: 1 / 0)


def test_set_mass_examples():
    mu = dirac(LINE, 0, 0.5)
    assert set_mass(mu, ClosedBall((0.0,), 0.1)) == 1
    assert set_mass(mu, Everything()) == mu.total_mass
    assert set_mass(mu, Nothing()) == 0


def test_composite_sets():
    ctx = MetricContext.euclidean(2)
    mu = CountingMeasure.from_points(ctx, [(0, 0), (1, 1), (2, 0), (5, 5)])
    box = Box((0, 0), (2, 2))
    hole = ClosedBall((1, 1), 0.5)
    assert set_mass(mu, box) == 3
    assert set_mass(mu, box - hole) == 2
    assert set_mass(mu, box | ClosedBall((5, 5), 0)) == 4
    assert box.on_boundary(ctx, (0.0, 0.0)) and not box.on_boundary(ctx, (1.0, 1.0))
    assert (box - hole).on_boundary(ctx, (1.5, 1.0))
    assert not Everything().bounded and Union((box, hole)).bounded
    assert set_from_dict({"type": "difference", "keep": {"type": "box", "lo": [0, 0], "hi": [2, 2]},
                          "remove": {"type": "ball", "center": [1, 1], "radius": 0.5}}) == Difference(box, hole)
    with pytest.raises(InputError):
        set_from_dict({"type": "torus"})


radii = st.floats(min_value=0, max_value=5, allow_nan=False)


@given(seed=st.integers(0, 2**32 - 1), p=radii, r=radii)
def test_restriction_composes(seed, p, r):
    rng = np.random.default_rng(seed)
    ctx = MetricContext.euclidean(int(rng.integers(1, 4)))
    mu = random_measure(rng, ctx, 6)
    assert restriction(restriction(mu, p), r) == restriction(mu, min(p, r))


@given(seed=st.integers(0, 2**32 - 1), r=st.floats(min_value=1e-6, max_value=5))
def test_mass_partition(seed, r):
    rng = np.random.default_rng(seed)
    ctx = MetricContext.euclidean(int(rng.integers(1, 4)))
    mu = random_measure(rng, ctx, 6)
    outside = sum(w for w, rad in zip(mu.multiplicities, mu.radii) if rad > r)
    assert ball_mass(mu, r) + boundary_mass(mu, r) + outside == mu.total_mass
    assert closed_ball_mass(mu, r) == set_mass(mu, ClosedBall(ctx.origin, r))


def test_ball_mass_jumps_exactly_at_atom_radii():
    rng = np.random.default_rng(7)
    for _ in range(50):
        ctx = MetricContext.euclidean(int(rng.integers(1, 4)))
        mu = random_measure(rng, ctx, 6)
        grid = sorted(set(mu.radii) | set(np.linspace(0, 6, 61).tolist()))
        masses = [ball_mass(mu, r) for r in grid]
        assert masses == sorted(masses)
        jumps = {grid[k] for k in range(len(grid) - 1) if masses[k + 1] > masses[k]}
        # with open balls the jump at radius rho shows up just after rho
        assert jumps == {rho for rho in mu.radii if rho < grid[-1]}
