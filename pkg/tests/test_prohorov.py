
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import dirac, random_measure, random_pair
from nsharp.errors import InputError, InstanceTooLargeError
from nsharp.measure import CountingMeasure, restriction
from nsharp.prohorov import (
    atom_gap_lower_bound,
    candidate_set,
    count_difference_bound,
    prohorov_distance,
    prohorov_feasible,
    prohorov_oracle,
    restriction_distance_bound,
)
from nsharp.space import MetricContext

LINE = MetricContext.euclidean(1)
EMPTY = CountingMeasure.empty(LINE)


@pytest.mark.parametrize(
    "mu, nu, expected",
    [
        (dirac(LINE, 0), dirac(LINE, 0.5), 0.5),
        (dirac(LINE, 0, 1.5), dirac(LINE, 0, 1.5), 0.0),
        (dirac(LINE, 0), EMPTY, 1.0),
        (dirac(LINE, 0, mult=2), dirac(LINE, 0), 1.0),
        (EMPTY, EMPTY, 0.0),
    ],
)
def test_distance_examples_against_oracle(mu, nu, expected):
    assert prohorov_oracle(mu, nu) == expected
    assert prohorov_distance(mu, nu) == expected


def test_feasibility_examples():
    mu, nu = dirac(LINE, 0), dirac(LINE, 0.5)
    assert prohorov_feasible(mu, nu, 0.6)
    assert not prohorov_feasible(mu, nu, 0.4)
    # the infimum itself is not attained: neighbourhoods are open
    assert not prohorov_feasible(mu, nu, 0.5)
    for eps in (1e-9, 0.3, 7.0):
        assert prohorov_feasible(nu, nu, eps)
    with pytest.raises(InputError):
        prohorov_feasible(mu, nu, 0)


def test_candidate_set_contains_oracle_value():
    mu, nu = dirac(LINE, 0, 2.25, mult=2), dirac(LINE, 0.1)
    cands = candidate_set(mu, nu)
    assert cands == sorted(set(cands))
    assert prohorov_oracle(mu, nu) in cands


def test_oracle_size_cap():
    big = CountingMeasure.from_points(LINE, [[i] for i in range(7)])
    with pytest.raises(InstanceTooLargeError):
        prohorov_oracle(big, big)


def test_context_mismatch():
    other = MetricContext.euclidean(1, (1.0,))
    with pytest.raises(InputError):
        prohorov_distance(dirac(LINE, 0), dirac(other, 0))


def test_multiplicity_heavy_case():
    # 3 units at 0 against 1 unit at 0 and 2 units at 0.25:
    # below 0.25 the deficiency is 2 > eps, above it everything matches
    mu = dirac(LINE, 0, mult=3)
    nu = dirac(LINE, 0) + dirac(LINE, 0.25, mult=2)
    assert prohorov_oracle(mu, nu) == 0.25
    assert prohorov_distance(mu, nu) == 0.25


def test_deficiency_value_inside_interval():
    # pair distances are 5 and 5.2; the deficiency 2 lies strictly inside (0, 5]
    mu = dirac(LINE, 0, 0.2)
    nu = dirac(LINE, 5.2)
    assert prohorov_oracle(mu, nu) == 2.0
    assert prohorov_distance(mu, nu) == 2.0


def test_oracle_equivalence_random():
    rng = np.random.default_rng(20240601)
    for _ in range(300):
        mu, nu = random_pair(rng, 8)
        assert abs(prohorov_distance(mu, nu) - prohorov_oracle(mu, nu)) <= 1e-9


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_monotone_feasibility(seed):
    rng = np.random.default_rng(seed)
    mu, nu = random_pair(rng, 8)
    d = prohorov_distance(mu, nu)
    eps = sorted(rng.uniform(1e-6, 4, size=6).tolist() + [d + 1e-9])
    flags = [prohorov_feasible(mu, nu, e) for e in eps]
    # once feasible, feasible for every larger eps, and the switch is at d
    assert flags == sorted(flags)
    for e, ok in zip(eps, flags):
        assert ok == (e > d) or e == d


def test_metric_axioms_random():
    rng = np.random.default_rng(11)
    for _ in range(150):
        ctx = MetricContext.euclidean(int(rng.integers(1, 4)))
        a, b, c = (random_measure(rng, ctx, 4) for _ in range(3))
        dab = prohorov_distance(a, b)
        assert dab == prohorov_distance(b, a)
        assert prohorov_distance(a, c) <= dab + prohorov_distance(b, c) + 1e-12
        assert (dab == 0) == (a == b)
        assert prohorov_distance(a, a) == 0


def test_isometry_invariance():
    rng = np.random.default_rng(5)
    for _ in range(100):
        ctx = MetricContext.euclidean(3)
        mu, nu = random_measure(rng, ctx, 4), random_measure(rng, ctx, 4)
        q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
        shift = rng.normal(size=3)
        move = lambda m: CountingMeasure(ctx, [(tuple(q @ np.array(p) + shift), w) for p, w in m.atoms])
        assert abs(prohorov_distance(move(mu), move(nu)) - prohorov_distance(mu, nu)) <= 1e-12


def test_restriction_bound_examples():
    mu = dirac(LINE, 0, 1)
    assert restriction_distance_bound(mu, 0.5, 2) == 1
    assert prohorov_distance(restriction(mu, 0.5), restriction(mu, 2)) == 1
    assert restriction_distance_bound(mu, 0.7, 0.7) == 0
    assert restriction_distance_bound(EMPTY, 0, 3) == 0
    with pytest.raises(InputError):
        restriction_distance_bound(mu, 2, 1)


def test_atom_gap_examples():
    mu, nu = dirac(LINE, 0), dirac(LINE, 0.5)
    assert atom_gap_lower_bound(mu, nu, 0.1, 0.9, 0.3)
    assert prohorov_distance(mu, nu) >= 0.3
    assert not atom_gap_lower_bound(mu, dirac(LINE, 0.15), 0.1, 0.9, 0.3)
    assert not atom_gap_lower_bound(dirac(LINE, 0.5), nu, 0.1, 0.9, 0.3)
    with pytest.raises(InputError):
        atom_gap_lower_bound(mu, nu, 0.1, 0.9, 0.5)
    with pytest.raises(InputError):
        atom_gap_lower_bound(mu, nu, 0.1, 2.5, 0.3)


def test_count_difference_examples():
    assert count_difference_bound(dirac(LINE, 0), EMPTY, 1) == 1
    assert prohorov_distance(restriction(dirac(LINE, 0), 1), EMPTY) == 1
    assert count_difference_bound(dirac(LINE, 0.3), dirac(LINE, 0.3), 1) == 0
    assert count_difference_bound(dirac(LINE, 0, 0.5), dirac(LINE, 0.5), 0.2) == 1
