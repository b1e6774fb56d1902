import time

import numpy as np
import pytest

from nsharp.measure import CountingMeasure
from nsharp.space import MetricContext


@pytest.fixture
def line():
    return MetricContext.euclidean(1)


def dirac(ctx, *xs, mult=1):
    return CountingMeasure(ctx, [((x,) if np.ndim(x) == 0 else tuple(x), mult) for x in xs])


def random_measure(rng, ctx, max_atoms, max_mult=3, scale=2.0, lattice=0.5):
    """Random counting measure; about half the atoms sit on a coarse lattice to force ties."""
    n = int(rng.integers(0, max_atoms + 1))
    atoms = []
    for _ in range(n):
        if rng.random() < 0.5:
            p = rng.integers(-3, 4, size=ctx.dimension) * lattice
        else:
            p = rng.uniform(-scale, scale, size=ctx.dimension)
        atoms.append((tuple(float(c) for c in p), int(rng.integers(1, max_mult + 1))))
    return CountingMeasure(ctx, atoms)


def random_context(rng, max_dim=3):
    return MetricContext.euclidean(int(rng.integers(1, max_dim + 1)))


def random_pair(rng, total_atoms, max_mult=3, max_dim=3):
    """Two measures on a random context with at most ``total_atoms`` atoms together."""
    ctx = random_context(rng, max_dim)
    mu = random_measure(rng, ctx, total_atoms // 2, max_mult)
    nu = random_measure(rng, ctx, total_atoms - len(mu), max_mult)
    return mu, nu


_session_start = {}

SUITE_BUDGET_S = 60.0


def pytest_sessionstart(session):
    _session_start["t"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = time.perf_counter() - _session_start.get("t", time.perf_counter())
    verdict = "PASS" if elapsed < SUITE_BUDGET_S else "FAIL"
    terminalreporter.write_line(
        f"[{verdict}] AC9 full suite runtime {elapsed:.1f}s (budget {SUITE_BUDGET_S:.0f}s)"
    )


# Convergence fixtures on the line with origin 0.


def jitter_sequence(ctx, n=100):
    """delta_{0.5 + 1/k} -> delta_{0.5}."""
    from nsharp.convergence import MeasureSequence

    return MeasureSequence(tuple(dirac(ctx, 0.5 + 1 / k) for k in range(1, n + 1)), dirac(ctx, 0.5))


def escape_sequence(ctx, n=20):
    """delta_k escapes to infinity while the target is delta_0."""
    from nsharp.convergence import MeasureSequence

    return MeasureSequence(tuple(dirac(ctx, float(k)) for k in range(1, n + 1)), dirac(ctx, 0))


def extra_atom_sequence(ctx, n=100):
    """The jitter sequence plus a persistent atom at 1.2 that the target lacks."""
    from nsharp.convergence import MeasureSequence

    return MeasureSequence(
        tuple(dirac(ctx, 0.5 + 1 / k, 1.2) for k in range(1, n + 1)), dirac(ctx, 0.5)
    )


def constant_sequence(ctx, n=10):
    from nsharp.convergence import MeasureSequence

    mu = dirac(ctx, 0.25, 1.5) + dirac(ctx, -0.75, mult=2)
    return MeasureSequence((mu,) * n, mu)
