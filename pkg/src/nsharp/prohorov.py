"""Exact Prohorov distance between finite counting measures.

For atomic measures the worst closed set in the Prohorov condition is a
finite set of atoms, and the largest violation ``max_S mu(S) - nu(S^eps)``
equals ``mu(X) - F(eps)`` where ``F(eps)`` is the max-flow through the
transport network that admits a pair of atoms when their distance is
strictly below ``eps``.  ``F`` is a step function of ``eps`` that only
changes just after a pairwise distance, which turns the infimum into a
scan over the sorted distinct distances.
"""

from __future__ import annotations

from itertools import groupby
from typing import List, Tuple

from .errors import InputError, InstanceTooLargeError
from .measure import CountingMeasure, ball_mass, require_same_context
from ._flow import TransportFlow

ORACLE_MAX_ATOMS = 12


def _pair_distances(mu: CountingMeasure, nu: CountingMeasure) -> List[Tuple[float, int, int]]:
    dist = mu.ctx.distance
    return sorted(
        (dist(p, q), i, j)
        for i, p in enumerate(mu.points)
        for j, q in enumerate(nu.points)
    )


def prohorov_feasible(mu: CountingMeasure, nu: CountingMeasure, eps: float) -> bool:
    """Whether ``eps`` satisfies both Prohorov inequalities for every closed set."""
    require_same_context(mu, nu)
    if not eps > 0:
        raise InputError(f"eps must be > 0, got {eps!r}")
    net = TransportFlow(mu.multiplicities, nu.multiplicities)
    for d, i, j in _pair_distances(mu, nu):
        if not d < eps:
            break
        net.admit(i, j)
    flow = net.augment()
    return max(mu.total_mass, nu.total_mass) - flow <= eps


def prohorov_distance(mu: CountingMeasure, nu: CountingMeasure) -> float:
    """Infimum of the feasible ``eps``; 0 exactly when the measures coincide.

    >>> from nsharp.space import MetricContext
    >>> ctx = MetricContext.euclidean(1)
    >>> prohorov_distance(CountingMeasure.from_points(ctx, [[0]]),
    ...                   CountingMeasure.from_points(ctx, [[0.5]]))
    0.5
    """
    require_same_context(mu, nu)
    m = max(mu.total_mass, nu.total_mass)
    if m == 0:
        return 0.0
    pairs = _pair_distances(mu, nu)
    # level d_k admits every pair at distance <= d_k; that flow is in force on (d_k, d_{k+1}]
    levels = [(d, [(i, j) for _, i, j in grp]) for d, grp in groupby(pairs, key=lambda t: t[0])]
    if not levels or levels[0][0] > 0:
        levels.insert(0, (0.0, []))
    net = TransportFlow(mu.multiplicities, nu.multiplicities)
    for k, (d_k, new_pairs) in enumerate(levels):
        for i, j in new_pairs:
            net.admit(i, j)
        deficiency = m - net.augment()
        if deficiency <= d_k:
            return d_k
        upper = levels[k + 1][0] if k + 1 < len(levels) else float("inf")
        if deficiency <= upper:
            return float(deficiency)
    raise AssertionError("unreachable: the last interval is always feasible")


def candidate_set(mu: CountingMeasure, nu: CountingMeasure) -> List[float]:
    """Sorted values among which the Prohorov infimum must lie.

    Zero, every pairwise atom distance, and every integer up to the larger
    total mass (the possible mass deficiencies).
    """
    require_same_context(mu, nu)
    values = {0.0}
    values.update(d for d, _, _ in _pair_distances(mu, nu))
    values.update(float(k) for k in range(max(mu.total_mass, nu.total_mass) + 1))
    return sorted(values)


def _worst_violation(src: CountingMeasure, dst: CountingMeasure, eps: float) -> int:
    """max over atom subsets S of src(S) - dst(atoms within distance <= eps of S)."""
    dist = src.ctx.distance
    near = []
    for p in src.points:
        mask = 0
        for j, q in enumerate(dst.points):
            if dist(p, q) <= eps:
                mask |= 1 << j
        near.append(mask)
    w_src, w_dst = src.multiplicities, dst.multiplicities
    worst = 0
    for subset in range(1, 1 << len(near)):
        mass, hood = 0, 0
        for i in range(len(near)):
            if subset >> i & 1:
                mass += w_src[i]
                hood |= near[i]
        covered = sum(w for j, w in enumerate(w_dst) if hood >> j & 1)
        worst = max(worst, mass - covered)
    return worst


def prohorov_oracle(mu: CountingMeasure, nu: CountingMeasure) -> float:
    """Brute-force Prohorov distance by enumerating every subset of atoms.

    A candidate ``c`` is accepted when the inequalities hold for all ``eps``
    slightly above ``c`` (pairs at distance ``<= c`` are then inside the open
    neighbourhood), which yields the infimum whether or not it is attained.
    """
    require_same_context(mu, nu)
    if len(mu) + len(nu) > ORACLE_MAX_ATOMS:
        raise InstanceTooLargeError(
            f"oracle limited to {ORACLE_MAX_ATOMS} atoms, got {len(mu) + len(nu)}"
        )
    for c in candidate_set(mu, nu):
        if _worst_violation(mu, nu, c) <= c and _worst_violation(nu, mu, c) <= c:
            return c
    raise AssertionError("unreachable: the largest candidate is always feasible")


def restriction_distance_bound(mu: CountingMeasure, p: float, r: float) -> int:
    """Mass of the annulus ``B_r \\ B_p``, an upper bound on d(mu^(p), mu^(r))."""
    if not 0 <= p <= r:
        raise InputError(f"need 0 <= p <= r, got p={p!r}, r={r!r}")
    return ball_mass(mu, r) - ball_mass(mu, p)


def atom_gap_lower_bound(
    mu: CountingMeasure, nu: CountingMeasure, r_lo: float, r_hi: float, eps: float
) -> bool:
    """True when the annulus hypotheses guaranteeing d(mu, nu) >= eps are met.

    ``mu`` must be atom-free on ``B_{r_hi} \\ B_{r_lo}`` while ``nu`` charges
    the shrunken annulus ``B_{r_hi-eps} \\ B_{r_lo+eps}``.
    """
    require_same_context(mu, nu)
    if not 0 < r_lo < r_hi:
        raise InputError(f"need 0 < r_lo < r_hi, got {r_lo!r}, {r_hi!r}")
    half_gap = (r_hi - r_lo) / 2
    if not (0 < eps < half_gap and half_gap < 1):
        raise InputError(f"need 0 < eps < (r_hi - r_lo)/2 < 1, got eps={eps!r}")
    mu_free = ball_mass(mu, r_hi) - ball_mass(mu, r_lo) == 0
    nu_inner = nu.filter_radius(lambda rad: r_lo + eps <= rad < r_hi - eps)
    return mu_free and nu_inner.total_mass > 0


def count_difference_bound(mu: CountingMeasure, nu: CountingMeasure, r: float) -> int:
    """``|mu(B_r) - nu(B_r)|``, a lower bound on d(mu^(r), nu^(r))."""
    require_same_context(mu, nu)
    return abs(ball_mass(mu, r) - ball_mass(nu, r))
