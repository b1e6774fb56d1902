"""Approximation by measures supported on a dyadic grid, with an exact certificate."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import InputError, IterationCapError
from .measure import CountingMeasure, restriction
from .space import Point
from .weakhash import truncated_weak_hash

MAX_HALVINGS = 60


@dataclass(frozen=True)
class GridSpec:
    """Grid ``offset + h * Z^d``; ``offset=None`` anchors it at the context origin."""

    spacing: float
    offset: Optional[Point] = None

    def __post_init__(self):
        if not (self.spacing > 0 and math.isfinite(self.spacing)):
            raise InputError(f"grid spacing must be a positive finite number, got {self.spacing!r}")
        if self.offset is not None:
            object.__setattr__(self, "offset", tuple(float(c) for c in self.offset))

    def anchored(self, origin: Point) -> "GridSpec":
        return self if self.offset is not None else GridSpec(self.spacing, origin)

    def halved(self) -> "GridSpec":
        return GridSpec(self.spacing / 2, self.offset)


def snap_to_grid(p: Point, grid: GridSpec) -> Point:
    """Nearest grid point, breaking ties toward the smaller coordinate."""
    offset = grid.offset if grid.offset is not None else (0.0,) * len(p)
    if len(offset) != len(p):
        raise InputError("grid offset and point differ in dimension")
    h = grid.spacing
    return tuple(o + math.ceil((x - o) / h - 0.5) * h for x, o in zip(p, offset))


def on_grid(p: Point, grid: GridSpec) -> bool:
    """Whether every coordinate is within one ulp of ``offset + n*h`` for an integer ``n``."""
    offset = grid.offset if grid.offset is not None else (0.0,) * len(p)
    for x, o in zip(p, offset):
        g = o + round((x - o) / grid.spacing) * grid.spacing
        if abs(x - g) > math.ulp(max(abs(x), abs(g))):
            return False
    return True


def snap_measure(mu: CountingMeasure, R: float, grid: GridSpec) -> CountingMeasure:
    """Move every atom of ``mu`` inside ``B_R`` to its grid point, keeping weights.

    Atoms outside ``B_R`` are dropped; coincident snapped atoms merge.
    """
    grid = grid.anchored(mu.ctx.origin)
    inside = restriction(mu, R)
    return CountingMeasure(mu.ctx, ((snap_to_grid(p, grid), w) for p, w in inside.atoms))


@dataclass(frozen=True)
class CertifiedApproximation:
    approximant: CountingMeasure
    certified_error: float
    window: float
    grid: GridSpec


def approximate(
    mu: CountingMeasure, R: float, eps: float, grid: Optional[GridSpec] = None
) -> CertifiedApproximation:
    """Snap ``mu`` to successively halved grids until the truncated d# is <= eps.

    The returned error is the exact truncated weak-hash distance between
    ``mu`` and the approximant over ``[0, R]``.  Starts from spacing 1 unless
    ``grid`` is given.
    """
    if not R > 0:
        raise InputError(f"R must be > 0, got {R!r}")
    if not eps > 0:
        raise InputError(f"eps must be > 0, got {eps!r}")
    grid = (grid or GridSpec(1.0)).anchored(mu.ctx.origin)
    for _ in range(MAX_HALVINGS + 1):
        approx = snap_measure(mu, R, grid)
        err = truncated_weak_hash(mu, approx, R)
        if err <= eps:
            return CertifiedApproximation(approx, err, R, grid)
        grid = grid.halved()
    raise IterationCapError(f"no grid within {MAX_HALVINGS} halvings reached error {eps!r}")


def proof_delta(mu: CountingMeasure, R: float, eps: float) -> float:
    """Displacement radius that provably keeps the truncated d# below ``eps``.

    Minimum of: the clearance of every atom in ``B_R`` from the sphere of
    radius ``R``; half the smallest gap between distinct atom radii;
    ``eps / 4N'`` with ``N'`` the number of distinct radii; and
    ``eps / (2c - eps)`` with ``c = 1 - e^-R``.  Returns ``inf`` when any
    displacement works (no atoms, or ``eps >= 2c``).
    """
    if not (R > 0 and eps > 0):
        raise InputError("R and eps must be > 0")
    inside = restriction(mu, R)
    radii = sorted(set(inside.radii))
    c = 1 - math.exp(-R)
    if not radii or eps >= 2 * c:
        return math.inf
    clearance = min(R - rad for rad in radii)
    half_gap = min((b - a for a, b in zip(radii, radii[1:])), default=math.inf) / 2
    per_radius = eps / (4 * len(radii))
    tail = eps / (2 * c - eps)
    return min(clearance, half_gap, per_radius, tail)


def proof_grid(mu: CountingMeasure, R: float, eps: float) -> GridSpec:
    """Largest dyadic grid whose snapping displacement is strictly below :func:`proof_delta`."""
    delta = proof_delta(mu, R, eps)
    h = 1.0
    reach = math.sqrt(mu.ctx.dimension) / 2
    while not h * reach < delta:
        h /= 2
    return GridSpec(h, mu.ctx.origin)
