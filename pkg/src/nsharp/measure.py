"""Finite counting measures: sums of Dirac masses with positive integer weights."""

from __future__ import annotations

import math
from collections import Counter
from typing import Callable, Iterable, Sequence, Tuple

from .errors import EvaluationError, InputError
from .sets import PointSet
from .space import MetricContext, Point, make_point

Atom = Tuple[Point, int]


class CountingMeasure:
    """Immutable finite counting measure on a metric context.

    Atoms located at the same point are merged at construction and stored in
    lexicographic order of their coordinates, so two measures compare equal
    exactly when they put the same mass on the same points.

    >>> ctx = MetricContext.euclidean(1)
    >>> CountingMeasure(ctx, [((0.5,), 1), ((0.5,), 2)]).atoms
    (((0.5,), 3),)
    """

    __slots__ = ("ctx", "atoms", "_radii")

    def __init__(self, ctx: MetricContext, atoms: Iterable[tuple] = ()):
        merged: Counter = Counter()
        for point, mult in atoms:
            p = make_point(point, ctx.dimension)
            if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
                raise InputError(f"multiplicity must be a positive integer, got {mult!r}")
            merged[p] += mult
        self.ctx = ctx
        self.atoms: Tuple[Atom, ...] = tuple(sorted(merged.items()))
        self._radii = None

    @classmethod
    def from_points(cls, ctx: MetricContext, points: Iterable[Sequence[float]]) -> "CountingMeasure":
        """One unit of mass per listed point (repeats accumulate)."""
        return cls(ctx, ((tuple(p), 1) for p in points))

    @classmethod
    def empty(cls, ctx: MetricContext) -> "CountingMeasure":
        return cls(ctx, ())

    @property
    def points(self) -> Tuple[Point, ...]:
        return tuple(p for p, _ in self.atoms)

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(w for _, w in self.atoms)

    @property
    def total_mass(self) -> int:
        return sum(w for _, w in self.atoms)

    @property
    def radii(self) -> Tuple[float, ...]:
        """Origin distance of each atom, aligned with :attr:`atoms`."""
        if self._radii is None:
            self._radii = tuple(self.ctx.distance(self.ctx.origin, p) for p, _ in self.atoms)
        return self._radii

    def __len__(self) -> int:
        return len(self.atoms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CountingMeasure):
            return NotImplemented
        return self.ctx == other.ctx and self.atoms == other.atoms

    def __hash__(self) -> int:
        return hash((self.ctx, self.atoms))

    def __add__(self, other: "CountingMeasure") -> "CountingMeasure":
        require_same_context(self, other)
        return CountingMeasure(self.ctx, self.atoms + other.atoms)

    def __repr__(self) -> str:
        if not self.atoms:
            return "CountingMeasure(0)"
        terms = " + ".join(
            (f"{w}" if w > 1 else "") + f"δ{_fmt_point(p)}" for p, w in self.atoms
        )
        return f"CountingMeasure({terms})"

    def filter_radius(self, keep: Callable[[float], bool]) -> "CountingMeasure":
        """Sub-measure of atoms whose origin distance satisfies ``keep``."""
        kept = [a for a, rad in zip(self.atoms, self.radii) if keep(rad)]
        return CountingMeasure(self.ctx, kept)


def _fmt_point(p: Point) -> str:
    return f"{p[0]:g}" if len(p) == 1 else "(" + ",".join(f"{c:g}" for c in p) + ")"


def require_same_context(mu: CountingMeasure, nu: CountingMeasure) -> None:
    if mu.ctx != nu.ctx:
        raise InputError("measures live on different metric contexts")


def restriction(mu: CountingMeasure, r: float) -> CountingMeasure:
    """Restriction to the open ball of radius ``r`` around the origin."""
    if not r >= 0:
        raise InputError(f"radius must be >= 0, got {r!r}")
    return mu.filter_radius(lambda rad: rad < r)


def ball_mass(mu: CountingMeasure, r: float) -> int:
    """Mass of the open ball ``B_r`` around the origin."""
    if not r >= 0:
        raise InputError(f"radius must be >= 0, got {r!r}")
    return sum(w for w, rad in zip(mu.multiplicities, mu.radii) if rad < r)


def boundary_mass(mu: CountingMeasure, r: float) -> int:
    """Mass on the sphere of radius ``r`` around the origin."""
    if not r > 0:
        raise InputError(f"radius must be > 0, got {r!r}")
    return sum(w for w, rad in zip(mu.multiplicities, mu.radii) if rad == r)


def closed_ball_mass(mu: CountingMeasure, r: float) -> int:
    return ball_mass(mu, r) + boundary_mass(mu, r)


def integrate(mu: CountingMeasure, f: Callable[[Point], float]) -> float:
    """Integral of ``f`` against ``mu``, i.e. the weighted sum over atoms."""
    total = 0.0
    for p, w in mu.atoms:
        try:
            v = float(f(p))
        except Exception as exc:
            raise EvaluationError(f"test function failed at {p!r}: {exc}") from exc
        if math.isnan(v):
            raise EvaluationError(f"test function is NaN at {p!r}")
        total += w * v
    return total


def set_mass(mu: CountingMeasure, A: PointSet) -> int:
    return sum(w for p, w in mu.atoms if A.contains(mu.ctx, p))


def distinct_radii(*measures: CountingMeasure) -> list:
    """Sorted distinct origin distances of all atoms of the given measures."""
    return sorted({rad for m in measures for rad in m.radii})
