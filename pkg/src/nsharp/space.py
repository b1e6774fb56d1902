"""Points, the Euclidean metric and the fixed origin x0."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence, Tuple

from .errors import InputError

Point = Tuple[float, ...]


def make_point(coords: Sequence[float], dimension: int | None = None) -> Point:
    """Validate ``coords`` and return them as a tuple of floats."""
    p = tuple(float(c) for c in coords)
    if not p:
        raise InputError("a point needs at least one coordinate")
    if not all(math.isfinite(c) for c in p):
        raise InputError(f"non-finite coordinate in {p!r}")
    if dimension is not None and len(p) != dimension:
        raise InputError(f"point {p!r} has dimension {len(p)}, expected {dimension}")
    return p


def distance(p: Point, q: Point) -> float:
    """Euclidean distance between two points of equal dimension."""
    if len(p) != len(q):
        raise InputError(f"dimension mismatch: {len(p)} vs {len(q)}")
    return math.dist(p, q)


@dataclass(frozen=True)
class MetricContext:
    """Dimension, origin and metric shared by every measure in one computation.

    ``metric`` defaults to :func:`distance`; any callable obeying the metric
    axioms on tuples of the declared dimension can be substituted.
    """

    dimension: int
    origin: Point
    metric: Callable[[Point, Point], float] = field(default=distance, compare=True)

    def __post_init__(self):
        if not isinstance(self.dimension, int) or self.dimension < 1:
            raise InputError(f"dimension must be a positive integer, got {self.dimension!r}")
        object.__setattr__(self, "origin", make_point(self.origin, self.dimension))

    @classmethod
    def euclidean(cls, dimension: int, origin: Sequence[float] | None = None) -> "MetricContext":
        if origin is None:
            origin = (0.0,) * dimension
        return cls(dimension, tuple(origin))

    def distance(self, p: Point, q: Point) -> float:
        if len(p) != self.dimension or len(q) != self.dimension:
            raise InputError(
                f"dimension mismatch: expected {self.dimension}, got {len(p)} and {len(q)}"
            )
        return self.metric(p, q)


def origin_distance(ctx: MetricContext, p: Point) -> float:
    """Distance from the fixed origin of ``ctx`` to ``p``."""
    return ctx.distance(ctx.origin, p)
