"""Decidable point sets used for mass queries and convergence checks.

Every set answers two questions about a point: membership and whether the
point lies on the set's topological boundary.  Boundaries of composite sets
are reported conservatively (a point on any component boundary counts).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InputError
from .space import MetricContext, Point, make_point


class PointSet:
    bounded = True

    def contains(self, ctx: MetricContext, p: Point) -> bool:
        raise NotImplementedError

    def on_boundary(self, ctx: MetricContext, p: Point) -> bool:
        raise NotImplementedError

    def __or__(self, other: "PointSet") -> "Union":
        return Union((self, other))

    def __sub__(self, other: "PointSet") -> "Difference":
        return Difference(self, other)


@dataclass(frozen=True)
class ClosedBall(PointSet):
    center: Point
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", make_point(self.center))
        if not self.radius >= 0:
            raise InputError(f"ball radius must be >= 0, got {self.radius!r}")

    def contains(self, ctx, p):
        return ctx.distance(self.center, p) <= self.radius

    def on_boundary(self, ctx, p):
        return ctx.distance(self.center, p) == self.radius


@dataclass(frozen=True)
class Box(PointSet):
    """Closed axis-aligned box ``[lo_1, hi_1] x ... x [lo_d, hi_d]``."""

    lo: Point
    hi: Point

    def __post_init__(self):
        lo, hi = make_point(self.lo), make_point(self.hi)
        if len(lo) != len(hi) or any(a > b for a, b in zip(lo, hi)):
            raise InputError(f"invalid box corners {lo!r}, {hi!r}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def contains(self, ctx, p):
        return all(a <= x <= b for a, x, b in zip(self.lo, p, self.hi))

    def on_boundary(self, ctx, p):
        return self.contains(ctx, p) and any(
            x == a or x == b for a, x, b in zip(self.lo, p, self.hi)
        )


@dataclass(frozen=True)
class Union(PointSet):
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def bounded(self):
        return all(s.bounded for s in self.parts)

    def contains(self, ctx, p):
        return any(s.contains(ctx, p) for s in self.parts)

    def on_boundary(self, ctx, p):
        return any(s.on_boundary(ctx, p) for s in self.parts)


@dataclass(frozen=True)
class Difference(PointSet):
    keep: PointSet
    remove: PointSet

    @property
    def bounded(self):
        return self.keep.bounded

    def contains(self, ctx, p):
        return self.keep.contains(ctx, p) and not self.remove.contains(ctx, p)

    def on_boundary(self, ctx, p):
        return self.keep.on_boundary(ctx, p) or self.remove.on_boundary(ctx, p)


class Everything(PointSet):
    bounded = False

    def contains(self, ctx, p):
        return True

    def on_boundary(self, ctx, p):
        return False

    def __eq__(self, other):
        return isinstance(other, Everything)

    def __hash__(self):
        return hash(Everything)


class Nothing(PointSet):
    def contains(self, ctx, p):
        return False

    def on_boundary(self, ctx, p):
        return False

    def __eq__(self, other):
        return isinstance(other, Nothing)

    def __hash__(self):
        return hash(Nothing)


def set_from_dict(doc: dict) -> PointSet:
    """Build a set from its JSON form, e.g. ``{"type": "ball", "center": [0], "radius": 1}``."""
    if not isinstance(doc, dict) or "type" not in doc:
        raise InputError(f"set description must be an object with a 'type': {doc!r}")
    kind = doc["type"]
    try:
        if kind == "ball":
            return ClosedBall(tuple(doc["center"]), float(doc["radius"]))
        if kind == "box":
            return Box(tuple(doc["lo"]), tuple(doc["hi"]))
        if kind == "union":
            return Union(tuple(set_from_dict(d) for d in doc["parts"]))
        if kind == "difference":
            return Difference(set_from_dict(doc["keep"]), set_from_dict(doc["remove"]))
        if kind == "empty":
            return Nothing()
        if kind == "all":
            return Everything()
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed {kind!r} set: {exc}") from None
    raise InputError(f"unknown set type {kind!r}")


def sets_from_json(items: Sequence[dict]) -> list:
    return [set_from_dict(d) for d in items]
