"""Finite-sample diagnostics for the four equivalent modes of convergence.

Each checker looks at a finite sequence ``mu_1, ..., mu_n`` and a target
``mu`` and reports a verdict on the final term together with a per-term
trace.  These are surrogates for limit statements and are meant as
diagnostics: agreement between the four checkers on a well-chosen fixture
is evidence, not proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import InputError
from .measure import (
    CountingMeasure,
    boundary_mass,
    closed_ball_mass,
    integrate,
    require_same_context,
    restriction,
    set_mass,
)
from .prohorov import prohorov_distance
from .sets import ClosedBall, PointSet
from .space import Point, distance
from .weakhash import weak_hash_distance

CRITERIA = ("weakhash", "integrals", "restrictions", "sets")


@dataclass(frozen=True)
class MeasureSequence:
    terms: Tuple[CountingMeasure, ...]
    target: CountingMeasure

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise InputError("a measure sequence needs at least one term")
        for t in self.terms:
            require_same_context(t, self.target)

    @property
    def ctx(self):
        return self.target.ctx

    @property
    def final(self) -> CountingMeasure:
        return self.terms[-1]

    def __len__(self):
        return len(self.terms)


@dataclass
class ConvergenceVerdict:
    """Outcome of one checker.

    ``trace`` has one row per sequence term; ``columns`` names the entries of
    each row (one per test function, radius or set).
    """

    criterion: str
    passed: bool
    columns: Tuple[str, ...]
    trace: List[Tuple[float, ...]] = field(default_factory=list)


@dataclass(frozen=True)
class TestFunction:
    """Bounded continuous radial function supported on a closed ball.

    ``kind`` is ``"tent"`` (linear decay to zero at ``radius``) or ``"bump"``
    (smooth ``exp(1 - 1/(1 - s^2))`` profile).
    """

    __test__ = False  # keep pytest from collecting this class

    center: Point
    radius: float
    height: float = 1.0
    kind: str = "tent"
    metric: Callable[[Point, Point], float] = distance

    def __post_init__(self):
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise InputError(f"test function needs a bounded support radius, got {self.radius!r}")
        if self.kind not in ("tent", "bump"):
            raise InputError(f"unknown test function kind {self.kind!r}")
        object.__setattr__(self, "center", tuple(float(c) for c in self.center))

    @property
    def support_radius(self) -> float:
        return self.radius

    def __call__(self, p: Point) -> float:
        s = self.metric(self.center, p) / self.radius
        if s >= 1:
            return 0.0
        if self.kind == "tent":
            return self.height * (1 - s)
        return self.height * math.exp(1 - 1 / (1 - s * s))

    def label(self) -> str:
        c = ",".join(f"{x:g}" for x in self.center)
        return f"{self.kind}[{c};{self.radius:g}]"


def _tail_settles(values: Sequence[float], tol: float) -> bool:
    tail = values[-max(1, math.ceil(len(values) / 4)):]
    return all(b <= a + tol for a, b in zip(tail, tail[1:]))


def _require_tol(tol: float) -> None:
    if not tol > 0:
        raise InputError(f"tol must be > 0, got {tol!r}")


def check_criterion_weakhash(seq: MeasureSequence, tol: float) -> ConvergenceVerdict:
    """d#(mu_k, mu) small at the end and not growing over the last quarter."""
    _require_tol(tol)
    values = [weak_hash_distance(t, seq.target) for t in seq.terms]
    passed = values[-1] < tol and _tail_settles(values, tol)
    return ConvergenceVerdict("weakhash", passed, ("d#",), [(v,) for v in values])


def check_criterion_integrals(
    seq: MeasureSequence, funcs: Sequence[Callable], tol: float
) -> ConvergenceVerdict:
    """Integrals of compactly supported test functions agree on the final term.

    Each function must expose a finite ``support_radius``.
    """
    _require_tol(tol)
    for f in funcs:
        radius = getattr(f, "support_radius", None)
        if radius is None or not math.isfinite(radius):
            raise InputError(f"test function {f!r} does not declare a bounded support")
    reference = [integrate(seq.target, f) for f in funcs]
    trace = [
        tuple(abs(integrate(t, f) - ref) for f, ref in zip(funcs, reference))
        for t in seq.terms
    ]
    passed = all(diff < tol for diff in trace[-1])
    labels = tuple(getattr(f, "label", lambda: repr(f))() for f in funcs)
    return ConvergenceVerdict("integrals", passed, labels, trace)


def select_continuity_radii(mu: CountingMeasure, count: int, r_max: float) -> List[float]:
    """Increasing radii carrying no mass of ``mu`` on their spheres.

    ``(0, r_max)`` is cut into ``count`` equal cells; in each cell the widest
    atom-free gap between consecutive atom radii is located and its midpoint
    returned.
    """
    if not (isinstance(count, int) and count >= 1):
        raise InputError(f"count must be a positive integer, got {count!r}")
    if not r_max > 0:
        raise InputError(f"r_max must be > 0, got {r_max!r}")
    width = r_max / count
    radii = []
    for n in range(count):
        lo, hi = n * width, (n + 1) * width
        cuts = [lo] + sorted({rad for rad in mu.radii if lo < rad < hi}) + [hi]
        gaps = sorted(zip(cuts, cuts[1:]), key=lambda g: g[0] - g[1])
        for a, b in gaps:
            mid = (a + b) / 2
            if a < mid < b and boundary_mass(mu, mid) == 0:
                radii.append(mid)
                break
        else:
            raise AssertionError(f"no atom-free gap found in ({lo}, {hi})")
    return radii


def auto_radii(seq: MeasureSequence) -> List[float]:
    """Continuity radii of the target reaching past every atom of the final term."""
    reach = max(seq.target.radii + seq.final.radii, default=0.0)
    count = int(math.ceil(reach)) + 1
    return select_continuity_radii(seq.target, count, float(count))


def default_test_functions(seq: MeasureSequence, radii: Sequence[float]) -> List[TestFunction]:
    """Origin-centred tents, one per radius."""
    metric = seq.ctx.metric
    return [TestFunction(seq.ctx.origin, r, metric=metric) for r in radii]


def default_sets(seq: MeasureSequence, radii: Sequence[float]) -> List[PointSet]:
    """Closed origin-centred balls, one per radius."""
    return [ClosedBall(seq.ctx.origin, r) for r in radii]


def _validate_radii(target: CountingMeasure, radii: Sequence[float]) -> None:
    for r in radii:
        if not r > 0:
            raise InputError(f"radius must be > 0, got {r!r}")
        if boundary_mass(target, r) > 0:
            raise InputError(f"radius {r!r} passes through an atom of the target")


def check_criterion_restrictions(
    seq: MeasureSequence, radii: Sequence[float], tol: float
) -> ConvergenceVerdict:
    """Prohorov distance of the restrictions to each ``B_r`` small on the final term."""
    _require_tol(tol)
    _validate_radii(seq.target, radii)
    targets = [restriction(seq.target, r) for r in radii]
    trace = [
        tuple(prohorov_distance(restriction(t, r), ref) for r, ref in zip(radii, targets))
        for t in seq.terms
    ]
    passed = all(v < tol for v in trace[-1])
    return ConvergenceVerdict("restrictions", passed, tuple(f"B_{r:g}" for r in radii), trace)


def check_criterion_sets(
    seq: MeasureSequence, sets: Sequence[PointSet], tol: float
) -> ConvergenceVerdict:
    """Set masses equal on the final term.

    Masses are integers, so convergence means eventual equality and the
    criterion passes only when every difference is below 1, whatever ``tol``.
    """
    _require_tol(tol)
    ctx = seq.ctx
    for A in sets:
        if not A.bounded:
            raise InputError(f"set {A!r} is unbounded")
        if any(A.on_boundary(ctx, p) for p in seq.target.points):
            raise InputError(f"set {A!r} has a target atom on its boundary")
    reference = [set_mass(seq.target, A) for A in sets]
    trace = [
        tuple(float(abs(set_mass(t, A) - ref)) for A, ref in zip(sets, reference))
        for t in seq.terms
    ]
    passed = all(diff < 1 for diff in trace[-1])
    return ConvergenceVerdict("sets", passed, tuple(repr(A) for A in sets), trace)


def check_all(
    seq: MeasureSequence,
    tol: float,
    radii: Optional[Sequence[float]] = None,
    funcs: Optional[Sequence[Callable]] = None,
    sets: Optional[Sequence[PointSet]] = None,
) -> Dict[str, ConvergenceVerdict]:
    """Run the four checkers, filling unspecified inputs with defaults from :func:`auto_radii`."""
    if radii is None:
        radii = auto_radii(seq)
    if funcs is None:
        funcs = default_test_functions(seq, radii)
    if sets is None:
        sets = default_sets(seq, radii)
    return {
        "weakhash": check_criterion_weakhash(seq, tol),
        "integrals": check_criterion_integrals(seq, funcs, tol),
        "restrictions": check_criterion_restrictions(seq, radii, tol),
        "sets": check_criterion_sets(seq, sets, tol),
    }


def criteria_agree(verdicts: Dict[str, ConvergenceVerdict]) -> bool:
    return len({v.passed for v in verdicts.values()}) == 1


def verdict_table(verdicts: Dict[str, ConvergenceVerdict]) -> Tuple[List[str], List[List[float]]]:
    """Header and rows: one row per term, one column per diagnostic."""
    header = ["term"]
    for name, v in verdicts.items():
        header += [f"{name}:{c}" for c in v.columns]
    n = len(next(iter(verdicts.values())).trace)
    rows = []
    for k in range(n):
        row = [k + 1]
        for v in verdicts.values():
            row += list(v.trace[k])
        rows.append(row)
    return header, rows


@dataclass(frozen=True)
class NeighborhoodSpec:
    """Data of one basic open set of the weak-hash topology around ``center``."""

    center: CountingMeasure
    epsilon: float
    closed_sets: Tuple[PointSet, ...] = ()
    radii: Tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "closed_sets", tuple(self.closed_sets))
        object.__setattr__(self, "radii", tuple(self.radii))
        if not self.epsilon > 0:
            raise InputError(f"epsilon must be > 0, got {self.epsilon!r}")
        for F in self.closed_sets:
            if not F.bounded:
                raise InputError(f"set {F!r} must be bounded")
        _validate_radii(self.center, self.radii)


def basis_neighborhood_contains(xi: CountingMeasure, spec: NeighborhoodSpec) -> bool:
    require_same_context(xi, spec.center)
    mu, eps = spec.center, spec.epsilon
    for F in spec.closed_sets:
        if not set_mass(xi, F) < set_mass(mu, F) + eps:
            return False
    for r in spec.radii:
        if boundary_mass(xi, r) != 0:
            return False
        if not abs(closed_ball_mass(xi, r) - closed_ball_mass(mu, r)) < eps:
            return False
    return True
