"""The weak-hash distance via the step profile r -> d(mu^(r), nu^(r)).

Restricting to the open ball ``B_r`` only changes the measures when ``r``
passes an atom radius, so the profile is constant on each interval
``(rho_k, rho_{k+1}]`` between consecutive radii and the defining integral
has a closed form.
"""

from __future__ import annotations

import bisect
import csv
import io
import math
from dataclasses import dataclass
from typing import Iterator, List, Tuple

from .errors import InputError
from .measure import CountingMeasure, distinct_radii, require_same_context
from .prohorov import prohorov_distance


@dataclass(frozen=True)
class StepProfile:
    """Piecewise-constant function on ``(0, inf)``.

    ``values[k]`` holds on ``(breakpoints[k-1], breakpoints[k]]`` with the
    conventions ``breakpoints[-1] = 0`` and ``breakpoints[K] = inf``.
    """

    breakpoints: Tuple[float, ...]
    values: Tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != len(self.breakpoints) + 1:
            raise InputError("a profile needs exactly one more value than breakpoints")

    def value_at(self, r: float) -> float:
        """Profile value at ``r``; at ``r = 0`` both restrictions are empty."""
        if not r >= 0:
            raise InputError(f"radius must be >= 0, got {r!r}")
        if r == 0:
            return 0.0
        return self.values[bisect.bisect_left(self.breakpoints, r)]

    def intervals(self) -> Iterator[Tuple[float, float, float]]:
        """Yield ``(r_lo, r_hi, value)`` in ascending order."""
        edges = (0.0,) + self.breakpoints + (math.inf,)
        for k, c in enumerate(self.values):
            yield edges[k], edges[k + 1], c

    def minimal(self) -> "StepProfile":
        """Drop breakpoints across which the value does not change."""
        bps, vals = [], [self.values[0]]
        for rho, c in zip(self.breakpoints, self.values[1:]):
            if c != vals[-1]:
                bps.append(rho)
                vals.append(c)
        return StepProfile(tuple(bps), tuple(vals))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["r_lo", "r_hi", "prohorov", "transformed"])
        for lo, hi, c in self.intervals():
            writer.writerow([repr(lo), "inf" if hi == math.inf else repr(hi), repr(c), repr(c / (1 + c))])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "StepProfile":
        rows = list(csv.DictReader(io.StringIO(text)))
        if not rows:
            raise InputError("profile CSV has no rows")
        bps = tuple(float(row["r_hi"]) for row in rows[:-1])
        return cls(bps, tuple(float(row["prohorov"]) for row in rows))


def profile_breakpoints(mu: CountingMeasure, nu: CountingMeasure) -> List[float]:
    """Distinct positive origin distances of the atoms of both measures."""
    require_same_context(mu, nu)
    return [rho for rho in distinct_radii(mu, nu) if rho > 0]


def raw_profile(mu: CountingMeasure, nu: CountingMeasure) -> StepProfile:
    """Profile with one interval per atom radius (not merged)."""
    bps = profile_breakpoints(mu, nu)
    values = []
    for lo in [0.0] + bps:
        # for r in (lo, next], B_r holds exactly the atoms at distance <= lo
        inside = lambda rad, lo=lo: rad <= lo
        values.append(prohorov_distance(mu.filter_radius(inside), nu.filter_radius(inside)))
    return StepProfile(tuple(bps), tuple(values))


def prohorov_profile(mu: CountingMeasure, nu: CountingMeasure) -> StepProfile:
    return raw_profile(mu, nu).minimal()


def _integrate_profile(profile: StepProfile, upper: float) -> float:
    total = 0.0
    for lo, hi, c in profile.intervals():
        if lo >= upper:
            break
        hi = min(hi, upper)
        weight = math.exp(-lo) - (0.0 if hi == math.inf else math.exp(-hi))
        total += c / (1 + c) * weight
    return total


def weak_hash_distance(mu: CountingMeasure, nu: CountingMeasure) -> float:
    """Closed-form value of the integral of ``e^-r d/(1+d)`` over ``r >= 0``."""
    return _integrate_profile(prohorov_profile(mu, nu), math.inf)


def truncated_weak_hash(mu: CountingMeasure, nu: CountingMeasure, R: float) -> float:
    """Same integral over ``[0, R]`` only."""
    if not R > 0:
        raise InputError(f"R must be > 0, got {R!r}")
    return _integrate_profile(prohorov_profile(mu, nu), R)


def profile_total_variation(mu: CountingMeasure, nu: CountingMeasure, R: float) -> float:
    """Total variation of the profile over ``(0, R]``.

    A jump at breakpoint ``rho`` is realised just after ``rho`` (open balls),
    so it counts only when ``rho < R``.
    """
    if not R > 0:
        raise InputError(f"R must be > 0, got {R!r}")
    prof = prohorov_profile(mu, nu)
    tv = 0.0
    for rho, before, after in zip(prof.breakpoints, prof.values, prof.values[1:]):
        if rho >= R:
            break
        tv += abs(after - before)
    return tv
