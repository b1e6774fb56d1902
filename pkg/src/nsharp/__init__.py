"""Exact Prohorov and weak-hash distances for finite counting measures."""

from .approx import CertifiedApproximation, GridSpec, approximate, snap_to_grid
from .errors import EvaluationError, InputError, InstanceTooLargeError, IterationCapError
from .measure import (
    CountingMeasure,
    ball_mass,
    boundary_mass,
    integrate,
    restriction,
    set_mass,
)
from .prohorov import (
    atom_gap_lower_bound,
    count_difference_bound,
    prohorov_distance,
    prohorov_feasible,
    prohorov_oracle,
    restriction_distance_bound,
)
from .space import MetricContext, distance, origin_distance
from .weakhash import (
    StepProfile,
    profile_breakpoints,
    profile_total_variation,
    prohorov_profile,
    truncated_weak_hash,
    weak_hash_distance,
)

__version__ = "0.1.0"
