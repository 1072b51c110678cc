"""Distance-antimagic labelings of oriented cycles and oriented 2-regular graphs."""

from .graph import (
    UNREACHABLE,
    ComponentFamily,
    Connectivity,
    CycleOrientation,
    DistanceMatrix,
    InvalidOrderError,
    Kind,
    OrientedGraph,
    TwoRegularSpec,
    all_pairs_distance,
    build_oriented_cycle,
    build_theta_cycle,
    build_unidirectional_cycle,
    build_union,
    classify,
    mirror,
)
from .labeling import (
    DistanceSet,
    DomainError,
    EmptyDistanceSetError,
    Labeling,
    WeightReport,
    complement_set,
    d_neighborhood,
    shift_set,
    weigh,
)

__version__ = "0.1.0"
