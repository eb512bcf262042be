"""Exact combinatorics and formal series for free Meixner laws and q-Gaussian variables."""

from .cumulants import (
    FreeFamily,
    QFamily,
    ckn,
    free_cumulants_from_moments,
    mixed_free_cumulant,
    mixed_free_moment,
    mixed_q_moment,
    moments_from_free_cumulants,
    q_cumulants_from_moments,
    q_moments_from_cumulants,
    q_wick_moment,
)
from .errors import (
    ArgumentError,
    BranchError,
    DegenerateBranchError,
    DomainError,
    FreeMeixnerError,
    ResourceLimitError,
    SingularityError,
)
from .meixner import (
    LawClass,
    MeixnerParams,
    WeightPair,
    classify,
    component_cumulants,
    convolution_moment_series,
    cumulant_sequence,
    dilate_moments,
    moment_series,
)
from .partitions import (
    SetPartition,
    enumerate_nc_first_block,
    enumerate_noncrossing,
    enumerate_pairings,
    enumerate_partitions,
    is_noncrossing,
    restricted_crossings,
)
from .sequences import CumulantSequence, MomentSequence
from .series import TruncatedSeries, series_mul, series_reciprocal, series_sqrt_one

__version__ = "0.1.0"
