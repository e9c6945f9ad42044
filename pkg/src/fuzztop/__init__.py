"""Exact fuzzy topologies induced by a self-map of a finite set.

Grades are :class:`fractions.Fraction`; the two infinite chain topologies are
held symbolically and decided exactly, the orbit topology is built explicitly.
"""

from .constructions import (
    ChainFamily,
    EndoFunction,
    ExplicitTopology,
    FunctionProfile,
    GradeLaw,
    JPartition,
    OrbitData,
    SampledMap,
    default_window,
    generate_topology,
    j_partition,
    materialize_chain,
    orbit_data,
    profile,
    tau1_basis,
    tau1_complement_basis,
    tau2_basis,
    tau3_basis,
    tau3_topology,
)
from .errors import ConsistencyError, FuzzTopError, InputError, PreconditionError
from .fuzzcore import (
    Carrier,
    FuzzyPoint,
    FuzzySet,
    complement,
    crisp_in,
    disjoint,
    format_grade,
    fuzzy_point_in,
    intersection,
    leq,
    to_grade,
    union,
)
from .maps import MapReport, is_continuous, is_open_map, map_report, zadeh_image, zadeh_preimage
from .oracle import Instance, TheoremClaim, check_claim, recheck, sweep, theorem_registry
from .properties import (
    PropertyReport,
    Verdict,
    is_compact,
    is_connected,
    is_lindelof,
    is_normal,
    is_regular,
    is_t0,
    property_report,
    topologies_equal,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
