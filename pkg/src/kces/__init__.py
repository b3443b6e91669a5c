"""Exact construction and verification of subspaces whose pure states all have
entanglement depth at least k, and of the product sets that span their
orthocomplements."""
from .bounds import (
    Scenario,
    combined_lower_bound,
    max_kces_dim,
    min_upb_trivial,
    optimal_partition_shape,
    pigeonhole_bound,
)
from .catalog import catalog
from .construction import KcesResult, build_kces, min_spanning_count, vandermonde_product_vector
from .errors import FormatError, KcesError, PreconditionError
from .states import (
    Partition,
    ProductSet,
    ProductVector,
    SubspaceBasis,
    coarse_grain,
    enumerate_maximal_partitions,
    expand,
    ppt_state_from_set,
    vector_depth,
)
from .unextendibility import Verdict, Witness, depth_floor, extension_witness, is_upb, verify_level

__version__ = "0.1.0"
