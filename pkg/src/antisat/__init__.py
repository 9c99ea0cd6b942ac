"""Exact antichain saturation numbers for the Boolean lattice, with verifiable constructions."""
from .chains import Chain, ChainCover, dilworth, layer_matching, skipless_cover, symmetric_chain_decomposition
from .colex import (
    CascadeExpansion,
    RExpansion,
    SatProfile,
    c_sequence,
    cascade,
    colex_segment,
    nu_colex,
    r_expansion,
    shadow_size_colex,
    t_expansion_shift,
)
from .errors import (
    AntisatError,
    ArithmeticOverflowError,
    CapacityError,
    ConstructionError,
    InfeasibleCoverError,
    ParseError,
    PreconditionError,
    UniverseError,
)
from .lattice import ElementSet, Family, colex_compare, layer, mirror, shadow
from .matching import (
    BipartiteGraph,
    LayeredCoverInstance,
    Matching,
    hall_deficiency,
    max_matching,
    min_path_cover,
    nu,
)
from .saturation import (
    SaturationReport,
    construct_saturated,
    greedy_saturate,
    is_k_antichain_saturated,
    oracle_min_sat,
    sat_value,
)

__version__ = "0.1.0"
