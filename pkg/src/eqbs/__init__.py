"""Equivariant Boij-Soderberg theory for square matrices.

Cone membership with certificates for GL-equivariant Betti tables, plus the
Borel-Weil-Bott bookkeeping behind the complexes that realize each extremal ray.
"""

from .betti_tables import (
    CohomologyTable,
    MultBettiTable,
    PureTable,
    RankBettiTable,
    antichain_check,
    is_pure,
    pairing,
    pure_table,
    rank_defect,
    to_mult,
    to_rank,
    upward_check,
)
from .bwb import Cohomology, Vanishes, cohomology, solve_beta
from .cone import (
    AntichainViolation,
    Member,
    NegativeEntry,
    NotMember,
    RankDefect,
    build_graph,
    enumerate_rays,
    hall_violator,
    max_matching,
    membership,
)
from .efw import (
    ConditionFailed,
    Construction,
    EFWData,
    Realization,
    box_setup,
    chain_realization,
    efw_shapes,
    small_resolution,
    strip_analysis,
    verify_linear_case,
)
from .schur import (
    LRQuery,
    MapType,
    cauchy_level,
    hom_dimension,
    lr_coefficient,
    map_type,
    pieri,
    ssyt_count,
    weyl_dim,
)
from .young_lattice import (
    BorderSquare,
    IdealSpec,
    Sequence,
    contains,
    det_twist,
    enumerate_box,
    ideal_restrict,
    make_sequence,
    outer_border_squares,
    saturated_chain,
)

__version__ = "0.1.0"
