"""Importance indices for k-ary (multichoice) games."""

from karyx.errors import PreconditionError, SchemaError
from karyx.game import (
    GaiModel,
    GaiTerm,
    KAryGame,
    MoebiusTable,
    dirac,
    from_gai,
    moebius,
    new_game,
    pad_to_common_k,
    unanimity,
    zero_game,
    zeta,
)
from karyx.indices import (
    WeightScheme,
    grabisch_lange,
    hsiao_raghavan,
    importance,
    importance_by_cells,
    peters_zank,
    shapley_classical,
    sum_identity_rhs,
)
from karyx.lattice import LatticeShape

__version__ = "0.1.0"
