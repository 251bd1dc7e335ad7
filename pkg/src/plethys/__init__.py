"""Exact engine for symmetric functions, wreath-product symmetric
functions, and brute-force verification of necklace and stable-graph
generating series."""

from .symfunc import (
    SymFunc,
    adams,
    d_operator,
    euler_phi,
    geom,
    h_gen,
    h_lambda,
    log_inv,
    partial_p,
    partitions_of,
    plethysm,
    z_of,
)
from .wreath import (
    WreathSymFunc,
    deg1_iso,
    dih_char_closed,
    dih_series_closed,
    plethysm_deg1,
    specialize_s2,
)
from .groups import (
    Perm,
    SignedPerm,
    closure,
    cycle_map_sym,
    cycle_type,
    cyclic_subgroup,
    dihedral_in_sym,
    hyperoct_dihedral,
    ind_trivial_char,
    ind_trivial_char_wreath,
    wreath_cycle_map,
)
from .series import (
    ModuleSpec,
    ModuleSpecError,
    a_series,
    ass_series,
    b1_series,
    cyclic_necklace_series,
    necklace_series,
    necklace_series_direct,
    tree_fixed_point,
)
from .graphoracle import (
    Budget,
    BudgetExceededError,
    DecoratedGraph,
    betti1,
    canonical_form,
    char_of_census,
    cyclic_necklace_char_oracle,
    enumerate_decorated,
    hom_char,
    is_necklace,
    mv_char,
    necklace_char_oracle,
    tree_char_oracle,
)

__version__ = "0.1.0"
