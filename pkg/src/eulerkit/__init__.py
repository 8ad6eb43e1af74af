"""Exact Euler characteristics for finite categories, bicategories, and
truncated simplicial structures, with all arithmetic over the rationals."""

from .errors import (
    BudgetExceededError,
    EulerkitError,
    FormatError,
    HomChiUndefinedError,
    NotNerveShapedError,
    ValidationError,
)
from .fincat import (
    DEFAULT_BUDGET,
    EquivalenceWitness,
    FinCat,
    Functor,
    IsoPartition,
    Morphism,
    categories_isomorphic,
    category_from_json,
    category_to_json,
    category_violations,
    coproduct,
    equivalence_witness,
    equivalent,
    functor_violations,
    hom_count,
    is_initial,
    is_terminal,
    iso_classes,
    objects_isomorphic,
    opposite,
    product,
    search_budget,
    skeleton,
    validate_category,
    with_identity_composites,
)
from .catalog import (
    arrow,
    base_suite,
    chain,
    codiscrete,
    cyclic_group,
    diamond,
    discrete,
    empty_category,
    fence,
    full_transformation_monoid,
    idempotent_monoid,
    iso_pair,
    klein_four,
    monoid_category,
    no_weighting_bicat,
    parallel_pair,
    poset_category,
    suspension_z2,
    terminal_category,
    thick_arrow,
    upper_triangular_bicat,
    vee,
    walking_retract,
    wedge,
)
from .magnitude import (
    AdjacencyMatrix,
    EulerResult,
    Weighting,
    adjacency,
    constant_weighting,
    coweighting,
    coweighting_solution,
    euler_char,
    euler_of_matrix,
    transport_weighting,
    weighting,
    weighting_solution,
)
from .higher import (
    EulerDatum,
    FinBicat,
    InternalEquivPartition,
    bicat_adjacency,
    bicat_euler_char,
    bicat_from_json,
    bicat_from_parts,
    bicat_to_datum,
    bicat_to_json,
    bicat_violations,
    cat_as_bicat,
    chi_n,
    datum_from_json,
    datum_of_category,
    datum_to_json,
    discrete_category,
    internal_equiv_classes,
    internally_equivalent,
)
from .qlinalg import (
    LinearSolution,
    QMatrix,
    Rational,
    format_rational,
    kronecker,
    q_canonical,
    solve_affine,
    transpose,
)
from .simplicial import (
    DEFAULT_DIM,
    FillerReport,
    HornInstance,
    HornStats,
    TruncatedSSet,
    category_from_nerve,
    chi_sset,
    classify_sset,
    enumerate_inner_horns,
    filler_report,
    fillers,
    horn,
    nerve,
    sset_coproduct,
    sset_from_json,
    sset_product,
    sset_to_json,
    sset_violations,
    standard_simplex,
    validate_sset,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
