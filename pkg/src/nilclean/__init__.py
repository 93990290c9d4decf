"""Exact-arithmetic engine for clean and nil-clean structure in finite rings."""

from .classify import (
    center,
    complete_orthogonal_central_sets,
    idempotents,
    is_boolean_ideal,
    is_boolean_ring,
    is_central,
    is_idempotent,
    is_nilpotent,
    is_unit,
    jacobson_radical,
    nilpotency_index,
    nilpotents,
    units,
)
from .construct import (
    Caps,
    Corner,
    Idealization,
    MoritaZero,
    Product,
    Quotient,
    RingSpec,
    Tri,
    Zmod,
    build,
    make_corner,
    make_idealization,
    make_morita_zero,
    make_product,
    make_quotient,
    make_table_ring,
    make_upper_triangular,
    make_zmod,
    parse_ring_spec,
)
from .decompose import (
    Decomposition,
    clean_decompositions,
    decomposition_within_ideal,
    is_clean_ideal,
    is_nil_clean_ideal,
    is_nil_clean_ring,
    is_strongly_clean_ideal,
    is_strongly_nil_clean_ideal,
    is_uniquely_nil_clean_ideal,
    is_uniquely_strongly_clean_ideal,
    is_uniquely_strongly_nil_clean_ideal,
    lift_idempotent,
    lift_idempotent_mod_nil,
    lift_idempotent_path,
    nil_clean_decompositions,
    strongly_filter,
)
from .errors import (
    AxiomFailure,
    BadParameter,
    CapExceeded,
    ElementRingMismatch,
    ExhaustiveTooLarge,
    InternalInvariantViolation,
    NilCleanError,
    NotAlmostIdempotent,
    NotAnIdeal,
    NotCentralIdempotent,
    OrderCapExceeded,
    ParseError,
    PreconditionViolated,
    UnknownCheck,
)
from .ideals import (
    Ideal,
    all_ideals,
    corner_ideal,
    ideal_generated,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    image_ideal,
    is_nil_ideal,
    unit_ideal,
    zero_ideal,
)
from .ring import (
    AxiomReport,
    Elem,
    FiniteRing,
    is_commutative,
    verify_axioms,
)
from .theorems import (
    CHECKS,
    DEFAULT_FAMILY,
    SuiteConfig,
    TheoremReport,
    explore_noncommutative,
    run_all,
    run_check,
)

__version__ = "0.1.0"
