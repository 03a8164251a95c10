"""Exact GF(2) Groebner bases and cohomology computations for G_{3,n}."""

__version__ = "0.1.0"

from .gf2poly import (  # noqa: E402
    Polynomial,
    add,
    binom_mod2,
    format_poly,
    grlex_cmp,
    mul,
    mul_truncated,
    multinom_mod2,
    parse,
    pow_truncated,
)
from .groebner import (  # noqa: E402
    DivisionResult,
    GroebnerBasis,
    auto_reduce,
    buchberger,
    divide,
    ideal_membership,
    is_groebner,
    s_polynomial,
)
from .grassmann import (  # noqa: E402
    GradedBasis,
    GrassmannRing,
    additive_basis,
    closed_basis,
    cohomology_nf,
    dual_class,
    g_closed,
    height,
    overflow_decomposition,
    poincare_check,
    recurrence_check,
)
from .steenrod import sq, sq1, sq2, sq_power_rule_check, sq_total  # noqa: E402
from .normal_bundle import (  # noqa: E402
    NormalClassTable,
    NotApplicable,
    immersion_lower_bound,
    normal_total_class,
    o2_consistency,
    top_nonzero,
)
from .obstruction import (  # noqa: E402
    Gf2Matrix,
    OperatorExpr,
    image,
    kernel,
    operator_matrix,
    subspace_contained,
    verify_lemma,
)
