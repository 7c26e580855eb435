"""Exact computation of the Catlin multitype for sum-of-squares hypersurfaces.

The hypersurface 2 Re(w) + sum |f_j(z)|^2 = 0 is described by the ideal of its
holomorphic generators f_j.  ``run`` computes the multitype at the origin on
that ideal; ``run_mixed_kolar`` recomputes it through the full real-valued
expansion as an independent oracle.  All arithmetic is exact over the Gaussian
rationals.
"""

from .errors import (
    ClassificationError,
    ConstantTermError,
    DegenerateIdealError,
    DimensionError,
    InfiniteTypeError,
    InputSyntaxError,
    InvalidSubstitutionError,
    MultitypeError,
    NonTerminationError,
    WeightError,
)
from .gaussian import GaussianRational, Rational
from .kolar import (
    KolarState,
    MultitypeReport,
    RunConfig,
    StepTrace,
    advance_weight,
    bloom_graham,
    leading_ideal,
    run,
    theta_and_wmax,
    w_value_ideal,
)
from .mixedpoly import (
    LeviMatrix,
    MixedPolynomial,
    classify_monomial,
    determinant,
    expand_sos,
    leading_mixed,
    levi,
    levi_from_jacobian,
    paired_row_col_op,
    single_paired_op,
    w_value_mixed,
)
from .oracle import MixedStepTrace, run_mixed_kolar
from .parsing import InputSpec, parse_expression, parse_input
from .polynomial import (
    MultiIndex,
    Polynomial,
    Substitution,
    solve_linear,
    vanishing_order,
)
from .reporting import emit_report, report_to_json, report_to_text
from .rowreduce import (
    DependenceWitness,
    JacobianMatrix,
    eliminate_all,
    enumerate_witnesses,
    find_dependent_row,
    find_module_dependent_row,
    homogeneous_monomials,
    jacobian,
    restricted_levi_determinant,
    witness_to_substitution,
)
from .weights import (
    Multitype,
    Weight,
    check_homogeneous_substitution,
    is_homogeneous,
    lex_compare,
    multitype_of,
    pair_weighted_length,
    validate_weight,
    weighted_length,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
