"""Exact counting of real and complex solutions of polynomial systems.

Everything is computed over the rationals with no rounding anywhere: Groebner
bases give a finite quotient algebra, the signature and rank of its (possibly
weighted) trace form count the distinct real and complex solutions, and an
independent Sturm-chain oracle re-derives the same numbers for verification.
"""

from .rational import Rational, format_rational, parse_rational, rat, sign
from .poly import (
    MonomialOrder,
    Polynomial,
    VarContext,
    degrevlex_order,
    format_polynomial,
    general_position_transform,
    inverse_general_position_transform,
    lex_order,
    variables,
)
from .univariate import univariate_squarefree_part
from .groebner import (
    GroebnerBasis,
    NotZeroDimensionalError,
    QuotientAlgebra,
    buchberger,
    is_zero_dimensional,
    mult_matrix,
    normal_form,
    quotient_algebra,
    reduces_to_zero,
    violating_variables,
)
from .quadform import (
    FormType,
    InternalConsistencyError,
    SymMatrix,
    char_poly,
    checked_type,
    congruence_diagonalize,
    definiteness,
    descartes_counts,
    hurwitz_type,
    type_of,
    type_via_descartes,
)
from .traceform import (
    TraceVector,
    generalized_trace_form,
    power_sums,
    trace_form,
    trace_form_from_power_sums,
    trace_of,
)
from .count import (
    CountReport,
    HCounts,
    HermiteCount,
    NonRadicalError,
    ShapeBasis,
    ShapeError,
    ShapeFormError,
    SystemCount,
    count_real_points,
    count_with_general_position,
    hermite_count,
    prs_sign_counts,
    shape_basis,
    shape_with_shears,
)
from .oracle import (
    Isolation,
    OracleCounts,
    OracleInapplicableError,
    cauchy_root_bound,
    count_all_real,
    isolate_real_roots,
    oracle_count_system,
    sturm_count,
    sturm_sequence,
)
from .parser import ParseError, ParsedSystem, parse_matrix, parse_polynomial, parse_system, parse_univariate

__version__ = "0.1.0"
