"""Exact counting of finite-field elements and monic irreducible polynomials
with prescribed traces / prescribed leading coefficients.

The package derives closed-form counting expressions from Artin-Schreier
curve point counts and cross-checks every derived formula against brute-force
enumeration.
"""

__version__ = "0.1.0"

from . import config
from .artin_schreier import (
    ASCurve,
    ASEquation,
    ASSystem,
    FrobeniusPoly,
    affine_count,
    affine_count_system,
    frobenius_charpoly,
    genus_as,
    is_supersingular,
    power_sum_eval,
    reduce_to_prime,
)
from .engine_main import (
    build_direct_system,
    build_indicator_poly,
    derive_formula_set,
    direct_count_F,
    verify_formula_set,
)
from .engine_smallchar import (
    F_smallchar_counts,
    V_count_char2,
    build_system_char2,
    count_kloosterman_zero_mod32,
    eval_paper_formula,
    kloosterman,
    kloosterman_congruence,
    paper_table,
    root_identity_check,
)
from .errors import (
    BudgetExceeded,
    DomainError,
    IrrcountError,
    NonIntegralCount,
    NonIntegralResult,
    NonIntegralSolution,
    ParseError,
    ValidationFailed,
    ValidityError,
)
from .ff_core import GF, FieldElement, Tower, find_irreducible, is_irreducible, tower, tower_for_q
from .formula import CountFormula, FormulaSet, parse, parse_set, serialize, serialize_set
from .moebius import I2_from_F2_l4, I_from_F, theta_d, trace_of_power_identities
from .oracle import (
    count_all_F_brute,
    count_F_brute,
    count_I_brute,
    enumerate_irreducibles,
    gauss_count,
)
from .trace_lab import (
    TraceSpec,
    binom_mod_p,
    binom_period,
    char_poly,
    lowered_trace_char2,
    lowered_trace_char3,
    newton_forward,
    newton_inverse,
    power_trace,
    trace_vector,
)
from .transforms import (
    IndexVector,
    forward_V0_from_N,
    forward_V1_from_N,
    solve_N_from_V0,
    solve_N_from_V1,
    solve_restricted_domain,
)
