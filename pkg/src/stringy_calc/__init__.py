"""Exact stringy Euler numbers and the integrality obstruction for M_{2n}."""
from .errors import *  # noqa: F401,F403
from .ogrady import (
    ModelParams,
    ObstructionReport,
    StratumEulerTable,
    discrepancies,
    identity_check,
    isotropic_grassmannian_euler,
    known_part,
    model_stringy_euler,
    obstruction_list,
    obstruction_test,
    stratum_euler_table,
    sym2_offdiag_euler,
    to_stratification,
)
from .poly import Poly, RationalFn
from .series import (
    IntSeries,
    expand_product_family,
    hilbert_euler_table,
    series_inverse,
    series_mul,
    series_pow,
)
from .stringy import (
    Divisor,
    Stratification,
    Stratum,
    ValidationReport,
    limit_at_one,
    stratification_from_json,
    stratification_to_json,
    stringy_E_diagonal,
    stringy_euler,
    validate,
)

__version__ = "0.1.0"
