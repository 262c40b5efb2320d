"""Exact degenerate multidimensional Hermite-based Appell polynomials."""

from .appell import (
    BERNOULLI,
    EULER,
    GENOCCHI,
    IDENTITY,
    AppellFamily,
    OperatorUnsupportedError,
    appell_numbers,
    classical_appell_poly,
    custom,
    euler_numbers,
    family_series,
    get_family,
    log_derivative,
)
from .dmhap import (
    DmhapTable,
    MultiplicativeOperator,
    classical_limit,
    classical_oracle,
    deriv_op_apply,
    generate,
    hermite_kernel,
    mult_op_apply,
    ode_residual,
    operational_rule,
    pde_residual,
)
from .identities import (
    IdentityReport,
    check_convolution_3_2,
    check_convolution_3_4,
    check_scaling,
    degen_bernoulli,
    gf_two_route,
    power_sum_sigma,
)
from .poly import MultiPoly, PolyError, parse_poly
from .series import SeriesError, TruncationError, TruncSeries

__version__ = "0.1.0"
