"""latticeqmc: rank-1 lattice quadrature rules, tent-transformed and
symmetrized variants, worst-case errors in weighted kernel spaces, and
component-by-component construction of generating vectors."""

from .cbc import CbcCriterion, CbcResult, cbc_fast, cbc_plain
from .errors import DomainError, GuardError
from .experiments import (
    ConvergenceRow,
    ExperimentConfig,
    ExperimentResult,
    exact_integral,
    experiment_config,
    fitted_slopes,
    integrand_eval,
    run_experiment,
    slope_fit,
)
from .fourier import (
    appendix_inner_sum,
    c_phi,
    c_sym,
    cosine_coeff_quadrature,
    run_appendix_checks,
    sin_tent_coeff,
    tent_kernel_partial_sum,
)
from .kernels import KernelSpec, kernel, kernel_1d, kernel_mean_identity_check, series_tail_bound
from .lattice import (
    LatticeRule,
    PointSet,
    character_sum,
    distinct_count,
    dual_projected,
    fibonacci_rule,
    is_dual,
    rank1_points,
    symmetrize,
    tent,
    tent_transform,
)
from .numtheory import fibonacci, is_prime, nearest_prime, primitive_root
from .special_functions import (
    bernoulli_fourier_partial_sum,
    bernoulli_periodic,
    bernoulli_poly,
    bernoulli_scaled,
    riemann_zeta,
)
from .weights import WeightScheme
from .worst_case_error import (
    C_PRIME,
    ErrorReport,
    corollary_bound,
    sym_modified_weights,
    tent_modified_weights,
    wce_sq_korobov_lattice,
    wce_sq_quadratic_form,
    wce_sym_bound,
    wce_sym_exact,
    wce_sym_middle_term,
    wce_tent_bound,
    wce_tent_middle_term,
)

__version__ = "0.1.0"
