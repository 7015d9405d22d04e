"""Critical-line integral toolkit for the Riemann zeta function.

Library layers: scalar special functions, a vectorised zeta engine with a
zero table and line-sample cache, an adaptive half-line quadrature engine,
a sieve-backed prime side, products over synthetic off-line zero sets, and
the verification suites tying all of them to closed forms.
"""

from .blaschke import (SyntheticZeroSet, blaschke_B, c_product,
                       c_log_deriv_pair_closed, f12_sum, f22_sum, f_rho_pair,
                       n3_and_nb, omega_synthetic, theorem34_zero_sum)
from .checks import CHECK_NAMES, CheckContext, run_checks
from .errors import DomainError, QuadratureError, SingularOrdinate
from .lineint import (IntegralResult, atan_kernel_identity, decomposition_check,
                      f11, f21, gamma_kernel_identity, j1_j2, n1, n2,
                      omega_zeta, theorem34_check, xi_poisson, zeta_B_eval,
                      zeta_C_eval)
from .primes import (MangoldtTable, build_mangoldt, f_star, mellin_checks,
                     pi_star, pi_star_r, psi, psi_r)
from .quadrature import QuadratureSpec, integrate_halfline
from .report import CheckRecord, VerificationReport
from .special import (ei, ei0, euler_gamma, kernel_K, li, log_gamma, phi_alpha,
                      phi_big, phi_tilde, theta_asymptotic, theta_big,
                      theta_exact)
from .zeros import ZeroTable, count_N, expected_count, scan_zeros, tail_bounds
from .zeta import (CriticalLineCache, build_line_cache, hardy_Z,
                   reconstruct_zeta_on_line, xi, zeta, zeta_deriv)

__version__ = "0.1.0"
