"""Exact bounded reachability for non-homogeneous linear recurrences.

Three independent routes decide whether some ``E_k == r`` with ``k <= N``:
direct iteration, the Ω determinant family and its partial product, and
Cramer/witness certificates on the encoded linear system.
"""

__version__ = "0.1.0"

from .exact import (
    ExactMatrix,
    IndexPolynomial,
    SingularMatrixError,
    det_bareiss,
    det_elimination,
    det_gauss,
    det_laplace,
    inverse_row,
    parse_rational,
    poly_eval,
    rank,
    solve,
)
from .recurrence import RecurrenceSpec, TermSequence, eval_scaled, eval_terms, oracle_reach
from .determinant import (
    build_augmented,
    build_mu,
    build_omega,
    convergence_monitor,
    omega_value,
    partial_product,
    verify_theorem1,
)
from .certificate import (
    build_system,
    certify,
    collapse,
    cramer_indicator,
    eval_Q,
    eval_sum,
    lemma22_rank,
    witness,
)
