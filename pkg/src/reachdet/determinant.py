"""The Ω_i determinant family and the partial-product reachability test.

Column ``c`` (1-based) of every layout here stands for the unknown
``F_{c-1}``; row ``k`` is the equation that defines ``F_k``:

    row k <= L :  α_k F_0 - F_k = 0
    row k >  L :  f_{k,0} F_0 + Σ_m f_{k,m} F_{k-m} - F_k = 0

``build_augmented`` appends the row ``F_i - r F_0 = 0``; ``build_omega``
is that matrix with its last row and column deleted, which leaves a
lower-Hessenberg matrix with ``-1`` on the superdiagonal whose
determinant equals ``E_i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact import (
    ExactMatrix,
    RationalLike,
    bit_size,
    block_diag,
    det_elimination,
    det_laplace,
    to_rational,
)
from .recurrence import RecurrenceSpec, eval_terms

DEFAULT_WINDOW = 8


def _equation_rows(spec: RecurrenceSpec, i: int, width: int) -> list[list[Fraction]]:
    L = spec.order
    rows = []
    for k in range(1, i + 1):
        row = [Fraction(0)] * width
        if k <= L:
            row[0] = spec.initial[k - 1]
        else:
            row[0] = spec.f(k, 0)
            for m in range(1, L + 1):
                row[k - m] = spec.f(k, m)  # column of F_{k-m}, 0-based
        if k < width:
            row[k] = Fraction(-1)
        rows.append(row)
    return rows


def build_omega(spec: RecurrenceSpec, i: int) -> ExactMatrix:
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    return ExactMatrix.from_rows(_equation_rows(spec, i, i))


def build_augmented(spec: RecurrenceSpec, i: int, r: RationalLike = 0) -> ExactMatrix:
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    r = to_rational(r)
    rows = _equation_rows(spec, i, i + 1)
    rows.append([-r] + [Fraction(0)] * (i - 1) + [Fraction(1)])
    return ExactMatrix.from_rows(rows)


def omega_values(spec: RecurrenceSpec, N: int) -> list[Fraction]:
    """Ω_1..Ω_N by cofactor expansion down the last column (no matrix built)."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    L = spec.order
    om: list[Fraction] = []
    for k in range(1, N + 1):
        if k <= L:
            om.append(spec.initial[k - 1])
            continue
        # Ω_k = f_{k,1} Ω_{k-1} + γ_2, γ_m = f_{k,m} Ω_{k-m} + γ_{m+1}, γ_L = f_{k,L} Ω_{k-L} + f_{k,0}
        gamma = spec.f(k, 0)
        for m in range(L, 0, -1):
            gamma = spec.f(k, m) * om[k - m - 1] + gamma
        om.append(gamma)
    return om


def omega_value(spec: RecurrenceSpec, i: int) -> Fraction:
    return omega_values(spec, i)[-1]


@dataclass
class Theorem1Report:
    N: int
    r: Fraction
    checked: int = 0
    first_failure: Optional[int] = None
    failure: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.first_failure is None


def verify_theorem1(
    spec: RecurrenceSpec, N: int, r: Optional[RationalLike] = None, seed: int = 0
) -> Theorem1Report:
    """Check det(Ω-matrix) = recurrence value = term, and the shifted determinant.

    ``r`` defaults to a small rational drawn from ``seed``.  Mismatches are
    reported, not raised.
    """
    if r is None:
        rng = random.Random(seed)
        r = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    r = to_rational(r)
    terms = eval_terms(spec, N).terms
    om = omega_values(spec, N)
    report = Theorem1Report(N=N, r=r)
    for i in range(1, N + 1):
        det_om = det_elimination(build_omega(spec, i))
        det_aug = det_elimination(build_augmented(spec, i, r))
        if not (det_om == om[i - 1] == terms[i - 1] and det_aug == om[i - 1] - r):
            report.first_failure = i
            report.failure = {
                "det_omega": det_om,
                "omega_value": om[i - 1],
                "term": terms[i - 1],
                "det_augmented": det_aug,
            }
            return report
        report.checked = i
    return report


@dataclass
class CaveatReport:
    N: int
    window: int
    values: list = field(default_factory=list)
    caveat_flag: bool = False
    integer_exempt: bool = False


def _caveat(values: list[Fraction], integer_exempt: bool) -> bool:
    if integer_exempt or not values:
        return False
    return all(0 < abs(v) < 1 for v in values)


def convergence_monitor(
    spec: RecurrenceSpec, r: RationalLike, N: int, window: int = DEFAULT_WINDOW
) -> CaveatReport:
    """Flag a trailing window where every ``|Ω_k - r|`` lies strictly inside (0, 1).

    All-integer data with an integer target can never trigger the flag;
    that case is reported as ``integer_exempt``.
    """
    r = to_rational(r)
    if not 1 <= window <= N:
        raise ValueError(f"window must lie in 1..N, got {window} with N={N}")
    om = omega_values(spec, N)
    vals = [v - r for v in om[N - window:]]
    exempt = spec.is_integral() and r.denominator == 1
    return CaveatReport(N, window, vals, _caveat(vals, exempt), exempt)


@dataclass
class ProductReport:
    N: int
    r: Fraction
    value: Fraction
    first_zero_index: Optional[int]
    caveat_flag: bool
    caveat_window: list
    integer_exempt: bool

    @property
    def bit_size(self) -> int:
        return bit_size(self.value)


def partial_product(
    spec: RecurrenceSpec, r: RationalLike, N: int, window: Optional[int] = None
) -> ProductReport:
    """Exact ``Π_{k<=N} (Ω_k - r)`` with zero index and convergence caveat."""
    r = to_rational(r)
    window = min(N, DEFAULT_WINDOW) if window is None else window
    if not 1 <= window <= N:
        raise ValueError(f"window must lie in 1..N, got {window} with N={N}")
    om = omega_values(spec, N)
    value = Fraction(1)
    first_zero = None
    for k, w in enumerate(om, start=1):
        if first_zero is not None:
            break
        factor = w - r
        if factor == 0:
            first_zero = k
            value = Fraction(0)
        else:
            value *= factor
    tail = [w - r for w in om[N - window:]]
    exempt = spec.is_integral() and r.denominator == 1
    return ProductReport(N, r, value, first_zero, _caveat(tail, exempt), tail, exempt)


def build_mu(spec: RecurrenceSpec, r: RationalLike, N: int) -> ExactMatrix:
    """Block-diagonal matrix of the shifted layouts for ``k = 1..N``."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return block_diag([build_augmented(spec, k, r) for k in range(1, N + 1)])


def laplace_agrees(spec: RecurrenceSpec, i: int, r: RationalLike = 0) -> bool:
    """Cofactor-expansion cross-check on both layouts; ``i <= 7``."""
    a = build_omega(spec, i)
    b = build_augmented(spec, i, r)
    return det_laplace(a) == det_elimination(a) and det_laplace(b) == det_elimination(b)
