"""Linear-system certificates for bounded reachability.

The first ``N`` terms are encoded as a unit lower-banded system
``A y = b`` (``det A = 1``) whose right-hand side is shifted by the
target, so the solution is ``β_k = E_k - r``.  Around it live:

* the Cramer indicator (``A`` with column ``t`` replaced by ``b``),
* the witness ``w`` = row ``t`` of ``A^-1``,
* the coefficient collapse of ``Σ_i R_i S_i`` where
  ``R_i = Σ_j D[i][j] z_j`` and ``S_i = Σ_k A[i][k] / z_k - b_i``,
* the rank test on ``{a_k : k != t} ∪ {b}``,
* the rational expressions ``Q_k(x)`` with ``1/x_i`` replaced by
  ``(r x_i + 1) / x_i``.

The ``P_i``/``x`` pair of the polynomial form is the same object as the
``R_i``/``z`` pair here under renaming, so only ``D`` and ``z`` are stored.
All index arguments (``t``, ``N``) are 1-based paper indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .exact import (
    ExactMatrix,
    RationalLike,
    Vector,
    det_elimination,
    dot,
    inverse_row,
    rank,
    to_rational,
)
from .recurrence import RecurrenceSpec, oracle_hits


@dataclass(frozen=True)
class LinearSystem:
    N: int
    A: ExactMatrix
    b: Vector
    r: Fraction
    detA: Fraction

    def column(self, k: int) -> Vector:
        """Column ``a_k`` (1-based) of the system matrix."""
        return self.A.column(k - 1)


def build_system(spec: RecurrenceSpec, N: int, r: RationalLike = 0) -> LinearSystem:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    r = to_rational(r)
    L = spec.order
    rows = []
    base_b = []
    for k in range(1, N + 1):
        row = [Fraction(0)] * N
        row[k - 1] = Fraction(1)
        if k <= L:
            base_b.append(spec.initial[k - 1])
        else:
            for m in range(1, L + 1):
                row[k - m - 1] = -spec.f(k, m)
            base_b.append(spec.f(k, 0))
        rows.append(row)
    A = ExactMatrix.from_rows(rows)
    # y = β + r·1  =>  A β = b - r·A·1
    b = tuple(bk - r * sum(row) for bk, row in zip(base_b, A.rows))
    # unit lower-triangular by construction
    return LinearSystem(N, A, b, r, Fraction(1))


def _check_t(sys: LinearSystem, t: int) -> None:
    if not 1 <= t <= sys.N:
        raise ValueError(f"t must lie in 1..{sys.N}, got {t}")


def cramer_indicator(sys: LinearSystem, t: int) -> Fraction:
    """det of ``A`` with column ``t`` replaced by ``b``; equals ``E_t - r``."""
    _check_t(sys, t)
    return det_elimination(sys.A.with_column(t - 1, sys.b))


def witness(sys: LinearSystem, t: int) -> Vector:
    _check_t(sys, t)
    return inverse_row(sys.A, t)


def lemma21_assignment(sys: LinearSystem, t: int) -> ExactMatrix:
    """``D`` whose column ``t`` is the witness and every other column is zero."""
    w = witness(sys, t)
    zero = Fraction(0)
    return ExactMatrix.from_rows(
        [[w[i] if j == t - 1 else zero for j in range(sys.N)] for i in range(sys.N)]
    )


@dataclass(frozen=True)
class CollapsedCoefficients:
    """``Σ R_i S_i = const + Σ_{j!=k} cross[j][k] z_j/z_k + Σ_j linear[j] z_j``.

    ``cross`` has ``None`` on its diagonal.
    """

    const_term: Fraction
    cross: tuple
    linear: Vector

    def is_unit(self) -> bool:
        return (
            self.const_term == 1
            and all(x == 0 for row in self.cross for x in row if x is not None)
            and all(x == 0 for x in self.linear)
        )

    def evaluate(self, z: Sequence[RationalLike]) -> Fraction:
        z = [to_rational(v) for v in z]
        acc = self.const_term
        for j, row in enumerate(self.cross):
            for k, c in enumerate(row):
                if c:
                    acc += c * z[j] / z[k]
        for j, c in enumerate(self.linear):
            if c:
                acc += c * z[j]
        return acc


def _check_D(sys: LinearSystem, D: ExactMatrix) -> None:
    if D.shape != (sys.N, sys.N):
        raise ValueError(f"D must be {sys.N}x{sys.N}, got {D.nrows}x{D.ncols}")


def collapse(sys: LinearSystem, D: ExactMatrix) -> CollapsedCoefficients:
    _check_D(sys, D)
    n = sys.N
    Dt = D.transpose().rows  # Dt[j] = column j of D
    At = sys.A.transpose().rows  # At[k] = column a_k of A
    cross = tuple(
        tuple(None if j == k else dot(Dt[j], At[k]) for k in range(n)) for j in range(n)
    )
    linear = tuple(-dot(Dt[j], sys.b) for j in range(n))
    const = sum((dot(Dt[j], At[j]) for j in range(n)), Fraction(0))
    return CollapsedCoefficients(const, cross, linear)


def _nonzero_point(z: Sequence[RationalLike]) -> list[Fraction]:
    z = [to_rational(v) for v in z]
    if any(v == 0 for v in z):
        raise ValueError("evaluation point must have every coordinate nonzero")
    return z


def eval_sum(sys: LinearSystem, D: ExactMatrix, z: Sequence[RationalLike]) -> Fraction:
    """Evaluate ``Σ_i R_i(z) S_i(z)`` directly at a point with nonzero coordinates."""
    _check_D(sys, D)
    z = _nonzero_point(z)
    if len(z) != sys.N:
        raise ValueError("point has wrong dimension")
    inv = [1 / v for v in z]
    total = Fraction(0)
    for i in range(sys.N):
        R = dot(D.rows[i], z)
        S = dot(sys.A.rows[i], inv) - sys.b[i]
        total += R * S
    return total


def lemma22_rank(sys: LinearSystem, t: int) -> tuple[int, bool]:
    """Rank of ``{a_k : k != t} ∪ {b}`` and whether it forces column ``t`` of D to zero."""
    _check_t(sys, t)
    stacked = [sys.column(k) for k in range(1, sys.N + 1) if k != t]
    stacked.append(sys.b)
    rk = rank(ExactMatrix.from_rows(stacked))
    return rk, rk == sys.N


def eval_Q(
    spec: RecurrenceSpec, N: int, r: RationalLike, x: Sequence[RationalLike]
) -> Vector:
    """``Q_1..Q_N`` at ``x`` with ``1/x_i`` read as ``(r x_i + 1) / x_i``."""
    r = to_rational(r)
    x = _nonzero_point(x)
    if len(x) != N:
        raise ValueError(f"x must have length {N}")
    L = spec.order
    recip = [(r * v + 1) / v for v in x]
    out = []
    for k in range(1, N + 1):
        if k <= L:
            out.append(spec.initial[k - 1] - recip[k - 1])
            continue
        q = spec.f(k, 0) - recip[k - 1]
        for m in range(1, L + 1):
            q += spec.f(k, m) * recip[k - m - 1]
        out.append(q)
    return tuple(out)


@dataclass
class IndexCertificate:
    t: int
    cramer_value: Fraction
    reaches: bool
    witness: Optional[Vector]
    lemma22_rank: int
    forced_trivial: bool


@dataclass
class CertificateReport:
    N: int
    r: Fraction
    entries: list = field(default_factory=list)
    oracle_hits: list = field(default_factory=list)

    @property
    def sum_can_equal_one(self) -> bool:
        return any(e.reaches for e in self.entries)

    @property
    def reach_indices(self) -> list[int]:
        return [e.t for e in self.entries if e.reaches]

    @property
    def first_index(self) -> Optional[int]:
        hits = self.reach_indices
        return hits[0] if hits else None

    @property
    def consistent(self) -> bool:
        """Cramer verdicts, rank verdicts and direct iteration all agree."""
        return self.reach_indices == self.oracle_hits and all(
            e.forced_trivial != e.reaches for e in self.entries
        )


def certify(spec: RecurrenceSpec, N: int, r: RationalLike = 0) -> CertificateReport:
    r = to_rational(r)
    sys = build_system(spec, N, r)
    report = CertificateReport(N, r, oracle_hits=oracle_hits(spec, r, N))
    for t in range(1, N + 1):
        value = cramer_indicator(sys, t)
        reaches = value == 0
        rk, forced = lemma22_rank(sys, t)
        report.entries.append(
            IndexCertificate(t, value, reaches, witness(sys, t) if reaches else None, rk, forced)
        )
    return report
