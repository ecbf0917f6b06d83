"""Non-homogeneous linear recurrences with polynomial coefficients.

A recurrence of order ``L`` is given by initial terms ``E_1..E_L`` and
coefficient polynomials ``f_0..f_L`` in the 1-based term index ``i``::

    E_i = f_0(i) + f_1(i) E_{i-1} + ... + f_L(i) E_{i-L}     (i > L)
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact import IndexPolynomial, RationalLike, to_rational


@dataclass(frozen=True)
class RecurrenceSpec:
    initial: tuple
    coeffs: tuple
    name: Optional[str] = None

    def __post_init__(self):
        initial = tuple(to_rational(a) for a in self.initial)
        coeffs = tuple(
            c if isinstance(c, IndexPolynomial) else IndexPolynomial(tuple(c))
            for c in self.coeffs
        )
        if len(initial) < 1:
            raise ValueError("recurrence order must be at least 1")
        if len(coeffs) != len(initial) + 1:
            raise ValueError(
                f"order {len(initial)} needs {len(initial) + 1} coefficient polynomials, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_constants(
        cls,
        initial: Sequence[RationalLike],
        coeffs: Sequence[RationalLike],
        name: Optional[str] = None,
    ) -> RecurrenceSpec:
        """Constant-coefficient shortcut: ``coeffs[m]`` is the value of ``f_m``."""
        return cls(tuple(initial), tuple(IndexPolynomial.constant(c) for c in coeffs), name)

    @property
    def order(self) -> int:
        return len(self.initial)

    def f(self, i: int, m: int) -> Fraction:
        """Coefficient ``f_{i,m}``."""
        return self.coeffs[m](i)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.initial) and all(
            c.is_integral() for c in self.coeffs
        )


@dataclass(frozen=True)
class TermSequence:
    terms: tuple

    @property
    def N(self) -> int:
        return len(self.terms)

    def term(self, k: int) -> Fraction:
        """``E_k`` with 1-based ``k``."""
        if not 1 <= k <= len(self.terms):
            raise IndexError(k)
        return self.terms[k - 1]


def _check_depth(N: int) -> None:
    if N < 1:
        raise ValueError(f"depth must be >= 1, got {N}")


def eval_scaled(spec: RecurrenceSpec, F0: RationalLike, N: int) -> TermSequence:
    """Terms of the scaled recurrence ``F_k = α_k F0`` / ``f_{k,0} F0 + Σ f_{k,m} F_{k-m}``."""
    _check_depth(N)
    F0 = to_rational(F0)
    L = spec.order
    out: list[Fraction] = []
    for k in range(1, N + 1):
        if k <= L:
            out.append(spec.initial[k - 1] * F0)
            continue
        acc = spec.f(k, 0) * F0
        for m in range(1, L + 1):
            prev = out[k - m - 1]
            if prev:
                acc += spec.f(k, m) * prev
        out.append(acc)
    return TermSequence(tuple(out))


def eval_terms(spec: RecurrenceSpec, N: int) -> TermSequence:
    _check_depth(N)
    L = spec.order
    out: list[Fraction] = []
    for k in range(1, N + 1):
        if k <= L:
            out.append(spec.initial[k - 1])
        else:
            acc = spec.f(k, 0)
            for m in range(1, L + 1):
                acc += spec.f(k, m) * out[k - m - 1]
            out.append(acc)
    return TermSequence(tuple(out))


def oracle_reach(spec: RecurrenceSpec, r: RationalLike, N: int) -> Optional[int]:
    """Smallest ``k <= N`` with ``E_k == r`` by direct iteration, else None."""
    r = to_rational(r)
    for k, e in enumerate(eval_terms(spec, N).terms, start=1):
        if e == r:
            return k
    return None


def oracle_hits(spec: RecurrenceSpec, r: RationalLike, N: int) -> list[int]:
    r = to_rational(r)
    return [k for k, e in enumerate(eval_terms(spec, N).terms, start=1) if e == r]


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_spec(
    rng: random.Random,
    max_order: int = 4,
    max_degree: int = 2,
    bound: int = 9,
    integral: bool = False,
) -> RecurrenceSpec:
    """Random recurrence with ``1 <= L <= max_order`` and small rational data.

    Numerators are drawn from ``[-bound, bound]`` and denominators from
    ``[1, bound]``; with ``integral=True`` every denominator is 1.
    """

    def q() -> Fraction:
        if integral:
            return Fraction(rng.randint(-bound, bound))
        return random_rational(rng, bound)

    L = rng.randint(1, max_order)
    initial = tuple(q() for _ in range(L))
    coeffs = tuple(
        IndexPolynomial(tuple(q() for _ in range(rng.randint(0, max_degree) + 1)))
        for _ in range(L + 1)
    )
    return RecurrenceSpec(initial, coeffs)


# Fixtures used throughout tests, demos and the CLI golden files.

FIBONACCI = RecurrenceSpec.from_constants([1, 1], [0, 1, 1], name="fibonacci")
PERIOD6 = RecurrenceSpec.from_constants([1, 1], [0, 1, -1], name="period6")
MERSENNE = RecurrenceSpec.from_constants([1], [1, 2], name="mersenne")
FACTORIAL = RecurrenceSpec((1,), (IndexPolynomial(()), IndexPolynomial((0, 1))), name="factorial")
HALF = RecurrenceSpec.from_constants([Fraction(1, 2)], [0, 1], name="half")
