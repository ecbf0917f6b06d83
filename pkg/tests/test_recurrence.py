from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reachdet.exact import IndexPolynomial
from reachdet.recurrence import (
    RecurrenceSpec,
    eval_scaled,
    eval_terms,
    oracle_hits,
    oracle_reach,
    random_spec,
)


def fib_oracle(n):
    out, a, b = [], 1, 1
    for _ in range(n):
        out.append(a)
        a, b = b, a + b
    return out


def test_fibonacci_terms(fib):
    assert eval_terms(fib, 6).terms == (1, 1, 2, 3, 5, 8)
    assert list(eval_terms(fib, 40).terms) == fib_oracle(40)


def test_period6_terms(period6):
    assert eval_terms(period6, 7).terms == (1, 1, 0, -1, -1, 0, 1)


def test_factorial_terms(factorial):
    assert eval_terms(factorial, 4).terms == (1, 2, 6, 24)


def test_mersenne_terms(mersenne):
    assert list(eval_terms(mersenne, 12).terms) == [2**k - 1 for k in range(1, 13)]


def test_term_accessor_is_one_based(fib):
    seq = eval_terms(fib, 6)
    assert seq.term(1) == 1 and seq.term(6) == 8
    with pytest.raises(IndexError):
        seq.term(0)


def test_depth_shorter_than_order():
    spec = RecurrenceSpec.from_constants([3, 4, 5], [1, 1, 1, 1])
    assert eval_terms(spec, 2).terms == (3, 4)


def test_order_zero_rejected():
    with pytest.raises(ValueError):
        RecurrenceSpec((), (IndexPolynomial((1,)),))


def test_coefficient_count_checked():
    with pytest.raises(ValueError):
        RecurrenceSpec((1,), (IndexPolynomial((1,)),))


def test_depth_zero_rejected(fib):
    with pytest.raises(ValueError):
        eval_terms(fib, 0)


def test_scaled_zero_is_all_zero(rng):
    for _ in range(10):
        assert not any(eval_scaled(random_spec(rng), 0, 10).terms)


def test_scaled_unit_and_triple(fib, rng):
    assert eval_scaled(fib, 3, 4).terms == (3, 3, 6, 9)
    for _ in range(10):
        spec = random_spec(rng)
        assert eval_scaled(spec, 1, 12) == eval_terms(spec, 12)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.fractions(max_denominator=50), st.integers(1, 15))
def test_scale_linearity(seed, c, N):
    import random

    spec = random_spec(random.Random(seed))
    base = eval_terms(spec, N).terms
    assert eval_scaled(spec, c, N).terms == tuple(c * e for e in base)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 12), st.integers(0, 8))
def test_prefix_stability(seed, N, extra):
    import random

    spec = random_spec(random.Random(seed))
    assert eval_terms(spec, N + extra).terms[:N] == eval_terms(spec, N).terms


def test_oracle_examples(period6, fib, mersenne):
    assert oracle_reach(period6, 0, 10) == 3
    assert oracle_reach(fib, 0, 50) is None
    assert oracle_reach(mersenne, 7, 10) == 3
    assert oracle_hits(period6, 0, 10) == [3, 6, 9]


def test_oracle_returns_earliest(rng):
    for _ in range(30):
        spec = random_spec(rng, integral=True, bound=2)
        terms = eval_terms(spec, 12).terms
        r = terms[rng.randrange(12)]
        k = oracle_reach(spec, r, 12)
        assert terms[k - 1] == r and r not in terms[: k - 1]


def test_recurrence_relation_recomputable(rng):
    for _ in range(10):
        spec = random_spec(rng)
        E = eval_terms(spec, 15).terms
        L = spec.order
        for k in range(L + 1, 16):
            rhs = spec.f(k, 0) + sum(spec.f(k, m) * E[k - m - 1] for m in range(1, L + 1))
            assert E[k - 1] == rhs


def test_variable_coefficient_uses_one_based_index():
    # E_i = i * E_{i-1} + i^2 with E_1 = 0: E_2 = 4, E_3 = 12 + 9 = 21
    spec = RecurrenceSpec((0,), (IndexPolynomial((0, 0, 1)), IndexPolynomial((0, 1))))
    assert eval_terms(spec, 3).terms == (0, 4, 21)


def test_random_spec_ranges(rng):
    for _ in range(50):
        spec = random_spec(rng)
        assert 1 <= spec.order <= 4
        assert all(p.degree <= 2 for p in spec.coeffs)
        for q in list(spec.initial) + [c for p in spec.coeffs for c in p.coefficients]:
            assert isinstance(q, Fraction)
