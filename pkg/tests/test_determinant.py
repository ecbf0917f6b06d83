from fractions import Fraction

import pytest

from reachdet.determinant import (
    build_augmented,
    build_mu,
    build_omega,
    convergence_monitor,
    omega_value,
    omega_values,
    partial_product,
    verify_theorem1,
)
from reachdet.exact import ExactMatrix, det_elimination, det_laplace
from reachdet.recurrence import eval_terms, oracle_reach, random_rational, random_spec


def test_omega_first_two(rng):
    for _ in range(10):
        spec = random_spec(rng)
        a = spec.initial
        assert build_omega(spec, 1) == ExactMatrix.from_rows([[a[0]]])
        if spec.order >= 2:
            M = build_omega(spec, 2)
            assert M == ExactMatrix.from_rows([[a[0], -1], [a[1], 0]])
            assert det_laplace(M) == a[1]


def test_fibonacci_omega5_layout(fib):
    M = build_omega(fib, 5)
    assert M.dump() == "\n".join(
        ["1\t-1\t0\t0\t0", "1\t0\t-1\t0\t0", "0\t1\t1\t-1\t0", "0\t0\t1\t1\t-1", "0\t0\t0\t1\t1"]
    )
    assert det_laplace(M) == 5


def test_omega_is_lower_hessenberg(rng):
    for _ in range(10):
        spec = random_spec(rng)
        M = build_omega(spec, 9)
        for k in range(9):
            for c in range(k + 1, 9):
                assert M[k, c] == (-1 if c == k + 1 else 0)


def test_augmented_examples(fib, rng):
    for _ in range(5):
        spec = random_spec(rng)
        r = random_rational(rng)
        a1 = spec.initial[0]
        assert build_augmented(spec, 1, 0) == ExactMatrix.from_rows([[a1, -1], [0, 1]])
        assert det_laplace(build_augmented(spec, 1, r)) == a1 - r
    assert det_elimination(build_augmented(fib, 4, 3)) == 0


def test_minor_identity(rng):
    for _ in range(10):
        spec = random_spec(rng)
        for i in range(1, 8):
            assert build_augmented(spec, i, 0).minor(i, i) == build_omega(spec, i)


def test_omega_value_examples(fib, factorial, rng):
    assert omega_value(fib, 6) == 8
    assert omega_value(factorial, 4) == 24
    for _ in range(5):
        spec = random_spec(rng)
        for i in range(1, spec.order + 1):
            assert omega_value(spec, i) == spec.initial[i - 1]


@pytest.mark.parametrize("i", range(1, 8))
def test_laplace_agrees_with_layouts(rng, i):
    for _ in range(4):
        spec = random_spec(rng)
        r = random_rational(rng)
        terms = eval_terms(spec, i).terms
        assert det_laplace(build_omega(spec, i)) == terms[-1]
        assert det_laplace(build_augmented(spec, i, r)) == terms[-1] - r


def test_theorem1_fixtures(fib, period6):
    assert verify_theorem1(fib, 20).passed
    rep = verify_theorem1(period6, 20)
    assert rep.passed and rep.checked == 20
    om = omega_values(period6, 20)
    assert [k for k, v in enumerate(om, 1) if v == 0] == [3, 6, 9, 12, 15, 18]


def test_theorem1_random(rng):
    for _ in range(15):
        assert verify_theorem1(random_spec(rng), 15, seed=rng.randrange(100)).passed


def test_theorem1_reports_mismatch(fib, monkeypatch):
    import reachdet.determinant as det

    real = det.omega_values
    monkeypatch.setattr(det, "omega_values", lambda s, n: real(s, n)[:4] + [Fraction(0)] * (n - 4))
    rep = det.verify_theorem1(fib, 8, r=0)
    assert not rep.passed and rep.first_failure == 5


def test_partial_product_examples(period6, fib, mersenne):
    rep = partial_product(period6, 0, 5)
    assert rep.value == 0 and rep.first_zero_index == 3
    rep = partial_product(fib, 0, 10)
    assert rep.value == 1 * 1 * 2 * 3 * 5 * 8 * 13 * 21 * 34 * 55
    assert rep.first_zero_index is None
    rep = partial_product(mersenne, 7, 5)
    assert rep.value == 0 and rep.first_zero_index == 3


def test_partial_product_keeps_window_after_zero(period6):
    rep = partial_product(period6, 0, 10, window=4)
    assert rep.caveat_window == [1, 1, 0, -1]  # E_7..E_10


def test_product_oracle_agreement(rng):
    for _ in range(40):
        spec = random_spec(rng, integral=True, bound=2)
        N = 10
        r = eval_terms(spec, N).terms[rng.randrange(N)] if rng.random() < 0.6 else Fraction(5, 7)
        rep = partial_product(spec, r, N)
        assert rep.first_zero_index == oracle_reach(spec, r, N)
        assert (rep.value == 0) == (rep.first_zero_index is not None)


def test_convergence_monitor(half, period6, fib, mersenne):
    rep = convergence_monitor(half, 0, 10, 5)
    assert rep.caveat_flag and not rep.integer_exempt
    assert rep.values == [Fraction(1, 2)] * 5
    for spec in (period6, fib, mersenne):
        rep = convergence_monitor(spec, 0, 10, 5)
        assert rep.integer_exempt and not rep.caveat_flag


def test_convergence_monitor_needs_whole_window(half):
    # E_k - 1/4 = 1/4 inside (0,1); shifting by 1/2 gives an exact zero instead
    assert convergence_monitor(half, Fraction(1, 4), 6, 6).caveat_flag
    assert not convergence_monitor(half, Fraction(1, 2), 6, 6).caveat_flag
    with pytest.raises(ValueError):
        convergence_monitor(half, 0, 3, 4)


def test_build_mu_examples(fib, period6, rng):
    spec = random_spec(rng)
    r = random_rational(rng)
    assert build_mu(spec, r, 1) == build_augmented(spec, 1, r)
    assert det_elimination(build_mu(fib, 0, 3)) == 2
    assert det_elimination(build_mu(period6, 0, 3)) == 0


def test_mu_identity(rng):
    for _ in range(5):
        spec = random_spec(rng)
        r = random_rational(rng)
        N = rng.randint(1, 8)
        mu = build_mu(spec, r, N)
        assert mu.nrows == N * (N + 3) // 2
        assert det_elimination(mu) == partial_product(spec, r, N).value
