"""Invariant suite run by ``reachdet verify`` against a single recurrence."""

from __future__ import annotations

import random
from fractions import Fraction

from .certificate import (
    build_system,
    certify,
    collapse,
    cramer_indicator,
    eval_Q,
    eval_sum,
    lemma21_assignment,
    lemma22_rank,
    witness,
)
from .determinant import (
    build_augmented,
    build_mu,
    build_omega,
    laplace_agrees,
    omega_values,
    partial_product,
    verify_theorem1,
)
from .exact import ExactMatrix, det_elimination, dot, solve
from .recurrence import RecurrenceSpec, eval_scaled, eval_terms, oracle_reach, random_rational

MU_DEPTH = 8
LAPLACE_DEPTH = 7


def _nonzero(rng: random.Random) -> Fraction:
    q = Fraction(0)
    while q == 0:
        q = random_rational(rng)
    return q


def run_checks(spec: RecurrenceSpec, N: int, r: Fraction, seed: int = 0) -> dict[str, bool]:
    rng = random.Random(seed)
    terms = eval_terms(spec, N).terms
    om = omega_values(spec, N)
    res: dict[str, bool] = {}

    res["theorem1"] = verify_theorem1(spec, N, r).passed
    long = eval_terms(spec, N + 5).terms
    res["prefix_stability"] = long[:N] == terms
    c = random_rational(rng)
    res["scale_linearity"] = all(
        a == c * e for a, e in zip(eval_scaled(spec, c, N).terms, terms)
    ) and not any(eval_scaled(spec, 0, N).terms)
    res["minor_identity"] = all(
        build_augmented(spec, i, 0).minor(i, i) == build_omega(spec, i) for i in range(1, N + 1)
    )
    res["laplace_agreement"] = all(
        laplace_agrees(spec, i, r) for i in range(1, min(N, LAPLACE_DEPTH) + 1)
    )
    depth = min(N, MU_DEPTH)
    prod = partial_product(spec, r, N)
    res["mu_identity"] = (
        det_elimination(build_mu(spec, r, depth)) == partial_product(spec, r, depth).value
    )
    res["product_oracle_agreement"] = prod.first_zero_index == oracle_reach(spec, r, N)
    res["product_value"] = (prod.value == 0) == (prod.first_zero_index is not None)

    sys = build_system(spec, N, r)
    beta = solve(sys.A, sys.b)
    res["shifted_solution"] = all(bk == e - r for bk, e in zip(beta, terms))
    res["cramer_consistency"] = all(cramer_indicator(sys, t) == beta[t - 1] for t in range(1, N + 1))
    wit_ok = True
    lemma21_ok = True
    lemma22_ok = True
    for t in range(1, N + 1):
        w = witness(sys, t)
        wit_ok &= all(dot(w, sys.column(i)) == (i == t) for i in range(1, N + 1))
        wit_ok &= dot(w, sys.b) == beta[t - 1]
        _, forced = lemma22_rank(sys, t)
        if terms[t - 1] == r:
            D = lemma21_assignment(sys, t)
            z = [_nonzero(rng) for _ in range(N)]
            lemma21_ok &= collapse(sys, D).is_unit() and eval_sum(sys, D, z) == 1
            lemma22_ok &= not forced
        else:
            lemma22_ok &= forced
    res["witness_identities"] = wit_ok
    res["lemma21"] = lemma21_ok
    res["lemma22"] = lemma22_ok

    D = ExactMatrix.from_rows([[random_rational(rng) for _ in range(N)] for _ in range(N)])
    coeffs = collapse(sys, D)
    dual = True
    for _ in range(3):
        z = [_nonzero(rng) for _ in range(N)]
        dual &= eval_sum(sys, D, z) == coeffs.evaluate(z)
    res["collapse_point_duality"] = dual

    if all(e != r for e in terms):
        x = [1 / (e - r) for e in terms]
        res["q_vanishing"] = not any(eval_Q(spec, N, r, x))
    res["certificate_consistency"] = certify(spec, N, r).consistent
    res["omega_matches_terms"] = list(terms) == om
    return res
