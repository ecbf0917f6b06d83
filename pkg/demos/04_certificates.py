"""Cramer indicators, witness vectors and the coefficient collapse.

Run:  python demos/04_certificates.py
"""
import random
from fractions import Fraction

from reachdet.certificate import (
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
from reachdet.recurrence import FIBONACCI, PERIOD6, eval_terms

sys6 = build_system(PERIOD6, 6, 0)
print("system matrix (unit lower-banded):")
print(sys6.A.dump())
print("b =", [str(x) for x in sys6.b])

print("\nCramer indicators:", [str(cramer_indicator(sys6, t)) for t in range(1, 7)])
print("witness for t = 3:", [str(x) for x in witness(sys6, 3)])

D = lemma21_assignment(sys6, 3)
c = collapse(sys6, D)
print("collapse at t = 3: const", c.const_term, "| all other coefficients zero:", c.is_unit())
rng = random.Random(0)
z = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(6)]
print("sum R_i S_i at a random point:", eval_sum(sys6, D, z))

print("\nrank test, period6 t = 3:", lemma22_rank(sys6, 3))
print("rank test, fibonacci t = 3:", lemma22_rank(build_system(FIBONACCI, 6, 0), 3))

# Q_k vanish at x_k = 1 / (E_k - r) whenever no E_k equals r.
r = Fraction(1, 2)
E = eval_terms(FIBONACCI, 8).terms
print("\nQ at shifted reciprocals:", [str(q) for q in eval_Q(FIBONACCI, 8, r, [1 / (e - r) for e in E])])

rep = certify(PERIOD6, 12, 0)
print("\ncertify period6, N = 12: reaches at", rep.reach_indices,
      "| sum can equal one:", rep.sum_can_equal_one, "| consistent:", rep.consistent)
