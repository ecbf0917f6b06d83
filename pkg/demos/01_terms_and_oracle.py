"""Evaluating recurrences exactly and asking the direct-iteration oracle.

Run:  python demos/01_terms_and_oracle.py
"""
from fractions import Fraction

from reachdet.exact import IndexPolynomial
from reachdet.recurrence import (
    FIBONACCI,
    PERIOD6,
    RecurrenceSpec,
    eval_scaled,
    eval_terms,
    oracle_reach,
)

# E_i = E_{i-1} + E_{i-2}
print("fibonacci:", [str(e) for e in eval_terms(FIBONACCI, 12).terms])

# E_i = E_{i-1} - E_{i-2} cycles with period 6 and hits zero at i = 3
print("period6:  ", [str(e) for e in eval_terms(PERIOD6, 12).terms])
print("first zero of period6 within 12 terms:", oracle_reach(PERIOD6, 0, 12))

# Coefficients may be polynomials in the 1-based index i.
# E_i = (i/2) E_{i-1} + 1 with E_1 = 1
spec = RecurrenceSpec(
    initial=(1,),
    coeffs=(IndexPolynomial((1,)), IndexPolynomial((0, Fraction(1, 2)))),
    name="half-index",
)
terms = eval_terms(spec, 8).terms
print("half-index:", [str(e) for e in terms])
print("reaches 5/2?", oracle_reach(spec, Fraction(5, 2), 8))

# Scaling F_0 scales every term; F_0 = 0 kills the whole sequence.
print("scaled by 3:", [str(e) for e in eval_scaled(FIBONACCI, 3, 6).terms])
print("scaled by 0:", [str(e) for e in eval_scaled(FIBONACCI, 0, 6).terms])
