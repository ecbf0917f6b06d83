"""The Ω_i matrices: each term of a recurrence is a determinant.

Run:  python demos/02_omega_determinants.py
"""
from fractions import Fraction

from reachdet.determinant import build_augmented, build_omega, omega_value, verify_theorem1
from reachdet.exact import det_elimination, det_laplace
from reachdet.recurrence import FACTORIAL, FIBONACCI, eval_terms

M = build_omega(FIBONACCI, 6)
print("Omega_6 for fibonacci:")
print(M.dump())
print("det by elimination:", det_elimination(M))
print("det by cofactors:  ", det_laplace(M))
print("E_6:               ", eval_terms(FIBONACCI, 6).terms[-1])

# Appending the row F_i - r F_0 = 0 shifts the determinant by -r.
r = Fraction(3)
A = build_augmented(FIBONACCI, 4, r)
print("\naugmented layout for i = 4, r = 3:")
print(A.dump())
print("det =", det_elimination(A), "(E_4 - 3)")

# Variable coefficients: E_i = i * E_{i-1}
print("\nfactorial Omega_i:", [str(omega_value(FACTORIAL, i)) for i in range(1, 9)])

report = verify_theorem1(FACTORIAL, 12)
print("three-way identity on factorial, i <= 12:", "pass" if report.passed else report)
