"""Bounded reachability from the product (Ω_1 - r)...(Ω_N - r).

Run:  python demos/03_partial_product_and_mu.py
"""
from reachdet.determinant import build_mu, convergence_monitor, partial_product
from reachdet.exact import det_elimination
from reachdet.recurrence import FIBONACCI, HALF, MERSENNE, PERIOD6

for name, spec, r in [("period6", PERIOD6, 0), ("mersenne", MERSENNE, 7), ("fibonacci", FIBONACCI, 0)]:
    rep = partial_product(spec, r, 10)
    print(f"{name:10s} r={r}: product={rep.value} first zero={rep.first_zero_index} "
          f"bits={rep.bit_size}")

# The same product is the determinant of one block-diagonal matrix.
mu = build_mu(FIBONACCI, 0, 5)
print("\nmu for fibonacci, N = 5:", mu.shape, "det =", det_elimination(mu),
      "product =", partial_product(FIBONACCI, 0, 5).value)

# A nonzero product is only informative when |Ω_N - r| does not settle
# strictly between 0 and 1.  Integer data can never do that.
print("\nconstant 1/2 sequence:", convergence_monitor(HALF, 0, 10, 5))
print("period6:              ", convergence_monitor(PERIOD6, 0, 10, 5))
