"""Fields and exact cyclotomic arithmetic.

Builds small Galois fields, walks through traces and their kernels, and
shows the quadratic Gauss sum squaring to the twisted prime exactly in
Z[zeta_p] with no floating point anywhere.
"""

from walshcodes import (
    CyclotomicInt,
    gauss_sum_power,
    make_field,
    quadratic_gauss_sum,
    trace,
    trace_kernel,
)

f9 = make_field(3, 2)
print(f"GF(9) with modulus {list(f9.modulus)} (x^2 + 1, since -1 is a non-square mod 3)")
print("canonical element order:", [list(e.coeffs) for e in f9.elements])

w = f9.element([0, 1])
print("\nw^2 =", list((w * w).coeffs), " (the square root of -1)")
print("Tr(1) =", trace(f9, f9.one).as_prime_int())
print("Tr(w) =", trace(f9, w).as_prime_int())

kernel = trace_kernel(f9)
print("\ntrace kernel:", [list(e.coeffs) for e in kernel])
print("matches {a^3 - a}: checked internally at construction")

print("\n--- Gauss sums ---")
for p in (3, 5, 7, 11, 13):
    g = quadratic_gauss_sum(p)
    print(f"p={p}: G = {list(g.coeffs)},  G^2 = {(g * g).as_int()}  (= (-1/p) p)")

g3 = gauss_sum_power(3, 2)
print("\nG^2 for p=3 reused as the exact sqrt(p*)^2:", g3.as_int())
print("a float view exists for display only:", quadratic_gauss_sum(3).complex_value())

print("\ncyclotomic canonical form: 1 + zeta + zeta^2 =",
      CyclotomicInt(3, [1, 1, 1]).is_zero() and "0")
