"""Walsh spectra and bentness classification.

Computes exact Walsh transforms, classifies a ternary quadratic as
weakly regular bent with its sign and dual function, and verifies the
dual-spectrum identity pointwise.
"""

from walshcodes.algebra import make_field
from walshcodes.functions import (
    ParyFunction,
    classify_bent,
    parse_function,
    verify_dual_relation,
    walsh_transform,
)

f9 = make_field(3, 2)

g = parse_function(f9, "tr(x^2)")
spectrum = walsh_transform(g)
print("Walsh coefficients of tr(x^2) on GF(9):")
for b, c in zip(f9.elements, spectrum.coefficients):
    print(f"  b={list(b.coeffs)}: {list(c.coeffs)}   |.|^2 = {c.abs_squared().as_int()}")

cls = classify_bent(spectrum)
print(f"\nclassification: {cls.kind.value}, sign = {cls.epsilon}, unit = {cls.unit}")
print("dual function exponents:", cls.dual.exponents())

report = verify_dual_relation(g, cls)
print("dual relation chi_dual(x) * G^m = eps p^m zeta^g(x):",
      "all points pass" if report["all_pass"] else "FAILED")

print("\n--- a non-bent function ---")
lin = parse_function(f9, "tr(g*x)")
print("tr(g*x):", classify_bent(walsh_transform(lin)).kind.value)

print("\n--- the classic Boolean bent form on GF(16) ---")
f16 = make_field(2, 4)
quad = ParyFunction.from_callable(
    f16, lambda x: f16.scalar(x.coeffs[0] * x.coeffs[1] + x.coeffs[2] * x.coeffs[3]), 1
)
sp = walsh_transform(quad)
print("spectrum values:", sorted({c.as_int() for c in sp.coefficients}))
print("classification:", classify_bent(sp).kind.value)

print("\n--- imaginary unit for odd degree over p = 3 mod 4 ---")
f27 = make_field(3, 3)
cls27 = classify_bent(walsh_transform(parse_function(f27, "tr(x^4)")))
print(f"tr(x^4) on GF(27): {cls27.kind.value}, sign {cls27.epsilon}, unit {cls27.unit}")
