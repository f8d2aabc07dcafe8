"""Codes from defining sets: generators, duals by one equation, weights
by character sums, and the realization of arbitrary codes.
"""

from walshcodes.algebra import make_field
from walshcodes.codes import dual, from_rows, min_distance, weight_distribution
from walshcodes.conditions import support_code_weight_multiset, weight_via_character_sum
from walshcodes.constructions import (
    code_to_defining_set,
    defining_set,
    dimension_via_span,
    dual_second_closed_form,
    make_cyclotomic_set,
    make_preimage_set,
    make_skew_set,
    make_trace_zero_set,
    second_generic,
    standard_form_generator,
)
from walshcodes.functions import ParyFunction

f9 = make_field(3, 2)

print("--- skew set: a one-weight code ---")
skew = make_skew_set(f9)
code = second_generic(skew)
print(f"|D| = {len(skew)}, code [{code.n}, {code.k}, {min_distance(code)}]")
print("weights:", weight_distribution(code).counts)
print("character-sum weight of a codeword:",
      weight_via_character_sum(skew, f9.element([1, 1])))

print("\n--- cyclotomic classes of order 3 over GF(16) ---")
f16 = make_field(2, 4)
cyc = make_cyclotomic_set(f16, 1)
code = second_generic(cyc)
print(f"first class: [{code.n}, {code.k}, {min_distance(code)}], "
      f"weights {weight_distribution(code).counts}")
d = dual(code)
print(f"dual: [{d.n}, {d.k}, {min_distance(d)}]")

print("\n--- the support of a bent Boolean function ---")
quad = ParyFunction.from_callable(
    f16, lambda x: f16.scalar(x.coeffs[0] * x.coeffs[1] + x.coeffs[2] * x.coeffs[3]), 1
)
support = make_preimage_set(quad, f16.one)
code = second_generic(support)
print(f"support size {len(support)}, code [{code.n}, {code.k}]")
print("weights predicted from the Walsh transform:",
      support_code_weight_multiset(quad))
print("weights by enumeration:                    ",
      sorted(weight_distribution(code).multiset()))

print("\n--- trace-zero set over GF(81) ---")
f81 = make_field(3, 4)
tz = make_trace_zero_set(f81)
code = second_generic(tz)
print(f"|D| = {len(tz)} = (p^s+1)(p^(s-1)-1), code [{code.n}, {code.k}]")

print("\n--- dual from a single equation, dimension from a rank ---")
ds = defining_set(f9, [f9.one, f9.scalar(2), f9.element([0, 1])])
print("dim C_D =", second_generic(ds).k, "= span rank =", dimension_via_span(ds))
print("closed-form dual == nullspace dual:",
      dual_second_closed_form(ds) == dual(second_generic(ds)))
mat, order = standard_form_generator(ds)
print("standard-form generator:", [[x.as_prime_int() for x in row] for row in mat],
      "reordering:", order)

print("\n--- every small code is a defining-set code ---")
f3 = make_field(3, 1)
arbitrary = from_rows(f3, [[1, 2, 0, 1], [0, 1, 1, 1]])
realized = code_to_defining_set(arbitrary, f9)
print("round trip:", second_generic(realized) == arbitrary,
      "with elements", [list(d.coeffs) for d in realized.elements])
