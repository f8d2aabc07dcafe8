"""Constructive recipes (fixed hull, LCD, MDS) and S-box diagnostics."""

from walshcodes.algebra import make_field
from walshcodes.codes import dual, hull_dim, is_mds, min_distance, weight_distribution
from walshcodes.conditions import apn_ab_dual_diagnostics, pn_bounds_check
from walshcodes.constructions import (
    make_fixed_hull_set,
    make_lcd_set,
    make_mds_set,
    second_generic,
)
from walshcodes.functions import parse_function

print("--- codes with any prescribed hull dimension (p = 5) ---")
f25 = make_field(5, 2)
basis = [f25.one, f25.elements[5]]
for l in range(3):
    ds = make_fixed_hull_set(f25, basis, l, alpha=2, beta=4)
    code = second_generic(ds)
    print(f"l={l}: [{code.n}, {code.k}, {min_distance(code)}], hull dim {hull_dim(code)},"
          f" weights {weight_distribution(code).counts}")

print("\n--- LCD codes in characteristic 2 ---")
f16 = make_field(2, 4)
ds = make_lcd_set(f16, [f16.elements[2 ** i] for i in range(4)])
code = second_generic(ds)
d = dual(code)
print(f"code [{code.n}, {code.k}], hull dim {hull_dim(code)}")
print(f"dual [{d.n}, {d.k}, {min_distance(d)}], weights {weight_distribution(d).counts}")

print("\n--- MDS pairs from almost-independent defining sets ---")
f125 = make_field(5, 3)
basis = [f125.elements[5 ** i] for i in range(3)]
for variant, alphas in (("k+1", [1, 1, 1]), ("k+2", [1, 2, 3])):
    code = second_generic(make_mds_set(f125, basis, variant, alphas))
    d = dual(code)
    print(f"{variant}: [{code.n}, {code.k}, {min_distance(code)}] MDS={is_mds(code)}; "
          f"dual [{d.n}, {d.k}, {min_distance(d)}] MDS={is_mds(d)}")

print("\n--- APN and almost-bent diagnostics ---")
rep = apn_ab_dual_diagnostics(parse_function(f16, "x^3").with_codomain(4))
print(f"x^3 on GF(16): dual distance {rep['d_perp']}, APN={rep['is_apn']}, "
      f"uniformity {rep['differential_uniformity']}")
f32 = make_field(2, 5)
rep = apn_ab_dual_diagnostics(parse_function(f32, "x^3").with_codomain(5))
print(f"x^3 on GF(32): characteristic set {sorted(rep['characteristic_set'])}, "
      f"AB={rep['is_ab']}")

print("\n--- PN weight band ---")
for p, m in ((3, 2), (5, 2)):
    field = make_field(p, m)
    rep = pn_bounds_check(parse_function(field, "x^2").with_codomain(m))
    print(f"x^2 on GF({p}^{m}): weights {sorted(rep['weights'])} inside "
          f"[{rep['band'][0]:.0f}, {rep['band'][1]:.0f}] -> {rep['all_in_band']}")
