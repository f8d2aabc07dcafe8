"""Walsh-transform membership conditions, character kernels, and the
closed-form weight formulas, all over exact cyclotomic arithmetic.

Product identities of the form prod = (p^m / (eps * sqrt(p*)^m))^t are
checked with denominators cleared: both sides are multiplied by
(eps * G^m)^t, with G the quadratic Gauss sum, so every comparison happens
inside Z[zeta_p].  "Imaginary part zero" is implemented as invariance
under the conjugation automorphism, never as a float check.

Every condition here is NECESSARY for membership: actual dual (or hull)
codewords always pass, while unrelated words may or may not.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    CyclotomicInt,
    Field,
    FieldElement,
    gauss_sum_power,
    legendre,
    subfield,
)
from .codes import LinearCode, dual, from_rows, min_distance, weight_distribution
from .constructions import (
    DefiningSet,
    first_codeword,
    first_generic,
    first_points,
    image_set_points,
    make_image_set,
    second_codeword,
)
from .errors import (
    AffineFunction,
    AlphaOutsidePrimeField,
    EvenCharacteristicOnly,
    HypothesisFailed,
    NonIntegerSum,
    NotBent,
    NotInDual,
    NotPN,
    OddCharacteristic,
    WrongCodomain,
)
from .functions import (
    BentClass,
    ParyFunction,
    classify_bent,
    differential_uniformity,
    walsh_transform,
)

FIRST_VARIANTS = (
    "wrb-shifted-scalar",
    "wrb-shifted-generic",
    "wrb-plain-scalar",
    "wrb-plain-generic",
    "delta-diff",
    "delta-value",
    "delta-point",
)

SECOND_VARIANTS = (
    "wrb-scalar",
    "wrb-generic",
    "delta-value",
)


@dataclass(frozen=True)
class MembershipVerdict:
    """Outcome of one exact product identity.

    holds is the cleared equality lhs == rhs; imaginary_zero records
    whether lhs is fixed by zeta -> zeta^{-1}.
    """

    variant: str
    holds: bool
    lhs: CyclotomicInt
    rhs: CyclotomicInt
    imaginary_zero: bool


def _verdict(variant: str, lhs: CyclotomicInt, rhs: CyclotomicInt) -> MembershipVerdict:
    return MembershipVerdict(variant, lhs == rhs, lhs, rhs, lhs == lhs.conjugate())


def respects_prime_scalars(f: ParyFunction) -> bool:
    """f(a x) = a f(x) for every prime-field scalar a, checked exhaustively."""
    field = f.field
    for a in range(field.p):
        s = field.scalar(a)
        for x in field.elements:
            if f(s * x) != s * f(x):
                return False
    return True


def shifted_trace_form(f: ParyFunction) -> ParyFunction:
    """x -> Tr(f(x) - x) as a prime-valued function."""
    field = f.field
    return ParyFunction(field, [(f(x) - x).trace() for x in field.elements], 1)


def plain_trace_form(f: ParyFunction) -> ParyFunction:
    """x -> Tr(f(x)) as a prime-valued function."""
    field = f.field
    return ParyFunction(field, [f(x).trace() for x in field.elements], 1)


class _WrbContext:
    """Classified trace form of f plus everything the product identities
    need: the dual spectrum and the exact sqrt(p*)^m representative."""

    def __init__(self, f: ParyFunction, g: ParyFunction, label: str):
        self.field = f.field
        cls = classify_bent(walsh_transform(g))
        if not cls.is_weakly_regular():
            raise HypothesisFailed(f"{label} is not weakly regular bent ({cls.kind.value})")
        self.cls = cls
        self.dual_spectrum = walsh_transform(cls.dual)
        p, m = self.field.p, self.field.m
        if p == 2:
            self.gm = CyclotomicInt.from_int(2, 1 << (m // 2))
        else:
            self.gm = gauss_sum_power(p, m)
        self.eps_gm = self.gm if cls.epsilon == 1 else -self.gm

    def scalar_product(self, points, word) -> tuple[CyclotomicInt, CyclotomicInt]:
        """Cleared sides of prod_i chi_dual(c_i x_i) = (p^m/(eps G^m))^n."""
        field = self.field
        n = len(points)
        lhs = CyclotomicInt.from_int(field.p, 1)
        for c, x in zip(word, points):
            lhs = lhs * self.dual_spectrum[x * c]
        lhs = lhs * self.eps_gm ** n
        rhs = CyclotomicInt.from_int(field.p, field.q) ** n
        return lhs, rhs

    def generic_product(self, points, word) -> tuple[CyclotomicInt, CyclotomicInt]:
        """Cleared sides of prod_i chi_dual(x_i)^(c_i) = (p^m/(eps G^m))^sum(c)."""
        field = self.field
        total = sum(word)
        lhs = CyclotomicInt.from_int(field.p, 1)
        for c, x in zip(word, points):
            if c:
                lhs = lhs * self.dual_spectrum[x] ** c
        lhs = lhs * self.eps_gm ** total
        rhs = CyclotomicInt.from_int(field.p, field.q) ** total
        return lhs, rhs


def _delta_factor(field: Field, special_point: FieldElement, special_value: int) -> CyclotomicInt:
    """chi_hat_{g_i}(1) + 1 - q for the function equal to Tr(x) everywhere
    except g_i(special_point) = special_value, computed literally."""
    p = field.p
    counts = [0] * p
    for y in field.elements:
        g = special_value if y == special_point else field.trace_int(y)
        counts[(g - field.trace_int(y)) % p] += 1
    chi = CyclotomicInt(p, counts)
    return chi + CyclotomicInt.from_int(p, 1 - field.q)


def _first_delta_factors(f: ParyFunction, variant: str, include_zero: bool):
    field = f.field
    points = first_points(field, include_zero)
    factors = []
    for x in points:
        if variant == "delta-diff":
            special = field.trace_int(f(x))
        elif variant == "delta-value":
            special = (field.trace_int(f(x)) + field.trace_int(x)) % field.p
        elif variant == "delta-point":
            special = (2 * field.trace_int(x)) % field.p
        else:
            raise ValueError(f"unknown delta variant {variant!r}")
        factors.append(_delta_factor(field, x, special))
    return points, factors


def _second_delta_factors(elements: Sequence[FieldElement], field: Field):
    """Factors zeta^{Tr(d_i)} through the one-point-modified trace form."""
    factors = []
    for d in elements:
        special = (field.trace_int(d) + field.trace_int(d)) % field.p
        factors.append(_delta_factor(field, d, special))
    return factors


def _product_of_factors(factors, word, p) -> tuple[CyclotomicInt, CyclotomicInt]:
    lhs = CyclotomicInt.from_int(p, 1)
    for fac, c in zip(factors, word):
        if c:
            lhs = lhs * fac ** c
    return lhs, CyclotomicInt.from_int(p, 1)


def _wrb_context_first(f: ParyFunction, variant: str) -> _WrbContext:
    if "shifted" in variant:
        return _WrbContext(f, shifted_trace_form(f), "Tr(f(x) - x)")
    return _WrbContext(f, plain_trace_form(f), "Tr(f(x))")


def _check_scalar_hypothesis(f: ParyFunction):
    if not respects_prime_scalars(f):
        raise HypothesisFailed("f does not respect prime-field scalar multiplication")


def dual_membership_first(
    f: ParyFunction,
    word: Sequence[int],
    variant: str,
    include_zero: bool = True,
) -> MembershipVerdict:
    """Necessary condition for a word to lie in the dual of the function
    code; the variant picks the proposition being applied."""
    field = f.field
    points = first_points(field, include_zero)
    if len(word) != len(points):
        raise ValueError("word length does not match the coordinate count")
    word = [c % field.p for c in word]
    if variant.startswith("wrb"):
        ctx = _wrb_context_first(f, variant)
        if variant.endswith("scalar"):
            _check_scalar_hypothesis(f)
            lhs, rhs = ctx.scalar_product(points, word)
        else:
            lhs, rhs = ctx.generic_product(points, word)
        return _verdict(f"first:{variant}", lhs, rhs)
    _, factors = _first_delta_factors(f, variant, include_zero)
    lhs, rhs = _product_of_factors(factors, word, field.p)
    return _verdict(f"first:{variant}", lhs, rhs)


def dual_membership_second(
    f: ParyFunction, word: Sequence[int], variant: str
) -> MembershipVerdict:
    """Necessary dual-membership condition for the code of the image
    defining set {f(x) : x} minus zero."""
    field = f.field
    ds = make_image_set(f)
    points = image_set_points(f)
    if len(word) != len(ds.elements):
        raise ValueError("word length does not match the defining set")
    word = [c % field.p for c in word]
    if variant == "wrb-scalar":
        ctx = _WrbContext(f, plain_trace_form(f), "Tr(f(x))")
        _check_scalar_hypothesis(f)
        lhs, rhs = ctx.scalar_product(points, word)
    elif variant == "wrb-generic":
        ctx = _WrbContext(f, plain_trace_form(f), "Tr(f(x))")
        lhs, rhs = ctx.generic_product(points, word)
    elif variant == "delta-value":
        factors = _second_delta_factors(ds.elements, field)
        lhs, rhs = _product_of_factors(factors, word, field.p)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return _verdict(f"second:{variant}", lhs, rhs)


def dual_membership_defining_set(ds: DefiningSet, word: Sequence[int]) -> MembershipVerdict:
    """The general-case condition prod (chi_{g_i}(1)+1-q)^{c_i} = 1 applied
    to an arbitrary prime-base defining set."""
    if ds.base_degree != 1:
        raise WrongCodomain("membership conditions need a prime-base code")
    field = ds.field
    word = [c % field.p for c in word]
    factors = _second_delta_factors(ds.elements, field)
    lhs, rhs = _product_of_factors(factors, word, field.p)
    return _verdict("defining-set:delta", lhs, rhs)


# ---------------------------------------------------------------------------
# hull conditions: the same products with the codeword's own coordinates
# as exponents
# ---------------------------------------------------------------------------

def hull_membership_first(
    f: ParyFunction,
    a: FieldElement,
    b: FieldElement,
    variant: str,
    include_zero: bool = True,
) -> MembershipVerdict:
    word = first_codeword(f, a, b, include_zero)
    v = dual_membership_first(f, word, variant, include_zero)
    return MembershipVerdict(f"hull-{v.variant}", v.holds, v.lhs, v.rhs, v.imaginary_zero)


def hull_membership_second(f: ParyFunction, x: FieldElement, variant: str) -> MembershipVerdict:
    ds = make_image_set(f)
    word = [c.as_prime_int() for c in second_codeword(ds, x)]
    v = dual_membership_second(f, word, variant)
    return MembershipVerdict(f"hull-{v.variant}", v.holds, v.lhs, v.rhs, v.imaginary_zero)


def hull_membership_defining_set(ds: DefiningSet, x: FieldElement) -> MembershipVerdict:
    word = [c.as_prime_int() for c in second_codeword(ds, x)]
    v = dual_membership_defining_set(ds, word)
    return MembershipVerdict(f"hull-{v.variant}", v.holds, v.lhs, v.rhs, v.imaginary_zero)


# ---------------------------------------------------------------------------
# character kernels
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CodeCharacter:
    """Additive character c -> prod factor_i^{c_i} with per-coordinate
    factors chi_{g_i}(1)+1-q; its kernel contains the dual code."""

    p: int
    factors: tuple[CyclotomicInt, ...]
    exponents: tuple[int, ...]
    domain: str

    def evaluate(self, word: Sequence[int]) -> CyclotomicInt:
        lhs, _ = _product_of_factors(self.factors, [c % self.p for c in word], self.p)
        return lhs

    def is_trivial(self) -> bool:
        return all(t == 0 for t in self.exponents)

    def kernel_hyperplane(self) -> tuple[int, ...]:
        """Coefficients t of the parity check sum t_i c_i = 0 that cuts out
        ker(phi); meaningful only for a nontrivial character."""
        return self.exponents

    def in_kernel(self, word: Sequence[int]) -> bool:
        return sum(t * (c % self.p) for t, c in zip(self.exponents, word)) % self.p == 0


def _factor_exponents(factors, p) -> tuple[int, ...]:
    exps = []
    for fac in factors:
        e = next(
            (i for i in range(p) if fac == CyclotomicInt.zeta_power(p, i)), None
        )
        assert e is not None, "delta factor must be a root of unity"
        exps.append(e)
    return tuple(exps)


def dual_character_first(
    f: ParyFunction, variant: str, include_zero: bool = True
) -> CodeCharacter:
    """Character of the ambient space whose kernel contains the dual of the
    function code; containment is asserted by checking the coefficient row
    is itself a codeword."""
    field = f.field
    _, factors = _first_delta_factors(f, variant, include_zero)
    exps = _factor_exponents(factors, field.p)
    code = first_generic(f, include_zero)
    prime = code.base
    assert code.contains([prime.scalar(t) for t in exps]), (
        "character row must lie in the code, else the dual escapes the kernel"
    )
    return CodeCharacter(field.p, tuple(factors), exps, f"first:{variant}")


def dual_character_second(f: ParyFunction) -> CodeCharacter:
    from .constructions import second_generic

    field = f.field
    ds = make_image_set(f)
    factors = _second_delta_factors(ds.elements, field)
    exps = _factor_exponents(factors, field.p)
    code = second_generic(ds)
    assert code.contains([code.base.scalar(t) for t in exps])
    return CodeCharacter(field.p, tuple(factors), exps, "second:delta-value")


def defining_set_character(ds: DefiningSet) -> CodeCharacter:
    from .constructions import second_generic

    if ds.base_degree != 1:
        raise WrongCodomain("characters need a prime-base code")
    field = ds.field
    factors = _second_delta_factors(ds.elements, field)
    exps = _factor_exponents(factors, field.p)
    code = second_generic(ds)
    assert code.contains([code.base.scalar(t) for t in exps])
    return CodeCharacter(field.p, tuple(factors), exps, "defining-set:delta")


# ---------------------------------------------------------------------------
# weight formulas
# ---------------------------------------------------------------------------

def weight_via_walsh_sum(psi: ParyFunction, a: FieldElement, b: FieldElement) -> int:
    """wt = p^m - (1/p) sum over omega of chi_{psi_{omega a}}(omega b),
    the Walsh-sum form of the weight of the codeword with parameters
    (a, b) (coordinates Tr(a Psi(x) - b x))."""
    field = psi.field
    if psi.codomain_degree != field.m:
        raise WrongCodomain("the construction needs an F_q -> F_q map")
    if not psi(field.zero).is_zero():
        raise HypothesisFailed("Psi(0) = 0 is required")
    p, q = field.p, field.q
    total = CyclotomicInt.zero(p)
    for omega in range(p):
        aw = a * omega
        bw = b * omega
        counts = [0] * p
        for x in field.elements:
            e = (field.trace_bilinear(aw, psi(x)) - field.trace_bilinear(bw, x)) % p
            counts[e] += 1
        total = total + CyclotomicInt(p, counts)
    if not total.is_rational():
        raise NonIntegerSum(f"Walsh sum {total!r} is not rational")
    s = total.as_int()
    if s % p != 0:
        raise NonIntegerSum(f"Walsh sum {s} is not divisible by {p}")
    return q - s // p


def weight_via_character_sum(ds: DefiningSet, x: FieldElement) -> int:
    """wt(c_x) = ((q-1) n - sum over nonzero base scalars y of
    chi_1(y x D)) / q where chi_1 is the canonical additive character."""
    field = ds.field
    p = field.p
    qbase = p ** ds.base_degree
    _, embed, _ = subfield(field, ds.base_degree)
    n = len(ds.elements)
    total = CyclotomicInt.zero(p)
    for y_small, y in embed.items():
        if y_small.is_zero():
            continue
        counts = [0] * p
        for d in ds.elements:
            counts[field.trace_int(y * x * d)] += 1
        total = total + CyclotomicInt(p, counts)
    if not total.is_rational():
        raise NonIntegerSum(f"character sum {total!r} is not rational")
    num = (qbase - 1) * n - total.as_int()
    if num % qbase != 0:
        raise NonIntegerSum(f"{num} is not divisible by {qbase}")
    return num // qbase


def bent_codeword_weight(
    psi: ParyFunction,
    alpha: FieldElement,
    beta: FieldElement,
    cls: BentClass | None = None,
) -> int:
    """Closed-form weight of the punctured codeword (Tr(alpha Psi(x) -
    beta x))_{x != 0} when the trace form of Psi is (weakly regular) bent.

    Only prime-field alpha is covered; the sign entering the even-degree
    case is the one relative to +p^(m/2), converted from the Gauss-sum
    sign of the classification.
    """
    field = psi.field
    p, m, q = field.p, field.m, field.q
    if cls is None:
        cls = classify_bent(walsh_transform(plain_trace_form(psi)))
    if not cls.is_weakly_regular():
        raise NotBent(f"trace form classified {cls.kind.value}")
    if not alpha.in_prime_subfield():
        raise AlphaOutsidePrimeField(f"alpha={alpha!r} is outside the prime field")
    a = alpha.as_prime_int()
    if a == 0:
        return 0 if beta.is_zero() else q - q // p
    dual_value = cls.dual(beta / alpha).as_prime_int()
    if p == 2:
        half = 1 << (m // 2 - 1)
        return (q >> 1) - (-1) ** dual_value * half
    if m % 2 == 1:
        sign = legendre(-1, p) ** ((m + 1) // 2)
        return q - q // p - cls.epsilon * sign * p ** ((m - 1) // 2) * legendre(dual_value, p)
    eps_plus = cls.epsilon * (-1) ** (((p - 1) // 2) * (m // 2))
    if dual_value == 0:
        return q - q // p - eps_plus * (p - 1) * p ** (m // 2 - 1)
    return q - q // p + eps_plus * p ** (m // 2 - 1)


def support_code_weight_multiset(f: ParyFunction) -> list[int]:
    """Weight multiset {(2 n_f + chi_f(w)) / 4 : w != 0} plus {0} of the
    binary code defined by the support f^{-1}(1); must equal the
    exhaustive distribution with multiplicity."""
    field = f.field
    if field.p != 2:
        raise EvenCharacteristicOnly("the support construction is binary")
    if f.codomain_degree != 1:
        raise WrongCodomain("need a Boolean function")
    if f.is_affine():
        raise AffineFunction("affine functions are excluded by hypothesis")
    n_f = sum(f.exponents())
    spectrum = walsh_transform(f)
    weights = [0]
    for w in field.elements[1:]:
        v = 2 * n_f + spectrum[w].as_int()
        if v % 4 != 0:
            raise NonIntegerSum(f"(2 n_f + chi(w)) = {v} is not divisible by 4")
        weights.append(v // 4)
    return sorted(weights)


def weight_from_walsh_even(
    g: ParyFunction,
    points: Sequence[FieldElement],
    word: Sequence[int],
    require_positive: bool = False,
) -> int:
    """Even characteristic: wt(c) = log2(alpha^2) / m with alpha the exact
    integer product of dual-spectrum values at the coordinate points.

    require_positive additionally asserts the restated necessary condition
    prod chi_dual(c_i x_i) > 0, which presumes the word belongs to the
    dual of the matching construction.
    """
    field = g.field
    if field.p != 2:
        raise OddCharacteristic("this weight formula is for characteristic 2")
    cls = classify_bent(walsh_transform(g))
    if cls.kind.value == "not_bent":
        raise NotBent("the trace form must be bent")
    spec = walsh_transform(cls.dual)
    alpha = 1
    for c, x in zip(word, points):
        if c % 2:
            alpha *= spec[x].as_int()
    a2 = alpha * alpha
    if a2 == 0 or a2 & (a2 - 1):
        raise NotInDual(f"alpha^2 = {a2} is not a power of two")
    e = a2.bit_length() - 1
    if e % field.m != 0:
        raise NotInDual(f"alpha^2 = 2^{e} is not a power of 2^{field.m}")
    if require_positive:
        full = 1
        for c, x in zip(word, points):
            full *= spec[x * c].as_int()
        if full <= 0:
            raise NotInDual("the product condition fails: the word is not in the dual")
    return e // field.m


# ---------------------------------------------------------------------------
# APN / AB / PN diagnostics
# ---------------------------------------------------------------------------

def _binary_dual_distance(code: LinearCode, guard: int | None = None) -> int:
    """Dual distance of a binary code: the least number of generator
    columns XOR-ing to zero.  Searched directly up to 5 (the range the
    diagnostics assert), with plain dual enumeration as the fallback."""
    cols = []
    for j in range(code.n):
        v = 0
        for i, row in enumerate(code.generator):
            if not row[j].is_zero():
                v |= 1 << i
        cols.append(v)
    n = len(cols)
    if any(v == 0 for v in cols):
        return 1
    if len(set(cols)) < n:
        return 2
    colset = {}
    for i, v in enumerate(cols):
        colset.setdefault(v, []).append(i)
    pair_xor: dict[int, list[tuple[int, int]]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            x = cols[i] ^ cols[j]
            if x in colset and any(k not in (i, j) for k in colset[x]):
                return 3
            pair_xor.setdefault(x, []).append((i, j))
    for x, pairs in pair_xor.items():
        for a in range(len(pairs)):
            for b in range(a + 1, len(pairs)):
                if not set(pairs[a]) & set(pairs[b]):
                    return 4
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                x = cols[i] ^ cols[j] ^ cols[k]
                for pair in pair_xor.get(x, ()):
                    if not set(pair) & {i, j, k}:
                        return 5
    return min_distance(dual(code), guard)


def apn_ab_dual_diagnostics(f: ParyFunction, guard: int | None = None) -> dict:
    """Dual-distance and characteristic-set diagnostics of the punctured
    function code; in characteristic 2 the dual distance sits in [3, 5],
    hitting 5 exactly for APN maps, and almost-bent maps show the
    three-valued characteristic set."""
    field = f.field
    if field.p != 2:
        raise OddCharacteristic("the diagnostics are stated for binary maps")
    m = field.m
    code = first_generic(f, include_zero=False)
    d_perp = _binary_dual_distance(code, guard)
    du = differential_uniformity(f)
    is_apn = d_perp == 5
    assert is_apn == (du == 2), "dual distance 5 must coincide with uniformity 2"
    charset = weight_distribution(code, guard).nonzero_weights()
    three_valued = {1 << (m - 1)}
    if m % 2 == 1:
        delta = 1 << ((m - 1) // 2)
        three_valued |= {(1 << (m - 1)) - delta, (1 << (m - 1)) + delta}
    is_ab = m % 2 == 1 and charset == three_valued
    hypothesis_ok = code.k == 2 * m and 3 <= d_perp <= 5
    return {
        "d_perp": d_perp,
        "differential_uniformity": du,
        "is_apn": is_apn,
        "characteristic_set": charset,
        "is_ab": is_ab,
        "hypothesis_ok": hypothesis_ok,
    }


def _within_pn_band(w: int, p: int, m: int) -> bool:
    # |p w - (p-1) p^m| <= (p-1) p^(m/2), squared to stay in integers
    lhs = p * w - (p - 1) * p ** m
    return lhs * lhs <= (p - 1) ** 2 * p ** m


def pn_bounds_check(f: ParyFunction, guard: int | None = None) -> dict:
    """Every nonzero weight of the punctured code of a PN map lies in the
    band (p-1)/p * (p^m -+ p^(m/2)).

    The constant-extended punctured code is reported alongside but not
    asserted: puncturing at x = 0 removes a coordinate that the constant
    makes nonzero, which pushes single weights below the band (weight 15
    against a lower bound of 16 already for x^2 over GF(25)).
    """
    field = f.field
    p, m = field.p, field.m
    if differential_uniformity(f) != 1:
        raise NotPN("the map is not planar")
    if not f(field.zero).is_zero():
        raise NotPN("the bounds assume f(0) = 0")
    code = first_generic(f, include_zero=False)
    ones = [code.base.one] * code.n
    extension = from_rows(code.base, list(code.generator) + [ones])
    weights = weight_distribution(code, guard).nonzero_weights()
    ext_weights = weight_distribution(extension, guard).nonzero_weights()
    return {
        "weights": weights,
        "extension_weights": ext_weights,
        "all_in_band": all(_within_pn_band(w, p, m) for w in weights),
        "extension_all_in_band": all(_within_pn_band(w, p, m) for w in ext_weights),
        "band": (
            (p - 1) * (p ** m - p ** (m / 2)) / p,
            (p - 1) * (p ** m + p ** (m / 2)) / p,
        ),
    }
