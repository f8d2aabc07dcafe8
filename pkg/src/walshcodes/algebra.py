"""Exact arithmetic for F_{p^m} and for the cyclotomic ring Z[zeta_p].

Field elements are coefficient vectors over F_p with respect to the power
basis of a monic irreducible modulus; all p^m elements are interned at
construction in canonical order (index = sum c_i p^i, so the zero element
comes first and the constant coefficient is least significant).  Every
code construction in this package indexes coordinates by that order.

Cyclotomic integers carry Walsh coefficients, Gauss sums and character
values exactly; complex floats are a display-only view.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    DegreeMismatch,
    EvenCharacteristic,
    FieldTooLarge,
    NotASubfield,
    NotPrime,
    ReducibleModulus,
)

FIELD_SIZE_GUARD = 2 ** 20

# interned Field instances keyed by (p, m, modulus)
_FIELD_CACHE: dict[tuple, "Field"] = {}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (ascending coefficient tuples)
# ---------------------------------------------------------------------------

def _poly_trim(v):
    i = len(v)
    while i > 0 and v[i - 1] == 0:
        i -= 1
    return tuple(v[:i])


def _poly_mod(num, den, p):
    """Remainder of num by monic-normalizable den over F_p."""
    num = list(num)
    dd = len(_poly_trim(den)) - 1
    den = _poly_trim(den)
    inv_lead = pow(den[-1], -1, p)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c == 0:
            continue
        f = (c * inv_lead) % p
        for j in range(dd + 1):
            num[i - dd + j] = (num[i - dd + j] - f * den[j]) % p
    return _poly_trim(num)


def _poly_is_divisible(num, den, p) -> bool:
    return len(_poly_mod(num, den, p)) == 0


def _modulus_is_irreducible(modulus, p, m) -> bool:
    """Exhaustive trial division by every monic polynomial of degree
    1..m//2; sufficient since any factorization has a factor in that range."""
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for idx in range(p ** d):
            cand = _digits(idx, p, d) + (1,)
            if _poly_is_divisible(modulus, cand, p):
                return False
    return True


def _digits(n: int, p: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        out.append(n % p)
        n //= p
    return tuple(out)


class FieldElement:
    """Element of F_{p^m}, coefficients w.r.t. the power basis of the modulus."""

    __slots__ = ("field", "coeffs", "index")

    def __init__(self, field: "Field", coeffs: tuple[int, ...], index: int):
        self.field = field
        self.coeffs = coeffs
        self.index = index

    def __repr__(self):
        return f"FieldElement({list(self.coeffs)} in GF({self.field.p}^{self.field.m}))"

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field is other.field and self.index == other.index

    def __hash__(self):
        return hash((id(self.field), self.index))

    def __bool__(self):
        return self.index != 0

    def __add__(self, other):
        f = self.field
        a, b = self.coeffs, self._co(other)
        return f._by_coeffs[tuple((x + y) % f.p for x, y in zip(a, b))]

    def __sub__(self, other):
        f = self.field
        a, b = self.coeffs, self._co(other)
        return f._by_coeffs[tuple((x - y) % f.p for x, y in zip(a, b))]

    def __neg__(self):
        f = self.field
        return f._by_coeffs[tuple((-x) % f.p for x in self.coeffs)]

    def __mul__(self, other):
        f = self.field
        if isinstance(other, int):
            other = other % f.p
            return f._by_coeffs[tuple((x * other) % f.p for x in self.coeffs)]
        return f._mul_elem(self, other)

    __radd__ = __add__
    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self.field._inverse(self._as_elem(other))

    def __pow__(self, e: int):
        return self.field._pow(self, e)

    def _co(self, other):
        return self._as_elem(other).coeffs

    def _as_elem(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements from different fields")
            return other
        if isinstance(other, int):
            return self.field.scalar(other)
        raise TypeError(f"cannot coerce {other!r} into field element")

    def is_zero(self) -> bool:
        return self.index == 0

    def in_prime_subfield(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_prime_int(self) -> int:
        """Value in [0, p) of an element of the prime subfield."""
        if not self.in_prime_subfield():
            raise ValueError(f"{self!r} is not in the prime subfield")
        return self.coeffs[0]

    def trace(self, s: int = 1) -> "FieldElement":
        return trace(self.field, self, s)


class Field:
    """The ambient field F_{p^m} with canonical element enumeration.

    Construct through :func:`make_field`, which validates the modulus and
    interns the instance so equal parameters yield the same object.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus
        self._build_elements()
        self._trace_ints: list[int] | None = None
        self._trace_bilinear: list[tuple[int, ...]] | None = None
        self._generator: FieldElement | None = None

    # -- construction ------------------------------------------------------

    def _build_elements(self):
        p, m = self.p, self.m
        # reduction of x^k for k in [m, 2m-2]
        red = []
        cur = tuple((-c) % p for c in self.modulus[:m])  # x^m
        for _ in range(m, 2 * m - 1):
            red.append(cur)
            nxt = [0] * m
            for i, c in enumerate(cur):
                if c == 0:
                    continue
                if i + 1 < m:
                    nxt[i + 1] = (nxt[i + 1] + c) % p
                else:
                    hi = red[0]
                    for j in range(m):
                        nxt[j] = (nxt[j] + c * hi[j]) % p
            cur = tuple(nxt)
        self._reduction = red
        self.elements: list[FieldElement] = []
        self._by_coeffs: dict[tuple[int, ...], FieldElement] = {}
        for idx in range(self.q):
            coeffs = _digits(idx, p, m)
            e = FieldElement(self, coeffs, idx)
            self.elements.append(e)
            self._by_coeffs[coeffs] = e
        self.zero = self.elements[0]
        self.one = self.elements[1]

    def __repr__(self):
        return f"Field(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    # -- element factories ---------------------------------------------------

    def element(self, coeffs: Iterable[int]) -> FieldElement:
        v = [c % self.p for c in coeffs]
        if len(v) > self.m:
            if any(v[self.m:]):
                raise ValueError("coefficient vector longer than the degree")
            v = v[: self.m]
        v += [0] * (self.m - len(v))
        return self._by_coeffs[tuple(v)]

    def from_index(self, idx: int) -> FieldElement:
        return self.elements[idx]

    def scalar(self, c: int) -> FieldElement:
        """Embed an integer as an element of the prime subfield."""
        return self.elements[c % self.p]

    def power_basis(self) -> list[FieldElement]:
        """1, x, ..., x^(m-1): the F_p-basis every coordinate map uses."""
        return [self.elements[self.p ** i] for i in range(self.m)]

    # -- arithmetic kernels ---------------------------------------------------

    def _mul_elem(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p, m = self.p, self.m
        ac, bc = a.coeffs, b.coeffs
        conv = [0] * (2 * m - 1)
        for i, x in enumerate(ac):
            if x == 0:
                continue
            for j, y in enumerate(bc):
                conv[i + j] += x * y
        out = [c % p for c in conv[:m]]
        for k in range(m, 2 * m - 1):
            c = conv[k] % p
            if c == 0:
                continue
            row = self._reduction[k - m]
            for j in range(m):
                out[j] = (out[j] + c * row[j]) % p
        return self._by_coeffs[tuple(out)]

    def _pow(self, a: FieldElement, e: int) -> FieldElement:
        if e < 0:
            a = self._inverse(a)
            e = -e
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self._mul_elem(result, base)
            base = self._mul_elem(base, base)
            e >>= 1
        return result

    def _inverse(self, a: FieldElement) -> FieldElement:
        if a.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        return self._pow(a, self.q - 2)

    def frobenius(self, a: FieldElement, t: int = 1) -> FieldElement:
        return self._pow(a, self.p ** (t % self.m))

    def generator(self) -> FieldElement:
        """Multiplicative generator of smallest canonical index (cached)."""
        if self._generator is None:
            target = self.q - 1
            for e in self.elements[1:]:
                x, order = e, 1
                while x != self.one:
                    x = self._mul_elem(x, e)
                    order += 1
                if order == target:
                    self._generator = e
                    break
        return self._generator

    # -- trace machinery -------------------------------------------------------

    def trace_int(self, a: FieldElement) -> int:
        """Absolute trace Tr_{q/p}(a) as an integer in [0, p)."""
        if self._trace_ints is None:
            self._trace_ints = [
                trace(self, e, 1).coeffs[0] for e in self.elements
            ]
        return self._trace_ints[a.index]

    def trace_bilinear(self, a: FieldElement, b: FieldElement) -> int:
        """Tr_{q/p}(a*b) in [0, p) via the cached Gram matrix of the power
        basis; avoids a field multiplication in transform-heavy loops."""
        if self._trace_bilinear is None:
            gram = []
            for i in range(self.m):
                ei = self.elements[self.p ** i] if self.m > 1 else self.one
                row = []
                for j in range(self.m):
                    ej = self.elements[self.p ** j] if self.m > 1 else self.one
                    row.append(self.trace_int(self._mul_elem(ei, ej)))
                gram.append(tuple(row))
            # per-element contraction: vec[b][i] = sum_j gram[i][j]*b_j
            self._trace_bilinear = [
                tuple(
                    sum(gram[i][j] * e.coeffs[j] for j in range(self.m)) % self.p
                    for i in range(self.m)
                )
                for e in self.elements
            ]
        vb = self._trace_bilinear[b.index]
        return sum(x * y for x, y in zip(a.coeffs, vb)) % self.p


def make_field(p: int, m: int, modulus: Sequence[int] | None = None) -> Field:
    """Construct (or fetch the interned) F_{p^m}.

    When no modulus is given the lexicographically smallest monic
    irreducible of degree m is selected, so builds are deterministic
    without external polynomial tables.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if not isinstance(m, int) or m < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
    if p ** m > FIELD_SIZE_GUARD:
        raise FieldTooLarge(f"p^m={p ** m} exceeds the guard {FIELD_SIZE_GUARD}")
    if modulus is not None:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise DegreeMismatch(
                f"modulus must be monic of degree {m}, got {list(modulus)}"
            )
        if not _modulus_is_irreducible(mod, p, m):
            raise ReducibleModulus(f"{list(modulus)} factors over GF({p})")
    else:
        mod = None
        for idx in range(p ** m):
            cand = _digits(idx, p, m) + (1,)
            if _modulus_is_irreducible(cand, p, m):
                mod = cand
                break
        assert mod is not None
    key = (p, m, mod)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(p, m, mod)
    return _FIELD_CACHE[key]


def parse_field_spec(spec: str) -> Field:
    """Parse ``p=<int>,m=<int>[,poly=<c0,c1,...,1>]`` into a field."""
    parts = spec.replace(" ", "").split(",")
    kv: dict[str, str] = {}
    poly: list[int] | None = None
    i = 0
    while i < len(parts):
        part = parts[i]
        if "=" not in part:
            raise ValueError(f"bad field spec component {part!r}")
        k, v = part.split("=", 1)
        if k == "poly":
            poly = [int(v)]
            i += 1
            while i < len(parts) and "=" not in parts[i]:
                poly.append(int(parts[i]))
                i += 1
            continue
        kv[k] = v
        i += 1
    if "p" not in kv or "m" not in kv:
        raise ValueError(f"field spec {spec!r} needs p= and m=")
    return make_field(int(kv["p"]), int(kv["m"]), poly)


def format_field_spec(field: Field) -> str:
    return f"p={field.p},m={field.m},poly={','.join(map(str, field.modulus))}"


def trace(ctx: Field, x: FieldElement, s: int = 1) -> FieldElement:
    """Relative trace Tr_{p^m/p^s}(x) = sum of x^(p^(s*i)); lies in F_{p^s}."""
    if ctx.m % s != 0:
        raise NotASubfield(f"s={s} does not divide m={ctx.m}")
    acc = ctx.zero
    power = x
    for _ in range(ctx.m // s):
        acc = acc + power
        power = ctx._pow(power, ctx.p ** s)
    assert ctx._pow(acc, ctx.p ** s) == acc, "trace left the subfield"
    return acc


def trace_kernel(ctx: Field) -> list[FieldElement]:
    """All p^(m-1) elements of ker(Tr_{q/p}); cross-checked against the
    set of values alpha^p - alpha, which the kernel equals exactly."""
    kernel = [e for e in ctx.elements if ctx.trace_int(e) == 0]
    image = {ctx._pow(a, ctx.p) - a for a in ctx.elements}
    assert set(kernel) == image, "trace kernel mismatch with alpha^p - alpha"
    return kernel


# ---------------------------------------------------------------------------
# subfields
# ---------------------------------------------------------------------------

_SUBFIELD_CACHE: dict[tuple, tuple] = {}


def subfield(ctx: Field, s: int) -> tuple[Field, dict, dict]:
    """The subfield F_{p^s} of ctx as a standalone field plus embedding maps.

    Returns ``(sub, embed, project)`` where ``embed[e]`` is the image in ctx
    of the subfield element e and ``project`` inverts it on the image.  The
    embedding sends the power-basis root of sub's modulus to its smallest
    canonical root inside ctx, so it is deterministic.
    """
    if ctx.m % s != 0:
        raise NotASubfield(f"s={s} does not divide m={ctx.m}")
    key = (id(ctx), s)
    if key in _SUBFIELD_CACHE:
        return _SUBFIELD_CACHE[key]
    if s == ctx.m:
        ident = {e: e for e in ctx.elements}
        _SUBFIELD_CACHE[key] = (ctx, ident, dict(ident))
        return _SUBFIELD_CACHE[key]
    sub = make_field(ctx.p, s)
    root = None
    for cand in ctx.elements:
        acc = ctx.zero
        power = ctx.one
        for c in sub.modulus:
            if c:
                acc = acc + power * c
            power = ctx._mul_elem(power, cand)
        if acc.is_zero():
            root = cand
            break
    assert root is not None, "irreducible subfield modulus must split in ctx"
    embed: dict[FieldElement, FieldElement] = {}
    for e in sub.elements:
        img = ctx.zero
        power = ctx.one
        for c in e.coeffs:
            if c:
                img = img + power * c
            power = ctx._mul_elem(power, root)
        embed[e] = img
    project = {img: e for e, img in embed.items()}
    assert len(project) == sub.q, "subfield embedding must be injective"
    _SUBFIELD_CACHE[key] = (sub, embed, project)
    return _SUBFIELD_CACHE[key]


def relative_trace_to_subfield(ctx: Field, x: FieldElement, s: int) -> FieldElement:
    """Tr_{p^m/p^s}(x) projected into the standalone F_{p^s} context."""
    _, _, project = subfield(ctx, s)
    return project[trace(ctx, x, s)]


# ---------------------------------------------------------------------------
# Z[zeta_p]
# ---------------------------------------------------------------------------

class CyclotomicInt:
    """Element sum c_i zeta_p^i of Z[zeta_p] in canonical form.

    The canonical representative has c_{p-1} = 0 (eliminated through
    1 + zeta + ... + zeta^{p-1} = 0), which makes equality a plain
    coefficient comparison.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[int]):
        self.p = p
        self.coeffs = _canonical_cyclo(p, coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "CyclotomicInt":
        return cls(p, [0] * p)

    @classmethod
    def from_int(cls, p: int, n: int) -> "CyclotomicInt":
        v = [0] * p
        v[0] = n
        return cls(p, v)

    @classmethod
    def zeta_power(cls, p: int, e: int) -> "CyclotomicInt":
        v = [0] * p
        v[e % p] = 1
        return cls(p, v)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        return CyclotomicInt(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._coerce(other)
        return CyclotomicInt(self.p, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CyclotomicInt(self.p, [-a for a in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[(i + j) % p] += a * b
        return CyclotomicInt(p, out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("Z[zeta_p] has no general inverses")
        result = CyclotomicInt.from_int(self.p, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "CyclotomicInt":
        """Complex conjugation zeta^i -> zeta^{p-i}."""
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            out[(p - i) % p] += a
        return CyclotomicInt(p, out)

    def abs_squared(self) -> "CyclotomicInt":
        return self * self.conjugate()

    # -- predicates / views --------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def complex_value(self) -> complex:
        """Float view for display; never used in any verification."""
        import cmath

        zeta = cmath.exp(2j * cmath.pi / self.p)
        return sum(c * zeta ** i for i, c in enumerate(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.p, other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"CyclotomicInt(p={self.p}, {list(self.coeffs)})"

    def _coerce(self, other):
        if isinstance(other, int):
            return CyclotomicInt.from_int(self.p, other)
        if isinstance(other, CyclotomicInt):
            if other.p != self.p:
                raise ValueError("mixed cyclotomic orders")
            return other
        raise TypeError(f"cannot coerce {other!r}")


def _canonical_cyclo(p: int, coeffs: Sequence[int]) -> tuple[int, ...]:
    folded = [0] * p
    for i, c in enumerate(coeffs):
        folded[i % p] += c
    last = folded[p - 1]
    if last:
        folded = [c - last for c in folded]
    return tuple(folded)


def cyclo_canonicalize(p: int, coeffs: Sequence[int]) -> CyclotomicInt:
    """Reduce a raw integer vector of length >= p to canonical form."""
    return CyclotomicInt(p, coeffs)


def zeta(p: int, e: int) -> CyclotomicInt:
    return CyclotomicInt.zeta_power(p, e)


def p_star(p: int) -> int:
    """(-1/p) * p, the discriminant-twisted prime."""
    return p if p % 4 == 1 else -p


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def quadratic_gauss_sum(p: int) -> CyclotomicInt:
    """G = sum over x in F_p of zeta^(x^2); exact representative of sqrt(p*)."""
    if p == 2:
        raise EvenCharacteristic("no Gauss-sum constant in characteristic 2")
    v = [0] * p
    for x in range(p):
        v[(x * x) % p] += 1
    g = CyclotomicInt(p, v)
    assert g * g == CyclotomicInt.from_int(p, p_star(p)), "G^2 must equal p*"
    return g


def gauss_sum_power(p: int, m: int) -> CyclotomicInt:
    """G^m where G is the quadratic Gauss sum of F_p."""
    return quadratic_gauss_sum(p) ** m
