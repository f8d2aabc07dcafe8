"""Linear-code core over F_p or a subfield alphabet F_q.

Generator matrices are kept in reduced row echelon form, which doubles as
the canonical form: two codes are equal iff their RREF generators are.
Duals come from nullspace computation rather than literal Gram-Schmidt;
over finite fields self-orthogonal vectors break orthogonalization while
the nullspace achieves the same O(n^3) bound.

All weight queries are exhaustive enumerations guarded by a configurable
codeword cap.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, Sequence

from .algebra import Field, FieldElement, make_field
from .errors import EmptyLength, RaggedRows, TooLarge, ZeroCode

DEFAULT_GUARD = 2 ** 22


def enumeration_guard(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("WALSHCODES_GUARD")
    return int(env) if env else DEFAULT_GUARD


# ---------------------------------------------------------------------------
# dense linear algebra over a Field
# ---------------------------------------------------------------------------

def rref(rows: Sequence[Sequence[FieldElement]], field: Field):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if not mat[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c] ** (-1)
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(row) for row in mat[:r]], pivots


def nullspace(rows: Sequence[Sequence[FieldElement]], field: Field, n: int):
    """Basis of {v : rows @ v = 0} in F^n, one vector per free column."""
    red, pivots = rref(rows, field) if rows else ([], [])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * n
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(tuple(v))
    return basis


def matrix_rank(rows: Sequence[Sequence[FieldElement]], field: Field) -> int:
    red, _ = rref(rows, field)
    return len(red)


class LinearCode:
    """An [n, k] linear code with canonical RREF generator."""

    __slots__ = ("base", "n", "generator", "provenance")

    def __init__(self, base: Field, n: int, generator, provenance: str | None = None):
        self.base = base
        self.n = n
        self.generator = tuple(tuple(row) for row in generator)
        self.provenance = provenance

    @property
    def k(self) -> int:
        return len(self.generator)

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over GF({self.base.p}^{self.base.m}))"

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.base == other.base
            and self.n == other.n
            and self.generator == other.generator
        )

    def __hash__(self):
        return hash((self.base, self.n, self.generator))

    # -- enumeration ---------------------------------------------------------

    def size(self) -> int:
        return self.base.q ** self.k

    def codewords(self, guard: int | None = None) -> Iterator[tuple[FieldElement, ...]]:
        cap = enumeration_guard(guard)
        if self.size() > cap:
            raise TooLarge(f"{self.size()} codewords exceed the guard {cap}")
        zero = tuple([self.base.zero] * self.n)

        def span(rows):
            if not rows:
                yield zero
                return
            head = rows[0]
            scaled = [tuple(c * x for x in head) for c in self.base.elements]
            for w in span(rows[1:]):
                for sv in scaled:
                    yield tuple(a + b for a, b in zip(w, sv))

        return span(list(self.generator))

    def contains(self, word: Sequence[FieldElement]) -> bool:
        if len(word) != self.n:
            return False
        red, pivots = self.generator, [
            next(i for i, x in enumerate(row) if not x.is_zero())
            for row in self.generator
        ]
        residue = list(word)
        for row, pc in zip(red, pivots):
            f = residue[pc]
            if not f.is_zero():
                residue = [a - f * b for a, b in zip(residue, row)]
        return all(x.is_zero() for x in residue)


def from_rows(
    base: Field,
    rows: Iterable[Sequence[FieldElement | int]],
    n: int | None = None,
    provenance: str | None = None,
) -> LinearCode:
    """Span of the given rows; dependent rows are dropped by the RREF."""
    mat = []
    for row in rows:
        mat.append([x if isinstance(x, FieldElement) else base.scalar(x) for x in row])
    if mat:
        lengths = {len(r) for r in mat}
        if len(lengths) != 1:
            raise RaggedRows(f"row lengths {sorted(lengths)}")
        length = lengths.pop()
        if n is not None and n != length:
            raise RaggedRows(f"declared n={n} but rows have length {length}")
        n = length
    if n is None or n <= 0:
        raise EmptyLength("a code needs positive length")
    red, _ = rref(mat, base)
    return LinearCode(base, n, red, provenance)


def zero_code(base: Field, n: int) -> LinearCode:
    if n <= 0:
        raise EmptyLength("a code needs positive length")
    return LinearCode(base, n, ())


def full_code(base: Field, n: int) -> LinearCode:
    rows = [
        tuple(base.one if j == i else base.zero for j in range(n)) for i in range(n)
    ]
    return LinearCode(base, n, rows)


def dual(code: LinearCode) -> LinearCode:
    """Nullspace of the generator as an [n, n-k] code."""
    basis = nullspace(code.generator, code.base, code.n)
    red, _ = rref(basis, code.base)
    return LinearCode(code.base, code.n, red, provenance="dual")


def sum_code(a: LinearCode, b: LinearCode) -> LinearCode:
    _check_same_space(a, b)
    red, _ = rref(list(a.generator) + list(b.generator), a.base)
    return LinearCode(a.base, a.n, red)


def intersect(a: LinearCode, b: LinearCode) -> LinearCode:
    """A cap B = (A^perp + B^perp)^perp."""
    _check_same_space(a, b)
    return dual(sum_code(dual(a), dual(b)))


def hull(code: LinearCode) -> LinearCode:
    return intersect(code, dual(code))


def hull_dim(code: LinearCode) -> int:
    return hull(code).k


def is_lcd(code: LinearCode) -> bool:
    return hull_dim(code) == 0


def _check_same_space(a: LinearCode, b: LinearCode):
    if a.base != b.base or a.n != b.n:
        raise ValueError("codes live in different ambient spaces")


# ---------------------------------------------------------------------------
# weight queries (exhaustive, exact)
# ---------------------------------------------------------------------------

class WeightDistribution:
    """Map weight -> codeword count, including A_0 = 1."""

    def __init__(self, counts: dict[int, int], n: int, size: int):
        self.counts = dict(sorted(counts.items()))
        self.n = n
        assert self.counts.get(0) == 1
        assert sum(self.counts.values()) == size
        self.size = size

    def __eq__(self, other):
        if isinstance(other, dict):
            return self.counts == other
        if isinstance(other, WeightDistribution):
            return self.counts == other.counts
        return NotImplemented

    def __repr__(self):
        return f"WeightDistribution({self.counts})"

    def nonzero_weights(self) -> set[int]:
        return {w for w in self.counts if w > 0}

    def multiset(self) -> list[int]:
        out = []
        for w, c in self.counts.items():
            out.extend([w] * c)
        return out


class CompleteWeightEnumerator:
    """Census of codewords by symbol-composition vector."""

    def __init__(self, counts: dict[tuple[int, ...], int], n: int, size: int):
        self.counts = dict(counts)
        self.n = n
        assert all(sum(comp) == n for comp in counts)
        assert sum(counts.values()) == size

    def __eq__(self, other):
        if isinstance(other, dict):
            return self.counts == other
        if isinstance(other, CompleteWeightEnumerator):
            return self.counts == other.counts
        return NotImplemented

    def __repr__(self):
        return f"CompleteWeightEnumerator({self.counts})"

    def hamming_marginal(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for comp, c in self.counts.items():
            w = self.n - comp[0]
            out[w] = out.get(w, 0) + c
        return dict(sorted(out.items()))


def weight_distribution(code: LinearCode, guard: int | None = None) -> WeightDistribution:
    counts: dict[int, int] = {}
    for word in code.codewords(guard):
        w = sum(1 for x in word if not x.is_zero())
        counts[w] = counts.get(w, 0) + 1
    return WeightDistribution(counts, code.n, code.size())


def complete_weight_enumerator(
    code: LinearCode, guard: int | None = None
) -> CompleteWeightEnumerator:
    counts: dict[tuple[int, ...], int] = {}
    q = code.base.q
    for word in code.codewords(guard):
        comp = [0] * q
        for x in word:
            comp[x.index] += 1
        key = tuple(comp)
        counts[key] = counts.get(key, 0) + 1
    return CompleteWeightEnumerator(counts, code.n, code.size())


def min_distance(code: LinearCode, guard: int | None = None) -> int:
    if code.k == 0:
        raise ZeroCode("minimum distance of the zero code is undefined")
    best = code.n + 1
    for word in code.codewords(guard):
        w = sum(1 for x in word if not x.is_zero())
        if 0 < w < best:
            best = w
    return best


def is_mds(code: LinearCode, guard: int | None = None) -> bool:
    return min_distance(code, guard) == code.n - code.k + 1


# ---------------------------------------------------------------------------
# scalar restriction
# ---------------------------------------------------------------------------

def restrict_to_prime_subfield(code: LinearCode) -> LinearCode:
    """V cap F_p^n for the F_q-linear space V spanned by the code.

    Each F_q-linear parity check expands into m F_p-linear constraints
    (coordinate-wise in the power basis), solved over F_p.
    """
    q_field = code.base
    if q_field.m == 1:
        return code
    p_field = make_field(q_field.p, 1)
    checks = dual(code).generator
    expanded = []
    for row in checks:
        for t in range(q_field.m):
            expanded.append([p_field.scalar(x.coeffs[t]) for x in row])
    basis = nullspace(expanded, p_field, code.n)
    red, _ = rref(basis, p_field)
    return LinearCode(p_field, code.n, red, provenance="prime-restriction")
