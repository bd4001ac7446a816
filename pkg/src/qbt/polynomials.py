"""Homogeneous multivariate polynomials and matrices of them.

Monomials are exponent tuples of length n+1 (variables x_0..x_n).  The
canonical basis ordering everywhere is graded-lex: within one degree,
exponent tuples sorted lexicographically descending, so that for degree
one the basis reads x_0, x_1, ..., x_n.
"""

from itertools import combinations_with_replacement
from math import comb

from .matrices import Matrix


def monomial_basis(n: int, d: int):
    """All degree-d monomials in x_0..x_n, graded-lex order; length C(n+d, d)."""
    if n < 1 or d < 0:
        raise ValueError("monomial_basis needs n >= 1, d >= 0")
    monos = []
    for combo in combinations_with_replacement(range(n + 1), d):
        e = [0] * (n + 1)
        for i in combo:
            e[i] += 1
        monos.append(tuple(e))
    monos.sort(reverse=True)
    assert len(monos) == comb(n + d, d)
    return monos


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_value(field, mono, point):
    v = field.one
    for e, x in zip(mono, point):
        if e:
            v = field.mul(v, x**e if field.kind == "q" else pow(x, e, field.p))
    return v


class HomogeneousPoly:
    """A homogeneous polynomial of fixed degree; zero coefficients dropped."""

    __slots__ = ("field", "n", "degree", "terms")

    def __init__(self, field, n, degree, terms):
        self.field = field
        self.n = n
        self.degree = degree
        clean = {}
        for mono, c in terms.items():
            if len(mono) != n + 1:
                raise ValueError(f"monomial {mono} has wrong arity for n={n}")
            if sum(mono) != degree:
                raise ValueError(f"monomial {mono} has degree {sum(mono)}, expected {degree}")
            if not field.is_zero(c):
                clean[mono] = c
        self.terms = clean

    @classmethod
    def zero(cls, field, n, degree):
        return cls(field, n, degree, {})

    @classmethod
    def variable(cls, field, n, i):
        e = [0] * (n + 1)
        e[i] = 1
        return cls(field, n, 1, {tuple(e): field.one})

    @classmethod
    def monomial(cls, field, n, mono, coeff=None):
        return cls(field, n, sum(mono), {tuple(mono): coeff if coeff is not None else field.one})

    @classmethod
    def constant(cls, field, n, c):
        return cls(field, n, 0, {tuple([0] * (n + 1)): c})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, HomogeneousPoly)
            and self.n == other.n
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __add__(self, other):
        self._compat(other)
        f = self.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = f.add(terms.get(m, f.zero), c)
        return HomogeneousPoly(f, self.n, self.degree, terms)

    def __sub__(self, other):
        self._compat(other)
        f = self.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = f.sub(terms.get(m, f.zero), c)
        return HomogeneousPoly(f, self.n, self.degree, terms)

    def __neg__(self):
        f = self.field
        return HomogeneousPoly(f, self.n, self.degree, {m: f.neg(c) for m, c in self.terms.items()})

    def scale(self, s):
        f = self.field
        if f.is_zero(s):
            return HomogeneousPoly.zero(f, self.n, self.degree)
        return HomogeneousPoly(f, self.n, self.degree, {m: f.mul(s, c) for m, c in self.terms.items()})

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")
        f = self.field
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                prev = terms.get(m)
                prod = f.mul(c1, c2)
                terms[m] = prod if prev is None else f.add(prev, prod)
        return HomogeneousPoly(f, self.n, self.degree + other.degree, terms)

    def evaluate(self, point):
        f = self.field
        total = f.zero
        for mono, c in self.terms.items():
            total = f.add(total, f.mul(c, monomial_value(f, mono, point)))
        return total

    def coefficients_on(self, basis):
        """Coefficient vector with respect to an ordered monomial basis."""
        return [self.terms.get(m, self.field.zero) for m in basis]

    def _compat(self, other):
        if self.n != other.n or self.degree != other.degree:
            raise ValueError("incompatible homogeneous polynomials")

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(m) if e)
            parts.append(f"({c}){mono or '1'}")
        return " + ".join(parts)


class PolyMatrix:
    """Matrix of homogeneous polynomials with twist tags on rows and columns.

    Entry (r, c) is homogeneous of degree row_twists[r] - col_twists[c],
    realizing a map of twisted free sheaves  (+) O(col_twist) -> (+) O(row_twist).
    Evaluating at a point of P^n yields an exact scalar matrix.
    """

    __slots__ = ("field", "n", "row_twists", "col_twists", "entries")

    def __init__(self, field, n, row_twists, col_twists, entries):
        self.field = field
        self.n = n
        self.row_twists = tuple(row_twists)
        self.col_twists = tuple(col_twists)
        if len(entries) != len(self.row_twists):
            raise ValueError("entry rows do not match row twists")
        for r, row in enumerate(entries):
            if len(row) != len(self.col_twists):
                raise ValueError("entry columns do not match col twists")
            for c, p in enumerate(row):
                want = self.row_twists[r] - self.col_twists[c]
                if p.degree != want:
                    raise ValueError(
                        f"entry ({r},{c}) has degree {p.degree}, twists force {want}"
                    )
                if p.n != n:
                    raise ValueError("entry ambient dimension mismatch")
        self.entries = [list(row) for row in entries]

    @property
    def rows(self):
        return len(self.row_twists)

    @property
    def cols(self):
        return len(self.col_twists)

    def evaluate(self, point):
        """Entrywise evaluation at a point of P^n (not all coordinates zero)."""
        if len(point) != self.n + 1:
            raise ValueError(f"point needs {self.n + 1} coordinates")
        if all(self.field.is_zero(x) for x in point):
            raise ValueError("zero vector is not a projective point")
        data = [[p.evaluate(point) for p in row] for row in self.entries]
        return Matrix(self.field, self.rows, self.cols, data)

    def entry(self, r, c):
        return self.entries[r][c]

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.row_twists == other.row_twists
            and self.col_twists == other.col_twists
            and self.entries == other.entries
        )


def expand_map(coeffs, basis, row_twist=None, col_twist=0):
    """Assemble sum_i coeffs[i] (x) basis[i] into a PolyMatrix.

    coeffs: equal-shaped scalar Matrices; basis: equal-degree polynomials.
    Twist tags default to (degree, 0); bundle code passes the real twists.
    """
    if len(coeffs) != len(basis):
        raise ValueError(f"{len(coeffs)} coefficient matrices vs {len(basis)} basis elements")
    if not coeffs:
        raise ValueError("empty expansion")
    field = coeffs[0].field
    rows, cols = coeffs[0].rows, coeffs[0].cols
    n = basis[0].n
    d = basis[0].degree
    for m in coeffs:
        if m.rows != rows or m.cols != cols:
            raise ValueError("coefficient matrices differ in shape")
    for b in basis:
        if b.degree != d or b.n != n:
            raise ValueError("basis elements differ in degree or arity")
    if row_twist is None:
        row_twist = d + col_twist
    if row_twist - col_twist != d:
        raise ValueError("twist tags inconsistent with basis degree")
    entries = []
    for r in range(rows):
        row = []
        for c in range(cols):
            p = HomogeneousPoly.zero(field, n, d)
            for m, b in zip(coeffs, basis):
                coeff = m.data[r][c]
                if not field.is_zero(coeff):
                    p = p + b.scale(coeff)
            row.append(p)
        entries.append(row)
    return PolyMatrix(field, n, [row_twist] * rows, [col_twist] * cols, entries)
