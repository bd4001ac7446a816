"""Exterior algebra over V = k^(2p+1) and its dual.

Elements are signed combinations of sorted index subsets of {0..2p}.
The variance tag keeps Lambda^k V and Lambda^k V* apart: wedging mixes
only like with like, contraction eats a V-vector into a dual element,
and the volume-form identifications move between the two sides.  The
sign conventions are fixed once here; the fiber model downstream is
validated against the symbolic wedge through these exact conventions.
"""

from .matrices import Matrix

ON_V = "V"
ON_V_DUAL = "V*"


def merge_sign(s, t):
    """Sign of sorting the concatenation of disjoint sorted tuples s, t;
    None when they intersect (the wedge vanishes)."""
    inversions = 0
    for a in s:
        for b in t:
            if a == b:
                return None
            if a > b:
                inversions += 1
    return -1 if inversions % 2 else 1


def position_sign(subset, j):
    """(-1)^(position of j in the sorted subset)."""
    return -1 if subset.index(j) % 2 else 1


class ExteriorElement:
    __slots__ = ("field", "dim", "grade", "variance", "terms")

    def __init__(self, field, dim, grade, variance, terms):
        if variance not in (ON_V, ON_V_DUAL):
            raise ValueError(f"bad variance {variance!r}")
        clean = {}
        for subset, c in terms.items():
            subset = tuple(subset)
            if len(subset) != grade or list(subset) != sorted(set(subset)):
                raise ValueError(f"index set {subset} is not a sorted {grade}-subset")
            if subset and (subset[0] < 0 or subset[-1] >= dim):
                raise ValueError(f"index set {subset} out of range for dim {dim}")
            if not field.is_zero(c):
                clean[subset] = c
        self.field = field
        self.dim = dim
        self.grade = grade
        self.variance = variance
        self.terms = clean

    @classmethod
    def zero(cls, field, dim, grade, variance=ON_V):
        return cls(field, dim, grade, variance, {})

    @classmethod
    def basis_vector(cls, field, dim, i, variance=ON_V):
        return cls(field, dim, 1, variance, {(i,): field.one})

    @classmethod
    def monomial(cls, field, dim, subset, variance=ON_V, coeff=None):
        return cls(field, dim, len(subset), variance,
                   {tuple(subset): coeff if coeff is not None else field.one})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, ExteriorElement)
            and self.dim == other.dim
            and self.grade == other.grade
            and self.variance == other.variance
            and self.terms == other.terms
        )

    def __add__(self, other):
        self._compat(other)
        f = self.field
        terms = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = f.add(terms.get(s, f.zero), c)
        return ExteriorElement(f, self.dim, self.grade, self.variance, terms)

    def __sub__(self, other):
        self._compat(other)
        f = self.field
        terms = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = f.sub(terms.get(s, f.zero), c)
        return ExteriorElement(f, self.dim, self.grade, self.variance, terms)

    def __neg__(self):
        f = self.field
        return ExteriorElement(
            f, self.dim, self.grade, self.variance,
            {s: f.neg(c) for s, c in self.terms.items()},
        )

    def scale(self, c):
        f = self.field
        return ExteriorElement(
            f, self.dim, self.grade, self.variance,
            {s: f.mul(c, x) for s, x in self.terms.items()},
        )

    def _compat(self, other):
        if (
            self.dim != other.dim
            or self.grade != other.grade
            or self.variance != other.variance
        ):
            raise ValueError("incompatible exterior elements")

    def __repr__(self):
        if not self.terms:
            return "0"
        star = "*" if self.variance == ON_V_DUAL else ""
        parts = []
        for s in sorted(self.terms):
            c = self.terms[s]
            word = "^".join(f"x{star}{i}" for i in s) or "1"
            parts.append(f"({c}){word}")
        return " + ".join(parts)


def wedge(u: ExteriorElement, v: ExteriorElement) -> ExteriorElement:
    """Bilinear wedge; e_S ^ e_T = merge_sign(S,T) e_{S u T} on disjoint sets."""
    if u.dim != v.dim or u.variance != v.variance:
        raise ValueError("wedge needs matching dimension and variance")
    f = u.field
    terms = {}
    for s, cs in u.terms.items():
        for t, ct in v.terms.items():
            sign = merge_sign(s, t)
            if sign is None:
                continue
            merged = tuple(sorted(s + t))
            c = f.mul(cs, ct)
            if sign < 0:
                c = f.neg(c)
            prev = terms.get(merged)
            terms[merged] = c if prev is None else f.add(prev, c)
    return ExteriorElement(f, u.dim, u.grade + v.grade, u.variance, terms)


def contract(vector, eta: ExteriorElement) -> ExteriorElement:
    """Interior product of a V-vector (coordinate list) into a dual element:
    iota_v(x*_S) = sum_{j in S} position_sign v_j x*_{S minus j}."""
    if eta.variance != ON_V_DUAL:
        raise ValueError("contraction acts on dual elements")
    if eta.grade < 1:
        raise ValueError("contraction needs grade >= 1")
    if len(vector) != eta.dim:
        raise ValueError("vector length must match the ambient dimension")
    f = eta.field
    terms = {}
    for s, c in eta.terms.items():
        for pos, j in enumerate(s):
            vj = vector[j]
            if f.is_zero(vj):
                continue
            rest = s[:pos] + s[pos + 1 :]
            val = f.mul(vj, c)
            if pos % 2:
                val = f.neg(val)
            prev = terms.get(rest)
            terms[rest] = val if prev is None else f.add(prev, val)
    return ExteriorElement(f, eta.dim, eta.grade - 1, ON_V_DUAL, terms)


def pairing(w: ExteriorElement, eta: ExteriorElement):
    """Canonical pairing Lambda^k V x Lambda^k V* -> k on matching subsets."""
    if w.variance != ON_V or eta.variance != ON_V_DUAL:
        raise ValueError("pairing takes (element of V side, element of dual side)")
    if w.dim != eta.dim or w.grade != eta.grade:
        raise ValueError("pairing needs equal dimension and grade")
    f = w.field
    total = f.zero
    for s, c in w.terms.items():
        other = eta.terms.get(s)
        if other is not None:
            total = f.add(total, f.mul(c, other))
    return total


def _complement(dim, subset):
    inside = set(subset)
    return tuple(i for i in range(dim) if i not in inside)


def volume_iso(omega: ExteriorElement) -> ExteriorElement:
    """Identify Lambda^(dim-1) V with V*: e_S -> merge_sign(S, S^c) x*_j
    where {j} is the complement of S."""
    if omega.variance != ON_V or omega.grade != omega.dim - 1:
        raise ValueError("volume identification needs a V-side element of grade dim-1")
    f = omega.field
    terms = {}
    for s, c in omega.terms.items():
        (j,) = _complement(omega.dim, s)
        sign = merge_sign(s, (j,))
        val = c if sign > 0 else f.neg(c)
        prev = terms.get((j,))
        terms[(j,)] = val if prev is None else f.add(prev, val)
    return ExteriorElement(f, omega.dim, 1, ON_V_DUAL, terms)


def hodge_to_dual(w: ExteriorElement) -> ExteriorElement:
    """Identify Lambda^k V with Lambda^(dim-k) V*: e_S -> merge_sign(S, S^c) x*_{S^c}."""
    if w.variance != ON_V:
        raise ValueError("hodge_to_dual takes a V-side element")
    f = w.field
    dim = w.dim
    terms = {}
    for s, c in w.terms.items():
        comp = _complement(dim, s)
        sign = merge_sign(s, comp)
        terms[comp] = c if sign > 0 else f.neg(c)
    return ExteriorElement(f, dim, dim - w.grade, ON_V_DUAL, terms)


def hodge_from_dual(eta: ExteriorElement) -> ExteriorElement:
    """Inverse of hodge_to_dual."""
    if eta.variance != ON_V_DUAL:
        raise ValueError("hodge_from_dual takes a dual-side element")
    f = eta.field
    dim = eta.dim
    terms = {}
    for t, c in eta.terms.items():
        comp = _complement(dim, t)
        sign = merge_sign(comp, t)
        terms[comp] = c if sign > 0 else f.neg(c)
    return ExteriorElement(f, dim, dim - eta.grade, ON_V, terms)


def subsets_graded_lex(dim, k):
    """All sorted k-subsets of {0..dim-1} in lexicographic order; this fixes
    the numbering of wedge-basis coefficient matrices everywhere."""
    from itertools import combinations

    return [tuple(c) for c in combinations(range(dim), k)]


def contraction_matrix(field, vector, dim, grade):
    """Matrix of iota_v : Lambda^grade V* -> Lambda^(grade-1) V* in the
    graded-lex subset bases."""
    src = subsets_graded_lex(dim, grade)
    dst = subsets_graded_lex(dim, grade - 1)
    dst_index = {s: i for i, s in enumerate(dst)}
    m = Matrix.zeros(field, len(dst), len(src))
    for c, s in enumerate(src):
        for pos, j in enumerate(s):
            vj = vector[j]
            if field.is_zero(vj):
                continue
            rest = s[:pos] + s[pos + 1 :]
            val = vj if pos % 2 == 0 else field.neg(vj)
            r = dst_index[rest]
            m.data[r][c] = field.add(m.data[r][c], val)
    return m


def element_coords(elt: ExteriorElement, subsets):
    return [elt.terms.get(s, elt.field.zero) for s in subsets]
