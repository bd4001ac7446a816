"""Buchberger's algorithm and the projective-emptiness certificate.

Deliberately plain: graded-reverse-lex order, normal pair selection,
first Buchberger criterion, and a hard step ceiling that surfaces as an
explicit INCONCLUSIVE outcome instead of a silent stall.  The emptiness
test is the usual one: the vanishing locus in P^n is empty over the
algebraic closure iff every variable has a pure power among the leading
terms of a Groebner basis.
"""

from .polynomials import HomogeneousPoly, monomial_mul

EMPTY = "empty"
NONEMPTY = "nonempty"
INCONCLUSIVE = "inconclusive"

DEFAULT_STEP_LIMIT = 20000


def grevlex_key(mono):
    return (sum(mono), tuple(-e for e in reversed(mono)))


def leading_monomial(terms):
    return max(terms, key=grevlex_key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class _Poly:
    """Internal mutable term-dict wrapper (not degree-tagged)."""

    __slots__ = ("terms", "lm")

    def __init__(self, field, terms):
        self.terms = {m: c for m, c in terms.items() if not field.is_zero(c)}
        self.lm = leading_monomial(self.terms) if self.terms else None


def _normalize(field, p):
    if not p.terms:
        return p
    inv = field.inv(p.terms[p.lm])
    return _Poly(field, {m: field.mul(inv, c) for m, c in p.terms.items()})


def _reduce(field, p, basis, budget):
    """Full reduction of p modulo basis; returns (reduced poly, steps used)."""
    terms = dict(p.terms)
    out = {}
    steps = 0
    while terms:
        steps += 1
        if steps > budget:
            raise _Budget()
        lm = leading_monomial(terms)
        lc = terms[lm]
        reducer = None
        for g in basis:
            if g.lm is not None and _divides(g.lm, lm):
                reducer = g
                break
        if reducer is None:
            out[lm] = lc
            del terms[lm]
            continue
        shift = _mono_div(lm, reducer.lm)
        glc = reducer.terms[reducer.lm]
        factor = field.div(lc, glc)
        for m, c in reducer.terms.items():
            mm = monomial_mul(m, shift)
            val = field.sub(terms.get(mm, field.zero), field.mul(factor, c))
            if field.is_zero(val):
                terms.pop(mm, None)
            else:
                terms[mm] = val
    return _Poly(field, out), steps


class _Budget(Exception):
    pass


def _s_poly(field, f, g):
    lcm = _mono_lcm(f.lm, g.lm)
    sf = _mono_div(lcm, f.lm)
    sg = _mono_div(lcm, g.lm)
    cf = f.terms[f.lm]
    cg = g.terms[g.lm]
    terms = {}
    for m, c in f.terms.items():
        mm = monomial_mul(m, sf)
        terms[mm] = field.add(terms.get(mm, field.zero), field.div(c, cf))
    for m, c in g.terms.items():
        mm = monomial_mul(m, sg)
        terms[mm] = field.sub(terms.get(mm, field.zero), field.div(c, cg))
    return _Poly(field, terms)


def groebner_basis(gens, step_limit=DEFAULT_STEP_LIMIT):
    """Reduced Groebner basis of homogeneous generators, or None when the
    step ceiling is hit."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    field = gens[0].field
    basis = []
    for g in gens:
        basis.append(_normalize(field, _Poly(field, g.terms)))
    basis = [b for b in basis if b.terms]
    steps = 0
    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}
    try:
        while pairs:
            # normal selection: smallest lcm in the monomial order
            best = min(
                pairs,
                key=lambda ij: grevlex_key(_mono_lcm(basis[ij[0]].lm, basis[ij[1]].lm)),
            )
            pairs.discard(best)
            i, j = best
            fi, fj = basis[i], basis[j]
            lcm = _mono_lcm(fi.lm, fj.lm)
            if lcm == monomial_mul(fi.lm, fj.lm):
                continue  # coprime leading terms: S-poly reduces to zero
            steps += 1
            if steps > step_limit:
                return None
            sp = _s_poly(field, fi, fj)
            reduced, used = _reduce(field, sp, basis, step_limit - steps)
            steps += used
            if reduced.terms:
                basis.append(_normalize(field, reduced))
                k = len(basis) - 1
                pairs.update((k, t) for t in range(k))
    except _Budget:
        return None
    return _interreduce(field, basis)


def _interreduce(field, basis):
    basis = [b for b in basis if b.terms]
    # drop elements whose leading monomial is divisible by another's
    keep = []
    for i, b in enumerate(basis):
        if any(
            j != i and _divides(basis[j].lm, b.lm) and (basis[j].lm != b.lm or j < i)
            for j in range(len(basis))
        ):
            continue
        keep.append(b)
    reduced = []
    for i, b in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        r, _ = _reduce(field, b, others, 10**9)
        if r.terms:
            reduced.append(_normalize(field, r))
    reduced.sort(key=lambda p: grevlex_key(p.lm))
    return reduced


def certified_empty_projective_locus(gens, step_limit=DEFAULT_STEP_LIMIT):
    """Decide whether homogeneous generators cut out the empty set in P^n
    over the algebraic closure.

    Returns EMPTY, NONEMPTY, or INCONCLUSIVE (step ceiling reached).
    """
    gens = list(gens)
    for g in gens:
        for mono in g.terms:
            if sum(mono) != g.degree:
                raise ValueError("generators must be homogeneous")
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        return NONEMPTY
    n_vars = nonzero[0].n + 1
    if any(g.degree == 0 for g in nonzero):
        return EMPTY  # a unit among the generators
    gb = groebner_basis(nonzero, step_limit=step_limit)
    if gb is None:
        return INCONCLUSIVE
    covered = set()
    for p in gb:
        lm = p.lm
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            covered.add(support[0])
    return EMPTY if len(covered) == n_vars else NONEMPTY
