"""Univariate polynomial arithmetic over an exact field.

Polynomials are low-to-high coefficient lists.  The module exists for one
consumer: the endomorphism splitter, which needs minimal polynomials
factored just far enough to produce a coprime split mu = f * g.  Over a
prime field that uses square-free/distinct-degree/equal-degree stages;
over the rationals only multiplicity classes and rational roots are
tried, anything deeper is out of scope.
"""

import math
from fractions import Fraction

from .fields import PrimeField, Rationals


def trim(c):
    while len(c) > 1 and c[-1] == 0:
        c = c[:-1]
    return c


def deg(c):
    return len(c) - 1 if any(x != 0 for x in c) else -1


def poly_add(field, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero
        y = b[i] if i < len(b) else field.zero
        out.append(field.add(x, y))
    return trim(out)


def poly_sub(field, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero
        y = b[i] if i < len(b) else field.zero
        out.append(field.sub(x, y))
    return trim(out)


def poly_mul(field, a, b):
    if deg(a) < 0 or deg(b) < 0:
        return [field.zero]
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if field.is_zero(x):
            continue
        for j, y in enumerate(b):
            if not field.is_zero(y):
                out[i + j] = field.add(out[i + j], field.mul(x, y))
    return trim(out)


def poly_scale(field, a, s):
    return trim([field.mul(s, x) for x in a])


def poly_divmod(field, a, b):
    if deg(b) < 0:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, lb = deg(b), b[deg(b)]
    inv_lb = field.inv(lb)
    q = [field.zero] * max(len(a) - db, 1)
    for i in range(deg(a) - db, -1, -1):
        c = field.mul(a[i + db], inv_lb)
        if field.is_zero(c):
            continue
        q[i] = c
        for j in range(db + 1):
            a[i + j] = field.sub(a[i + j], field.mul(c, b[j]))
    return trim(q), trim(a)


def monic(field, a):
    d = deg(a)
    if d < 0:
        return a
    return poly_scale(field, a, field.inv(a[d]))


def poly_gcd(field, a, b):
    a, b = trim(list(a)), trim(list(b))
    while deg(b) >= 0:
        _, r = poly_divmod(field, a, b)
        a, b = b, r
    return monic(field, a)


def poly_xgcd(field, a, b):
    """Returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = trim(list(a)), trim(list(b))
    s0, s1 = [field.one], [field.zero]
    t0, t1 = [field.zero], [field.one]
    while deg(r1) >= 0:
        q, r = poly_divmod(field, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(field, s0, poly_mul(field, q, s1))
        t0, t1 = t1, poly_sub(field, t0, poly_mul(field, q, t1))
    d = deg(r0)
    if d >= 0 and r0[d] != field.one:
        c = field.inv(r0[d])
        r0, s0, t0 = poly_scale(field, r0, c), poly_scale(field, s0, c), poly_scale(field, t0, c)
    return r0, s0, t0


def poly_deriv(field, a):
    if len(a) <= 1:
        return [field.zero]
    return trim([field.mul(field.from_int(i), a[i]) for i in range(1, len(a))])


def poly_eval_matrix(field, coeffs, m):
    """Evaluate the polynomial at a square Matrix by Horner's rule."""
    from .matrices import Matrix

    n = m.rows
    out = Matrix.zeros(field, n, n)
    for c in reversed(coeffs):
        out = out @ m
        if not field.is_zero(c):
            out = out + Matrix.identity(field, n).scale(c)
    return out


def poly_pow_mod(field, base, exponent, modulus):
    result = [field.one]
    base = poly_divmod(field, base, modulus)[1]
    while exponent > 0:
        if exponent & 1:
            result = poly_divmod(field, poly_mul(field, result, base), modulus)[1]
        base = poly_divmod(field, poly_mul(field, base, base), modulus)[1]
        exponent >>= 1
    return result


def squarefree_classes(field, mu):
    """Yun decomposition: returns [(m_k, k)] with mu = prod m_k^k, m_k square-free,
    pairwise coprime, deg m_k possibly 0 (skipped)."""
    mu = monic(field, mu)
    d = poly_deriv(field, mu)
    g = poly_gcd(field, mu, d)
    if deg(g) <= 0:
        return [(mu, 1)] if deg(mu) > 0 else []
    out = []
    w = poly_divmod(field, mu, g)[0]
    y = poly_divmod(field, d, g)[0]
    k = 1
    while deg(w) > 0:
        z = poly_sub(field, y, poly_deriv(field, w))
        h = poly_gcd(field, w, z)
        if deg(h) > 0:
            out.append((h, k))
        w = poly_divmod(field, w, h)[0] if deg(h) > 0 else w
        y = poly_divmod(field, z, h)[0] if deg(h) > 0 else z
        k += 1
    return out


def _distinct_degree(field, m):
    """Splits square-free monic m into [(product of irreducibles of degree d, d)]."""
    p = field.p
    out = []
    x = [field.zero, field.one]
    h = x
    rest = m
    d = 0
    while deg(rest) > 0:
        d += 1
        if 2 * d > deg(rest):
            out.append((rest, deg(rest)))
            break
        h = poly_pow_mod(field, h, p, rest)
        g = poly_gcd(field, poly_sub(field, h, x), rest)
        if deg(g) > 0:
            out.append((g, d))
            rest = poly_divmod(field, rest, g)[0]
            h = poly_divmod(field, h, rest)[1]
    return out


def _equal_degree_factor(field, m, d, rng, max_tries=64):
    """One proper monic factor of m, where m is a product of >= 2 distinct
    irreducibles all of degree d (Cantor-Zassenhaus, odd p)."""
    p = field.p
    e = (p**d - 1) // 2
    for _ in range(max_tries):
        a = [field.from_int(rng.randrange(p)) for _ in range(deg(m))]
        a = trim(a + [field.zero])
        if deg(a) <= 0:
            continue
        g = poly_gcd(field, a, m)
        if 0 < deg(g) < deg(m):
            return g
        b = poly_pow_mod(field, a, e, m)
        g = poly_gcd(field, poly_sub(field, b, [field.one]), m)
        if 0 < deg(g) < deg(m):
            return g
    return None


def _rational_roots(mu):
    """All rational roots of a monic polynomial with Fraction coefficients."""
    lcm = 1
    for c in mu:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ic = [int(c * lcm) for c in mu]
    roots = []
    if ic[0] == 0:
        roots.append(Fraction(0))
    a0, an = abs(ic[0]), abs(ic[-1])
    if a0 == 0:
        a0 = abs(next(c for c in ic if c != 0))

    def divisors(n):
        ds = set()
        i = 1
        while i * i <= n:
            if n % i == 0:
                ds.add(i)
                ds.add(n // i)
            i += 1
        return ds

    for num in divisors(a0) if a0 else {0}:
        for den in divisors(an):
            for sign in (1, -1):
                r = Fraction(sign * num, den)
                val = Fraction(0)
                for c in reversed(mu):
                    val = val * r + c
                if val == 0 and r not in roots:
                    roots.append(r)
    return roots


def coprime_split(field, mu, rng):
    """A coprime factorization mu = f * g with both factors nonconstant,
    or None if none was found (mu a prime power, or undetectable over Q)."""
    mu = monic(field, mu)
    if deg(mu) < 2:
        return None
    classes = squarefree_classes(field, mu)
    if len(classes) >= 2:
        m0, k0 = classes[0]
        f = _pow(field, m0, k0)
        g = poly_divmod(field, mu, f)[0]
        return f, g
    m, k = classes[0]
    if isinstance(field, PrimeField):
        dd = _distinct_degree(field, m)
        if len(dd) >= 2:
            f = _pow(field, dd[0][0], k)
            return f, poly_divmod(field, mu, f)[0]
        part, d = dd[0]
        if deg(part) > d:
            piece = _equal_degree_factor(field, part, d, rng)
            if piece is not None:
                f = _pow(field, piece, k)
                return f, poly_divmod(field, mu, f)[0]
        return None
    if isinstance(field, Rationals):
        roots = _rational_roots(m)
        if roots:
            r = roots[0]
            lin = [-r, Fraction(1)]
            if deg(m) == 1 and len(roots) == 1:
                return None  # mu = (t - r)^k, a prime power
            f = _pow(field, lin, k)
            g = poly_divmod(field, mu, f)[0]
            if deg(g) > 0:
                return f, g
        return None
    return None


def _pow(field, a, k):
    out = [field.one]
    for _ in range(k):
        out = poly_mul(field, out, a)
    return out
