"""Total Chern classes as truncated integer series, plus the closed-form
cohomology of line bundles on P^n.

A ChernPolynomial is c_0 + c_1 t + ... + c_n t^n with exact integer
coefficients, multiplied mod t^{n+1}; c_0 = 1 keeps every series
invertible over the integers.
"""

from math import comb


class ChernPolynomial:
    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) > n + 1:
            raise ValueError("too many coefficients for the truncation order")
        coeffs = coeffs + [0] * (n + 1 - len(coeffs))
        if coeffs[0] != 1:
            raise ValueError("total Chern class must have constant term 1")
        self.n = n
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, n):
        return cls(n, [1])

    @classmethod
    def line_bundle(cls, n, degree):
        return cls(n, [1, degree])

    def __eq__(self, other):
        return isinstance(other, ChernPolynomial) and self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self):
        parts = [str(self.coeffs[0])]
        for i, c in enumerate(self.coeffs[1:], start=1):
            if c:
                parts.append(f"{c}t^{i}" if i > 1 else f"{c}t")
        return " + ".join(parts)

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("truncation order mismatch")
        out = [0] * (self.n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > self.n:
                    break
                out[i + j] += a * b
        return ChernPolynomial(self.n, out)

    def inverse(self):
        out = [0] * (self.n + 1)
        out[0] = 1
        for k in range(1, self.n + 1):
            out[k] = -sum(self.coeffs[j] * out[k - j] for j in range(1, k + 1))
        return ChernPolynomial(self.n, out)

    def power(self, e: int):
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = ChernPolynomial.one(self.n)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def twist(self, rank: int, degree: int):
        """Chern series of E (x) O(degree) for E of the given rank."""
        out = [0] * (self.n + 1)
        for k in range(self.n + 1):
            s = 0
            for i in range(0, min(k, rank) + 1):
                s += comb(rank - i, k - i) * degree ** (k - i) * self.coeffs[i]
            out[k] = s
        return ChernPolynomial(self.n, out)

    def tail_vanishes_beyond(self, rank: int) -> bool:
        """Whether c_k = 0 for all k > rank (required of a rank-r bundle)."""
        return all(c == 0 for c in self.coeffs[rank + 1 :])


def cokernel_chern(n, e, f, a, b) -> ChernPolynomial:
    """(1 + f t)^b (1 + e t)^{-a} mod t^{n+1}."""
    return ChernPolynomial.line_bundle(n, f).power(b) * ChernPolynomial.line_bundle(n, e).power(-a)


def syzygy_chern(n, degrees, mults) -> ChernPolynomial:
    """prod_j (1 - d_j t)^{a_j} mod t^{n+1}."""
    out = ChernPolynomial.one(n)
    for d, a in zip(degrees, mults):
        out = out * ChernPolynomial.line_bundle(n, -d).power(a)
    return out


def h0_line(n: int, k: int) -> int:
    """dim H^0(P^n, O(k))."""
    return comb(n + k, n) if k >= 0 else 0


def hn_line(n: int, k: int) -> int:
    """dim H^n(P^n, O(k)) = C(-k-1, n) for k <= -n-1, else 0."""
    return comb(-k - 1, n) if k <= -n - 1 else 0


def hq_line(n: int, q: int, k: int) -> int:
    """dim H^q(P^n, O(k)); vanishes except in degrees 0 and n."""
    if q == 0:
        return h0_line(n, k)
    if q == n:
        return hn_line(n, k)
    if 0 < q < n:
        return 0
    return 0
