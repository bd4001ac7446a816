"""Exact scalar arithmetic: arbitrary-precision rationals and odd prime fields.

Rational scalars are `fractions.Fraction` (always reduced, positive
denominator); prime-field scalars are plain ints in [0, p).  All higher
layers go through a field object so the same linear algebra runs over
either kind of scalar.
"""

from fractions import Fraction

# least prime above 2**31; large enough that random bad-prime events
# (vanishing denominators, accidental rank drops) are negligible
DEFAULT_PRIME = 2147483659

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Rationals:
    """The field of rational numbers; elements are Fraction."""

    kind = "q"

    def __repr__(self):
        return "Rationals()"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def is_zero(self, a):
        return a == 0

    def random(self, rng):
        # no uniform measure on Q; small fractions are enough for tests
        return Fraction(rng.randint(-20, 20), rng.randint(1, 12))

    def random_nonzero(self, rng):
        while True:
            a = self.random(rng)
            if a != 0:
                return a

    def format(self, a):
        return f"{a.numerator}/{a.denominator}"

    def parse(self, s):
        s = s.strip()
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(s))


class PrimeField:
    """The field F_p for an odd prime p; elements are ints in [0, p)."""

    kind = "fp"

    def __init__(self, p: int):
        if p <= 2 or not is_prime(p):
            raise ValueError(f"modulus must be an odd prime, got {p}")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        c = a + b
        return c - self.p if c >= self.p else c

    def sub(self, a, b):
        c = a - b
        return c + self.p if c < 0 else c

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return self.p - a if a else 0

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def is_zero(self, a):
        return a == 0

    def random(self, rng):
        return rng.randrange(self.p)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.p)

    def format(self, a):
        return f"{a} mod {self.p}"

    def parse(self, s):
        s = s.strip()
        if "mod" in s:
            r, p = s.split("mod")
            if int(p) != self.p:
                raise ValueError(f"scalar {s!r} has modulus {p.strip()}, field has {self.p}")
            return int(r) % self.p
        return int(s) % self.p


QQ = Rationals()


def field_from_string(tag: str):
    """Parse a field tag: "q" for rationals, "fp:<p>" for a prime field."""
    tag = tag.strip().lower()
    if tag == "q":
        return QQ
    if tag.startswith("fp:"):
        return PrimeField(int(tag[3:]))
    raise ValueError(f"unknown field tag {tag!r} (expected 'q' or 'fp:<p>')")


def field_to_string(field) -> str:
    if isinstance(field, Rationals):
        return "q"
    return f"fp:{field.p}"


def derive_seed(seed: int, index: int) -> int:
    """Deterministic child seed for trial/point `index` (64-bit mix)."""
    x = (seed * 0x9E3779B97F4A7C15 + (index + 1) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    x ^= x >> 31
    x = x * 0x94D049BB133111EB & 0xFFFFFFFFFFFFFFFF
    return x ^ (x >> 29)
