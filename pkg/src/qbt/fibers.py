"""Fiberwise full-rank checks for polynomial matrices on P^n.

A PolyMatrix passes the injective (surjective) check when its evaluation
has full column (row) rank at every point.  Random sampling over a large
prime field gives fast probabilistic evidence; small instances are
upgraded to a certificate by showing the maximal-minor locus is empty
via a Groebner basis.
"""

import random
import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

from .fields import DEFAULT_PRIME, PrimeField, Rationals, derive_seed
from .groebner import EMPTY, INCONCLUSIVE, NONEMPTY, certified_empty_projective_locus
from .polynomials import HomogeneousPoly, PolyMatrix

INJECTIVE = "injective"
SURJECTIVE = "surjective"

PASS_PROBABILISTIC = "pass_probabilistic"
PASS_CERTIFIED = "pass_certified"
FAIL = "fail"

# certification budget: ambient dimension, generator count, summed degrees
CERT_MAX_N = 3
CERT_MAX_MINORS = 200
CERT_MAX_TOTAL_DEGREE = 12


@dataclass
class FiberReport:
    mode: str
    verdict: str
    samples: int = 0
    prime: Optional[int] = None
    witness: Optional[tuple] = None
    certification: Optional[str] = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict in (PASS_PROBABILISTIC, PASS_CERTIFIED)


def _target_rank(m: PolyMatrix, mode: str) -> int:
    if mode == INJECTIVE:
        return m.cols
    if mode == SURJECTIVE:
        return m.rows
    raise ValueError(f"unknown mode {mode!r}")


def reduce_poly_matrix(m: PolyMatrix, field: PrimeField) -> PolyMatrix:
    """Reduce coefficients into a prime field (rationals via num/den mod p)."""
    if m.field == field:
        return m
    def conv(c):
        if isinstance(m.field, Rationals):
            den = c.denominator % field.p
            if den == 0:
                raise ZeroDivisionError("denominator vanishes mod the sampling prime")
            return c.numerator % field.p * pow(den, -1, field.p) % field.p
        return field.from_int(c)
    entries = [
        [
            HomogeneousPoly(field, m.n, p.degree, {mo: conv(c) for mo, c in p.terms.items()})
            for p in row
        ]
        for row in m.entries
    ]
    return PolyMatrix(field, m.n, m.row_twists, m.col_twists, entries)


def sample_projective_point(n: int, field: PrimeField, rng) -> tuple:
    """Uniform point of P^n(F_p), normalized: first nonzero coordinate is 1."""
    while True:
        v = [rng.randrange(field.p) for _ in range(n + 1)]
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            continue
        inv = pow(v[lead], -1, field.p)
        return tuple(x * inv % field.p for x in v)


def probabilistic_full_rank(
    m: PolyMatrix, mode: str, trials: int, seed: int, prime: int = DEFAULT_PRIME
) -> FiberReport:
    """Sample projective points over F_prime and test fiber rank at each."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    t0 = time.perf_counter()
    target = _target_rank(m, mode)
    if target == 0:
        return FiberReport(mode, PASS_CERTIFIED, samples=0, prime=None,
                           elapsed=time.perf_counter() - t0)
    if isinstance(m.field, PrimeField):
        field = m.field
        if field.p <= 2**30:
            raise ValueError("sampling field must have p > 2^30")
    else:
        field = PrimeField(prime)
        if prime <= 2**30:
            raise ValueError("sampling field must have p > 2^30")
    mm = reduce_poly_matrix(m, field)
    impossible = (mode == INJECTIVE and m.cols > m.rows) or (
        mode == SURJECTIVE and m.rows > m.cols
    )
    for t in range(trials):
        rng = random.Random(derive_seed(seed, t))
        point = sample_projective_point(m.n, field, rng)
        if impossible or mm.evaluate(point).rank() < target:
            return FiberReport(
                mode,
                FAIL,
                samples=t + 1,
                prime=field.p,
                witness=point,
                elapsed=time.perf_counter() - t0,
            )
    return FiberReport(
        mode, PASS_PROBABILISTIC, samples=trials, prime=field.p,
        elapsed=time.perf_counter() - t0,
    )


def _poly_det(field, entries):
    """Determinant of a square grid of HomogeneousPoly by cofactor expansion."""
    k = len(entries)
    if k == 0:
        raise ValueError("empty determinant has no degree tag")
    if k == 1:
        return entries[0][0]
    n = entries[0][0].n
    total = None
    for i in range(k):
        top = entries[0][i]
        minor_rows = [[row[j] for j in range(k) if j != i] for row in entries[1:]]
        sub = _poly_det(field, minor_rows)
        term = top * sub
        if i % 2 == 1:
            term = -term
        total = term if total is None else total + term
    return total


def minors_ideal(m: PolyMatrix, size: int):
    """All size x size minors, as homogeneous polynomials.

    size must be min(rows, cols); block twists make every minor
    automatically homogeneous, which is validated defensively anyway.
    """
    if size != min(m.rows, m.cols):
        raise ValueError("size must equal min(rows, cols)")
    if size == 0:
        return []
    out = []
    for rows_sel in combinations(range(m.rows), size):
        for cols_sel in combinations(range(m.cols), size):
            want = sum(m.row_twists[r] for r in rows_sel) - sum(
                m.col_twists[c] for c in cols_sel
            )
            grid = [[m.entries[r][c] for c in cols_sel] for r in rows_sel]
            det = _poly_det(m.field, grid)
            if det.degree != want:
                raise ValueError("minor degree inconsistent with twist tags")
            out.append(det)
    return out


def _within_certification_budget(m: PolyMatrix, size: int) -> bool:
    if m.n > CERT_MAX_N or size == 0:
        return False
    count = comb(m.rows, size) * comb(m.cols, size)
    if count > CERT_MAX_MINORS:
        return False
    total_degree = 0
    for rows_sel in combinations(range(m.rows), size):
        row_part = sum(m.row_twists[r] for r in rows_sel)
        for cols_sel in combinations(range(m.cols), size):
            total_degree += row_part - sum(m.col_twists[c] for c in cols_sel)
            if total_degree > CERT_MAX_TOTAL_DEGREE:
                return False
    return True


def _full_rank_check(m, mode, trials, seed, prime, certify) -> FiberReport:
    t0 = time.perf_counter()
    report = probabilistic_full_rank(m, mode, trials, seed, prime=prime)
    if report.verdict != PASS_PROBABILISTIC or not certify:
        report.elapsed = time.perf_counter() - t0
        return report
    size = min(m.rows, m.cols)
    if not _within_certification_budget(m, size):
        report.elapsed = time.perf_counter() - t0
        return report
    gens = [g for g in minors_ideal(m, size) if not g.is_zero()]
    outcome = certified_empty_projective_locus(gens)
    report.certification = outcome
    if outcome == EMPTY:
        report.verdict = PASS_CERTIFIED
    report.elapsed = time.perf_counter() - t0
    return report


def global_injective(
    m: PolyMatrix, trials: int = 200, seed: int = 0, prime: int = DEFAULT_PRIME,
    certify: bool = True,
) -> FiberReport:
    """Fiberwise injectivity on P^n: probabilistic pass, certified when small."""
    return _full_rank_check(m, INJECTIVE, trials, seed, prime, certify)


def global_surjective(
    m: PolyMatrix, trials: int = 200, seed: int = 0, prime: int = DEFAULT_PRIME,
    certify: bool = True,
) -> FiberReport:
    """Fiberwise surjectivity on P^n: probabilistic pass, certified when small."""
    return _full_rank_check(m, SURJECTIVE, trials, seed, prime, certify)


def revalidate_witness(m: PolyMatrix, report: FiberReport) -> bool:
    """Re-check a Fail witness by direct evaluation at the reported prime."""
    if report.verdict != FAIL or report.witness is None:
        return False
    field = PrimeField(report.prime)
    mm = reduce_poly_matrix(m, field)
    return mm.evaluate(report.witness).rank() < _target_rank(m, report.mode)
