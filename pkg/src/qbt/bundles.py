"""Functors from quiver representations to bundle presentations on P^n.

Cokernel presentations  0 -> O(e)^a -> O(f)^b -> C -> 0  come from
representations of the Kronecker quiver with w = h^0(O(f-e)) arrows;
syzygy presentations  0 -> G -> (+) O(-d_j)^{a_j} -> O^c -> 0  come from
star-quiver representations with branch arrow counts h^0(O(d_j)).  Both
carry rank and Chern invariants, fiber reports, q-value criteria, and
split through the representation-side decomposition.
"""

from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Optional

from .chern import ChernPolynomial, cokernel_chern, hn_line, h0_line, syzygy_chern
from .fibers import FiberReport, PASS_CERTIFIED, global_injective, global_surjective
from .matrices import Matrix
from .polynomials import HomogeneousPoly, PolyMatrix, expand_map, monomial_basis
from .quivers import kronecker, star_quiver, tits_form
from .reps import Representation, decompose, hom_dim


@dataclass(frozen=True)
class LineBundlePair:
    """The pair (O(e), O(f)) on P^n used to present cokernel bundles."""

    n: int
    e: int
    f: int

    @property
    def gap(self) -> int:
        return self.f - self.e

    @property
    def w(self) -> int:
        return comb(self.n + self.gap, self.n) if self.gap >= 0 else 0


@dataclass
class ValidityReport:
    pair: LineBundlePair
    w: int
    failures: list
    steiner: bool

    @property
    def valid(self) -> bool:
        return not self.failures


def validate_pair(n: int, e: int, f: int) -> ValidityReport:
    """Check the five pair conditions in their line-bundle specialization.

    Simplicity of line bundles and Ext^1-vanishing on P^n (n >= 2) are
    automatic; what can fail is Hom(F, E) = 0 (needs f > e), global
    generation of E^v (x) F (needs f >= e), and w >= 3.
    """
    if n < 2:
        raise ValueError("pairs live on P^n with n >= 2")
    pair = LineBundlePair(n, e, f)
    failures = []
    if f <= e:
        failures.append(f"Hom(O({f}), O({e})) is nonzero (need f > e)")
    if f - e < 0:
        failures.append("O(f-e) is not globally generated (need f >= e)")
    w = pair.w
    if w < 3:
        failures.append(f"hom dimension w = {w} < 3")
    # Steiner <=> additionally Ext^p(F, E) = 0 for all p, i.e. H^n(O(e-f)) = 0
    steiner = not failures and hn_line(n, e - f) == 0
    return ValidityReport(pair=pair, w=w, failures=failures, steiner=steiner)


@dataclass
class CriteriaReport:
    q: int
    simple_possible: bool
    forced_decomposable: bool
    exceptional_possible: bool
    exceptional_generic: bool
    caveat: Optional[str] = None


def cokernel_criteria(pair: LineBundlePair, a: int, b: int) -> CriteriaReport:
    """Tits-form criteria for a cokernel presentation with multiplicities (a, b)."""
    report = validate_pair(pair.n, pair.e, pair.f)
    q = tits_form(kronecker(pair.w), (a, b))
    steiner = report.steiner
    caveat = None
    if q == 1 and not steiner:
        caveat = (
            "q = 1 is necessary for exceptionality but not sufficient for this pair: "
            "higher self-Ext groups need not vanish (the pair is not Steiner)"
        )
    return CriteriaReport(
        q=q,
        simple_possible=q <= 1,
        forced_decomposable=q > 1,
        exceptional_possible=q == 1,
        exceptional_generic=q == 1 and steiner,
        caveat=caveat,
    )


@dataclass
class CokernelPresentation:
    pair: LineBundlePair
    a: int
    b: int
    alpha: Optional[PolyMatrix]
    rep: Representation
    rank: int
    chern: ChernPolynomial
    injectivity: FiberReport
    free_factor: bool = False

    @property
    def is_bundle(self) -> bool:
        return self.injectivity.passed


def cokernel_from_rep(
    rep: Representation,
    pair: LineBundlePair,
    trials: int = 200,
    seed: int = 0,
    certify: bool = True,
    enforce_rank: bool = True,
) -> CokernelPresentation:
    """Run the section-expansion functor on a Kronecker representation.

    A fiber-injectivity Fail means the representation is not globally
    injective; the returned presentation then carries the witness and
    `is_bundle` is false.
    """
    report = validate_pair(pair.n, pair.e, pair.f)
    if not report.valid:
        raise ValueError(f"invalid pair: {report.failures}")
    w = pair.w
    if rep.quiver != kronecker(w):
        raise ValueError(f"representation must live on the Kronecker quiver with {w} arrows")
    a, b = rep.dims
    if enforce_rank and b - a < pair.n:
        raise ValueError(f"rank condition b - a >= n violated: {b} - {a} < {pair.n}")
    chern = cokernel_chern(pair.n, pair.e, pair.f, a, b)
    if a == 0:
        injectivity = FiberReport(mode="injective", verdict=PASS_CERTIFIED)
        return CokernelPresentation(
            pair=pair, a=a, b=b, alpha=None, rep=rep, rank=b, chern=chern,
            injectivity=injectivity, free_factor=True,
        )
    basis = [
        HomogeneousPoly.monomial(rep.field, pair.n, m)
        for m in monomial_basis(pair.n, pair.gap)
    ]
    alpha = expand_map(list(rep.maps), basis, row_twist=pair.f, col_twist=pair.e)
    injectivity = global_injective(alpha, trials=trials, seed=seed, certify=certify)
    return CokernelPresentation(
        pair=pair, a=a, b=b, alpha=alpha, rep=rep, rank=b - a, chern=chern,
        injectivity=injectivity,
    )


def decompose_cokernel(p: CokernelPresentation, seed: int = 0, trials: int = 200):
    """Split the underlying representation and push each summand back
    through the functor (globally injective summands stay globally
    injective, so each piece re-checks)."""
    report = decompose(p.rep, seed=seed)
    out = []
    for summand in report.summands:
        out.append(
            cokernel_from_rep(
                summand, p.pair, trials=trials, seed=seed, enforce_rank=False,
            )
        )
    return report, out


def global_hom_cokernel(p1: CokernelPresentation, p2: CokernelPresentation) -> int:
    """dim Hom(C1, C2) by polynomial linear algebra on the presentations.

    Identifications: Hom(F^{b1}, C2) = k^{b1 b2}; Hom(E^{a1}, C2) is the
    a1-fold cokernel of the section map k^{a2} -> H^0(O(g))^{b2}; and
    Hom(C1, C2) is the kernel of composing with alpha_1.
    """
    if p1.pair != p2.pair:
        raise ValueError("presentations must share the same pair")
    field = p1.rep.field
    pair = p1.pair
    g = pair.gap
    monos = monomial_basis(pair.n, g)
    W = len(monos)
    a1, b1 = p1.a, p1.b
    a2, b2 = p2.a, p2.b
    if a1 == 0:
        return b1 * b2
    # columns: the unknown Phi in k^{b2 x b1}, flattened row-major
    # rows: coefficient vectors in k^{a1 * b2 * W} of Phi o alpha_1
    rows = a1 * b2 * W
    L = Matrix.zeros(field, rows, b1 * b2)
    A1 = p1.rep.maps  # w matrices, each b1 x a1
    for j in range(a1):
        for r in range(b2):
            for idx in range(W):
                row = j * b2 * W + r * W + idx
                for k in range(b1):
                    # coefficient of Phi[r, k]: entry (k, j) of A_i for mono idx
                    c = A1[idx].data[k][j]
                    if not field.is_zero(c):
                        L.data[row][r * b1 + k] = c
    if a2 == 0:
        return b1 * b2 - L.rank()
    # subtract the image of H^0-level alpha_2 on each of the a1 components
    M2 = Matrix.zeros(field, b2 * W, a2)
    A2 = p2.rep.maps
    for jj in range(a2):
        for r in range(b2):
            for idx in range(W):
                M2.data[r * W + idx][jj] = A2[idx].data[r][jj]
    blocks = Matrix.block_diag(field, [M2] * a1)
    stacked = Matrix.hstack(field, [L, blocks])
    # ker(q o L) projects bijectively onto Phi-coordinates because the
    # section map M2 is injective for a valid presentation
    return b1 * b2 + a1 * a2 - stacked.rank() - (a1 * a2 - blocks.rank())


@dataclass
class ExtEntry:
    i: int
    lo: int
    hi: int

    @property
    def exact(self) -> bool:
        return self.lo == self.hi


@dataclass
class ExtTable:
    entries: list
    euler_characteristic: int

    def entry(self, i: int) -> ExtEntry:
        return self.entries[i]


def _twisted_cohomology_intervals(n, e, f, a, b, k):
    """Intervals [lo, hi] for h^q(C(k)), q = 0..n, from the twisted resolution."""
    h0 = b * h0_line(n, f + k) - a * h0_line(n, e + k)
    out = [(h0, h0)]
    for q in range(1, n - 1):
        out.append((0, 0))
    A = a * hn_line(n, e + k)
    B = b * hn_line(n, f + k)
    rmax = min(A, B)
    if n >= 2:
        out.append((A - rmax, A))
    out.append((B - rmax, B))
    return out


def ext_table_cokernel(
    pair: LineBundlePair, a: int, b: int, hom_hint: Optional[int] = None
) -> ExtTable:
    """Dimension-chase Ext^i(C, C) through the two long exact sequences.

    Entries are honest intervals; an entry is exact when the chase pins it
    (flanked by zeros).  hom_hint, when supplied (e.g. from the section-level
    Hom oracle), pins the first connecting rank.
    """
    n = pair.n
    x = _twisted_cohomology_intervals(n, pair.e, pair.f, a, b, -pair.f)
    y = _twisted_cohomology_intervals(n, pair.e, pair.f, a, b, -pair.e)
    x = [(lo * b, hi * b) for lo, hi in x]
    y = [(lo * a, hi * a) for lo, hi in y]
    chi = sum((-1) ** i * (x[i][0] - y[i][0]) for i in range(n + 1))
    # connecting ranks r_i of u_i : X_i -> Y_i
    r_bounds = [(0, min(x[i][1], y[i][1])) for i in range(n + 1)]
    if hom_hint is not None and x[0][0] == x[0][1]:
        pinned = x[0][0] - hom_hint
        r_bounds[0] = (pinned, pinned)
    entries = []
    # ext^0 = hom = x_0 - r_0
    entries.append(
        ExtEntry(0, max(0, x[0][0] - r_bounds[0][1]), x[0][1] - r_bounds[0][0])
    )
    for i in range(1, n + 2):
        prev_y = y[i - 1] if i - 1 <= n else (0, 0)
        prev_r = r_bounds[i - 1] if i - 1 <= n else (0, 0)
        cur_x = x[i] if i <= n else (0, 0)
        cur_r = r_bounds[i] if i <= n else (0, 0)
        lo = max(0, prev_y[0] - prev_r[1]) + max(0, cur_x[0] - cur_r[1])
        hi = (prev_y[1] - prev_r[0]) + (cur_x[1] - cur_r[0])
        entries.append(ExtEntry(i, lo, hi))
    return ExtTable(entries=entries[: n + 1], euler_characteristic=chi)


# ---------------------------------------------------------------------------
# syzygy side
# ---------------------------------------------------------------------------


@dataclass
class SyzygyPresentation:
    n: int
    degrees: tuple
    mults: tuple
    c: int
    alpha: Optional[PolyMatrix]
    rep: Representation
    rank: int
    chern: ChernPolynomial
    surjectivity: FiberReport

    @property
    def is_bundle(self) -> bool:
        return self.surjectivity.passed


def syzygy_arrow_counts(n, degrees):
    return [comb(n + d, d) for d in degrees]


def syzygy_quiver_for(n, degrees):
    return star_quiver(syzygy_arrow_counts(n, degrees))


def syzygy_from_rep(
    rep: Representation,
    n: int,
    degrees,
    trials: int = 200,
    seed: int = 0,
    certify: bool = True,
) -> SyzygyPresentation:
    """Assemble the block form map (alpha_1 | alpha_2 | ...) of a star-quiver
    representation and check fiberwise surjectivity; the kernel presentation
    gets rank sum(a_j) - c and Chern series prod (1 - d_j t)^{a_j}."""
    degrees = tuple(degrees)
    if any(d <= 0 for d in degrees) or any(
        degrees[i] <= degrees[i + 1] for i in range(len(degrees) - 1)
    ):
        raise ValueError("degrees must be strictly decreasing and positive")
    ws = syzygy_arrow_counts(n, degrees)
    if rep.quiver != star_quiver(ws):
        raise ValueError(f"representation must live on the star quiver with arms {ws}")
    c = rep.dims[0]
    mults = tuple(rep.dims[1:])
    field = rep.field
    blocks = []
    offset = 0
    for j, d in enumerate(degrees):
        monos = monomial_basis(n, d)
        coeffs = list(rep.maps[offset : offset + ws[j]])
        offset += ws[j]
        if mults[j] == 0:
            blocks.append(None)
            continue
        blocks.append(
            expand_map(coeffs, [HomogeneousPoly.monomial(field, n, m) for m in monos],
                       row_twist=0, col_twist=-d)
        )
    col_twists = []
    entries = [[] for _ in range(c)]
    for j, blk in enumerate(blocks):
        if blk is None:
            continue
        col_twists.extend([-degrees[j]] * mults[j])
        for r in range(c):
            entries[r].extend(blk.entries[r])
    alpha = None
    if c > 0 and col_twists:
        alpha = PolyMatrix(field, n, [0] * c, col_twists, entries)
        surjectivity = global_surjective(alpha, trials=trials, seed=seed, certify=certify)
    elif c == 0:
        surjectivity = FiberReport(mode="surjective", verdict=PASS_CERTIFIED)
    else:
        # c >= 1 with no columns: the zero map to O^c is nowhere surjective
        from .fibers import FAIL
        surjectivity = FiberReport(mode="surjective", verdict=FAIL,
                                   witness=tuple([1] + [0] * n))
    rank = sum(mults) - c
    chern = syzygy_chern(n, degrees, mults)
    return SyzygyPresentation(
        n=n, degrees=degrees, mults=mults, c=c, alpha=alpha, rep=rep,
        rank=rank, chern=chern, surjectivity=surjectivity,
    )


def syzygy_decomposability(n, degrees, mults, c) -> CriteriaReport:
    """Tits-form forcing for the syzygy quiver (center vertex carries c)."""
    ws = syzygy_arrow_counts(n, degrees)
    q = tits_form(star_quiver(ws), tuple([c] + list(mults)))
    return CriteriaReport(
        q=q,
        simple_possible=q <= 1,
        forced_decomposable=q > 1,
        exceptional_possible=q == 1,
        exceptional_generic=False,
        caveat=None,
    )


def decompose_syzygy(p: SyzygyPresentation, seed: int = 0, trials: int = 200):
    """Representation-side split; every summand re-verifies surjectivity
    (globally surjective representations are closed under quotients,
    hence under direct summands)."""
    report = decompose(p.rep, seed=seed)
    out = []
    for summand in report.summands:
        out.append(syzygy_from_rep(summand, p.n, p.degrees, trials=trials, seed=seed))
    return report, out
