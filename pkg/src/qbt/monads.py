"""Monads A^a -> B^b -> C^c as coefficient data over hom-space bases.

The three bundles enter only through descriptors (rank, Chern series,
hom-space dimensions) plus a composition table of structure constants
c[j][i][k] with sigma_j o gamma_i = sum_k c[j][i][k] tau_k.  The functor
to representations of the three-vertex quiver keeps the A_i on the first
arrow group and the B_j on the second; beta alpha = 0 becomes one exact
matrix equation per tau basis element.
"""

from dataclasses import dataclass
from math import comb
from typing import Optional

from .chern import ChernPolynomial
from .matrices import Matrix
from .polynomials import HomogeneousPoly, PolyMatrix, expand_map, monomial_basis, monomial_mul
from .quivers import three_vertex, tits_form
from .reps import CERT_SCHUR, Representation, decompose


@dataclass
class BundleTriple:
    """Descriptors for simple bundles A, B, C.

    block_mode records that the three bundles sit in distinct blocks of an
    n-block collection generating the derived category, which is what
    upgrades the decomposability verdict to an equivalence.
    """

    rank_a: int
    rank_b: int
    rank_c: int
    chern_a: ChernPolynomial
    chern_b: ChernPolynomial
    chern_c: ChernPolynomial
    m: int
    n: int
    r: int
    realization: str = "abstract"
    block_mode: bool = False


class CompositionTable:
    """Structure constants c[j][i][k], j < n (second stage), i < m, k < r."""

    __slots__ = ("field", "m", "n", "r", "c")

    def __init__(self, field, m, n, r, c):
        if len(c) != n or any(len(ci) != m for ci in c) or any(
            len(cik) != r for ci in c for cik in ci
        ):
            raise ValueError("structure constant array has wrong shape")
        self.field = field
        self.m = m
        self.n = n
        self.r = r
        self.c = c

    def conjugate(self, gamma_change: Matrix, sigma_change: Matrix, tau_change: Matrix):
        """Rewrite the table after basis changes gamma' = gamma P, sigma' = sigma Q,
        tau' = tau T (columns of P, Q, T are the new basis vectors)."""
        f = self.field
        tinv = tau_change.solve(Matrix.identity(f, self.r))
        if tinv is None:
            raise ValueError("tau basis change is singular")
        out = [[[f.zero] * self.r for _ in range(self.m)] for _ in range(self.n)]
        for j2 in range(self.n):
            for i2 in range(self.m):
                # sigma'_{j2} o gamma'_{i2} = sum_{j,i} Q[j][j2] P[i][i2] sigma_j gamma_i
                acc = [f.zero] * self.r
                for j in range(self.n):
                    qc = sigma_change.data[j][j2]
                    if f.is_zero(qc):
                        continue
                    for i in range(self.m):
                        pc = gamma_change.data[i][i2]
                        if f.is_zero(pc):
                            continue
                        w = f.mul(qc, pc)
                        for k in range(self.r):
                            acc[k] = f.add(acc[k], f.mul(w, self.c[j][i][k]))
                # express acc in the new tau basis
                vec = tinv.apply(acc)
                out[j2][i2] = vec
        return CompositionTable(f, self.m, self.n, self.r, out)


def line_bundle_table(field, n, e_a, e_b, e_c) -> CompositionTable:
    """Structure constants of monomial multiplication
    H^0(O(e_b - e_a)) x H^0(O(e_c - e_b)) -> H^0(O(e_c - e_a))."""
    if not (e_a < e_b < e_c):
        raise ValueError("need e_a < e_b < e_c")
    d1 = e_b - e_a
    d2 = e_c - e_b
    gammas = monomial_basis(n, d1)
    sigmas = monomial_basis(n, d2)
    taus = monomial_basis(n, d1 + d2)
    tau_index = {m: k for k, m in enumerate(taus)}
    m, nn, r = len(gammas), len(sigmas), len(taus)
    c = [[[field.zero] * r for _ in range(m)] for _ in range(nn)]
    for j, s in enumerate(sigmas):
        for i, g in enumerate(gammas):
            c[j][i][tau_index[monomial_mul(s, g)]] = field.one
    return CompositionTable(field, m, nn, r, c)


def line_bundle_triple(field, n, e_a, e_b, e_c, block_mode=True) -> BundleTriple:
    return BundleTriple(
        rank_a=1,
        rank_b=1,
        rank_c=1,
        chern_a=ChernPolynomial.line_bundle(n, e_a),
        chern_b=ChernPolynomial.line_bundle(n, e_b),
        chern_c=ChernPolynomial.line_bundle(n, e_c),
        m=comb(n + e_b - e_a, n),
        n=comb(n + e_c - e_b, n),
        r=comb(n + e_c - e_a, n),
        realization=f"linebundle:{n},{e_a},{e_b},{e_c}",
        block_mode=block_mode,
    )


@dataclass
class MonadData:
    triple: BundleTriple
    table: CompositionTable
    a: int
    b: int
    c: int
    maps_a: list  # m matrices, each b x a
    maps_b: list  # n matrices, each c x b
    field: object = None

    def __post_init__(self):
        if self.field is None:
            self.field = self.table.field
        if len(self.maps_a) != self.triple.m or len(self.maps_b) != self.triple.n:
            raise ValueError("coefficient matrix count must match hom dimensions")
        for mat in self.maps_a:
            if mat.rows != self.b or mat.cols != self.a:
                raise ValueError("alpha coefficients must be b x a")
        for mat in self.maps_b:
            if mat.rows != self.c or mat.cols != self.b:
                raise ValueError("beta coefficients must be c x b")


def rep_of_monad(m: MonadData) -> Representation:
    """The associated three-vertex representation with dims (a, b, c)."""
    q = three_vertex(m.triple.m, m.triple.n)
    return Representation(q, (m.a, m.b, m.c), list(m.maps_a) + list(m.maps_b), m.field)


def monad_of_rep(rep: Representation, triple: BundleTriple, table: CompositionTable) -> MonadData:
    mm, nn = triple.m, triple.n
    a, b, c = rep.dims
    return MonadData(
        triple=triple, table=table, a=a, b=b, c=c,
        maps_a=list(rep.maps[:mm]), maps_b=list(rep.maps[mm : mm + nn]),
        field=rep.field,
    )


def check_relations(m: MonadData):
    """Verify beta alpha = 0: for each k, sum_{j,i} c[j][i][k] (B_j A_i) = 0.

    Returns (ok, violations) where each violation is (k, row, col).
    """
    f = m.field
    violations = []
    if m.a == 0 or m.c == 0 or m.b == 0:
        return True, []
    products = [
        [m.maps_b[j] @ m.maps_a[i] for i in range(m.triple.m)] for j in range(m.triple.n)
    ]
    for k in range(m.triple.r):
        acc = Matrix.zeros(f, m.c, m.a)
        for j in range(m.triple.n):
            for i in range(m.triple.m):
                coeff = m.table.c[j][i][k]
                if not f.is_zero(coeff):
                    acc = acc + products[j][i].scale(coeff)
        for r in range(m.c):
            for col in range(m.a):
                if not f.is_zero(acc.data[r][col]):
                    violations.append((k, r, col))
    return not violations, violations


@dataclass
class MonadCohomologyInfo:
    rank: int
    chern: ChernPolynomial

    def chern_tail_vanishes(self) -> bool:
        return self.chern.tail_vanishes_beyond(self.rank)


def cohomology_invariants(m: MonadData) -> MonadCohomologyInfo:
    """Rank and Chern series of the cohomology bundle."""
    t = m.triple
    rank = m.b * t.rank_b - m.a * t.rank_a - m.c * t.rank_c
    if rank < 0:
        raise ValueError(f"negative cohomology rank {rank}: not monad data")
    chern = (
        t.chern_b.power(m.b) * t.chern_a.power(-m.a) * t.chern_c.power(-m.c)
    )
    return MonadCohomologyInfo(rank=rank, chern=chern)


def monad_decomposability(a, b, c, m, n) -> dict:
    """Tits-form forcing on the three-vertex quiver."""
    q = tits_form(three_vertex(m, n), (a, b, c))
    return {"q": q, "forced_decomposable": q > 1}


FULL_MONAD = "full_monad"
KERNEL_PRESENTATION = "kernel_presentation"
COKERNEL_PRESENTATION = "cokernel_presentation"
FREE_FACTOR = "free_factor"
INVALID_SUMMAND = "invalid_summand"


def classify_summand(a, b, c) -> str:
    if a == 0 and c == 0:
        return FREE_FACTOR
    if a == 0:
        return KERNEL_PRESENTATION
    if c == 0:
        return COKERNEL_PRESENTATION
    if b == 0:
        return INVALID_SUMMAND  # cannot carry an injective alpha or surjective beta
    return FULL_MONAD


def decompose_monad(m: MonadData, seed: int = 0):
    """Split the associated representation; classify each summand by its
    zero pattern and re-verify the quadratic relations on it."""
    rep = rep_of_monad(m)
    report = decompose(rep, seed=seed)
    out = []
    for summand in report.summands:
        data = monad_of_rep(summand, m.triple, m.table)
        ok, violations = check_relations(data)
        out.append(
            {
                "dims": summand.dims,
                "kind": classify_summand(*summand.dims),
                "relations_ok": ok,
                "violations": violations,
                "monad": data,
            }
        )
    return report, out


VERDICT_DECOMPOSABLE = "decomposable"
VERDICT_INDECOMPOSABLE = "indecomposable"
VERDICT_INDECOMPOSABLE_HEURISTIC = "indecomposable (heuristic)"
VERDICT_UNKNOWN = "unknown (heuristic)"


def cohomology_decomposability_verdict(m: MonadData, report) -> str:
    """Decomposability of the cohomology bundle from the representation split.

    A representation split always forces decomposable cohomology.  The
    converse direction (single summand => indecomposable) is only asserted
    in block mode, and only certified when the summand is Schur.
    """
    if len(report.summands) >= 2:
        return VERDICT_DECOMPOSABLE
    if m.triple.block_mode:
        if report.certificate == CERT_SCHUR:
            return VERDICT_INDECOMPOSABLE
        return VERDICT_INDECOMPOSABLE_HEURISTIC
    return VERDICT_UNKNOWN


def monad_poly_matrices(m: MonadData, n, e_a, e_b, e_c):
    """alpha and beta as PolyMatrices in the line-bundle realization."""
    f = m.field
    gammas = [HomogeneousPoly.monomial(f, n, mo) for mo in monomial_basis(n, e_b - e_a)]
    sigmas = [HomogeneousPoly.monomial(f, n, mo) for mo in monomial_basis(n, e_c - e_b)]
    alpha = None
    beta = None
    if m.a and m.b:
        alpha = expand_map(list(m.maps_a), gammas, row_twist=e_b, col_twist=e_a)
    if m.b and m.c:
        beta = expand_map(list(m.maps_b), sigmas, row_twist=e_c, col_twist=e_b)
    return alpha, beta


def hom_basis_monads(m1: MonadData, m2: MonadData):
    """Monad morphisms (f, g, h) computed directly from the commuting
    conditions g A^1_i = A^2_i f and h B^1_j = B^2_j g."""
    from .reps import hom_basis

    return hom_basis(rep_of_monad(m1), rep_of_monad(m2))
