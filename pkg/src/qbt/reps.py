"""Quiver representations over an exact field.

Hom and Ext^1 both come from the stacked intertwiner system
  (f_i)  |->  (f_{h(a)} A_a - B_a f_{t(a)})_a
whose kernel is Hom(R1, R2) and whose cokernel realizes Ext^1 for the
hereditary path algebra.  The splitter draws random endomorphisms and
turns coprime factorizations of their minimal polynomials into
idempotents; splits are verified exactly by conjugation, so only the
"no split found" outcome is heuristic.
"""

import random
from dataclasses import dataclass, field as dc_field

from .fields import PrimeField, derive_seed
from .matrices import Matrix
from .quivers import Quiver
from .univariate import coprime_split, poly_eval_matrix, poly_mul, poly_xgcd

CERT_SCHUR = "CertifiedSchur"
CERT_SPLIT = "CertifiedSplit"
CERT_HEURISTIC = "HeuristicIndecomposable"

DEFAULT_MAX_TRIALS = 24


class QuiverMismatch(ValueError):
    pass


class NonInvariantSubspace(ValueError):
    def __init__(self, arrow_index):
        self.arrow_index = arrow_index
        super().__init__(f"subspace family is not invariant under arrow {arrow_index}")


class Representation:
    __slots__ = ("quiver", "dims", "maps", "field")

    def __init__(self, quiver: Quiver, dims, maps, field):
        quiver.check_dims(dims)
        dims = tuple(int(d) for d in dims)
        if any(d < 0 for d in dims):
            raise ValueError("negative dimension")
        maps = tuple(maps)
        if len(maps) != len(quiver.arrows):
            raise ValueError(f"{len(maps)} maps for {len(quiver.arrows)} arrows")
        for a, ((t, h), m) in enumerate(zip(quiver.arrows, maps)):
            if m.rows != dims[h] or m.cols != dims[t]:
                raise ValueError(
                    f"map {a} has shape {m.rows}x{m.cols}, expected {dims[h]}x{dims[t]}"
                )
            if m.field != field:
                raise ValueError("map field mismatch")
        self.quiver = quiver
        self.dims = dims
        self.maps = maps
        self.field = field

    def __repr__(self):
        return f"Representation(dims={self.dims})"

    def total_dim(self):
        return sum(self.dims)

    def is_zero_rep(self):
        return self.total_dim() == 0

    @classmethod
    def zero_maps(cls, quiver, dims, field):
        maps = [Matrix.zeros(field, dims[h], dims[t]) for t, h in quiver.arrows]
        return cls(quiver, dims, maps, field)


def random_representation(quiver: Quiver, dims, seed: int, field) -> Representation:
    """Entries i.i.d. uniform in the field (small integers over Q),
    bit-identical across runs for a fixed seed."""
    rng = random.Random(derive_seed(seed, 0))
    maps = []
    for t, h in quiver.arrows:
        data = [[field.random(rng) for _ in range(dims[t])] for _ in range(dims[h])]
        maps.append(Matrix(field, dims[h], dims[t], data))
    return Representation(quiver, dims, maps, field)


def _check_pair(r1: Representation, r2: Representation):
    if r1.quiver != r2.quiver:
        raise QuiverMismatch("representations live on different quivers")
    if r1.field != r2.field:
        raise QuiverMismatch("representations live over different fields")


def _intertwiner_system(r1: Representation, r2: Representation):
    """Rows of the linear system on stacked (f_i), one block per arrow.

    Unknowns: f_i of shape (r2.dims[i] x r1.dims[i]), flattened row-major,
    vertex blocks in order.  Arrows whose two maps are both zero contribute
    only zero rows and are skipped; the full row count is returned
    separately so cokernel dimensions stay correct.
    """
    f = r1.field
    q = r1.quiver
    offsets = []
    off = 0
    for i in range(q.vertex_count):
        offsets.append(off)
        off += r2.dims[i] * r1.dims[i]
    unknowns = off
    rows = []
    total_rows = 0
    for a, (t, h) in enumerate(q.arrows):
        A = r1.maps[a]
        B = r2.maps[a]
        block_rows = r2.dims[h] * r1.dims[t]
        total_rows += block_rows
        if A.is_zero() and B.is_zero():
            continue
        # equation (r, c):  sum_k f_h[r,k] A[k,c] - sum_k B[r,k] f_t[k,c] = 0
        for r in range(r2.dims[h]):
            for c in range(r1.dims[t]):
                row = [f.zero] * unknowns
                base_h = offsets[h]
                for k in range(r1.dims[h]):
                    coeff = A.data[k][c]
                    if not f.is_zero(coeff):
                        row[base_h + r * r1.dims[h] + k] = coeff
                base_t = offsets[t]
                for k in range(r2.dims[t]):
                    coeff = B.data[r][k]
                    if not f.is_zero(coeff):
                        idx = base_t + k * r1.dims[t] + c
                        row[idx] = f.sub(row[idx], coeff)
                rows.append(row)
    return rows, unknowns, total_rows, offsets


def hom_basis(r1: Representation, r2: Representation):
    """Echelon-normalized basis of Hom(R1, R2) as per-vertex matrix tuples."""
    _check_pair(r1, r2)
    f = r1.field
    rows, unknowns, _, offsets = _intertwiner_system(r1, r2)
    if unknowns == 0:
        return []
    system = Matrix(f, len(rows), unknowns, rows)
    basis = []
    for vec in system.nullspace():
        per_vertex = []
        for i in range(r1.quiver.vertex_count):
            h, w = r2.dims[i], r1.dims[i]
            base = offsets[i]
            data = [vec[base + r * w : base + (r + 1) * w] for r in range(h)]
            per_vertex.append(Matrix(f, h, w, data))
        basis.append(tuple(per_vertex))
    return basis


def hom_dim(r1, r2) -> int:
    _check_pair(r1, r2)
    rows, unknowns, _, _ = _intertwiner_system(r1, r2)
    if unknowns == 0:
        return 0
    return unknowns - Matrix(r1.field, len(rows), unknowns, rows).rank()


def ext1_dim(r1: Representation, r2: Representation) -> int:
    """dim Ext^1(R1, R2): cokernel dimension of the intertwiner system map."""
    _check_pair(r1, r2)
    rows, unknowns, total_rows, _ = _intertwiner_system(r1, r2)
    if unknowns == 0:
        return total_rows
    rank = Matrix(r1.field, len(rows), unknowns, rows).rank()
    return total_rows - rank


def is_schur(r: Representation) -> bool:
    """True iff End(R) is one-dimensional (the zero representation is not Schur)."""
    return hom_dim(r, r) == 1


def direct_sum(r1: Representation, r2: Representation) -> Representation:
    _check_pair(r1, r2)
    f = r1.field
    dims = tuple(a + b for a, b in zip(r1.dims, r2.dims))
    maps = [Matrix.block_diag(f, [m1, m2]) for m1, m2 in zip(r1.maps, r2.maps)]
    return Representation(r1.quiver, dims, maps, f)


def _column_matrix(field, vectors, height):
    data = [[vec[r] for vec in vectors] for r in range(height)]
    return Matrix(field, height, len(vectors), data)


def sub_representation(r: Representation, bases):
    """Restrict to per-vertex subspaces; bases[i] is a list of length-dims[i]
    vectors.  Raises NonInvariantSubspace (naming the arrow) if some arrow
    map leaves the family."""
    f = r.field
    q = r.quiver
    if len(bases) != q.vertex_count:
        raise ValueError("need one basis per vertex")
    cols = []
    sub_dims = []
    for i, vecs in enumerate(bases):
        m = _column_matrix(f, list(vecs), r.dims[i])
        if m.rank() != m.cols:
            raise ValueError(f"subspace basis at vertex {i} is not independent")
        cols.append(m)
        sub_dims.append(m.cols)
    new_maps = []
    for a, (t, h) in enumerate(q.arrows):
        image = r.maps[a] @ cols[t]
        coords = cols[h].solve(image)
        if coords is None:
            raise NonInvariantSubspace(a)
        new_maps.append(coords)
    return Representation(q, tuple(sub_dims), new_maps, f)


def quotient(r: Representation, bases) -> Representation:
    """Quotient by an invariant family, realized on an explicit complement:
    the standard coordinate vectors missed by the subspace pivots."""
    f = r.field
    q = r.quiver
    sub_representation(r, bases)  # validates independence and invariance
    comp_cols = []
    full_inv = []
    sub_sizes = []
    for i, vecs in enumerate(bases):
        vecs = list(vecs)
        sub = _column_matrix(f, vecs, r.dims[i])
        _, pivots = sub.transpose().rref()
        pivot_set = set(pivots)
        comp = [c for c in range(r.dims[i]) if c not in pivot_set]
        comp_m = Matrix(
            f,
            r.dims[i],
            len(comp),
            [[f.one if rr == cc else f.zero for cc in comp] for rr in range(r.dims[i])],
        )
        full = Matrix.hstack(f, [sub, comp_m]) if r.dims[i] else Matrix.zeros(f, 0, 0)
        comp_cols.append(comp_m)
        sub_sizes.append(sub.cols)
        full_inv.append((full, sub.cols))
    new_maps = []
    for a, (t, h) in enumerate(q.arrows):
        image = r.maps[a] @ comp_cols[t]
        full, k = full_inv[h]
        coords = full.solve(image)
        if coords is None:
            raise NonInvariantSubspace(a)
        data = [coords.data[k + rr] for rr in range(coords.rows - k)]
        new_maps.append(Matrix(f, coords.rows - k, coords.cols, [list(row) for row in data]))
    dims = tuple(r.dims[i] - sub_sizes[i] for i in range(q.vertex_count))
    return Representation(q, dims, new_maps, f)


@dataclass
class DecompositionReport:
    summands: list
    change_of_basis: list  # per-vertex invertible Matrix
    certificate: str
    leaf_certificates: list = dc_field(default_factory=list)
    trials_used: int = 0

    def verify(self, original: Representation) -> bool:
        """Conjugate the original maps and check exact block structure."""
        f = original.field
        q = original.quiver
        sizes = [[s.dims[i] for s in self.summands] for i in range(q.vertex_count)]
        if any(sum(sz) != original.dims[i] for i, sz in enumerate(sizes)):
            return False
        inverses = []
        for i, s in enumerate(self.change_of_basis):
            if s.rows != original.dims[i] or s.cols != original.dims[i]:
                return False
            inv = s.solve(Matrix.identity(f, s.rows))
            if inv is None:
                return False
            inverses.append(inv)
        for a, (t, h) in enumerate(q.arrows):
            conj = inverses[h] @ original.maps[a] @ self.change_of_basis[t]
            r0 = 0
            for k, s in enumerate(self.summands):
                c0 = sum(sizes[t][:k])
                block = conj.submatrix(
                    range(r0, r0 + s.dims[h]), range(c0, c0 + s.dims[t])
                )
                if block != s.maps[a]:
                    return False
                r0 += s.dims[h]
            # off-diagonal blocks must vanish
            for rr in range(conj.rows):
                for cc in range(conj.cols):
                    kr = _block_of(sizes[h], rr)
                    kc = _block_of(sizes[t], cc)
                    if kr != kc and not f.is_zero(conj.data[rr][cc]):
                        return False
        return True


def _block_of(sizes, index):
    acc = 0
    for k, s in enumerate(sizes):
        acc += s
        if index < acc:
            return k
    return len(sizes)


def _random_endomorphism(end_basis, field, rng):
    coeffs = [field.random(rng) for _ in end_basis]
    vertices = len(end_basis[0])
    out = []
    for i in range(vertices):
        m = end_basis[0][i].scale(coeffs[0])
        for c, basis_elt in zip(coeffs[1:], end_basis[1:]):
            m = m + basis_elt[i].scale(c)
        out.append(m)
    return out


def _split_by_idempotent(r: Representation, pi):
    """Split R along an idempotent endomorphism pi (per-vertex matrices).

    Returns (r_ker, r_im, per-vertex change of basis [ker basis | im basis]).
    """
    f = r.field
    q = r.quiver
    ker_bases = []
    im_bases = []
    for i in range(q.vertex_count):
        p = pi[i]
        ker = p.nullspace()
        im = (Matrix.identity(f, p.rows) - p).nullspace()
        if len(ker) + len(im) != r.dims[i]:
            raise ArithmeticError("projector is not idempotent")
        ker_bases.append(ker)
        im_bases.append(im)
    S = []
    for i in range(q.vertex_count):
        S.append(_column_matrix(f, ker_bases[i] + im_bases[i], r.dims[i]))
    ker_dims = tuple(len(b) for b in ker_bases)
    im_dims = tuple(len(b) for b in im_bases)
    ker_maps = []
    im_maps = []
    for a, (t, h) in enumerate(q.arrows):
        conj = S[h].solve(r.maps[a] @ S[t])
        if conj is None:
            raise ArithmeticError("change of basis is singular")
        kh = ker_dims[h]
        kt = ker_dims[t]
        for rr in range(conj.rows):
            for cc in range(conj.cols):
                same = (rr < kh) == (cc < kt)
                if not same and not f.is_zero(conj.data[rr][cc]):
                    raise ArithmeticError("conjugated map is not block diagonal")
        ker_maps.append(conj.submatrix(range(kh), range(kt)))
        im_maps.append(conj.submatrix(range(kh, conj.rows), range(kt, conj.cols)))
    r_ker = Representation(q, ker_dims, ker_maps, f)
    r_im = Representation(q, im_dims, im_maps, f)
    return r_ker, r_im, S


def decompose(r: Representation, max_trials: int = DEFAULT_MAX_TRIALS, seed: int = 0) -> DecompositionReport:
    """Split R into direct summands via random endomorphism idempotents.

    dim End = 1 certifies a Schur (hence indecomposable) summand; any split
    found is verified exactly by conjugation; running out of trials on a
    representation with dim End > 1 yields a heuristic-only leaf.
    """
    f = r.field
    q = r.quiver
    node_counter = [0]
    trials_used = [0]

    def go(rep):
        if rep.total_dim() == 0:
            return [], [Matrix.identity(f, rep.dims[i]) for i in range(q.vertex_count)]
        end = hom_basis(rep, rep)
        if len(end) == 1:
            return ([(rep, CERT_SCHUR)],
                    [Matrix.identity(f, rep.dims[i]) for i in range(q.vertex_count)])
        node = node_counter[0]
        node_counter[0] += 1
        for trial in range(max_trials):
            trials_used[0] += 1
            rng = random.Random(derive_seed(seed, node * 1_000_003 + trial))
            e = _random_endomorphism(end, f, rng)
            mu = Matrix.block_diag(f, e).minimal_polynomial()
            split = coprime_split(f, mu, rng)
            if split is None:
                continue
            fpart, gpart = split
            g, u, v = poly_xgcd(f, fpart, gpart)
            if len(g) != 1:
                continue  # factors not coprime; should not happen
            uf = poly_mul(f, u, fpart)
            pi = [poly_eval_matrix(f, uf, e[i]) for i in range(q.vertex_count)]
            r_ker, r_im, S = _split_by_idempotent(rep, pi)
            if r_ker.total_dim() == 0 or r_im.total_dim() == 0:
                continue  # degenerate projector; try again
            subs1, T1 = go(r_ker)
            subs2, T2 = go(r_im)
            total = [
                S[i] @ Matrix.block_diag(f, [T1[i], T2[i]])
                for i in range(q.vertex_count)
            ]
            return subs1 + subs2, total
        return ([(rep, CERT_HEURISTIC)],
                [Matrix.identity(f, rep.dims[i]) for i in range(q.vertex_count)])

    leaves, change = go(r)
    summands = [rep for rep, _ in leaves]
    leaf_certs = [cert for _, cert in leaves]
    if len(summands) <= 1:
        certificate = leaf_certs[0] if leaf_certs else CERT_SPLIT
    else:
        certificate = CERT_SPLIT
    report = DecompositionReport(
        summands=summands,
        change_of_basis=change,
        certificate=certificate,
        leaf_certificates=leaf_certs,
        trials_used=trials_used[0],
    )
    if not report.verify(r):
        raise ArithmeticError("internal error: decomposition failed verification")
    return report
