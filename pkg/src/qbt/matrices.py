"""Dense exact linear algebra over a scalar field.

Matrices are immutable after construction; every operation returns a new
value.  Elimination is plain Gauss-Jordan with first-nonzero pivoting,
which is deterministic over both scalar kinds.
"""

from .fields import QQ


class Matrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows, cols, data):
        """data: list of row lists (not copied; callers hand over ownership)."""
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimension")
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"data shape does not match {rows}x{cols}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, field, rows_data):
        rows = len(rows_data)
        cols = len(rows_data[0]) if rows else 0
        return cls(field, rows, cols, [list(r) for r in rows_data])

    @classmethod
    def from_ints(cls, field, rows_data):
        conv = field.from_int
        rows = len(rows_data)
        cols = len(rows_data[0]) if rows else 0
        return cls(field, rows, cols, [[conv(x) for x in r] for r in rows_data])

    @classmethod
    def column(cls, field, entries):
        return cls(field, len(entries), 1, [[x] for x in entries])

    # -- basic structure ---------------------------------------------------

    def __getitem__(self, rc):
        r, c = rc
        return self.data[r][c]

    def row(self, r):
        return list(self.data[r])

    def col(self, c):
        return [self.data[r][c] for r in range(self.rows)]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field!r})"

    def is_zero(self):
        isz = self.field.is_zero
        return all(isz(x) for row in self.data for x in row)

    def transpose(self):
        return Matrix(
            self.field,
            self.cols,
            self.rows,
            [[self.data[r][c] for r in range(self.rows)] for c in range(self.cols)],
        )

    def copy_data(self):
        return [list(r) for r in self.data]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._check_shape(other)
        add = self.field.add
        return Matrix(
            self.field,
            self.rows,
            self.cols,
            [[add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
        )

    def __sub__(self, other):
        self._check_shape(other)
        sub = self.field.sub
        return Matrix(
            self.field,
            self.rows,
            self.cols,
            [[sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
        )

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, self.rows, self.cols, [[neg(a) for a in r] for r in self.data])

    def scale(self, s):
        mul = self.field.mul
        return Matrix(self.field, self.rows, self.cols, [[mul(s, a) for a in r] for r in self.data])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        f = self.field
        add, mul, z = f.add, f.mul, f.zero
        bdata = other.data
        out = []
        for arow in self.data:
            orow = [z] * other.cols
            for k, a in enumerate(arow):
                if f.is_zero(a):
                    continue
                brow = bdata[k]
                for j in range(other.cols):
                    b = brow[j]
                    if not f.is_zero(b):
                        orow[j] = add(orow[j], mul(a, b))
            out.append(orow)
        return Matrix(f, self.rows, other.cols, out)

    def apply(self, vec):
        """Matrix-vector product on a plain list."""
        f = self.field
        add, mul, z = f.add, f.mul, f.zero
        out = []
        for row in self.data:
            s = z
            for a, x in zip(row, vec):
                if not f.is_zero(a) and not f.is_zero(x):
                    s = add(s, mul(a, x))
            out.append(s)
        return out

    def _check_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    # -- block assembly ----------------------------------------------------

    @classmethod
    def vstack(cls, field, blocks):
        blocks = [b for b in blocks]
        cols = blocks[0].cols if blocks else 0
        data = []
        for b in blocks:
            if b.cols != cols:
                raise ValueError("vstack: column mismatch")
            data.extend(list(r) for r in b.data)
        return cls(field, len(data), cols, data)

    @classmethod
    def hstack(cls, field, blocks):
        blocks = [b for b in blocks]
        rows = blocks[0].rows if blocks else 0
        for b in blocks:
            if b.rows != rows:
                raise ValueError("hstack: row mismatch")
        data = [sum((list(b.data[r]) for b in blocks), []) for r in range(rows)]
        cols = sum(b.cols for b in blocks)
        return cls(field, rows, cols, data)

    @classmethod
    def block_diag(cls, field, blocks):
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = cls.zeros(field, rows, cols)
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                out.data[r0 + i][c0 : c0 + b.cols] = list(b.data[i])
            r0 += b.rows
            c0 += b.cols
        return out

    def submatrix(self, row_idx, col_idx):
        return Matrix(
            self.field,
            len(row_idx),
            len(col_idx),
            [[self.data[r][c] for c in col_idx] for r in row_idx],
        )

    # -- elimination -------------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (Matrix, pivot column list)."""
        data, pivots = _rref_data(self.field, self.copy_data(), self.cols)
        return Matrix(self.field, self.rows, self.cols, data), pivots

    def rank(self):
        _, pivots = _rref_data(self.field, self.copy_data(), self.cols)
        return len(pivots)

    def nullspace(self):
        """Basis of the right kernel {v : Mv = 0} in echelon normal form.

        Each basis vector has value one at its free coordinate and zeros
        at the other free coordinates, which makes the result canonical.
        """
        return self.nullspace_with_free()[0]

    def nullspace_with_free(self):
        """Kernel basis plus the free column indices (one per basis vector,
        in matching order) so coordinates in the basis can be read off."""
        f = self.field
        data, pivots = _rref_data(f, self.copy_data(), self.cols)
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        neg = f.neg
        for fc in free:
            v = [f.zero] * self.cols
            v[fc] = f.one
            for i, pc in enumerate(pivots):
                v[pc] = neg(data[i][fc])
            basis.append(v)
        return basis, free

    def solve(self, rhs):
        """One exact solution X of self @ X = rhs, or None if inconsistent.

        Free variables are set to zero, so the answer is deterministic.
        rhs is a Matrix with matching row count.
        """
        if rhs.rows != self.rows:
            raise ValueError("solve: row mismatch")
        f = self.field
        aug = [list(self.data[r]) + list(rhs.data[r]) for r in range(self.rows)]
        data, pivots = _rref_data(f, aug, self.cols + rhs.cols)
        for r in range(len(pivots), self.rows):
            if any(not f.is_zero(x) for x in data[r][self.cols :]):
                return None
        pivots = [p for p in pivots if p < self.cols]
        out = Matrix.zeros(f, self.cols, rhs.cols)
        for i, pc in enumerate(pivots):
            out.data[pc] = list(data[i][self.cols :])
        return out

    def minimal_polynomial(self):
        """Monic minimal polynomial as a low-to-high coefficient list.

        Found as the first linear dependence among I, M, M^2, ...; the
        returned list c satisfies sum_i c[i] M^i = 0 with c[-1] = 1.
        """
        if self.rows != self.cols:
            raise ValueError("minimal polynomial needs a square matrix")
        f = self.field
        n = self.rows
        if n == 0:
            return [f.one]  # empty matrix: minimal polynomial 1
        powers = [Matrix.identity(f, n)]
        while True:
            powers.append(powers[-1] @ self)
            k = len(powers) - 1
            cols = Matrix(
                f,
                n * n,
                k,
                [[powers[j].data[i // n][i % n] for j in range(k)] for i in range(n * n)],
            )
            rhs = Matrix.column(f, [powers[k].data[i // n][i % n] for i in range(n * n)])
            x = cols.solve(rhs)
            if x is not None:
                # M^k = sum x_i M^i, so mu = t^k - sum x_i t^i
                return [f.neg(x.data[i][0]) for i in range(k)] + [f.one]


def _rref_data(field, data, cols):
    """In-place reduced row echelon form on a list-of-rows; returns pivots."""
    rows = len(data)
    is_zero, inv, mul, sub = field.is_zero, field.inv, field.mul, field.sub
    pivots = []
    pr = 0
    for pc in range(cols):
        pivot_row = None
        for r in range(pr, rows):
            if not is_zero(data[r][pc]):
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != pr:
            data[pr], data[pivot_row] = data[pivot_row], data[pr]
        prow = data[pr]
        pv = prow[pc]
        if pv != field.one:
            pinv = inv(pv)
            data[pr] = prow = [mul(pinv, x) for x in prow]
        for r in range(rows):
            if r == pr:
                continue
            c = data[r][pc]
            if is_zero(c):
                continue
            row = data[r]
            data[r] = [sub(a, mul(c, b)) for a, b in zip(row, prow)]
        pivots.append(pc)
        pr += 1
        if pr == rows:
            break
    return data, pivots


def rank_of_int_matrix(rows_data):
    """Rank over Q of an integer matrix given as nested lists."""
    from fractions import Fraction

    data = [[Fraction(x) for x in r] for r in rows_data]
    m = Matrix(QQ, len(data), len(data[0]) if data else 0, data)
    return m.rank()
