"""Quivers, dimension vectors, Euler/Tits forms and root criteria.

Vertex numbering conventions (fixed so serialized data is portable):
sources before sinks for the Kronecker quiver; for syzygy/star quivers
the center vertex is index 0 and all arrows point into it; for the
three-vertex quiver K_{m,n} the vertices are 0,1,2 with m arrows 0->1
and n arrows 1->2.
"""


class Quiver:
    __slots__ = ("vertex_count", "arrows")

    def __init__(self, vertex_count, arrows):
        if vertex_count < 0:
            raise ValueError("negative vertex count")
        arrows = tuple((int(t), int(h)) for t, h in arrows)
        for t, h in arrows:
            if not (0 <= t < vertex_count and 0 <= h < vertex_count):
                raise ValueError(f"arrow ({t},{h}) out of range for {vertex_count} vertices")
        self.vertex_count = vertex_count
        self.arrows = arrows

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and self.vertex_count == other.vertex_count
            and self.arrows == other.arrows
        )

    def __hash__(self):
        return hash((self.vertex_count, self.arrows))

    def __repr__(self):
        return f"Quiver({self.vertex_count}, {list(self.arrows)})"

    def check_dims(self, dims):
        if len(dims) != self.vertex_count:
            raise ValueError(
                f"dimension vector has length {len(dims)}, quiver has {self.vertex_count} vertices"
            )


def kronecker(w: int) -> Quiver:
    """K_w: two vertices, w parallel arrows 0 -> 1."""
    if w < 0:
        raise ValueError("arrow count must be >= 0")
    return Quiver(2, [(0, 1)] * w)


def three_vertex(m: int, n: int) -> Quiver:
    """K_{m,n}: vertices 0,1,2 with m arrows 0->1 and n arrows 1->2."""
    if m < 0 or n < 0:
        raise ValueError("arrow counts must be >= 0")
    return Quiver(3, [(0, 1)] * m + [(1, 2)] * n)


def star_quiver(ws) -> Quiver:
    """Center vertex 0; for each branch j, ws[j] arrows from vertex j+1 into 0."""
    ws = list(ws)
    if any(w < 0 for w in ws):
        raise ValueError("arrow counts must be >= 0")
    arrows = []
    for j, w in enumerate(ws):
        arrows.extend([(j + 1, 0)] * w)
    return Quiver(1 + len(ws), arrows)


def syzygy_quiver(w1: int, w2: int) -> Quiver:
    """Two outer vertices feeding the center: w1 arrows 1->0, w2 arrows 2->0."""
    return star_quiver([w1, w2])


def euler_form(q: Quiver, v, w) -> int:
    """<v, w> = sum_i v_i w_i - sum_arrows v_tail w_head (exact integer)."""
    q.check_dims(v)
    q.check_dims(w)
    total = sum(int(a) * int(b) for a, b in zip(v, w))
    for t, h in q.arrows:
        total -= int(v[t]) * int(w[h])
    return total


def tits_form(q: Quiver, v) -> int:
    return euler_form(q, v, v)


def kac_forces_decomposable(q: Quiver, v) -> bool:
    """True iff the Tits form exceeds 1, which forces every representation
    with dimension vector v to be decomposable."""
    return tits_form(q, v) > 1


def kronecker_is_schur_root(w: int, v) -> bool:
    """Schur-root test on the Kronecker quiver with w >= 3 arrows."""
    if w < 3:
        raise ValueError("the Schur-root criterion needs w >= 3")
    return tits_form(kronecker(w), v) <= 1
