"""Signature grids, exact brute-force Holant evaluation, grid transforms.

The Holant value of a grid is the sum over all 0/1 edge assignments of the
product of vertex signature values, each vertex reading its incident edges
in its recorded variable order.  Orthogonal holographic transformations
preserve the value on general grids; arbitrary invertible ones do on
bipartite grids (row transform on the left side, inverse column transform
on the right).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotOrthogonal, TooManyEdges, WrongArity
from .scalars import AlgebraicScalar, alpha, i_unit, kth_roots, one, rational, sqrt2, zero
from .signatures import (
    DenseSignature,
    SymmetricSignature,
    Transform,
    apply_transform,
    dense_from_signature_matrix,
    expand,
)

DEFAULT_MAX_EDGES = 24


@dataclass
class GridVertex:
    signature: DenseSignature
    incident: tuple[int, ...]  # edge ids in variable order


@dataclass
class SignatureGrid:
    """Edges 0..m-1 and vertices carrying signatures over their incidences."""

    edge_count: int
    vertices: list[GridVertex]
    bipartite: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def __post_init__(self):
        uses: dict[int, int] = {}
        for v in self.vertices:
            if v.signature.arity != len(v.incident):
                raise WrongArity("vertex arity must match its incidence list")
            for e in v.incident:
                if not 0 <= e < self.edge_count:
                    raise ValueError(f"edge id {e} out of range")
                uses[e] = uses.get(e, 0) + 1
        for e in range(self.edge_count):
            if uses.get(e, 0) != 2:
                raise ValueError(f"edge {e} must appear in exactly two incidence slots")
        if self.bipartite is not None:
            left, right = self.bipartite
            if sorted(left + right) != list(range(len(self.vertices))):
                raise ValueError("bipartite split must partition the vertices")


def grid_from_vertices(edge_count: int, vertices, bipartite=None) -> SignatureGrid:
    out = []
    for sig, incident in vertices:
        if isinstance(sig, SymmetricSignature):
            sig = expand(sig)
        out.append(GridVertex(sig, tuple(incident)))
    return SignatureGrid(edge_count, out, bipartite)


def eval_holant(grid: SignatureGrid, max_edges: int = DEFAULT_MAX_EDGES) -> AlgebraicScalar:
    """Exact sum over all 2^m edge assignments (edge 0 least significant)."""
    m = grid.edge_count
    if m > max_edges:
        raise TooManyEdges(f"{m} edges exceeds the brute-force limit {max_edges}")
    total = zero()
    for sigma in range(1 << m):
        term = one()
        for v in grid.vertices:
            idx = 0
            for e in v.incident:
                idx = (idx << 1) | ((sigma >> e) & 1)
            value = v.signature[idx]
            if value.is_zero():
                term = None
                break
            term = term * value
        if term is not None:
            total = total + term
    return total


def transform_grid(grid: SignatureGrid, t: Transform) -> SignatureGrid:
    """Holographic transformation of a grid.

    General grids require an orthogonal matrix (signatures become T^n f);
    bipartite grids accept any invertible one (row transform on the left,
    inverse on the right).
    """
    if grid.bipartite is None:
        if not t.is_orthogonal():
            raise NotOrthogonal("general grids need an orthogonal transformation")
        vertices = [GridVertex(apply_transform(t, v.signature), v.incident) for v in grid.vertices]
        return SignatureGrid(grid.edge_count, vertices, None)
    left, right = grid.bipartite
    left_set = set(left)
    t_t = t.transpose()
    t_inv = t.inverse()
    vertices = []
    for idx, v in enumerate(grid.vertices):
        if idx in left_set:
            vertices.append(GridVertex(apply_transform(t_t, v.signature), v.incident))
        else:
            vertices.append(GridVertex(apply_transform(t_inv, v.signature), v.incident))
    return SignatureGrid(grid.edge_count, vertices, grid.bipartite)


def two_stretch(grid: SignatureGrid) -> SignatureGrid:
    """Edge-vertex incidence form: each edge becomes a path through =2.

    The new grid is bipartite (original vertices left, equality vertices
    right) and has the same Holant value.
    """
    eq2 = DenseSignature(2, [one(), zero(), zero(), one()], max_arity=None)
    slot_of_edge: dict[int, list[int]] = {e: [] for e in range(grid.edge_count)}
    vertices = []
    for v in grid.vertices:
        incident = []
        for e in v.incident:
            new_edge = 2 * e + len(slot_of_edge[e])
            slot_of_edge[e].append(new_edge)
            incident.append(new_edge)
        vertices.append(GridVertex(v.signature, tuple(incident)))
    left = tuple(range(len(vertices)))
    right = []
    for e in range(grid.edge_count):
        right.append(len(vertices))
        vertices.append(GridVertex(eq2, tuple(slot_of_edge[e])))
    return SignatureGrid(2 * grid.edge_count, vertices, (left, tuple(right)))


# -- worked examples used as end-to-end fixtures -----------------------------


def fixtures() -> dict:
    """Named exact constants for the worked examples.

    Scalar prefactors recorded alongside; comparisons in tests are up to the
    recorded scalar where the source normalizes a basis change implicitly.
    """
    i = i_unit()
    al = alpha()
    s2 = sqrt2()
    fib_g = SymmetricSignature([3, 1, 3, 1])
    fib_h = DenseSignature(3, [3, 1, -1, -3, -1, -3, 3, 1])
    hat_h = DenseSignature(3, [0, 1, 0, 0, 0, 0, i * 2, 0])
    hat_h_scale = i * s2 * 2
    cycle_f = SymmetricSignature([0, 0, 1, 0, 0])
    cycle_g = dense_from_signature_matrix(
        [[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]]
    )
    cycle_g_hat = dense_from_signature_matrix(
        [[-1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]]
    )
    # Orientation constraints on degree-4 vertices.
    orient_equalities = dense_from_signature_matrix(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
    )  # Equality(x1,x3) * Equality(x2,x4)
    lam_i_entries = []
    for x in range(16):
        x1, x2, x3, x4 = (x >> 3) & 1, (x >> 2) & 1, (x >> 1) & 1, x & 1
        if x1 == x3 and x2 == x4:
            lam_i_entries.append(i ** ((3 * x1 + 3 * x2 + 2 * x1 * x2 + 1) % 4))
        else:
            lam_i_entries.append(zero())
    orient_affine_i = DenseSignature(4, lam_i_entries)
    enigmatic_f_hat = dense_from_signature_matrix(
        [[1, -1, -1, -1], [-1, -1, 1, -1], [-1, 1, -1, -1], [-1, -1, -1, 1]]
    )
    # c = 1 + sqrt(2) + sqrt(2 (1 + sqrt 2)): one radical over Q(zeta_8).
    radicand = (rational(2) + s2 * 2).cyclotomic_part()
    y = kth_roots(radicand, 2)[0]
    enigmatic_c = rational(1) + s2 + y
    t_enigmatic = Transform(one(), zero(), zero(), al) @ Transform(
        one(), enigmatic_c, -enigmatic_c, one()
    )
    return {
        "fib_g": fib_g,
        "fib_h": fib_h,
        "hat_h": hat_h,
        "hat_h_scale": hat_h_scale,
        "cycle_f": cycle_f,
        "cycle_g": cycle_g,
        "cycle_g_hat": cycle_g_hat,
        "orient_equalities": orient_equalities,
        "orient_affine_i": orient_affine_i,
        "enigmatic_f_hat": enigmatic_f_hat,
        "enigmatic_c": enigmatic_c,
        "enigmatic_T": t_enigmatic,
        "enigmatic_Q": lambda x1, x2, x3, x4: (
            2 * (x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4 + x1 * x2 + x2 * x3 + x3 * x4 + x4 * x1)
        )
        % 4,
    }


def complete_graph_k4() -> SignatureGrid:
    """K4 with the exact-one signature at every vertex (perfect matchings)."""
    exact_one = SymmetricSignature([0, 1, 0, 0])
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    incident: dict[int, list[int]] = {v: [] for v in range(4)}
    for eid, (u, v) in enumerate(edges):
        incident[u].append(eid)
        incident[v].append(eid)
    return grid_from_vertices(
        len(edges), [(exact_one, tuple(incident[v])) for v in range(4)]
    )
