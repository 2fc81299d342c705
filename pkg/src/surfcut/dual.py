"""Geometric dual of an embedded graph, and integer chains on darts.

The dual reuses the primal dart indices: dual dart d runs from the face left
of primal dart d to the face on its right, so the dual of edge i is edge i
and the correspondence between primal and dual darts is the identity on ids.
Chains exploit this: a chain assigns an integer to every dart subject to
antisymmetry under twin, stored as one coefficient per edge (on the even
dart), and transporting a chain across the duality keeps its coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from surfcut.embedding import EmbeddedGraph, EmbeddingError, FaceStructure, trace_faces


@dataclass(frozen=True)
class IntegerChain:
    """An antisymmetric integer labelling of darts, one coefficient per edge.

    coeffs[i] is the value on dart 2i; dart 2i+1 carries -coeffs[i].
    """

    coeffs: tuple[int, ...]

    @classmethod
    def zero(cls, m: int) -> "IntegerChain":
        return cls(coeffs=(0,) * m)

    @classmethod
    def of_walk(cls, m: int, darts: tuple[int, ...]) -> "IntegerChain":
        c = [0] * m
        for d in darts:
            c[d >> 1] += 1 if d % 2 == 0 else -1
        return cls(coeffs=tuple(c))

    def dart_coeff(self, d: int) -> int:
        c = self.coeffs[d >> 1]
        return c if d % 2 == 0 else -c

    @property
    def size(self) -> int:
        """Total mass, the sum of absolute coefficients."""
        return sum(abs(c) for c in self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "IntegerChain") -> "IntegerChain":
        return IntegerChain(tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __sub__(self, other: "IntegerChain") -> "IntegerChain":
        return IntegerChain(tuple(a - b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __neg__(self) -> "IntegerChain":
        return IntegerChain(tuple(-a for a in self.coeffs))


@dataclass(frozen=True)
class DualGraph:
    """Dual of a face structure, with the identity dart correspondence.

    `graph` has one vertex per primal face.  Its rotation is the inverse of
    the primal face permutation: crossing the edges around a face in the
    reverse of boundary-walk order turns the facial walks of the dual into
    the vertex stars of the primal, which is what makes the dual of the dual
    the original map (with all darts reversed).
    """

    primal: EmbeddedGraph
    primal_faces: FaceStructure
    graph: EmbeddedGraph

    def d_map(self, d: int) -> int:
        """Primal dart to dual dart (identity on ids)."""
        return d

    def d_inv(self, d: int) -> int:
        """Dual dart to primal dart (identity on ids)."""
        return d


def build_dual(g: EmbeddedGraph, faces: FaceStructure | None = None) -> DualGraph:
    if faces is None:
        faces = trace_faces(g)
    nd = g.num_darts
    tails = tuple(faces.face_of[d] for d in range(nd))
    heads = tuple(faces.face_of[d ^ 1] for d in range(nd))
    phi_inv = [0] * nd
    for d in range(nd):
        phi_inv[g.rotation[d ^ 1]] = d
    dual = EmbeddedGraph(
        n=faces.face_count, tails=tails, heads=heads, rotation=tuple(phi_inv), allow_loops=True
    )
    return DualGraph(primal=g, primal_faces=faces, graph=dual)


def dual_chain(dual: DualGraph, c: IntegerChain) -> IntegerChain:
    """Transport a primal chain to the dual. Coefficients are preserved."""
    if len(c.coeffs) != dual.primal.m:
        raise ValueError("chain length does not match the primal graph")
    return IntegerChain(c.coeffs)


def primal_chain(dual: DualGraph, c: IntegerChain) -> IntegerChain:
    """Transport a dual chain back to the primal. Inverse of dual_chain."""
    if len(c.coeffs) != dual.graph.m:
        raise ValueError("chain length does not match the dual graph")
    return IntegerChain(c.coeffs)


def cut_chain(g: EmbeddedGraph, S) -> IntegerChain:
    """The chain of the cut [S, V-S]: +1 on each dart leaving S.

    S must be a nonempty proper subset of the vertices.
    """
    inside = [False] * g.n
    for v in S:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
        inside[v] = True
    k = sum(inside)
    if k == 0 or k == g.n:
        raise ValueError("cut side must be a nonempty proper subset")
    coeffs = [0] * g.m
    for e in range(g.m):
        a, b = g.tails[2 * e], g.heads[2 * e]
        if inside[a] and not inside[b]:
            coeffs[e] = 1
        elif inside[b] and not inside[a]:
            coeffs[e] = -1
    return IntegerChain(tuple(coeffs))
