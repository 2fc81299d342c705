"""Builders for embedded test graphs.

Covers the standard small families, exhaustive or randomized search for a
rotation of prescribed genus, and a constructive random planar generator
(stacked triangulations with random non-bridge deletions) whose planarity
never depends on searching.
"""

from __future__ import annotations

import itertools
import random

from surfcut.embedding import EmbeddedGraph, EmbeddingError, genus, trace_faces


def from_cyclic_orders(n: int, edges: list[tuple[int, int]], orders: list[list[int]]) -> EmbeddedGraph:
    """Build a graph from an edge list and explicit per-vertex dart orders."""
    tails, heads = [], []
    for u, v in edges:
        tails += [u, v]
        heads += [v, u]
    rotation = [-1] * len(tails)
    for cyc in orders:
        for i, d in enumerate(cyc):
            rotation[d] = cyc[(i + 1) % len(cyc)]
    return EmbeddedGraph(n=n, tails=tuple(tails), heads=tuple(heads), rotation=tuple(rotation))


def _out_darts(n: int, edges) -> list[list[int]]:
    out = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        out[u].append(2 * i)
        out[v].append(2 * i + 1)
    return out


def find_embedding(
    n: int,
    edges: list[tuple[int, int]],
    target_genus: int,
    seed: int = 0,
    tries: int = 200_000,
    exhaustive_cap: int = 300_000,
) -> EmbeddedGraph:
    """A rotation system of the given genus for an abstract multigraph.

    Fixing the first dart at each vertex, the search space is the product of
    (deg - 1)! cyclic orders.  Small spaces are scanned exhaustively in lex
    order, so the result is reproducible; larger ones are sampled with the
    given seed.
    """
    out = _out_darts(n, edges)
    space = 1
    for ds in out:
        for k in range(1, len(ds)):
            space *= k
    def build(choice):
        orders = [[ds[0], *rest] if ds else [] for ds, rest in zip(out, choice)]
        return from_cyclic_orders(n, edges, orders)

    if space <= exhaustive_cap:
        for choice in itertools.product(*[list(itertools.permutations(ds[1:])) for ds in out]):
            g = build(choice)
            if genus(g) == target_genus:
                return g
    else:
        rng = random.Random(seed)
        for _ in range(tries):
            choice = []
            for ds in out:
                rest = list(ds[1:])
                rng.shuffle(rest)
                choice.append(tuple(rest))
            g = build(choice)
            if genus(g) == target_genus:
                return g
    raise EmbeddingError(f"no genus-{target_genus} rotation found")


def path_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def cycle_edges(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def star_edges(n: int) -> list[tuple[int, int]]:
    return [(0, i) for i in range(1, n)]


def complete_edges(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def complete_bipartite_edges(a: int, b: int) -> list[tuple[int, int]]:
    return [(i, a + j) for i in range(a) for j in range(b)]


def wheel_edges(n: int) -> list[tuple[int, int]]:
    """Hub 0 joined to an (n-1)-cycle."""
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    return [(0, i) for i in range(1, n)] + rim


def prism_edges(k: int) -> list[tuple[int, int]]:
    """Two k-cycles joined by a perfect matching."""
    top = [(i, (i + 1) % k) for i in range(k)]
    bottom = [(k + i, k + (i + 1) % k) for i in range(k)]
    return top + bottom + [(i, k + i) for i in range(k)]


def banana_edges(k: int) -> list[tuple[int, int]]:
    """Two vertices joined by k parallel edges."""
    return [(0, 1)] * k


def grid_torus(p: int, q: int) -> EmbeddedGraph:
    """The p x q grid on the flat torus, all faces quadrilaterals."""
    if p < 2 or q < 2:
        raise ValueError("torus grid needs both sides at least 2")
    n = p * q
    right = [(i * q + j, i * q + (j + 1) % q) for i in range(p) for j in range(q)]
    down = [(i * q + j, ((i + 1) % p) * q + j) for i in range(p) for j in range(q)]
    edges = right + down
    orders = []
    for i in range(p):
        for j in range(q):
            east = 2 * (i * q + j)
            west = 2 * (i * q + (j - 1) % q) + 1
            south = 2 * (n + i * q + j)
            north = 2 * (n + ((i - 1) % p) * q + j) + 1
            orders.append([east, north, west, south])
    g = from_cyclic_orders(n, edges, orders)
    if genus(g) != 1:
        raise EmbeddingError("flat torus grid did not come out genus 1")
    return g


def random_tree(n: int, seed: int = 0) -> EmbeddedGraph:
    """A random tree; any rotation of a tree is planar."""
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    out = _out_darts(n, edges)
    return from_cyclic_orders(n, edges, out)


def _insert_into_face(tails, heads, rot, walk):
    """Stack a new vertex into a triangular face, keeping the map planar."""
    p, q, r = walk
    a = tails[p]
    x = max(max(tails), max(heads)) + 1
    base = len(tails)
    xa, ax = base, base + 1
    xb, bx = base + 2, base + 3
    xc, cx = base + 4, base + 5
    b, c = tails[q], tails[r]
    tails += [x, a, x, b, x, c]
    heads += [a, x, b, x, c, x]
    rot += [0] * 6
    rot[r ^ 1], rot[ax] = ax, p
    rot[p ^ 1], rot[bx] = bx, q
    rot[q ^ 1], rot[cx] = cx, r
    rot[xa], rot[xc], rot[xb] = xc, xb, xa
    return x


def _delete_edge(tails, heads, rot, e):
    """Remove edge e from the rotation system, compacting dart ids."""
    for d in (2 * e, 2 * e + 1):
        x = rot[d]
        while rot[x] != d:
            x = rot[x]
        rot[x] = rot[d]
    keep = [d for d in range(len(tails)) if d >> 1 != e]
    remap = {d: i for i, d in enumerate(keep)}
    new_tails = [tails[d] for d in keep]
    new_heads = [heads[d] for d in keep]
    new_rot = [remap[rot[d]] for d in keep]
    return new_tails, new_heads, new_rot


def _as_graph(n, tails, heads, rot) -> EmbeddedGraph:
    return EmbeddedGraph(
        n=n, tails=tuple(tails), heads=tuple(heads), rotation=tuple(rot)
    )


def random_planar(n: int, deletions: int = 0, seed: int = 0) -> EmbeddedGraph:
    """Random planar embedding: a stacked triangulation minus some edges.

    Starts from a triangle, repeatedly subdivides a random face, then drops
    up to `deletions` random edges whose two sides are distinct faces (never
    a bridge, so the graph stays connected and the sphere stays a sphere).
    """
    if n < 3:
        raise ValueError("need at least 3 vertices")
    rng = random.Random(seed)
    tri = find_embedding(3, cycle_edges(3), 0)
    tails, heads, rot = list(tri.tails), list(tri.heads), list(tri.rotation)
    for _ in range(n - 3):
        g = _as_graph(max(tails) + 1 if tails else 0, tails, heads, rot)
        faces = trace_faces(g)
        walk = faces.facial_walks[rng.randrange(faces.face_count)]
        _insert_into_face(tails, heads, rot, walk)
    for _ in range(deletions):
        g = _as_graph(n, tails, heads, rot)
        faces = trace_faces(g)
        candidates = [
            e for e in range(g.m) if faces.face_of[2 * e] != faces.face_of[2 * e + 1]
        ]
        if not candidates:
            break
        tails, heads, rot = _delete_edge(tails, heads, rot, rng.choice(candidates))
    g = _as_graph(n, tails, heads, rot)
    if genus(g) != 0:
        raise EmbeddingError("planar generator drifted off the sphere")
    return g
