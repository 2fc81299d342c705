"""Balance weights and homology coordinates for dual chains.

Both structures hang off the same primal BFS tree.  The weight of a tree
dart parent->child is the size of the child's subtree, so that the weight of
any cut chain with the root inside equals the size of the far side.  The
loops are the fundamental cycles of the 2g edges left over after growing a
spanning cotree in the dual, and the theta map counts signed crossings of a
dual chain with each loop.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from surfcut.dual import DualGraph, IntegerChain, primal_chain
from surfcut.embedding import EmbeddedGraph, EmbeddingError, genus


def _bfs_tree(g: EmbeddedGraph, root: int):
    """Deterministic BFS tree: FIFO queue, darts scanned in ascending id.

    Returns (parent_dart, order, tree_edges) where parent_dart[v] is the
    dart parent->v (-1 at the root) and order lists vertices by discovery.
    """
    if not (0 <= root < g.n):
        raise ValueError(f"root {root} out of range")
    parent_dart = [-1] * g.n
    seen = [False] * g.n
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for d in g.out_darts[v]:
            u = g.heads[d]
            if not seen[u]:
                seen[u] = True
                parent_dart[u] = d
                order.append(u)
                queue.append(u)
    if not all(seen):
        raise EmbeddingError("graph is not connected")
    tree_edges = frozenset((parent_dart[v]) >> 1 for v in range(g.n) if v != root)
    return tuple(parent_dart), tuple(order), tree_edges


@dataclass(frozen=True)
class WeightFunction:
    """Antisymmetric edge weights measuring cut balance.

    values[i] lives on dart 2i.  Nonzero only on tree edges, where the dart
    pointing away from the root carries the size of the subtree it enters.
    """

    root: int
    values: tuple[int, ...]
    tree_edges: frozenset[int]

    def dart_value(self, d: int) -> int:
        v = self.values[d >> 1]
        return v if d % 2 == 0 else -v

    def evaluate(self, c: IntegerChain) -> int:
        return sum(a * b for a, b in zip(c.coeffs, self.values, strict=True))


def build_weight(g: EmbeddedGraph, root: int = 0) -> WeightFunction:
    parent_dart, order, tree_edges = _bfs_tree(g, root)
    subtree = [1] * g.n
    for v in reversed(order):
        if parent_dart[v] != -1:
            subtree[g.tails[parent_dart[v]]] += subtree[v]
    values = [0] * g.m
    for v in range(g.n):
        d = parent_dart[v]
        if d == -1:
            continue
        values[d >> 1] = subtree[v] if d % 2 == 0 else -subtree[v]
    return WeightFunction(root=root, values=tuple(values), tree_edges=tree_edges)


@dataclass(frozen=True)
class LoopSystem:
    """A homology basis of 2g loops through the root, with crossing data.

    loops[j] is a closed dart walk in the primal: tree path out, one leftover
    edge, tree path back.  theta_rows[i] holds the crossing counts of edge
    i's even dual dart with each loop, so theta of a dual chain is a plain
    dot product per loop.  companions[j] is a dual cycle crossing loop j
    exactly once and the other loops not at all.
    """

    root: int
    genus: int
    loops: tuple[tuple[int, ...], ...]
    loop_chains: tuple[IntegerChain, ...]
    theta_rows: tuple[tuple[int, ...], ...]
    companions: tuple[IntegerChain, ...]
    tree_edges: frozenset[int]
    cotree_edges: frozenset[int]
    leftover_edges: tuple[int, ...]

    def theta_dart(self, d: int) -> tuple[int, ...]:
        row = self.theta_rows[d >> 1]
        return row if d % 2 == 0 else tuple(-x for x in row)

    def theta(self, c: IntegerChain) -> tuple[int, ...]:
        out = [0] * (2 * self.genus)
        for i, a in enumerate(c.coeffs):
            if a:
                row = self.theta_rows[i]
                for j in range(len(out)):
                    out[j] += a * row[j]
        return tuple(out)


def theta(c: IntegerChain, system: LoopSystem) -> tuple[int, ...]:
    """Crossing vector of a dual chain with each loop of the system."""
    return system.theta(c)


def what(c: IntegerChain, dual: DualGraph, w: WeightFunction) -> int:
    """Weight of a dual chain, pulled back through the duality."""
    return w.evaluate(primal_chain(dual, c))


def _tree_walk(parent_dart, tails, a: int, b: int) -> list[int]:
    """Darts of the tree path a -> b (climb to the lca, descend to b)."""
    anc_a = [a]
    v = a
    while parent_dart[v] != -1:
        v = tails[parent_dart[v]]
        anc_a.append(v)
    index_a = {v: i for i, v in enumerate(anc_a)}
    down = []
    v = b
    while v not in index_a:
        d = parent_dart[v]
        down.append(d)
        v = tails[d]
    up = [parent_dart[u] ^ 1 for u in anc_a[: index_a[v]]]
    return up + down[::-1]


def build_loop_system(g: EmbeddedGraph, dual: DualGraph, root: int = 0) -> LoopSystem:
    """Split the edges into tree, cotree and 2g leftover edges, and build loops.

    Uses the same BFS tree as build_weight (same root, same traversal), then
    grows a spanning tree of the dual avoiding primal tree edges.  Exactly 2g
    edges remain; their fundamental cycles in the primal tree are the loops.
    """
    parent_dart, _, tree_edges = _bfs_tree(g, root)
    dg = dual.graph
    g_genus = genus(g, dual.primal_faces)

    dual_parent = [-1] * dg.n
    seen = [False] * dg.n
    seen[0] = True
    queue = deque([0])
    while queue:
        f = queue.popleft()
        for d in dg.out_darts[f]:
            if (d >> 1) in tree_edges:
                continue
            u = dg.heads[d]
            if not seen[u]:
                seen[u] = True
                dual_parent[u] = d
                queue.append(u)
    if not all(seen):
        raise EmbeddingError("dual cotree failed to span; embedding data is inconsistent")
    cotree_edges = frozenset(dual_parent[f] >> 1 for f in range(dg.n) if dual_parent[f] != -1)

    leftover = tuple(sorted(set(range(g.m)) - tree_edges - cotree_edges))
    if len(leftover) != 2 * g_genus:
        raise EmbeddingError(
            f"{len(leftover)} edges left outside tree and cotree, expected {2 * g_genus}"
        )

    loops = []
    loop_chains = []
    for e in leftover:
        d = 2 * e
        walk = _tree_walk(parent_dart, g.tails, root, g.tails[d])
        walk.append(d)
        walk += _tree_walk(parent_dart, g.tails, g.heads[d], root)
        loops.append(tuple(walk))
        loop_chains.append(IntegerChain.of_walk(g.m, tuple(walk)))

    theta_rows = tuple(
        tuple(lc.coeffs[i] for lc in loop_chains) for i in range(g.m)
    )

    companions = []
    for e in leftover:
        d = 2 * e
        cwalk = [d] + _tree_walk(dual_parent, dg.tails, dg.heads[d], dg.tails[d])
        companions.append(IntegerChain.of_walk(g.m, tuple(cwalk)))

    return LoopSystem(
        root=root,
        genus=g_genus,
        loops=tuple(loops),
        loop_chains=tuple(loop_chains),
        theta_rows=theta_rows,
        companions=tuple(companions),
        tree_edges=tree_edges,
        cotree_edges=cotree_edges,
        leftover_edges=leftover,
    )
