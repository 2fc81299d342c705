"""Brute-force references the solver is tested against.

Subset enumeration scores every proper cut directly from the definition.
Walk enumeration lists all short closed walks of a dual up to rotation and
reversal, giving an independent check of the tagged walk table.  Both blow
up exponentially and carry hard caps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from surfcut.balance import BalanceFunction
from surfcut.cover import TaggedWalk
from surfcut.dual import DualGraph, IntegerChain
from surfcut.embedding import EmbeddedGraph
from surfcut.homology import LoopSystem, WeightFunction
from surfcut.solver import CutResult, score_cut


@dataclass(frozen=True)
class OracleReport:
    """Every cut of a graph, scored, with the best and a connected witness."""

    best: CutResult
    minimal_witness: CutResult | None
    all_values: dict[tuple[int, ...], Fraction | float]


def _side_connected(g: EmbeddedGraph, side: set[int]) -> bool:
    start = next(iter(side))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for d in g.out_darts[v]:
            u = g.heads[d]
            if u in side and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(side)


def brute_force_cut(g: EmbeddedGraph, f: BalanceFunction, cap: int = 16) -> OracleReport:
    """Score all 2^(n-1) - 1 cuts whose side S contains vertex 0."""
    if g.n > cap:
        raise ValueError(f"brute force capped at {cap} vertices, graph has {g.n}")
    n = g.n
    best: CutResult | None = None
    all_values: dict[tuple[int, ...], Fraction | float] = {}
    results = []
    for mask in range(2 ** (n - 1) - 1):
        S = [0] + [v for v in range(1, n) if mask >> (v - 1) & 1]
        r = score_cut(g, S, f)
        all_values[r.S] = r.value
        results.append(r)
        if best is None or r.sort_key < best.sort_key:
            best = r
    witness = None
    for r in sorted(results, key=lambda r: r.sort_key):
        if r.value != best.value:
            break
        side = set(r.S)
        other = set(range(n)) - side
        if _side_connected(g, side) and _side_connected(g, other):
            witness = r
            break
    return OracleReport(best=best, minimal_witness=witness, all_values=all_values)


def _canonical_class(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Smallest representative of a closed walk modulo rotation and reversal."""
    rev = tuple(d ^ 1 for d in reversed(seq))
    forms = []
    for s in (seq, rev):
        for i in range(len(s)):
            forms.append(s[i:] + s[:i])
    return min(forms)


def enumerate_closed_walks(
    dual: DualGraph,
    w: WeightFunction,
    system: LoopSystem,
    max_len: int,
) -> list[TaggedWalk]:
    """All closed walks of the dual up to max_len, one per symmetry class.

    Classes identify rotations of the same walk and the reverse walk (whose
    tags are negated).  The trivial empty walk is included once.
    """
    if max_len > 8:
        raise ValueError("walk enumeration capped at length 8")
    dg = dual.graph
    classes: set[tuple[int, ...]] = set()

    def go(start: int, current: int, seq: list[int]):
        if seq and current == start:
            classes.add(_canonical_class(tuple(seq)))
        if len(seq) == max_len:
            return
        for d in dg.out_darts[current]:
            seq.append(d)
            go(start, dg.heads[d], seq)
            seq.pop()

    for start in range(dg.n):
        go(start, start, [])

    walks = [TaggedWalk(darts=(), k=0, v=(0,) * (2 * system.genus), chain=IntegerChain.zero(dg.m))]
    for seq in sorted(classes, key=lambda s: (len(s), s)):
        chain = IntegerChain.of_walk(dg.m, seq)
        walks.append(
            TaggedWalk(
                darts=seq,
                k=sum(w.dart_value(d) for d in seq),
                v=tuple(sum(system.theta_dart(d)[j] for d in seq) for j in range(2 * system.genus)),
                chain=chain,
            )
        )
    return walks


def min_tag_table(walks: list[TaggedWalk]) -> dict[tuple[int, tuple[int, ...]], int]:
    """Shortest length per (k, v) tag, counting each walk and its reverse."""
    table: dict[tuple[int, tuple[int, ...]], int] = {}
    for walk in walks:
        for key in ((walk.k, walk.v), (-walk.k, tuple(-x for x in walk.v))):
            if key not in table or walk.length < table[key]:
                table[key] = walk.length
    return table
