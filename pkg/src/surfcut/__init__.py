"""Exact f-sparsest cuts of multigraphs cellularly embedded on orientable surfaces.

The pipeline: parse a rotation system, build the geometric dual, attach a
balance weight and a homology coordinate to every dual dart, collect shortest
closed walks in the dual per (weight, homology) tag, combine at most genus+1
of them into a null-homologous chain of minimum quotient, and peel the chain
back into an actual vertex cut by a threshold argument.  All arithmetic on
cut values is exact rational.
"""

from surfcut.embedding import (
    Dart,
    EmbeddedGraph,
    EmbeddingError,
    FaceStructure,
    genus,
    parse_embedding,
    trace_faces,
)
from surfcut.dual import DualGraph, IntegerChain, build_dual, cut_chain, dual_chain, primal_chain
from surfcut.homology import LoopSystem, WeightFunction, build_loop_system, build_weight, theta, what
from surfcut.cover import CoverResult, TaggedWalk, shortest_tagged_walks
from surfcut.balance import BalanceFunction, make_balance
from surfcut.solver import CutResult, SolveContext, combine_and_minimize, evaluate_chain, recover_cut, solve
from surfcut.oracle import OracleReport, brute_force_cut, enumerate_closed_walks

__all__ = [
    "BalanceFunction",
    "CoverResult",
    "CutResult",
    "Dart",
    "DualGraph",
    "EmbeddedGraph",
    "EmbeddingError",
    "FaceStructure",
    "IntegerChain",
    "LoopSystem",
    "OracleReport",
    "SolveContext",
    "TaggedWalk",
    "WeightFunction",
    "brute_force_cut",
    "build_dual",
    "build_loop_system",
    "build_weight",
    "combine_and_minimize",
    "cut_chain",
    "dual_chain",
    "enumerate_closed_walks",
    "evaluate_chain",
    "genus",
    "make_balance",
    "parse_embedding",
    "primal_chain",
    "recover_cut",
    "shortest_tagged_walks",
    "solve",
    "theta",
    "trace_faces",
    "what",
]
