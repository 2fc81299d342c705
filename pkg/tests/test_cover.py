from surfcut.construct import banana_edges, complete_edges, cycle_edges, find_embedding
from surfcut.cover import dump_walks, shortest_tagged_walks
from surfcut.dual import build_dual
from surfcut.homology import build_loop_system, build_weight


def pipeline(g, root=0):
    dual = build_dual(g)
    w = build_weight(g, root)
    system = build_loop_system(g, dual, root)
    return dual, w, system


def test_single_edge_walk_table():
    g = find_embedding(2, [(0, 1)], 0)
    dual, w, system = pipeline(g)
    cover = shortest_tagged_walks(dual, w, system)
    # the dual is one vertex with one loop: the empty walk and the two
    # directions of the loop, weighing +1 and -1
    assert set(cover.walks) == {(0, ()), (1, ()), (-1, ())}
    assert cover.walks[(0, ())].darts == ()
    assert cover.walks[(1, ())].darts == (0,)
    assert cover.walks[(-1, ())].darts == (1,)


def test_dump_format_frozen():
    g = find_embedding(2, [(0, 1)], 0)
    dual, w, system = pipeline(g)
    cover = shortest_tagged_walks(dual, w, system)
    assert dump_walks(cover) == "-1 1 1\n0 0\n1 1 0\n"


def test_walks_are_closed_and_tagged_consistently():
    g = find_embedding(5, complete_edges(5), 1)
    dual, w, system = pipeline(g)
    cover = shortest_tagged_walks(dual, w, system)
    for (k, v), walk in cover.walks.items():
        assert walk.k == k and walk.v == v
        assert walk.length <= g.m
        if walk.darts:
            assert dual.graph.tails[walk.darts[0]] == dual.graph.heads[walk.darts[-1]]
            for a, b in zip(walk.darts, walk.darts[1:]):
                assert dual.graph.heads[a] == dual.graph.tails[b]
        assert sum(w.dart_value(d) for d in walk.darts) == k
        acc = [0] * (2 * system.genus)
        for d in walk.darts:
            for j, x in enumerate(system.theta_dart(d)):
                acc[j] += x
        assert tuple(acc) == v
        # stored chain matches the dart sequence
        for e in range(g.m):
            signed = sum(1 if d % 2 == 0 else -1 for d in walk.darts if d >> 1 == e)
            assert walk.chain.coeffs[e] == signed


def test_search_is_reproducible():
    g = find_embedding(4, complete_edges(4), 1)
    dual, w, system = pipeline(g)
    a = shortest_tagged_walks(dual, w, system)
    b = shortest_tagged_walks(dual, w, system)
    assert list(a.walks) == list(b.walks)
    assert all(a.walks[key].darts == b.walks[key].darts for key in a.walks)
    assert dump_walks(a) == dump_walks(b)


def test_state_counts_within_bound():
    g = find_embedding(6, cycle_edges(6), 0)
    dual, w, system = pipeline(g)
    cover = shortest_tagged_walks(dual, w, system)
    assert len(cover.states_per_start) == dual.graph.n
    assert cover.max_states <= cover.state_space_bound


def test_depth_cap_controls_reach():
    g = find_embedding(2, banana_edges(3), 1)
    dual, w, system = pipeline(g)
    shallow = shortest_tagged_walks(dual, w, system, depth_cap=1)
    full = shortest_tagged_walks(dual, w, system)
    assert set(shallow.walks) <= set(full.walks)
    assert all(walk.length <= 1 for walk in shallow.walks.values())


def test_shortest_walk_beats_any_longer_witness():
    # tags reachable at length L must never be stored with a longer walk
    g = find_embedding(4, complete_edges(4), 1)
    dual, w, system = pipeline(g)
    cover = shortest_tagged_walks(dual, w, system)
    for d in range(dual.graph.num_darts):
        u, x = dual.graph.tails[d], dual.graph.heads[d]
        if u == x:
            key = (w.dart_value(d), system.theta_dart(d))
            assert key in cover.walks and cover.walks[key].length <= 1
