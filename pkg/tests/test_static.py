import math
import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st
from scipy.stats import chisquare

from incbc.graph import DisconnectedGraphError, Graph, GraphError, generate_dorogovtsev_mendes
from incbc.sssp import compute_extended_sssp
from incbc.static import (
    SamplingParams,
    brandes_exact,
    compute_sample_size,
    estimate_vd,
    rk_initialize,
    sample_node_pair,
    sample_shortest_path,
)

from oracles import brute_bc, exact_vertex_diameter, random_connected_graph, shortest_path_set

A, B, C, D = range(4)


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


class TestBrandes:
    def test_star(self):
        assert brandes_exact(star(4)) == pytest.approx([0.6, 0, 0, 0, 0], abs=1e-12)

    def test_path(self):
        assert brandes_exact(path(4)) == pytest.approx([0, 1 / 3, 1 / 3, 0], abs=1e-12)

    def test_complete(self):
        g = Graph.from_edges(6, [(u, v) for u in range(6) for v in range(u + 1, 6)])
        assert brandes_exact(g) == [0.0] * 6

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            brandes_exact(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_weighted_matches_enumeration(self):
        rng = random.Random(3)
        for _ in range(40):
            n = rng.randint(2, 7)
            g = random_connected_graph(n, rng.randint(0, n), rng, weighted=True)
            exact = [float(x) for x in brute_bc(g)]
            assert brandes_exact(g) == pytest.approx(exact, abs=1e-12)


class TestVertexDiameter:
    def test_path_from_endpoint(self):
        rng = random.Random()
        rng.randrange = lambda n: 0
        assert estimate_vd(path(5), rng) == 8

    def test_path_from_center(self):
        rng = random.Random()
        rng.randrange = lambda n: 2
        assert estimate_vd(path(5), rng) == 5

    def test_weighted_is_node_count(self):
        g = generate_dorogovtsev_mendes(100, weighted=True, seed=1)
        assert estimate_vd(g, random.Random(0)) == 100

    def test_two_nodes(self):
        assert estimate_vd(path(2), random.Random(0)) == 2

    def test_too_small(self):
        with pytest.raises(GraphError):
            estimate_vd(Graph(1), random.Random(0))

    def test_upper_bound(self):
        rng = random.Random(44)
        for _ in range(100):
            n = rng.randint(2, 200)
            g = random_connected_graph(n, rng.randint(0, n // 2), rng)
            assert estimate_vd(g, rng) >= exact_vertex_diameter(g)


class TestSampleSize:
    # expected values evaluated by hand: 200 * (4 + 1 + ln 10) etc.
    @pytest.mark.parametrize("vd,eps,delta,r", [
        (25, 0.05, 0.1, 1461),
        (25, 0.025, 0.1, 5843),
        (3, 0.5, 0.5, 4),
    ])
    def test_values(self, vd, eps, delta, r):
        assert compute_sample_size(SamplingParams(eps, delta, vd)) == r

    def test_independent_evaluation(self):
        for vd in range(3, 300):
            for eps in (0.3, 0.1, 0.05):
                raw = 0.5 / eps**2 * (math.floor(math.log2(vd - 2)) + 1 + math.log(10))
                assert compute_sample_size(SamplingParams(eps, 0.1, vd)) == math.ceil(raw)

    def test_small_vd(self):
        expected = math.ceil(0.5 / 0.01 * (1 + math.log(10)))
        assert compute_sample_size(SamplingParams(0.1, 0.1, 2)) == expected

    @pytest.mark.parametrize("eps,delta", [(0, 0.1), (1, 0.1), (0.1, 0), (0.1, 1.5)])
    def test_bad_params(self, eps, delta):
        with pytest.raises(ValueError):
            SamplingParams(eps, delta, 10)

    @settings(max_examples=200, deadline=None)
    @given(st.floats(0.01, 0.99), st.floats(0.01, 0.99), st.integers(2, 10**6),
           st.floats(0.01, 0.99), st.floats(0.01, 0.99), st.integers(2, 10**6))
    def test_monotone(self, e1, d1, v1, e2, d2, v2):
        r1 = compute_sample_size(SamplingParams(e1, d1, v1))
        r2 = compute_sample_size(SamplingParams(min(e1, e2), min(d1, d2), max(v1, v2)))
        assert r2 >= r1


class TestPairSampling:
    def test_two_nodes(self):
        rng = random.Random(1)
        seen = Counter(sample_node_pair(2, rng) for _ in range(2000))
        assert set(seen) == {(0, 1), (1, 0)}
        assert abs(seen[(0, 1)] - 1000) < 4 * math.sqrt(500)

    def test_uniform_over_ordered_pairs(self):
        rng = random.Random(2)
        draws = 60000
        seen = Counter(sample_node_pair(3, rng) for _ in range(draws))
        assert len(seen) == 6
        sd = math.sqrt(draws * (1 / 6) * (5 / 6))
        for pair, k in seen.items():
            assert pair[0] != pair[1]
            assert abs(k - draws / 6) <= 4 * sd

    def test_deterministic(self):
        a = [sample_node_pair(50, random.Random(7)) for _ in range(3)]
        b = [sample_node_pair(50, random.Random(7)) for _ in range(3)]
        assert a == b


def diamond():
    # 0 to 6: left branch 0-1-3-6 carries one path, right branch 0-2-{4,5}-6 two
    return Graph.from_edges(7, [(0, 1), (1, 3), (3, 6), (0, 2), (2, 4), (2, 5), (4, 6), (5, 6)])


class TestPathSampling:
    def test_unique_path_order(self):
        dag = compute_extended_sssp(path(4), A)
        rng = random.Random(0)
        for _ in range(20):
            assert sample_shortest_path(dag, D, rng) == [C, B]

    def test_target_is_source(self):
        dag = compute_extended_sssp(path(4), A)
        with pytest.raises(ValueError):
            sample_shortest_path(dag, A, random.Random(0))

    def test_four_cycle_half_half(self):
        g = Graph.from_edges(4, [(A, B), (B, D), (A, C), (C, D)])
        dag = compute_extended_sssp(g, A)
        rng = random.Random(3)
        n = 10000
        seen = Counter(tuple(sample_shortest_path(dag, D, rng)) for _ in range(n))
        assert set(seen) == {(B,), (C,)}
        assert abs(seen[(B,)] - n / 2) <= 3 * math.sqrt(n / 4)

    def test_diamond_branch_frequencies(self):
        g = diamond()
        dag = compute_extended_sssp(g, 0)
        assert dag.sigma[6] == 3
        rng = random.Random(4)
        n = 10000
        left = sum(1 for _ in range(n) if sample_shortest_path(dag, 6, rng)[-1] == 1)
        sd = math.sqrt(n * (1 / 3) * (2 / 3))
        assert abs(left - n / 3) <= 3 * sd

    def test_chi_square_small_dags(self):
        rng = random.Random(5)
        graphs = [diamond(), Graph.from_edges(4, [(A, B), (B, D), (A, C), (C, D)])]
        gen = random.Random(6)
        while len(graphs) < 6:
            g = random_connected_graph(8, 6, gen)
            graphs.append(g)
        checked = 0
        for g in graphs:
            for t in range(1, g.n):
                _, paths = shortest_path_set(g, 0, t)
                if not 2 <= len(paths) <= 6:
                    continue
                dag = compute_extended_sssp(g, 0)
                draws = 100_000
                seen = Counter(tuple(reversed(sample_shortest_path(dag, t, rng)))
                               for _ in range(draws))
                internal = {p[1:-1] for p in paths}
                assert set(seen) == internal
                obs = [seen[p] for p in sorted(internal)]
                assert chisquare(obs).pvalue > 0.001
                checked += 1
        assert checked >= 3


class TestRkInitialize:
    def test_k2(self):
        pool, scores = rk_initialize(path(2), SamplingParams(0.1, 0.1, 2), random.Random(0))
        assert len(pool) == scores.r > 0
        assert scores.scores() == [0.0, 0.0]

    def test_exhaustive_pairs_reproduce_exact(self):
        g = path(4)
        pairs = [(s, t) for s in range(4) for t in range(4) if s != t]
        _, scores = rk_initialize(g, SamplingParams(0.1, 0.1, 4), random.Random(0), pairs=pairs)
        assert scores.r == 12
        assert scores.scores() == pytest.approx(brandes_exact(g), abs=1e-12)

    def test_consistency_identity(self):
        g = generate_dorogovtsev_mendes(80, seed=3)
        pool, scores = rk_initialize(g, SamplingParams(0.2, 0.1, 10), random.Random(1))
        assert pool.membership_counts(g.n) == scores.counts
        assert all(0 <= c <= scores.r for c in scores.counts)
        for e in pool.entries:
            assert e.source != e.target
            dag = pool.dag(e)
            assert (e.d_old, e.sigma_old) == (dag.dist[e.target], dag.sigma[e.target])
            full = [e.source] + list(reversed(e.path)) + [e.target]
            assert len(full) - 1 == dag.dist[e.target]
            assert all(g.has_edge(x, y) for x, y in zip(full, full[1:]))

    def test_star_center(self):
        g = star(10)
        exact = brandes_exact(g)[0]
        assert exact == pytest.approx(9 / 11)  # (n - 2) / n with n = 11
        hits = 0
        for seed in range(10):
            rng = random.Random(seed)
            params = SamplingParams(0.1, 0.1, estimate_vd(g, rng))
            _, scores = rk_initialize(g, params, rng)
            hits += abs(scores.score(0) - exact) <= 0.1
        assert hits >= 9

    def test_same_seed_same_result(self):
        g = generate_dorogovtsev_mendes(60, seed=2)
        runs = []
        for _ in range(2):
            pool, scores = rk_initialize(g, SamplingParams(0.2, 0.1, 9), random.Random(12))
            runs.append((scores.counts, [(e.source, e.target, e.path) for e in pool.entries]))
        assert runs[0] == runs[1]

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            rk_initialize(Graph.from_edges(4, [(0, 1), (2, 3)]), SamplingParams(0.1, 0.1, 3),
                          random.Random(0))
