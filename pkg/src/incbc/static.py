"""Static betweenness: the exact Brandes oracle and the path-sampling approximation.

Random draws all come from one ``random.Random`` passed in by the caller.
rk_initialize consumes them in this order: for each sample, the (source,
target) pair, then one draw per step of the backward path walk.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field

from .graph import DisconnectedGraphError, Graph, GraphError
from .sssp import TOL, SsspDag, compute_extended_sssp


@dataclass
class ScoreVector:
    """Per-node count of stored paths that pass through the node."""

    counts: list
    r: int

    @classmethod
    def zeros(cls, n: int, r: int) -> "ScoreVector":
        return cls([0] * n, r)

    def score(self, v: int) -> float:
        return self.counts[v] / self.r if self.r else 0.0

    def scores(self) -> list[float]:
        r = self.r
        return [c / r for c in self.counts] if r else [0.0] * len(self.counts)

    def copy(self) -> "ScoreVector":
        return ScoreVector(list(self.counts), self.r)

    def __len__(self):
        return len(self.counts)


@dataclass
class SampleEntry:
    source: int
    target: int
    path: list  # internal nodes, target side first
    d_old: float
    sigma_old: int


@dataclass
class SamplePool:
    """The r sampled pairs with their stored paths.

    Entries that share a source share one dag; the dag for a source depends
    only on the graph, so this changes nothing about the sampling.
    """

    entries: list = field(default_factory=list)
    dags: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.entries)

    def dag(self, entry: SampleEntry) -> SsspDag:
        return self.dags[entry.source]

    def membership_counts(self, n: int) -> list[int]:
        counts = [0] * n
        for e in self.entries:
            for v in e.path:
                counts[v] += 1
        return counts


@dataclass
class SamplingParams:
    epsilon: float
    delta: float
    vd_estimate: int
    c: float = 0.5

    def __post_init__(self):
        if not 0 < self.epsilon < 1:
            raise ValueError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if not 0 < self.delta < 1:
            raise ValueError(f"delta must lie in (0, 1), got {self.delta}")


def brandes_exact(g: Graph) -> list[float]:
    """Exact betweenness normalized by n(n-1), summing over ordered pairs."""
    n = g.n
    bc = [0.0] * n
    if n < 2:
        return bc
    for s in range(n):
        dag = compute_extended_sssp(g, s)
        dist, sigma = dag.dist, dag.sigma
        order = sorted(range(n), key=dist.__getitem__)
        delta = [0.0] * n
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for z in dag.predecessors(w):
                delta[z] += sigma[z] * coeff
            if w != s:
                bc[w] += delta[w]
    norm = n * (n - 1)
    return [b / norm for b in bc]


def estimate_vd(g: Graph, rng: random.Random) -> int:
    """Upper bound on the vertex diameter (nodes on the longest shortest path).

    Unweighted: BFS from a random node, sum the two largest distances to
    distinct targets and add one. Weighted: the node count.
    """
    n = g.n
    if n < 2:
        raise GraphError("vertex diameter needs at least two nodes")
    if g.weighted:
        return n
    s = rng.randrange(n)
    dist = [-1] * n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    if min(dist) < 0:
        raise DisconnectedGraphError(dist.index(-1))
    top = sorted(dist, reverse=True)
    return top[0] + top[1] + 1


def compute_sample_size(p: SamplingParams) -> int:
    """ceil((c / eps^2) * (floor(log2(VD - 2)) + 1 + ln(1/delta))).

    For VD <= 2 the log term is taken as 0.
    """
    vd = int(p.vd_estimate)
    log_term = (vd - 2).bit_length() - 1 if vd > 2 else 0
    r = math.ceil(p.c / p.epsilon**2 * (log_term + 1 + math.log(1 / p.delta)))
    return max(r, 1)


def sample_node_pair(n: int, rng: random.Random) -> tuple[int, int]:
    s = rng.randrange(n)
    t = rng.randrange(n - 1)
    if t >= s:
        t += 1
    return s, t


def sample_shortest_path(dag: SsspDag, t: int, rng: random.Random) -> list[int]:
    """Draw one shortest source-t path uniformly; return its internal nodes.

    Walks back from t, picking predecessor z of v with probability
    sigma(z) / sigma(v). The source is never included.
    """
    s = dag.source
    if t == s:
        raise ValueError("target equals the source")
    sigma = dag.sigma
    path = []
    v = t
    while True:
        preds = dag.predecessors(v)
        if len(preds) == 1:
            z = preds[0]
        else:
            x = rng.randrange(sigma[v])
            for z in preds:
                x -= sigma[z]
                if x < 0:
                    break
        if z == s:
            return path
        path.append(z)
        v = z


def _sample_entry(dag: SsspDag, t: int, rng: random.Random) -> SampleEntry:
    path = sample_shortest_path(dag, t, rng)
    return SampleEntry(dag.source, t, path, dag.dist[t], dag.sigma[t])


def rk_initialize(g: Graph, p: SamplingParams, rng: random.Random, pairs=None,
                  keep_dags: bool = True):
    """Sample r shortest paths and score nodes by how many paths they sit inside.

    `pairs` overrides the random pair draws (and fixes r = len(pairs)).
    With keep_dags=False the per-source dags are dropped once all samples
    are drawn, which is all a one-off static estimate needs.
    """
    n = g.n
    if n < 2:
        raise GraphError("need at least two nodes to sample pairs")
    r = len(pairs) if pairs is not None else compute_sample_size(p)
    pool = SamplePool()
    scores = ScoreVector.zeros(n, r)
    counts = scores.counts
    dags = pool.dags
    for i in range(r):
        s, t = pairs[i] if pairs is not None else sample_node_pair(n, rng)
        dag = dags.get(s)
        if dag is None:
            dag = dags[s] = compute_extended_sssp(g, s)
        entry = _sample_entry(dag, t, rng)
        for v in entry.path:
            counts[v] += 1
        pool.entries.append(entry)
    if not keep_dags:
        pool.dags = {}
    return pool, scores


def rk_scores(g: Graph, epsilon: float, delta: float, rng: random.Random) -> list[float]:
    """One-shot approximation: estimate VD, size the sample, return scores."""
    params = SamplingParams(epsilon, delta, estimate_vd(g, rng))
    _, scores = rk_initialize(g, params, rng, keep_dags=False)
    return scores.scores()


def distances_differ(weighted: bool, new, old) -> bool:
    if weighted:
        return new < old - TOL
    return new < old
