"""Single-source shortest paths extended with path counts and predecessors."""

from __future__ import annotations

import heapq
from array import array
from collections import deque

from .graph import DisconnectedGraphError, Graph

# absolute tolerance for comparing weighted distances
TOL = 1e-9


class SsspDag:
    """Distances and shortest-path counts from one source.

    Predecessor sets are not stored: z is a predecessor of v exactly when
    {z, v} is an edge and dist[v] == dist[z] + w(z, v), so they are read off
    the graph on demand. This keeps a dag at two flat arrays per source.

    ``level_bound`` is an upper bound on the largest distance (exact right
    after a fresh computation). Insertions never increase distances, so it
    stays valid across updates and sizes the level queues of the unweighted
    repair.
    """

    __slots__ = ("graph", "source", "dist", "sigma", "level_bound")

    def __init__(self, graph: Graph, source: int, dist, sigma, level_bound):
        self.graph = graph
        self.source = source
        self.dist = dist
        self.sigma = sigma
        self.level_bound = level_bound

    @property
    def weighted(self) -> bool:
        return self.graph.weighted

    @property
    def d_max(self):
        return max(self.dist)

    def predecessors(self, v: int) -> list[int]:
        if v == self.source:
            return []
        dist = self.dist
        dv = dist[v]
        if self.graph.weighted:
            return [z for z, w in self.graph.adj[v].items() if abs(dist[z] + w - dv) <= TOL]
        dv -= 1
        return [z for z in self.graph.adj[v] if dist[z] == dv]

    @property
    def preds(self) -> list[set[int]]:
        return [set(self.predecessors(v)) for v in range(self.graph.n)]

    def copy(self) -> "SsspDag":
        return SsspDag(self.graph, self.source, array(self.dist.typecode, self.dist),
                       list(self.sigma), self.level_bound)

    def __repr__(self):
        return f"SsspDag(source={self.source}, n={len(self.dist)})"


def compute_extended_sssp(g: Graph, s: int) -> SsspDag:
    """BFS (unweighted) or Dijkstra (weighted) from `s`, counting shortest paths.

    Raises DisconnectedGraphError if some node cannot be reached.
    """
    if not 0 <= s < g.n:
        raise ValueError(f"source {s} out of range")
    if g.weighted:
        return _dijkstra(g, s)
    return _bfs(g, s)


def _bfs(g: Graph, s: int) -> SsspDag:
    n = g.n
    adj = g.adj
    dist = array("i", [-1]) * n
    sigma = [0] * n
    dist[s] = 0
    sigma[s] = 1
    queue = deque([s])
    reached = 1
    du = 0
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        su = sigma[u]
        for v in adj[u]:
            dv = dist[v]
            if dv < 0:
                dist[v] = du
                sigma[v] = su
                queue.append(v)
                reached += 1
            elif dv == du:
                sigma[v] += su
    if reached < n:
        raise DisconnectedGraphError(next(v for v in range(n) if dist[v] < 0))
    return SsspDag(g, s, dist, sigma, max(dist) if n else 0)


def _dijkstra(g: Graph, s: int) -> SsspDag:
    n = g.n
    adj = g.adj
    inf = float("inf")
    dist = array("d", [inf]) * n
    sigma = [0] * n
    done = bytearray(n)
    dist[s] = 0.0
    sigma[s] = 1
    heap = [(0.0, s)]
    reached = 0
    while heap:
        du, u = heapq.heappop(heap)
        if done[u] or du > dist[u]:
            continue
        done[u] = 1
        reached += 1
        su = sigma[u]
        for v, w in adj[u].items():
            if done[v]:
                continue
            nd = du + w
            dv = dist[v]
            if nd < dv - TOL:
                dist[v] = nd
                sigma[v] = su
                heapq.heappush(heap, (nd, v))
            elif nd <= dv + TOL:
                sigma[v] += su
    if reached < n:
        raise DisconnectedGraphError(next(v for v in range(n) if not done[v]))
    return SsspDag(g, s, dist, sigma, max(dist) if n else 0.0)
