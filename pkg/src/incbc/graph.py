"""Undirected simple graphs that only ever gain edges or lose weight.

Nodes are dense 0-based integers. Each node keeps a dict mapping neighbor
to edge weight, so edge lookup during insertion is O(1) and iterating a
node's neighbors is just iterating the dict.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from pathlib import Path


class GraphError(ValueError):
    pass


class UnsupportedDynamicError(GraphError):
    """Raised for updates that would delete an edge or raise a weight."""


class DisconnectedGraphError(GraphError):
    def __init__(self, node: int):
        super().__init__(f"graph is disconnected: node {node} is unreachable")
        self.node = node


class EdgeListError(GraphError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass(frozen=True)
class EdgeUpdate:
    """Insertion of edge {u, v}, or a decrease of its weight if present."""

    u: int
    v: int
    weight: float = 1.0

    def key(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)


class Graph:
    def __init__(self, n: int, weighted: bool = False):
        if n < 0:
            raise GraphError("node count must be non-negative")
        self.n = n
        self.weighted = weighted
        self.adj: list[dict[int, float]] = [{} for _ in range(n)]
        self.m = 0

    @classmethod
    def from_edges(cls, n: int, edges, weighted: bool = False) -> "Graph":
        g = cls(n, weighted)
        for e in edges:
            g.add_edge(*e)
        return g

    def __repr__(self):
        kind = "weighted" if self.weighted else "unweighted"
        return f"Graph(n={self.n}, m={self.m}, {kind})"

    def _check_pair(self, u: int, v: int):
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
        if u == v:
            raise GraphError(f"self-loop on node {u} is not allowed")

    def _check_weight(self, w: float):
        if not self.weighted:
            if w != 1:
                raise GraphError("unweighted graphs only accept weight 1")
        elif not w > 0:
            raise UnsupportedDynamicError(f"unsupported dynamic: non-positive weight {w}")

    def add_edge(self, u: int, v: int, w: float = 1.0):
        """Add a new edge; duplicates are an error (use insert_edge for updates)."""
        self._check_pair(u, v)
        self._check_weight(w)
        if v in self.adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        self.adj[u][v] = w
        self.adj[v][u] = w
        self.m += 1

    def insert_edge(self, upd: EdgeUpdate) -> bool:
        """Apply one insertion or weight decrease.

        Returns True if the graph changed. Re-inserting an edge at its current
        weight is a no-op; asking for a larger weight raises
        UnsupportedDynamicError.
        """
        self.validate_update(upd)
        u, v, w = upd.u, upd.v, upd.weight
        cur = self.adj[u].get(v)
        if cur is not None and w >= cur:
            return False
        self.adj[u][v] = w
        self.adj[v][u] = w
        if cur is None:
            self.m += 1
        return True

    def validate_update(self, upd: EdgeUpdate):
        self._check_pair(upd.u, upd.v)
        self._check_weight(upd.weight)
        cur = self.adj[upd.u].get(upd.v)
        if cur is not None and upd.weight > cur:
            raise UnsupportedDynamicError(
                f"unsupported dynamic: weight increase on ({upd.u}, {upd.v}) "
                f"from {cur} to {upd.weight}"
            )

    def normalize_batch(self, batch) -> list[EdgeUpdate]:
        """Validate a batch against the current graph and drop no-ops.

        Duplicate edges keep their minimum weight; updates that would not
        shorten an existing edge are dropped. Nothing is mutated, so a bad
        update anywhere in the batch leaves the graph untouched.
        """
        merged: dict[tuple[int, int], EdgeUpdate] = {}
        for upd in batch:
            self.validate_update(upd)
            k = upd.key()
            prev = merged.get(k)
            if prev is None or upd.weight < prev.weight:
                merged[k] = EdgeUpdate(k[0], k[1], upd.weight)
        out = []
        for (u, v), upd in merged.items():
            cur = self.adj[u].get(v)
            if cur is None or upd.weight < cur:
                out.append(upd)
        return out

    def apply_batch(self, batch) -> list[EdgeUpdate]:
        """Normalize then apply a batch; returns the updates that took effect."""
        effective = self.normalize_batch(batch)
        for upd in effective:
            self.insert_edge(upd)
        return effective

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def weight(self, u: int, v: int) -> float:
        return self.adj[u][v]

    def neighbors(self, u: int):
        return self.adj[u].keys()

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def edges(self):
        """Yield (u, v, w) once per edge with u < v."""
        for u, nbrs in enumerate(self.adj):
            for v, w in nbrs.items():
                if u < v:
                    yield u, v, w

    def edge_set(self) -> set[tuple[int, int]]:
        return {(u, v) for u, v, _ in self.edges()}

    def copy(self) -> "Graph":
        g = Graph(self.n, self.weighted)
        g.adj = [dict(nbrs) for nbrs in self.adj]
        g.m = self.m
        return g

    def remove_edge(self, u: int, v: int):
        """Drop an edge. Only used to build dynamics scenarios, never during updates."""
        del self.adj[u][v]
        del self.adj[v][u]
        self.m -= 1


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                queue.append(v)
    return count == g.n


def connected_components(g: Graph) -> list[list[int]]:
    comp = [-1] * g.n
    out = []
    for root in range(g.n):
        if comp[root] >= 0:
            continue
        comp[root] = len(out)
        members = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if comp[v] < 0:
                    comp[v] = comp[root]
                    members.append(v)
                    queue.append(v)
        out.append(sorted(members))
    return out


def largest_component(g: Graph) -> tuple[Graph, list[int]]:
    """Return the induced subgraph on the largest component, relabelled densely.

    The second value maps new ids back to the original ones. Ties between
    equal-sized components go to the one containing the smallest id.
    """
    comps = connected_components(g)
    if not comps:
        return g.copy(), []
    best = max(comps, key=len)
    index = {old: new for new, old in enumerate(best)}
    h = Graph(len(best), g.weighted)
    for u, v, w in g.edges():
        if u in index and v in index:
            h.add_edge(index[u], index[v], w)
    return h, best


def _positive_gauss(rng: random.Random, mean: float, sd: float) -> float:
    while True:
        w = rng.gauss(mean, sd)
        if w > 0:
            return w


def generate_dorogovtsev_mendes(n: int, weighted: bool = False, seed=None) -> Graph:
    """Dorogovtsev-Mendes graph: start from a triangle, then each new node
    attaches to both endpoints of a uniformly chosen existing edge.

    Weighted graphs draw each edge weight from N(1, 0.1), redrawn until
    positive, in the order the edges are created.
    """
    if n < 3:
        raise GraphError("Dorogovtsev-Mendes generation needs n >= 3")
    rng = random.Random(seed)
    g = Graph(n, weighted)
    edge_list = [(0, 1), (1, 2), (0, 2)]
    for u, v in edge_list:
        g.add_edge(u, v, _positive_gauss(rng, 1.0, 0.1) if weighted else 1)
    for x in range(3, n):
        a, b = edge_list[rng.randrange(len(edge_list))]
        for y in (a, b):
            g.add_edge(y, x, _positive_gauss(rng, 1.0, 0.1) if weighted else 1)
            edge_list.append((y, x))
    return g


def read_edge_list(path, weighted: bool = False) -> Graph:
    """Parse a whitespace-separated edge list ("u v" or "u v w").

    Lines starting with '#' and blank lines are skipped. The node count is
    one more than the largest id seen. In unweighted mode a third column is
    ignored; in weighted mode a missing one means weight 1.
    """
    edges = []
    seen = set()
    max_id = -1
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) not in (2, 3):
                raise EdgeListError(lineno, f"expected 2 or 3 fields, got {len(parts)}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListError(lineno, "node ids must be integers") from None
            if u < 0 or v < 0:
                raise EdgeListError(lineno, "node ids must be non-negative")
            if u == v:
                raise EdgeListError(lineno, f"self-loop on node {u}")
            w = 1
            if weighted and len(parts) == 3:
                try:
                    w = float(parts[2])
                except ValueError:
                    raise EdgeListError(lineno, f"bad weight {parts[2]!r}") from None
                if not w > 0:
                    raise EdgeListError(lineno, f"weight must be positive, got {w}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise EdgeListError(lineno, f"duplicate edge ({u}, {v})")
            seen.add(key)
            edges.append((u, v, w))
            max_id = max(max_id, u, v)
    return Graph.from_edges(max_id + 1, edges, weighted)


def write_edge_list(path, g: Graph):
    with open(path, "w") as fh:
        for u, v, w in g.edges():
            if g.weighted:
                fh.write(f"{u} {v} {w!r}\n")
            else:
                fh.write(f"{u} {v}\n")


def write_scores(path, scores, labels=None):
    """Write "node,score" CSV, scores to 9 decimals.

    `labels` optionally maps internal ids to the ids printed in the file.
    """
    lines = ["node,score"]
    for v, s in enumerate(scores):
        node = labels[v] if labels is not None else v
        lines.append(f"{node},{s:.9f}")
    Path(path).write_text("\n".join(lines) + "\n")
