"""Batch repair of an SsspDag after edge insertions and weight decreases.

Both routines expect the graph to already contain the batch. They rewrite
only nodes whose distance or path count can have changed, and report what
they touched in an AffectedStats.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .graph import EdgeUpdate, Graph, GraphError
from .sssp import TOL, SsspDag

WHITE, GRAY, BLACK = 0, 1, 2


@dataclass
class AffectedStats:
    affected_nodes: int = 0
    touched_edges: int = 0
    dequeue_count: int = 0
    batch_size: int = 0
    seed_count: int = 0  # queue insertions made while scanning the batch
    written: set = field(default_factory=set)

    def merge(self, other: "AffectedStats"):
        self.affected_nodes += other.affected_nodes
        self.touched_edges += other.touched_edges
        self.dequeue_count += other.dequeue_count
        self.batch_size += other.batch_size
        self.seed_count += other.seed_count


def _check_batch(g: Graph, dag: SsspDag, batch):
    if dag.graph is not g:
        raise GraphError("dag was computed on a different graph")
    for upd in batch:
        if not isinstance(upd, EdgeUpdate):
            raise GraphError(f"malformed batch entry {upd!r}")
        if upd.u == upd.v or not g.has_edge(upd.u, upd.v):
            raise GraphError(f"batch edge ({upd.u}, {upd.v}) is not in the graph")


def update_sssp_unweighted(g: Graph, dag: SsspDag, batch) -> AffectedStats:
    """Repair distances and path counts level by level.

    Level k holds a FIFO of nodes that would have priority k in a heap. Batch
    targets go to level d(lower endpoint) + 1. Sweeping k upwards, each node
    is finalized the first time it is dequeued (black) and stale copies are
    skipped; neighbors at or beyond k + 1 are enqueued once (gray).
    """
    if g.weighted:
        raise GraphError("weighted graph: use update_sssp_weighted")
    _check_batch(g, dag, batch)
    stats = AffectedStats(batch_size=len(batch))
    if not batch:
        return stats
    dist, sigma, adj = dag.dist, dag.sigma, g.adj
    top = dag.level_bound
    levels = [[] for _ in range(top + 2)]
    for upd in batch:
        u, v = upd.u, upd.v
        du, dv = dist[u], dist[v]
        if du < dv:
            levels[du + 1].append(v)
            stats.seed_count += 1
        elif dv < du:
            levels[dv + 1].append(u)
            stats.seed_count += 1

    color = {}
    written = stats.written
    for k in range(1, top + 1):
        queue = levels[k]
        if not queue:
            continue
        nxt = levels[k + 1]
        below = k - 1
        for w in queue:
            stats.dequeue_count += 1
            if color.get(w) == BLACK:
                continue
            color[w] = BLACK
            old_d, old_s = dist[w], sigma[w]
            dist[w] = k
            total = 0
            nbrs = adj[w]
            stats.touched_edges += len(nbrs)
            for z in nbrs:
                dz = dist[z]
                if dz == below:
                    total += sigma[z]
                elif dz > k and z not in color:
                    color[z] = GRAY
                    nxt.append(z)
            sigma[w] = total
            written.add(w)
            if old_d != k or old_s != total:
                stats.affected_nodes += 1
    # colors live in a per-call dict, so every node is white again here
    return stats


def update_sssp_weighted(g: Graph, dag: SsspDag, batch) -> AffectedStats:
    """Repair a weighted dag with a priority queue (lazy deletion).

    All batch edges are relaxed first; then the minimum is repeatedly
    extracted, its distance fixed, its path count rebuilt from incident
    edges, and its incident edges relaxed. Ties count as relaxations so
    that path-count changes propagate even when distances do not move.
    """
    if not g.weighted:
        raise GraphError("unweighted graph: use update_sssp_unweighted")
    _check_batch(g, dag, batch)
    stats = AffectedStats(batch_size=len(batch))
    if not batch:
        return stats
    dist, sigma, adj = dag.dist, dag.sigma, g.adj
    heap = []
    best = {}

    def push(x, p):
        if p < best.get(x, float("inf")):
            best[x] = p
            heapq.heappush(heap, (p, x))

    for upd in batch:
        u, v = upd.u, upd.v
        w = adj[u][v]
        if upd.weight > w:
            raise GraphError(f"batch weight for ({u}, {v}) exceeds the graph weight")
        du, dv = dist[u], dist[v]
        if dv >= du + w - TOL:
            push(v, du + w)
            stats.seed_count += 1
        if du >= dv + w - TOL:
            push(u, dv + w)
            stats.seed_count += 1

    done = set()
    written = stats.written
    while heap:
        p, x = heapq.heappop(heap)
        stats.dequeue_count += 1
        if x in done or p > best[x]:
            continue
        done.add(x)
        old_d, old_s = dist[x], sigma[x]
        if p < old_d - TOL:
            dist[x] = p
        dx = dist[x]
        total = 0
        nbrs = adj[x]
        stats.touched_edges += len(nbrs)
        for z, wz in nbrs.items():
            dz = dist[z]
            if abs(dx - dz - wz) <= TOL:
                total += sigma[z]
            elif z not in done and dz >= dx + wz - TOL:
                push(z, dx + wz)
        sigma[x] = total
        written.add(x)
        if dx < old_d - TOL or total != old_s:
            stats.affected_nodes += 1
    return stats


def update_sssp(g: Graph, dag: SsspDag, batch) -> AffectedStats:
    if g.weighted:
        return update_sssp_weighted(g, dag, batch)
    return update_sssp_unweighted(g, dag, batch)
