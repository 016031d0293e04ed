"""Keep approximate betweenness scores current under batches of insertions.

After a batch, every sampled pair whose distance dropped or whose number
of shortest paths changed gets a fresh uniformly drawn path; every other
pair keeps the path it already has. That keeps each stored path uniformly
distributed over the new shortest paths, so the accuracy guarantee of the
initial sample carries over without growing r.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Graph
from .sssp_update import AffectedStats, update_sssp
from .static import (
    SamplePool,
    SamplingParams,
    ScoreVector,
    distances_differ,
    estimate_vd,
    rk_initialize,
    sample_shortest_path,
)


@dataclass
class BatchReport:
    applied: list  # the normalized updates that changed the graph
    resampled: list = field(default_factory=list)  # entry indices
    stats: AffectedStats = field(default_factory=AffectedStats)
    changed_nodes: set = field(default_factory=set)  # nodes whose count moved


class DynamicBc:
    """Sampled path pool plus scores for one evolving graph.

    The graph is owned by this object from construction on; mutate it only
    through update_batch.
    """

    def __init__(self, graph: Graph, pool: SamplePool, scores: ScoreVector,
                 params: SamplingParams, rng: random.Random):
        self.graph = graph
        self.pool = pool
        self.scores = scores
        self.params = params
        self.rng = rng

    @property
    def mode(self) -> str:
        return "IAW" if self.graph.weighted else "IA"

    @property
    def r(self) -> int:
        return self.scores.r

    def update_batch(self, batch) -> BatchReport:
        g = self.graph
        applied = g.apply_batch(batch)
        report = BatchReport(applied)
        if not applied:
            return report
        pool = self.pool
        for dag in pool.dags.values():
            report.stats.merge(update_sssp(g, dag, applied))

        weighted = g.weighted
        counts = self.scores.counts
        rng = self.rng
        changed = report.changed_nodes
        for i, entry in enumerate(pool.entries):
            dag = pool.dags[entry.source]
            t = entry.target
            d_new, s_new = dag.dist[t], dag.sigma[t]
            if not (distances_differ(weighted, d_new, entry.d_old) or s_new != entry.sigma_old):
                continue
            for v in entry.path:
                counts[v] -= 1
                changed.add(v)
            path = sample_shortest_path(dag, t, rng)
            for v in path:
                counts[v] += 1
                changed.add(v)
            entry.path = path
            entry.d_old = d_new
            entry.sigma_old = s_new
            report.resampled.append(i)
        return report

    def get_scores(self) -> ScoreVector:
        return self.scores.copy()

    def get_ranking(self) -> list[int]:
        counts = self.scores.counts
        return sorted(range(len(counts)), key=lambda v: (-counts[v], v))

    def check_consistency(self) -> bool:
        return self.pool.membership_counts(self.graph.n) == self.scores.counts


def dynamic_init(g: Graph, epsilon: float, delta: float, seed=None, *,
                 c: float = 0.5, pairs=None) -> DynamicBc:
    """Run the static sampler on `g` and wrap the result for updates.

    The seed drives one generator used for the VD estimate, the initial
    sample and every later resample.
    """
    rng = random.Random(seed)
    params = SamplingParams(epsilon, delta, estimate_vd(g, rng), c)
    pool, scores = rk_initialize(g, params, rng, pairs=pairs)
    return DynamicBc(g, pool, scores, params, rng)


def update_batch(state: DynamicBc, batch) -> BatchReport:
    return state.update_batch(batch)


def get_scores(state: DynamicBc) -> ScoreVector:
    return state.get_scores()


def get_ranking(state: DynamicBc) -> list[int]:
    return state.get_ranking()
