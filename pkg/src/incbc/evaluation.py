"""Accuracy metrics and the remove-then-reinsert dynamics used by the harness."""

from __future__ import annotations

import logging
import math
import random
import time
from collections import deque
from dataclasses import dataclass, field

from .graph import EdgeUpdate, Graph, GraphError, is_connected
from .static import SamplingParams, estimate_vd, rk_initialize

log = logging.getLogger(__name__)

MAX_REMOVAL_TRIES = 50


@dataclass
class AccuracyReport:
    abs_errors: list
    max_abs_error: float
    mean_abs_error: float
    rank_errors: list
    timings: dict = field(default_factory=dict)

    @property
    def max_rank_error(self) -> float:
        return max(self.rank_errors) if self.rank_errors else 1.0


def ranks(scores) -> list[int]:
    """1-based rank of each node, highest score first, ties by node id."""
    order = sorted(range(len(scores)), key=lambda v: (-scores[v], v))
    out = [0] * len(scores)
    for pos, v in enumerate(order, 1):
        out[v] = pos
    return out


def compute_accuracy(exact, approx) -> AccuracyReport:
    if len(exact) != len(approx):
        raise ValueError(f"score vectors differ in length: {len(exact)} vs {len(approx)}")
    errs = [abs(a - b) for a, b in zip(exact, approx)]
    true_rank = ranks(exact)
    est_rank = ranks(approx)
    rank_err = []
    for tr, er in zip(true_rank, est_rank):
        rho = er / tr
        rank_err.append(max(rho, 1 / rho))
    mean = math.fsum(errs) / len(errs) if errs else 0.0
    return AccuracyReport(errs, max(errs, default=0.0), mean, rank_err)


@dataclass
class DynamicsScenario:
    """A connected graph with some edges held back, to be re-added in batches.

    `reduced` is the graph with the removed edges taken out; `batches` lists
    them back in the order they will be inserted.
    """

    base: Graph
    reduced: Graph
    batches: list
    removal_fraction: float
    batch_size: int
    seed: object = None

    @property
    def removed(self) -> list:
        return [upd for b in self.batches for upd in b]


def _reachable(g: Graph, a: int, b: int) -> bool:
    # g was connected before dropping {a, b}, so it still is iff a reaches b
    seen = {a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y == b:
                return True
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return False


def build_scenario(g: Graph, removal_fraction: float, batch_size: int,
                   batch_count: int, seed=None) -> DynamicsScenario:
    """Remove batch_size * batch_count random edges without disconnecting g.

    `removal_fraction` caps the share of edges removed. If the requested
    batches need more than that, the cap is raised to fit with a warning.
    Each removal is retried up to 50 times before giving up.
    """
    if not 0 < removal_fraction < 1:
        raise ValueError("removal fraction must lie in (0, 1)")
    if batch_size < 1 or batch_count < 1:
        raise ValueError("batch size and batch count must be positive")
    if not is_connected(g):
        raise GraphError("scenario base graph must be connected")
    need = batch_size * batch_count
    if need >= g.m:
        raise ValueError(f"cannot remove {need} of {g.m} edges")
    if removal_fraction * g.m < need:
        log.warning("removal fraction %.4g covers %d edges, raising it to %.4g to fit "
                    "%d batches of %d", removal_fraction, int(removal_fraction * g.m),
                    need / g.m, batch_count, batch_size)
        removal_fraction = need / g.m
    rng = random.Random(seed)
    reduced = g.copy()
    candidates = sorted(reduced.edges())
    removed = []
    for _ in range(need):
        for _attempt in range(MAX_REMOVAL_TRIES):
            if not candidates:
                raise GraphError(f"only {len(removed)} of {need} edges can be removed "
                                 "without disconnecting the graph")
            i = rng.randrange(len(candidates))
            u, v, w = candidates[i]
            candidates[i] = candidates[-1]
            candidates.pop()
            reduced.remove_edge(u, v)
            if _reachable(reduced, u, v):
                removed.append(EdgeUpdate(u, v, w))
                break
            reduced.add_edge(u, v, w)
        else:
            raise GraphError(f"could not remove edge {len(removed) + 1} of {need} "
                             f"within {MAX_REMOVAL_TRIES} tries without disconnecting")
    batches = [removed[i:i + batch_size] for i in range(0, need, batch_size)]
    return DynamicsScenario(g, reduced, batches, removal_fraction, batch_size, seed)


def time_restart(g: Graph, epsilon: float, delta: float, seed) -> float:
    """Wall time of a from-scratch sampling run on `g`."""
    rng = random.Random(seed)
    t0 = time.perf_counter()
    params = SamplingParams(epsilon, delta, estimate_vd(g, rng))
    rk_initialize(g, params, rng, keep_dags=True)
    return time.perf_counter() - t0

