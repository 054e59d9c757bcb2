# -*- coding: UTF8 -*-
"""
Exploration planner: frequency-weighted spanning tree, tree walk and greedy
scheduling of the walk onto the temporal graph.
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import logging
import typing

import numpy as np

from tgx import TgxException
from tgx.core.analysis import FrequencyTable, frequency_table
from tgx.core.result import Result
from tgx.core.static_graph import Edge, StaticGraph
from tgx.core.temporal_graph import TemporalGraph, underlying_graph
from tgx.core.walk import TemporalWalk, Walk

logger = logging.getLogger(__name__)


class PlannerException(TgxException):
    pass


class LifetimeExhaustedException(PlannerException):
    def __init__(self, message: str, step_index: int):
        super(LifetimeExhaustedException, self).__init__(message)
        self.step_index = step_index


class _UnionFind(object):
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, u: int, v: int) -> bool:
        root_u, root_v = self.find(u), self.find(v)
        if root_u == root_v:
            return False
        if self.rank[root_u] < self.rank[root_v]:
            root_u, root_v = root_v, root_u
        self.parent[root_v] = root_u
        if self.rank[root_u] == self.rank[root_v]:
            self.rank[root_u] += 1
        return True


class SpanningPlan(typing.NamedTuple):
    fw_graph: StaticGraph
    mst_edges: typing.Tuple[Edge, ...]
    mst_weight: int
    tree_walk: Walk


class ExplorationResult(typing.NamedTuple):
    walk: TemporalWalk
    plan: typing.Optional[SpanningPlan]
    table: typing.Optional[FrequencyTable]
    report: Result


def build_fw_graph(g: TemporalGraph, ft: FrequencyTable) -> StaticGraph:
    """
    Underlying graph weighted by edge frequency. Symmetric directed graphs
    are projected to undirected edges weighted with max(f_uv, f_vu).
    """
    if set(ft.per_edge) != set(g.edges):
        raise PlannerException(
            "frequency table does not match the underlying edge set")
    if not g.directed:
        return StaticGraph(g.n, g.edges, weights=ft.per_edge)
    if not underlying_graph(g).is_symmetric():
        raise PlannerException(
            "directed graph with non-symmetric underlying graph "
            "is not supported")
    weights: typing.Dict[Edge, int] = {}
    for (u, v), f in ft.per_edge.items():
        key = (min(u, v), max(u, v))
        weights[key] = max(weights.get(key, 0), f)
    return StaticGraph(g.n, weights.keys(), weights=weights)


def minimum_spanning_tree(
        sg: StaticGraph) -> typing.Tuple[typing.Tuple[Edge, ...], int]:
    """
    Kruskal's algorithm, ties broken by (weight, u, v).
    :return: tree edges (sorted), total weight
    """
    if sg.directed:
        raise PlannerException("spanning trees need an undirected graph")
    weights = sg.weights
    candidates = sorted((w, u, v) for (u, v), w in weights.items() if u != v)
    components = _UnionFind(sg.n)
    tree: typing.List[Edge] = []
    total = 0
    for w, u, v in candidates:
        if components.union(u, v):
            tree.append((u, v))
            total += w
            if len(tree) == sg.n - 1:
                break
    if len(tree) != sg.n - 1:
        root = components.find(0)
        unreachable = next(v for v in range(sg.n)
                           if components.find(v) != root)
        raise PlannerException(
            "graph is disconnected, vertex {} is unreachable from 0".format(
                unreachable))
    return tuple(sorted(tree)), total


def _tree_adjacency(tree: typing.Iterable[Edge],
                    n: int) -> typing.List[typing.List[int]]:
    edges = list(tree)
    if len(edges) != n - 1:
        raise PlannerException(
            "a spanning tree on {} vertices has {} edges, got {}".format(
                n, n - 1, len(edges)))
    adjacency: typing.List[typing.List[int]] = [[] for _ in range(n)]
    components = _UnionFind(n)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise PlannerException(
                "tree edge ({}, {}) outside [0, {}]".format(u, v, n - 1))
        if not components.union(u, v):
            raise PlannerException(
                "tree edges contain a cycle at ({}, {})".format(u, v))
        adjacency[u].append(v)
        adjacency[v].append(u)
    return adjacency


def tree_exploration_walk(tree: typing.Iterable[Edge], n: int,
                          start: int) -> Walk:
    """
    Depth-first Euler tour from start, cut right after the last vertex is
    discovered. Children are visited in order of increasing subtree height,
    so the deepest branch comes last and the cut saves the most steps.
    :return: walk of at most 2n - 3 edges (empty for n = 1)
    """
    if not 0 <= start < n:
        raise PlannerException("start vertex {} outside [0, {}]".format(
            start, n - 1))
    adjacency = _tree_adjacency(tree, n)
    if n == 1:
        return Walk((), start=start)

    parent = [-1] * n
    order = [start]
    seen = [False] * n
    seen[start] = True
    stack = [start]
    while stack:
        v = stack.pop()
        for u in adjacency[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                order.append(u)
                stack.append(u)

    height = [0] * n
    size = [1] * n
    for v in reversed(order):
        if parent[v] >= 0:
            height[parent[v]] = max(height[parent[v]], height[v] + 1)
            size[parent[v]] += size[v]
    children = [
        sorted((u for u in adjacency[v] if parent[u] == v),
               key=lambda u: (height[u], size[u], u)) for v in range(n)
    ]

    steps: typing.List[Edge] = []
    last_discovery = 0
    # (vertex, index of the next child to descend into)
    path = [(start, 0)]
    while path:
        v, i = path.pop()
        if i < len(children[v]):
            child = children[v][i]
            path.append((v, i + 1))
            steps.append((v, child))
            last_discovery = len(steps)
            path.append((child, 0))
        elif path:
            steps.append((v, path[-1][0]))
    return Walk(steps[:last_discovery], start=start)


def schedule_walk(g: TemporalGraph, w: Walk) -> TemporalWalk:
    """
    Greedy earliest-activation schedule: step i takes the first t > t_(i-1)
    at which its edge is active.
    :raises LifetimeExhaustedException: with the first unschedulable step
    """
    scheduled = []
    previous_t = 0
    for i, (u, v) in enumerate(w):
        if not g.has_edge((u, v)):
            raise PlannerException(
                "step {}: ({}, {}) is not an edge of the temporal "
                "graph".format(i, u, v))
        # index t - 1 of the activation vector, so t > previous_t
        later = np.flatnonzero(g.activation((u, v))[previous_t:])
        if later.size == 0:
            raise LifetimeExhaustedException(
                "lifetime T={} exhausted at step {} ({}, {}) after "
                "t={}".format(g.lifetime, i, u, v, previous_t), step_index=i)
        previous_t += int(later[0]) + 1
        scheduled.append(((u, v), previous_t))
    return TemporalWalk(w.start, scheduled)


def _walk_factor(n: int) -> int:
    return max(2 * n - 3, 0)


def plan_exploration(g: TemporalGraph, start: int,
                     ft: typing.Optional[FrequencyTable] = None
                     ) -> typing.Tuple[SpanningPlan, FrequencyTable]:
    if ft is None:
        ft = frequency_table(g)
    fw_graph = build_fw_graph(g, ft)
    mst_edges, mst_weight = minimum_spanning_tree(fw_graph)
    tree_walk = tree_exploration_walk(mst_edges, g.n, start)
    logger.debug("Spanning tree of weight %d, tree walk of %d steps.",
                 mst_weight, len(tree_walk))
    return SpanningPlan(fw_graph, mst_edges, mst_weight, tree_walk), ft


def explore(g: TemporalGraph, start: int,
            ft: typing.Optional[FrequencyTable] = None) -> ExplorationResult:
    """
    Full planner pipeline: frequency table, FW graph, minimum spanning tree,
    tree walk and greedy schedule.
    :param g: temporal graph with connected underlying graph
    :param start: start vertex
    :param ft: optional precomputed frequency table of g
    :return: exploration walk, plan, table and a key: value report
    """
    if not 0 <= start < g.n:
        raise PlannerException("start vertex {} outside [0, {}]".format(
            start, g.n - 1))
    report = Result("exploration")
    if g.n == 1:
        walk = TemporalWalk(start)
        if ft is None:
            ft = frequency_table(g)
        report.add_info({
            "n": 1,
            "T": g.lifetime,
            "F_max": ft.max_frequency,
            "mst_weight": 0,
            "guarantee_2F": 0,
            "guarantee_f2n3": 0,
            "achieved_length": 0,
            "lifetime_sufficient": True
        })
        return ExplorationResult(walk, None, ft, report)
    if g.lifetime < g.n - 1:
        raise PlannerException(
            "lifetime T={} is shorter than the {} moves needed to reach "
            "{} vertices".format(g.lifetime, g.n - 1, g.n))
    if not g.edges:
        raise PlannerException("temporal graph has no edges")

    plan, ft = plan_exploration(g, start, ft)
    walk = schedule_walk(g, plan.tree_walk)
    report.add_info({
        "n": g.n,
        "T": g.lifetime,
        "F_max": ft.max_frequency,
        "mst_weight": plan.mst_weight,
        "guarantee_2F": 2 * plan.mst_weight,
        "guarantee_f2n3": ft.max_frequency * _walk_factor(g.n),
        "achieved_length": walk.length,
        "lifetime_sufficient": g.lifetime >= 2 * plan.mst_weight
    })
    report.add_np_array("timesteps", np.array(walk.timesteps, dtype=int))
    logger.debug("Explored %d vertices in %d timesteps.", g.n, walk.length)
    return ExplorationResult(walk, plan, ft, report)


# Upper bounds on the planner's exploration length per graph class, and the
# lower bound realised by the star instance.


def transport_bound(n: int, max_period: int) -> int:
    return _walk_factor(n) * max_period


def sequential_bound(sg: StaticGraph) -> int:
    return 2 * len(sg.edges)


def broadcast_bound(n: int, diameter: int) -> int:
    return diameter * n * _walk_factor(n)


def always_connected_broadcast_bound(n: int, min_degree: int) -> int:
    return (min_degree + 1) * _walk_factor(n)


def star_lower_bound(n: int, r: int) -> int:
    return r * (2 * n - 5) + 1
