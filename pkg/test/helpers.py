"""
Common helper functions and fixtures for tests.
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import itertools
import typing

import numpy as np

from tgx.core.instance_classes import (BroadcastSchedule,
                                       gen_broadcast_from_schedule)
from tgx.core.static_graph import Edge, StaticGraph
from tgx.core.temporal_graph import TemporalGraph


def graph_from_activations(n: int, lifetime: int,
                           activations: typing.Mapping[Edge,
                                                       typing.Iterable[int]],
                           directed: bool = False) -> TemporalGraph:
    """
    :param activations: edge -> timesteps at which it is active
    """
    snapshots: typing.List[typing.List[Edge]] = [[] for _ in range(lifetime)]
    for edge, timesteps in activations.items():
        for t in timesteps:
            snapshots[t - 1].append(edge)
    return TemporalGraph(n, lifetime, snapshots, directed=directed)


def path_edges(n: int) -> typing.List[Edge]:
    return [(v, v + 1) for v in range(n - 1)]


def complete_edges(n: int) -> typing.List[Edge]:
    return list(itertools.combinations(range(n), 2))


def always_active(n: int, lifetime: int,
                  edges: typing.Sequence[Edge]) -> TemporalGraph:
    return TemporalGraph(n, lifetime, [edges] * lifetime)


def bits_from_times(lifetime: int,
                    timesteps: typing.Iterable[int]) -> typing.List[bool]:
    active = set(timesteps)
    return [t in active for t in range(1, lifetime + 1)]


def naive_frequency(bits: typing.Sequence[bool]) -> int:
    """
    smallest f such that every window of f consecutive timesteps holds an
    activation, by scanning all windows
    """
    lifetime = len(bits)
    for f in range(1, lifetime + 1):
        if all(any(bits[s:s + f]) for s in range(lifetime - f + 1)):
            return f
    return lifetime + 1


def is_spanning_tree(n: int, edges: typing.Sequence[Edge]) -> bool:
    if len(edges) != n - 1:
        return False
    root = list(range(n))

    def find(v: int) -> int:
        while root[v] != v:
            v = root[v]
        return v

    for u, v in edges:
        root_u, root_v = find(u), find(v)
        if root_u == root_v:
            return False
        root[root_u] = root_v
    return True


def brute_force_mst_weight(sg: StaticGraph) -> int:
    weights = sg.weights
    edges = [e for e in sg.edges if e[0] != e[1]]
    return min(
        sum(weights[e] for e in tree)
        for tree in itertools.combinations(edges, sg.n - 1)
        if is_spanning_tree(sg.n, tree))


def random_tree(n: int, rng: np.random.Generator) -> typing.List[Edge]:
    labels = rng.permutation(n).tolist()
    edges = []
    for v in range(1, n):
        parent = int(rng.integers(v))
        u, w = labels[parent], labels[v]
        edges.append((min(u, w), max(u, w)))
    return edges


def broadcast_fixture(underlying: StaticGraph,
                      active_sets: typing.Sequence[typing.Iterable[int]],
                      lifetime: int) -> TemporalGraph:
    return gen_broadcast_from_schedule(underlying,
                                       BroadcastSchedule(active_sets),
                                       lifetime)


def always_connected_broadcast_fixtures(
) -> typing.Dict[str, typing.Tuple[TemporalGraph, int]]:
    """
    hand-checked broadcast networks with every snapshot connected
    :return: name -> (graph, minimum degree of its underlying graph)
    """
    k3 = StaticGraph(3, complete_edges(3))
    k4 = StaticGraph(4, complete_edges(4))
    c4 = StaticGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    p3 = StaticGraph(3, path_edges(3))
    return {
        "K4 round-robin": (broadcast_fixture(k4, [{0}, {1}, {2}, {3}],
                                             20), 3),
        "C4 alternating": (broadcast_fixture(c4, [{0, 2}, {1, 3}], 12), 2),
        "P3 alternating": (broadcast_fixture(p3, [{1}, {0, 2}], 10), 1),
        "K3 all-active": (broadcast_fixture(k3, [{0, 1, 2}], 6), 2),
    }
