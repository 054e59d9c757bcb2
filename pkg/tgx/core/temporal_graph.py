# -*- coding: UTF8 -*-
"""
snapshot model of temporal graphs
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import logging
import typing

import numpy as np

from tgx import TgxException
from tgx.core.static_graph import Edge, EdgeLike, StaticGraph, canonical_edge

logger = logging.getLogger(__name__)


class TemporalGraphException(TgxException):
    pass


class TemporalGraph(object):
    """
    Fixed vertex set 0..n-1 with one edge set per timestep 1..T.
    Immutable after construction. Each edge of the underlying graph owns a
    row in a bool activation matrix, so membership tests are O(1).
    """
    def __init__(self, n: int, lifetime: int,
                 snapshots: typing.Sequence[typing.Iterable[EdgeLike]],
                 directed: bool = False, allow_self_loops: bool = False):
        """
        :param n: number of vertices
        :param lifetime: number of timesteps T
        :param snapshots: T iterables of (u, v) pairs, snapshots[t - 1] = E_t
        :param directed: whether (u, v) and (v, u) are distinct edges
        :param allow_self_loops: permit (v, v) edges (delay loops of routes)
        """
        if n < 1:
            raise TemporalGraphException("need at least one vertex")
        if lifetime < 1:
            raise TemporalGraphException("lifetime must be >= 1")
        if len(snapshots) != lifetime:
            raise TemporalGraphException(
                "expected {} snapshots, got {}".format(lifetime,
                                                       len(snapshots)))
        self._n = int(n)
        self._lifetime = int(lifetime)
        self._directed = bool(directed)
        self._allow_self_loops = bool(allow_self_loops)

        canonical_snapshots = []
        for t, snapshot in enumerate(snapshots, start=1):
            edge_set = set()
            for edge in snapshot:
                u, v = int(edge[0]), int(edge[1])
                if not (0 <= u < n and 0 <= v < n):
                    raise TemporalGraphException(
                        "edge ({}, {}) at t={} has an endpoint outside "
                        "[0, {}]".format(u, v, t, n - 1))
                if u == v and not allow_self_loops:
                    raise TemporalGraphException(
                        "self-loop ({}, {}) at t={} not allowed".format(
                            u, v, t))
                edge_set.add(canonical_edge(u, v, self._directed))
            if not edge_set:
                logger.warning("Snapshot t=%d contains no active edge.", t)
            canonical_snapshots.append(tuple(sorted(edge_set)))
        self._snapshots: typing.Tuple[typing.Tuple[Edge, ...], ...] = tuple(
            canonical_snapshots)

        self._edges: typing.Tuple[Edge, ...] = tuple(
            sorted({e
                    for snapshot in self._snapshots for e in snapshot}))
        self._edge_index = {e: i for i, e in enumerate(self._edges)}
        activity = np.zeros((len(self._edges), self._lifetime), dtype=bool)
        for t, snapshot in enumerate(self._snapshots, start=1):
            for e in snapshot:
                activity[self._edge_index[e], t - 1] = True
        activity.flags.writeable = False
        self._activity = activity

    def __str__(self) -> str:
        return "{} temporal graph: {} vertices, {} timesteps, {} edges".format(
            "directed" if self._directed else "undirected", self._n,
            self._lifetime, len(self._edges))

    def __repr__(self) -> str:
        return "<TemporalGraph n={} T={} directed={}>".format(
            self._n, self._lifetime, self._directed)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TemporalGraph):
            return False
        return (self._n == other._n and self._lifetime == other._lifetime
                and self._directed == other._directed
                and self._snapshots == other._snapshots)

    def __ne__(self, other: object) -> bool:
        return not self == other

    def __hash__(self) -> int:
        return hash((self._n, self._lifetime, self._directed,
                     self._snapshots))

    @property
    def n(self) -> int:
        return self._n

    @property
    def lifetime(self) -> int:
        return self._lifetime

    @property
    def directed(self) -> bool:
        return self._directed

    @property
    def allow_self_loops(self) -> bool:
        return self._allow_self_loops

    @property
    def snapshots(self) -> typing.Tuple[typing.Tuple[Edge, ...], ...]:
        return self._snapshots

    @property
    def edges(self) -> typing.Tuple[Edge, ...]:
        """
        sorted edge set of the underlying graph
        """
        return self._edges

    @property
    def num_edge_instances(self) -> int:
        return int(self._activity.sum())

    def canonical(self, edge: EdgeLike) -> Edge:
        return canonical_edge(edge[0], edge[1], self._directed)

    def has_edge(self, edge: EdgeLike) -> bool:
        return self.canonical(edge) in self._edge_index

    def snapshot(self, t: int) -> typing.Tuple[Edge, ...]:
        if not 1 <= t <= self._lifetime:
            raise TemporalGraphException(
                "timestep {} outside [1, {}]".format(t, self._lifetime))
        return self._snapshots[t - 1]

    def activation(self, edge: EdgeLike) -> np.ndarray:
        """
        :return: read-only bool vector a with a[t - 1] == (edge in E_t)
        """
        key = self.canonical(edge)
        if key not in self._edge_index:
            raise TemporalGraphException(
                "edge {} is not in the underlying graph".format(key))
        return self._activity[self._edge_index[key]]

    def is_active(self, edge: EdgeLike, t: int) -> bool:
        if not 1 <= t <= self._lifetime:
            return False
        index = self._edge_index.get(self.canonical(edge))
        if index is None:
            return False
        return bool(self._activity[index, t - 1])

    def prefix(self, lifetime: int) -> 'TemporalGraph':
        """
        :return: the same graph restricted to timesteps 1..lifetime
        """
        if not 1 <= lifetime <= self._lifetime:
            raise TemporalGraphException(
                "prefix lifetime must be within [1, {}]".format(
                    self._lifetime))
        return TemporalGraph(self._n, lifetime, self._snapshots[:lifetime],
                             self._directed, self._allow_self_loops)


def underlying_graph(g: TemporalGraph) -> StaticGraph:
    """
    Static graph whose edge set is the union of all snapshots (unweighted).
    """
    return StaticGraph(g.n, g.edges, directed=g.directed)
