# -*- coding: UTF8 -*-
"""
static (optionally weighted) graphs and basic graph metrics
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import logging
import typing

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from tgx import TgxException

logger = logging.getLogger(__name__)

Edge = typing.Tuple[int, int]
EdgeLike = typing.Sequence[int]
Weights = typing.Dict[Edge, int]


class StaticGraphException(TgxException):
    pass


class DirectedDegree(typing.NamedTuple):
    in_degree: int
    out_degree: int


def canonical_edge(u: int, v: int, directed: bool) -> Edge:
    """
    :return: (u, v) for directed graphs, (min, max) for undirected graphs
    """
    if directed or u <= v:
        return int(u), int(v)
    return int(v), int(u)


class StaticGraph(object):
    """
    Vertices 0..n-1, a set of edges and an optional positive integer weight
    per edge. Self-loops may be stored but never count as neighbours.
    """
    def __init__(self, n: int, edges: typing.Iterable[EdgeLike],
                 weights: typing.Optional[typing.Mapping[EdgeLike,
                                                         int]] = None,
                 directed: bool = False):
        if n < 1:
            raise StaticGraphException("need at least one vertex")
        self._n = int(n)
        self._directed = bool(directed)
        edge_set = set()
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            if not (0 <= u < n and 0 <= v < n):
                raise StaticGraphException(
                    "edge ({}, {}) has an endpoint outside [0, {}]".format(
                        u, v, n - 1))
            edge_set.add(canonical_edge(u, v, self._directed))
        self._edges: typing.Tuple[Edge, ...] = tuple(sorted(edge_set))
        self._edges_set = frozenset(self._edges)

        self._weights: typing.Optional[Weights] = None
        if weights is not None:
            canonical_weights = {
                canonical_edge(e[0], e[1], self._directed): int(w)
                for e, w in weights.items()
            }
            missing = [e for e in self._edges if e not in canonical_weights]
            if missing:
                raise StaticGraphException(
                    "no weight for edge(s) {}".format(missing[:5]))
            if any(canonical_weights[e] < 1 for e in self._edges):
                raise StaticGraphException("edge weights must be >= 1")
            self._weights = {e: canonical_weights[e] for e in self._edges}

        self._out: typing.List[typing.Set[int]] = [set() for _ in range(n)]
        self._in: typing.List[typing.Set[int]] = [set() for _ in range(n)]
        for u, v in self._edges:
            if u == v:
                continue
            self._out[u].add(v)
            self._in[v].add(u)
            if not self._directed:
                self._out[v].add(u)
                self._in[u].add(v)

    def __str__(self) -> str:
        return "{} graph: {} vertices, {} edges{}".format(
            "directed" if self._directed else "undirected", self._n,
            len(self._edges), ", weighted" if self.weighted else "")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StaticGraph):
            return False
        return (self._n == other._n and self._directed == other._directed
                and self._edges == other._edges
                and self._weights == other._weights)

    def __ne__(self, other: object) -> bool:
        return not self == other

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> typing.Tuple[Edge, ...]:
        return self._edges

    @property
    def directed(self) -> bool:
        return self._directed

    @property
    def weighted(self) -> bool:
        return self._weights is not None

    @property
    def weights(self) -> Weights:
        """
        :return: copy of the weight map (all ones if unweighted)
        """
        if self._weights is None:
            return {e: 1 for e in self._edges}
        return dict(self._weights)

    def weight(self, edge: EdgeLike) -> int:
        key = canonical_edge(edge[0], edge[1], self._directed)
        if key not in self.edges_set:
            raise StaticGraphException("{} is not an edge".format(key))
        return 1 if self._weights is None else self._weights[key]

    @property
    def edges_set(self) -> typing.FrozenSet[Edge]:
        return self._edges_set

    def has_edge(self, edge: EdgeLike) -> bool:
        return canonical_edge(edge[0], edge[1],
                              self._directed) in self.edges_set

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise StaticGraphException("vertex {} outside [0, {}]".format(
                v, self._n - 1))

    def neighbours(self, v: int) -> typing.FrozenSet[int]:
        """
        out-neighbourhood N(v) without v itself
        """
        self._check_vertex(v)
        return frozenset(self._out[v])

    def in_neighbours(self, v: int) -> typing.FrozenSet[int]:
        self._check_vertex(v)
        return frozenset(self._in[v])

    def in_edges(self, v: int) -> typing.List[Edge]:
        return [canonical_edge(u, v, self._directed)
                for u in sorted(self.in_neighbours(v))]

    def is_symmetric(self) -> bool:
        if not self._directed:
            return True
        return all((v, u) in self.edges_set for u, v in self._edges)

    def undirected_projection(self) -> 'StaticGraph':
        if not self._directed:
            return self
        return StaticGraph(self._n, self._edges, directed=False)

    def adjacency_matrix(self) -> csr_matrix:
        """
        sparse 0/1 adjacency without self-loops (symmetric if undirected)
        """
        rows, cols = [], []
        for u in range(self._n):
            for v in self._out[u]:
                rows.append(u)
                cols.append(v)
        data = np.ones(len(rows), dtype=np.int8)
        return csr_matrix(
            (data, (np.array(rows, dtype=int), np.array(cols, dtype=int))),
            shape=(self._n, self._n))

    def total_weight(self) -> int:
        return sum(self.weights.values())


def degree(sg: StaticGraph,
           v: int) -> typing.Union[int, DirectedDegree]:
    """
    :return: |N(v)| for undirected graphs, (in-degree, out-degree) otherwise
    """
    if not 0 <= v < sg.n:
        raise StaticGraphException("vertex {} outside [0, {}]".format(
            v, sg.n - 1))
    if sg.directed:
        return DirectedDegree(len(sg.in_neighbours(v)),
                              len(sg.neighbours(v)))
    return len(sg.neighbours(v))


def min_degree(sg: StaticGraph) -> int:
    """
    smallest degree of the undirected projection
    """
    projection = sg.undirected_projection()
    return min(len(projection.neighbours(v)) for v in range(sg.n))


def diameter(sg: StaticGraph) -> int:
    """
    longest shortest walk over all vertex pairs, via all-pairs BFS
    """
    if sg.n == 1:
        return 0
    distances = shortest_path(sg.adjacency_matrix(), method="D",
                              directed=sg.directed, unweighted=True)
    if np.isinf(distances).any():
        raise StaticGraphException(
            "graph is not connected - infinite diameter")
    return int(distances.max())


def is_connected(sg: StaticGraph) -> bool:
    """
    single connected component check on the undirected projection
    """
    if sg.n == 1:
        return True
    num_components, _ = connected_components(sg.adjacency_matrix(),
                                             directed=sg.directed,
                                             connection="weak")
    return num_components == 1
