# -*- coding: UTF8 -*-
"""
Generators for restricted temporal graph classes: the star lower-bound
instance, public transport graphs, sequential connection graphs, broadcast
networks and random f-frequent graphs.
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import logging
import math
import typing
from enum import Enum, unique

import networkx as nx
import numpy as np

from tgx import TgxException
from tgx.core.static_graph import (Edge, EdgeLike, StaticGraph,
                                   canonical_edge, is_connected)
from tgx.core.temporal_graph import TemporalGraph
from tgx.core.walk import TemporalWalk

logger = logging.getLogger(__name__)

Seed = typing.Optional[int]


class InstanceException(TgxException):
    pass


class Route(object):
    """
    Periodic temporal walk of a transport line. Offsets lie in [1, period]
    and the period is the offset of the final step.
    """
    def __init__(self, steps: typing.Iterable[typing.Tuple[EdgeLike, int]]):
        canonical_steps = [((int(e[0]), int(e[1])), int(o))
                           for e, o in steps]
        if not canonical_steps:
            raise InstanceException("a route needs at least one step")
        self.walk = TemporalWalk(canonical_steps[0][0][0], canonical_steps)
        valid, details = self.walk.check()
        if not valid:
            raise InstanceException("malformed route: {}".format(details))
        if canonical_steps[0][1] < 1:
            raise InstanceException("route offsets start at 1")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Route):
            return False
        return self.walk == other.walk

    def __ne__(self, other: object) -> bool:
        return not self == other

    def __str__(self) -> str:
        return "route of period {} with {} steps".format(
            self.period, len(self.walk))

    @property
    def period(self) -> int:
        return self.walk.length

    @property
    def steps(self) -> typing.Tuple[typing.Tuple[Edge, int], ...]:
        return self.walk.steps

    @property
    def vertices(self) -> typing.Set[int]:
        return self.walk.vertices

    def edges_at(self, t: int) -> typing.List[Edge]:
        offset = (t - 1) % self.period + 1
        return [edge for edge, o in self.walk.steps if o == offset]


def scheduled_edges(routes: typing.Sequence[Route], t: int,
                    directed: bool = False) -> typing.Set[Edge]:
    """
    union over routes of the edges whose offset matches t modulo the period
    """
    return {
        canonical_edge(u, v, directed)
        for route in routes for u, v in route.edges_at(t)
    }


class SequentialSchedule(typing.NamedTuple):
    # vertex -> permutation P_v of its in-edges
    perms: typing.Dict[int, typing.Tuple[Edge, ...]]


class BroadcastSchedule(object):
    def __init__(self, active_sets: typing.Iterable[typing.Iterable[int]]):
        self.active_sets: typing.Tuple[typing.FrozenSet[int], ...] = tuple(
            frozenset(int(v) for v in active) for active in active_sets)
        if not self.active_sets:
            raise InstanceException("broadcast schedule is empty")
        for t, active in enumerate(self.active_sets, start=1):
            if not active:
                raise InstanceException(
                    "no vertex active at t={} of the schedule".format(t))

    def __len__(self) -> int:
        return len(self.active_sets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BroadcastSchedule):
            return False
        return self.active_sets == other.active_sets

    def __ne__(self, other: object) -> bool:
        return not self == other


@unique
class BroadcastPolicy(Enum):
    round_robin = "round-robin"
    greedy_random = "greedy-random"


def _rng(seed: Seed) -> np.random.Generator:
    return np.random.default_rng(0 if seed is None else seed)


def gen_star_lower_bound(n: int, r: int) -> typing.Tuple[TemporalGraph, int]:
    """
    Star with center 0. The full star is active at t = 1, r + 1, 2r + 1, ...
    and only the edge (0, 1) in between. Lifetime is r(2n - 1).
    :return: temporal graph, designated start vertex 1
    """
    if n < 3:
        raise InstanceException("star lower bound needs n >= 3")
    if r < 1:
        raise InstanceException("regularity r must be >= 1")
    star = tuple((0, v) for v in range(1, n))
    lifetime = r * (2 * n - 1)
    snapshots = [
        star if (t - 1) % r == 0 else ((0, 1), )
        for t in range(1, lifetime + 1)
    ]
    return TemporalGraph(n, lifetime, snapshots), 1


def gen_transport(routes: typing.Sequence[Route], n: int,
                  lifetime: int) -> TemporalGraph:
    if not routes:
        raise InstanceException("need at least one route")
    for i, route in enumerate(routes):
        outside = [v for v in route.vertices if not 0 <= v < n]
        if outside:
            raise InstanceException(
                "route {} visits vertices outside [0, {}]: {}".format(
                    i, n - 1, outside))
    max_period = max(route.period for route in routes)
    if lifetime < max_period:
        raise InstanceException(
            "lifetime {} shorter than the longest route period {}".format(
                lifetime, max_period))
    snapshots = [
        scheduled_edges(routes, t) for t in range(1, lifetime + 1)
    ]
    return TemporalGraph(n, lifetime, snapshots, allow_self_loops=True)


def _random_route(path: typing.Sequence[int], max_period: int,
                  rng: np.random.Generator) -> Route:
    num_steps = len(path) - 1
    period = int(rng.integers(num_steps, max_period + 1))
    if num_steps == 1:
        return Route((((path[0], path[1]), period), ))
    offsets = sorted(
        rng.choice(np.arange(1, period), size=num_steps - 1,
                   replace=False).tolist()) + [period]
    return Route(((path[i], path[i + 1]), offsets[i])
                 for i in range(num_steps))


def gen_random_routes(n: int, num_routes: int, max_period: int,
                      seed: Seed = None) -> typing.List[Route]:
    """
    Routes whose union is connected: a random Hamiltonian path is split into
    consecutive chunks of at most max_period edges, the remaining routes are
    random walks.
    """
    if n < 2:
        raise InstanceException("random routes need n >= 2")
    if max_period < 1:
        raise InstanceException("max_period must be >= 1")
    num_chunks = math.ceil((n - 1) / max_period)
    if num_routes < num_chunks:
        raise InstanceException(
            "{} routes of period <= {} cannot connect {} vertices".format(
                num_routes, max_period, n))
    rng = _rng(seed)
    order = rng.permutation(n).tolist()
    routes = []
    for i in range(num_chunks):
        chunk = order[i * max_period:(i + 1) * max_period + 1]
        routes.append(_random_route(chunk, max_period, rng))
    for _ in range(num_routes - num_chunks):
        length = int(rng.integers(1, max_period + 1))
        path = [int(rng.integers(n))]
        for _ in range(length):
            step = int(rng.integers(n - 1))
            path.append(step if step < path[-1] else step + 1)
        routes.append(_random_route(path, max_period, rng))
    return routes


def gen_sequential(underlying: StaticGraph, sched: SequentialSchedule,
                   lifetime: int) -> TemporalGraph:
    """
    At each t, vertex v activates exactly P_v[(t - 1) mod deg(v)].
    """
    if not underlying.directed or not underlying.is_symmetric():
        raise InstanceException(
            "sequential connection graphs need a symmetric directed graph")
    perms: typing.Dict[int, typing.Tuple[Edge, ...]] = {}
    for v in range(underlying.n):
        in_edges = underlying.in_edges(v)
        perm = tuple((int(u), int(w)) for u, w in sched.perms.get(v, ()))
        if len(perm) != len(in_edges) or set(perm) != set(in_edges):
            raise InstanceException(
                "schedule of vertex {} is not a permutation of its in-edges "
                "{}".format(v, in_edges))
        if perm:
            perms[v] = perm
    snapshots = [[perm[(t - 1) % len(perm)] for perm in perms.values()]
                 for t in range(1, lifetime + 1)]
    return TemporalGraph(underlying.n, lifetime, snapshots, directed=True)


def random_sequential_schedule(underlying: StaticGraph,
                               seed: Seed = None) -> SequentialSchedule:
    rng = _rng(seed)
    perms = {}
    for v in range(underlying.n):
        in_edges = underlying.in_edges(v)
        if in_edges:
            perms[v] = tuple(in_edges[i]
                             for i in rng.permutation(len(in_edges)))
    return SequentialSchedule(perms)


def _broadcast_snapshots(
        neighbours: typing.Sequence[typing.FrozenSet[int]],
        active_sets: typing.Iterable[typing.AbstractSet[int]]
) -> typing.List[typing.List[Edge]]:
    return [[(v, u) for v in sorted(active) for u in sorted(neighbours[v])]
            for active in active_sets]


def _neighbourhoods(
        underlying: StaticGraph) -> typing.List[typing.FrozenSet[int]]:
    if underlying.directed and not underlying.is_symmetric():
        raise InstanceException(
            "broadcast networks need a symmetric underlying graph")
    if not is_connected(underlying):
        raise InstanceException(
            "broadcast networks need a connected underlying graph")
    neighbours = [underlying.neighbours(v) for v in range(underlying.n)]
    if underlying.n > 1 and not all(neighbours):
        raise InstanceException("isolated vertex in broadcast network")
    return neighbours


def _greedy_random_sets(neighbours: typing.Sequence[typing.FrozenSet[int]],
                        lifetime: int, rng: np.random.Generator,
                        max_retries: int) -> typing.List[typing.Set[int]]:
    n = len(neighbours)
    ever_active = [False] * n
    # neighbours heard from since the vertex's last activation
    acked: typing.List[typing.Set[int]] = [set() for _ in range(n)]
    active_sets = []
    for t in range(1, lifetime + 1):
        eligible = [
            v for v in range(n)
            if not ever_active[v] or acked[v] >= neighbours[v]
        ]
        for _ in range(max_retries):
            drawn = {v for v in eligible if rng.random() < 0.5}
            if drawn:
                break
            logger.debug("Empty activation draw at t=%d, retrying.", t)
        else:
            raise InstanceException(
                "no non-empty activation set after {} draws at t={}".format(
                    max_retries, t))
        for v in drawn:
            ever_active[v] = True
            acked[v] = set()
        for u in drawn:
            for w in neighbours[u]:
                acked[w].add(u)
        active_sets.append(drawn)
    return active_sets


def gen_broadcast(underlying: StaticGraph, policy: BroadcastPolicy,
                  lifetime: int, seed: Seed = None, max_retries: int = 100
                  ) -> typing.Tuple[TemporalGraph, BroadcastSchedule]:
    """
    :param underlying: connected symmetric graph (directed or undirected)
    :param policy: round-robin or greedy-random activation
    :param lifetime: number of timesteps T
    :param seed: seed of the greedy-random policy
    :param max_retries: subset draws per timestep before giving up
    :return: directed broadcast network, its activation sets
    """
    neighbours = _neighbourhoods(underlying)
    n = underlying.n
    if policy is BroadcastPolicy.round_robin:
        active_sets: typing.List[typing.Set[int]] = [{(t - 1) % n}
                                                     for t in range(
                                                         1, lifetime + 1)]
    else:
        active_sets = _greedy_random_sets(neighbours, lifetime, _rng(seed),
                                          max_retries)
    snapshots = _broadcast_snapshots(neighbours, active_sets)
    return (TemporalGraph(n, lifetime, snapshots, directed=True),
            BroadcastSchedule(active_sets))


def gen_broadcast_from_schedule(underlying: StaticGraph,
                                schedule: BroadcastSchedule,
                                lifetime: int) -> TemporalGraph:
    """
    Repeats the schedule's activation sets periodically over [1, lifetime].
    """
    neighbours = _neighbourhoods(underlying)
    for active in schedule.active_sets:
        outside = [v for v in active if not 0 <= v < underlying.n]
        if outside:
            raise InstanceException(
                "scheduled vertices outside [0, {}]: {}".format(
                    underlying.n - 1, outside))
    period = len(schedule)
    snapshots = _broadcast_snapshots(
        neighbours,
        (schedule.active_sets[(t - 1) % period]
         for t in range(1, lifetime + 1)))
    return TemporalGraph(underlying.n, lifetime, snapshots, directed=True)


def random_connected_graph(n: int, density: float, seed: Seed = None,
                           directed: bool = False,
                           max_attempts: int = 100) -> StaticGraph:
    """
    G(n, p) graph, regenerated until connected.
    :param directed: return the symmetric directed version
    """
    if n < 1:
        raise InstanceException("need at least one vertex")
    if not 0.0 <= density <= 1.0:
        raise InstanceException("density must be within [0, 1]")
    rng = _rng(seed)
    for attempt in range(1, max_attempts + 1):
        graph = nx.gnp_random_graph(n, density,
                                    seed=int(rng.integers(2**31 - 1)))
        if nx.is_connected(graph):
            logger.debug("Connected G(%d, %.2f) after %d attempt(s).", n,
                         density, attempt)
            edges: typing.List[Edge] = [(int(u), int(v))
                                        for u, v in graph.edges()]
            if directed:
                edges += [(v, u) for u, v in edges]
            return StaticGraph(n, edges, directed=directed)
    raise InstanceException(
        "no connected G({}, {}) graph in {} attempts - density too "
        "low?".format(n, density, max_attempts))


def gen_random_frequent(n: int, f: int, density: float = 0.5,
                        seed: Seed = None,
                        lifetime: typing.Optional[int] = None,
                        max_attempts: int = 100) -> TemporalGraph:
    """
    Random connected graph whose edges are active with gaps drawn uniformly
    from [1, f], so every window of f timesteps holds an activation.
    :param lifetime: defaults to 4 * f * n
    """
    if f < 1:
        raise InstanceException("frequency bound f must be >= 1")
    if n < 2:
        raise InstanceException("random frequent graphs need n >= 2")
    if lifetime is None:
        lifetime = 4 * f * n
    rng = _rng(seed)
    underlying = random_connected_graph(n, density,
                                        seed=int(rng.integers(2**31 - 1)),
                                        max_attempts=max_attempts)
    snapshots: typing.List[typing.List[Edge]] = [[] for _ in range(lifetime)]
    for e in underlying.edges:
        t = int(rng.integers(1, f + 1))
        while t <= lifetime:
            snapshots[t - 1].append(e)
            t += int(rng.integers(1, f + 1))
    return TemporalGraph(n, lifetime, snapshots)
