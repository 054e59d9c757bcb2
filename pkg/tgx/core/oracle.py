# -*- coding: UTF8 -*-
"""
Exact fastest exploration by forward search over (vertex, visited set)
states, for small instances.
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import logging
import typing

from tgx import TgxException
from tgx.core.static_graph import Edge
from tgx.core.temporal_graph import TemporalGraph
from tgx.core.walk import TemporalWalk

logger = logging.getLogger(__name__)

DEFAULT_N_LIMIT = 16

State = typing.Tuple[int, int]  # vertex, visited bitmask
Parents = typing.Dict[State, typing.Tuple[State, Edge, int]]


class OracleException(TgxException):
    pass


class ExplorationState(typing.NamedTuple):
    at: int
    visited: int
    time: int


class OracleResult(typing.NamedTuple):
    optimum: typing.Optional[int]
    walk: typing.Optional[TemporalWalk]
    final_state: typing.Optional[ExplorationState] = None

    @property
    def feasible(self) -> bool:
        return self.optimum is not None

    def pretty_str(self) -> str:
        return "infeasible" if self.optimum is None else "optimum: {}".format(
            self.optimum)


def _check(g: TemporalGraph, start: int, n_limit: int) -> None:
    if g.n > n_limit:
        raise OracleException(
            "refusing to search {} vertices (limit {}), the state space "
            "grows with 2^n * n * T".format(g.n, n_limit))
    if not 0 <= start < g.n:
        raise OracleException("start vertex {} outside [0, {}]".format(
            start, g.n - 1))


def _moves(g: TemporalGraph,
           t: int) -> typing.Dict[int, typing.List[int]]:
    moves: typing.Dict[int, typing.List[int]] = {}
    for u, v in g.snapshot(t):
        if u == v:
            continue
        moves.setdefault(u, []).append(v)
        if not g.directed:
            moves.setdefault(v, []).append(u)
    return moves


def _search(g: TemporalGraph, start: int, stop_when_explored: bool
            ) -> typing.Tuple[typing.Dict[State, int], Parents,
                              typing.Optional[State]]:
    """
    Forward search over timesteps. Waiting is free, so a state only keeps its
    earliest time and each timestep extends the states reached before it.
    :return: earliest time per state, parent pointers, first explored state
    """
    full = (1 << g.n) - 1
    initial = (start, 1 << start)
    earliest = {initial: 0}
    parents: Parents = {}
    # masks reached per vertex, in order of discovery
    by_vertex: typing.List[typing.List[int]] = [[] for _ in range(g.n)]
    by_vertex[start].append(1 << start)
    if initial[1] == full:
        return earliest, parents, initial

    for t in range(1, g.lifetime + 1):
        moves = _moves(g, t)
        frontier = {u: len(by_vertex[u]) for u in moves}
        for u, targets in moves.items():
            for mask in by_vertex[u][:frontier[u]]:
                for v in targets:
                    successor = (v, mask | (1 << v))
                    if successor in earliest:
                        continue
                    earliest[successor] = t
                    parents[successor] = ((u, mask), (u, v), t)
                    by_vertex[v].append(successor[1])
                    if stop_when_explored and successor[1] == full:
                        return earliest, parents, successor
    explored = [
        state for state in earliest if state[1] == full
    ]
    if not explored:
        return earliest, parents, None
    return earliest, parents, min(explored,
                                  key=lambda state: earliest[state])


def _witness(start: int, parents: Parents, state: State) -> TemporalWalk:
    steps = []
    while state in parents:
        state, edge, t = parents[state]
        steps.append((edge, t))
    return TemporalWalk(start, reversed(steps))


def earliest_arrival_table(g: TemporalGraph, start: int,
                           n_limit: int = DEFAULT_N_LIMIT
                           ) -> typing.Dict[State, int]:
    """
    :return: earliest time each (vertex, visited bitmask) state is reachable
    """
    _check(g, start, n_limit)
    earliest, _, _ = _search(g, start, stop_when_explored=False)
    return earliest


def fastest_exploration(g: TemporalGraph, start: int,
                        n_limit: int = DEFAULT_N_LIMIT) -> OracleResult:
    """
    Minimal final-step timestep over all exploring temporal walks from start.
    :return: optimum and witness walk, both None if no exploration exists
    """
    _check(g, start, n_limit)
    if g.n == 1:
        return OracleResult(0, TemporalWalk(start),
                            ExplorationState(start, 1, 0))
    earliest, parents, explored = _search(g, start, stop_when_explored=True)
    logger.debug("Oracle visited %d states.", len(earliest))
    if explored is None:
        return OracleResult(None, None)
    final_state = ExplorationState(explored[0], explored[1],
                                   earliest[explored])
    return OracleResult(final_state.time,
                        _witness(start, parents, explored), final_state)


def exists_exploration_within(g: TemporalGraph, start: int, ell: int,
                              strict: bool = True,
                              n_limit: int = DEFAULT_N_LIMIT) -> bool:
    """
    Decision version: is there an exploration of length < ell
    (<= ell if strict is False)?
    """
    result = fastest_exploration(g, start, n_limit)
    if result.optimum is None:
        return False
    return result.optimum < ell if strict else result.optimum <= ell
