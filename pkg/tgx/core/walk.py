# -*- coding: UTF8 -*-
"""
static walks and temporal walks
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import logging
import typing

from tgx import TgxException
from tgx.core.static_graph import Edge, EdgeLike

logger = logging.getLogger(__name__)

Step = typing.Tuple[Edge, int]
CheckResult = typing.Tuple[bool, typing.Dict[str, str]]


class WalkException(TgxException):
    pass


def _as_edge(edge: EdgeLike) -> Edge:
    if len(edge) != 2:
        raise WalkException("an edge needs exactly two endpoints")
    return int(edge[0]), int(edge[1])


class Walk(object):
    """
    Ordered sequence of edges in traversal orientation, (u, v) means u -> v.
    """
    def __init__(self, steps: typing.Iterable[EdgeLike] = (),
                 start: typing.Optional[int] = None):
        self._steps: typing.Tuple[Edge, ...] = tuple(
            _as_edge(e) for e in steps)
        if start is None and not self._steps:
            raise WalkException("an empty walk needs an explicit start")
        self._start = self._steps[0][0] if start is None else int(start)

    def __len__(self) -> int:
        return len(self._steps)

    def __iter__(self) -> typing.Iterator[Edge]:
        return iter(self._steps)

    def __getitem__(self, i: int) -> Edge:
        return self._steps[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Walk):
            return False
        return self._start == other._start and self._steps == other._steps

    def __ne__(self, other: object) -> bool:
        return not self == other

    def __str__(self) -> str:
        return "walk from {}: {}".format(
            self._start, " ".join("({},{})".format(u, v)
                                  for u, v in self._steps))

    @property
    def start(self) -> int:
        return self._start

    @property
    def steps(self) -> typing.Tuple[Edge, ...]:
        return self._steps

    @property
    def vertices(self) -> typing.Set[int]:
        visited = {self._start}
        for u, v in self._steps:
            visited.update((u, v))
        return visited

    def check(self) -> CheckResult:
        """
        checks that every step starts where the previous one ended
        :return: True/False, dictionary with some detailed infos
        """
        details = {}
        position = self._start
        for i, (u, v) in enumerate(self._steps):
            if u != position:
                details["chaining"] = "step {} starts at {}, expected {}".format(
                    i, u, position)
                return False, details
            position = v
        details["chaining"] = "ok"
        return True, details


class TemporalWalk(object):
    """
    Sequence of (edge, timestep) steps starting at a vertex. The constructor
    only enforces structure so that illegal walks can still be validated.
    """
    def __init__(self, start: int,
                 steps: typing.Iterable[typing.Tuple[EdgeLike, int]] = ()):
        self._start = int(start)
        self._steps: typing.Tuple[Step, ...] = tuple(
            (_as_edge(edge), int(t)) for edge, t in steps)

    def __len__(self) -> int:
        return len(self._steps)

    def __iter__(self) -> typing.Iterator[Step]:
        return iter(self._steps)

    def __getitem__(self, i: int) -> Step:
        return self._steps[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TemporalWalk):
            return False
        return self._start == other._start and self._steps == other._steps

    def __ne__(self, other: object) -> bool:
        return not self == other

    def __str__(self) -> str:
        return "temporal walk from {} with {} steps, length {}".format(
            self._start, len(self._steps), self.length)

    @property
    def start(self) -> int:
        return self._start

    @property
    def steps(self) -> typing.Tuple[Step, ...]:
        return self._steps

    @property
    def edges(self) -> typing.Tuple[Edge, ...]:
        return tuple(edge for edge, _ in self._steps)

    @property
    def timesteps(self) -> typing.Tuple[int, ...]:
        return tuple(t for _, t in self._steps)

    @property
    def length(self) -> int:
        """
        timestep of the final step, 0 for the empty walk
        """
        return self._steps[-1][1] if self._steps else 0

    @property
    def end(self) -> int:
        return self._steps[-1][0][1] if self._steps else self._start

    @property
    def vertices(self) -> typing.Set[int]:
        visited = {self._start}
        for (u, v), _ in self._steps:
            visited.update((u, v))
        return visited

    def as_walk(self) -> Walk:
        return Walk(self.edges, start=self._start)

    def prefix(self, num_steps: int) -> 'TemporalWalk':
        return TemporalWalk(self._start, self._steps[:num_steps])

    def check(self) -> CheckResult:
        """
        checks chaining and strictly increasing timesteps
        (activation needs the graph, see tgx.core.validation)
        :return: True/False, dictionary with some detailed infos
        """
        valid, details = self.as_walk().check()
        if not valid:
            return valid, details
        stamps = self.timesteps
        if any(t_1 >= t_2 for t_1, t_2 in zip(stamps, stamps[1:])):
            details["timesteps"] = "not strictly increasing"
            return False, details
        details["timesteps"] = "ok"
        return True, details
