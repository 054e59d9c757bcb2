# -*- coding: UTF8 -*-
"""
edge frequency, edge regularity and broadcast vertex frequency
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import logging
import typing
from enum import Enum, unique

import numpy as np

from tgx import TgxException
from tgx.core.static_graph import Edge, EdgeLike
from tgx.core.temporal_graph import TemporalGraph
from tgx.core.validation import validate_broadcast

logger = logging.getLogger(__name__)


class AnalysisException(TgxException):
    pass


@unique
class RegularityMode(Enum):
    three_point = "three-point"
    two_point = "two-point"


class FrequencyTable(object):
    """
    Per-edge frequency f_e over the underlying edge set, optionally with the
    per-edge regularity r_e.
    """
    def __init__(self, lifetime: int, per_edge: typing.Mapping[Edge, int],
                 per_edge_regularity: typing.Optional[typing.Mapping[
                     Edge, int]] = None,
                 regularity_mode: RegularityMode = RegularityMode.three_point):
        for edge, f in per_edge.items():
            if not 1 <= f <= lifetime:
                raise AnalysisException(
                    "frequency {} of {} outside [1, {}]".format(
                        f, edge, lifetime))
        self.lifetime = lifetime
        self.per_edge: typing.Dict[Edge, int] = dict(sorted(per_edge.items()))
        self.per_edge_regularity: typing.Optional[typing.Dict[Edge, int]] = (
            None if per_edge_regularity is None else dict(
                sorted(per_edge_regularity.items())))
        self.regularity_mode = regularity_mode

    def __getitem__(self, edge: Edge) -> int:
        return self.per_edge[edge]

    def __contains__(self, edge: object) -> bool:
        return edge in self.per_edge

    def __len__(self) -> int:
        return len(self.per_edge)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FrequencyTable):
            return False
        return (self.per_edge == other.per_edge
                and self.per_edge_regularity == other.per_edge_regularity)

    def __ne__(self, other: object) -> bool:
        return not self == other

    @property
    def max_frequency(self) -> int:
        """
        F_max, the largest edge frequency (0 without edges)
        """
        return max(self.per_edge.values(), default=0)

    @property
    def max_regularity(self) -> typing.Optional[int]:
        if self.per_edge_regularity is None:
            return None
        return max(self.per_edge_regularity.values(), default=0)

    def lines(self) -> typing.List[str]:
        """
        one "<u> <v> <f_e> [<r_e>]" line per edge, lexicographic edge order
        """
        lines = []
        for (u, v), f in self.per_edge.items():
            line = "{} {} {}".format(u, v, f)
            if self.per_edge_regularity is not None:
                line += " {}".format(self.per_edge_regularity[(u, v)])
            lines.append(line)
        return lines


def activation_frequency(bits: typing.Sequence[bool]) -> int:
    """
    Longest run of inactive timesteps plus one, in a single forward pass.
    Prefix and suffix runs count like inner gaps.
    :param bits: bits[t - 1] is True iff the edge / vertex is active at t
    """
    longest = 0  # longest inactive run seen so far
    current = 0  # timesteps since the last activation
    for active in bits:
        if active:
            current = 0
        else:
            current += 1
            longest = max(longest, current)
    return longest + 1


def _bits(g: TemporalGraph, e: EdgeLike) -> np.ndarray:
    if not g.has_edge(e):
        raise AnalysisException(
            "edge {} is not in the underlying graph".format(tuple(e)))
    return g.activation(e)


def edge_frequency(g: TemporalGraph, e: EdgeLike) -> int:
    return activation_frequency(_bits(g, e).tolist())


def _is_regular(bits: typing.Sequence[bool], r: int,
                mode: RegularityMode) -> bool:
    lifetime = len(bits)
    if mode is RegularityMode.two_point:
        return all(bits[i] == bits[i + r] for i in range(lifetime - r))
    # t ranges over [r + 1, T - r], i = t - 1 is the 0-based index
    return all(bits[i - r] == bits[i] == bits[i + r]
               for i in range(r, lifetime - r))


def edge_regularity(g: TemporalGraph, e: EdgeLike,
                    mode: RegularityMode = RegularityMode.three_point) -> int:
    """
    Smallest r for which the edge's activity agrees at t - r, t and t + r for
    all valid t. Vacuously true once T < 2r + 1, so the search ends by r = T.
    """
    bits = _bits(g, e).tolist()
    for r in range(1, g.lifetime + 1):
        if _is_regular(bits, r, mode):
            return r
    raise AnalysisException("no regularity found")  # unreachable for T >= 1


def frequency_table(g: TemporalGraph, with_regularity: bool = False,
                    mode: RegularityMode = RegularityMode.three_point
                    ) -> FrequencyTable:
    per_edge = {e: edge_frequency(g, e) for e in g.edges}
    regularity = None
    if with_regularity:
        regularity = {e: edge_regularity(g, e, mode) for e in g.edges}
    logger.debug("Computed frequencies of %d edges over %d timesteps.",
                 len(per_edge), g.lifetime)
    return FrequencyTable(g.lifetime, per_edge, regularity, mode)


def is_f_frequent(g: TemporalGraph, f: int) -> bool:
    return all(edge_frequency(g, e) <= f for e in g.edges)


def is_r_regular(g: TemporalGraph, r: int,
                 mode: RegularityMode = RegularityMode.three_point) -> bool:
    return all(edge_regularity(g, e, mode) <= r for e in g.edges)


def vertex_activations(active_sets: typing.Sequence[typing.AbstractSet[int]],
                       v: int) -> typing.List[bool]:
    return [v in active for active in active_sets]


def _broadcast_active_sets(
        g: TemporalGraph) -> typing.Sequence[typing.AbstractSet[int]]:
    report, active_sets = validate_broadcast(g)
    if not report.ok:
        raise AnalysisException(
            "not a broadcast network:\n{}".format(report.pretty_str()))
    return active_sets


def _vertex_frequency(active_sets: typing.Sequence[typing.AbstractSet[int]],
                      v: int) -> int:
    bits = vertex_activations(active_sets, v)
    if not any(bits):
        raise AnalysisException(
            "vertex {} is never active within the lifetime".format(v))
    return activation_frequency(bits)


def vertex_frequency(g: TemporalGraph, v: int) -> int:
    """
    Frequency of a vertex in a broadcast network: the same gap scan as for
    edges, run over its activation sequence A_1..A_T.
    """
    if not 0 <= v < g.n:
        raise AnalysisException("vertex {} outside [0, {}]".format(
            v, g.n - 1))
    return _vertex_frequency(_broadcast_active_sets(g), v)


def vertex_frequencies(g: TemporalGraph) -> typing.Dict[int, int]:
    active_sets = _broadcast_active_sets(g)
    return {v: _vertex_frequency(active_sets, v) for v in range(g.n)}
