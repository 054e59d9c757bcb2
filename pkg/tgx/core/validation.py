# -*- coding: UTF8 -*-
"""
Independent validators for temporal walks, explorations and the
restricted graph classes. Content violations are reported, never raised.
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import logging
import typing
from enum import Enum, unique

import numpy as np

from tgx.core.instance_classes import Route, SequentialSchedule, scheduled_edges
from tgx.core.static_graph import Edge, StaticGraph, is_connected
from tgx.core.temporal_graph import TemporalGraph, underlying_graph
from tgx.core.walk import TemporalWalk

logger = logging.getLogger(__name__)

ActiveSets = typing.List[typing.FrozenSet[int]]


@unique
class Rule(Enum):
    # temporal walks
    chain = "CHAIN"
    order = "ORDER"
    active = "ACTIVE"
    range = "RANGE"
    # explorations
    start = "START"
    unvisited = "UNVISITED"
    # graph class preconditions
    directed = "DIRECTED"
    asymmetric = "ASYMMETRIC"
    # sequential connection graphs
    permutation = "SEQ_PERM"
    multiple = "SEQ_MULTIPLE"
    off_schedule = "SEQ_OFF_SCHEDULE"
    missing = "SEQ_MISSING"
    # broadcast networks
    partial = "BCAST_PARTIAL"
    acknowledgement = "BCAST_ACK"
    # always connected
    disconnected = "DISCONNECTED"
    # public transport graphs
    spurious = "TRANSPORT_SPURIOUS"
    unscheduled = "TRANSPORT_MISSING"


class Violation(typing.NamedTuple):
    rule: Rule
    detail: str
    t: typing.Optional[int] = None
    edge: typing.Optional[Edge] = None

    def __str__(self) -> str:
        return "RULE {} t={} {}".format(self.rule.value,
                                        "-" if self.t is None else self.t,
                                        self.detail)


class ValidationReport(object):
    def __init__(self, name: str = "validation"):
        self.name = name
        self.violations: typing.List[Violation] = []

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "{}: {}".format(
            self.name, "ok" if self.ok else "{} violation(s)".format(
                len(self.violations)))

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def rules(self) -> typing.Set[Rule]:
        return {violation.rule for violation in self.violations}

    def add(self, rule: Rule, detail: str, t: typing.Optional[int] = None,
            edge: typing.Optional[Edge] = None) -> None:
        self.violations.append(Violation(rule, detail, t, edge))

    def extend(self, other: 'ValidationReport') -> None:
        self.violations.extend(other.violations)

    def pretty_str(self) -> str:
        return "\n".join(str(violation) for violation in self.violations)


def validate_temporal_walk(g: TemporalGraph,
                           tw: TemporalWalk) -> ValidationReport:
    report = ValidationReport("temporal walk")
    position = tw.start
    previous_t = 0
    for i, ((u, v), t) in enumerate(tw.steps):
        if u != position:
            report.add(Rule.chain,
                       "step {} starts at {} but the walk is at {}".format(
                           i, u, position), t, (u, v))
        if t <= previous_t:
            report.add(Rule.order,
                       "step {} at t={} does not follow t={}".format(
                           i, t, previous_t), t, (u, v))
        if not 1 <= t <= g.lifetime:
            report.add(Rule.range,
                       "step {} at t={} outside [1, {}]".format(
                           i, t, g.lifetime), t, (u, v))
        elif not g.is_active((u, v), t):
            report.add(Rule.active,
                       "step {}: edge ({}, {}) inactive".format(i, u, v), t,
                       (u, v))
        position = v
        previous_t = max(previous_t, t)
    return report


def validate_exploration(g: TemporalGraph, tw: TemporalWalk,
                         start: int) -> ValidationReport:
    report = validate_temporal_walk(g, tw)
    report.name = "exploration"
    if tw.start != start:
        report.add(Rule.start,
                   "walk starts at {}, expected {}".format(tw.start, start))
    unvisited = sorted(set(range(g.n)) - tw.vertices)
    if unvisited:
        report.add(Rule.unvisited,
                   "vertices never visited: {}".format(" ".join(
                       str(v) for v in unvisited)))
    return report


def _in_edges(sg: StaticGraph, v: int) -> typing.List[Edge]:
    return [(u, v) for u in sorted(sg.in_neighbours(v))]


def validate_sequential(
    g: TemporalGraph, perms: typing.Union[SequentialSchedule,
                                          typing.Mapping[int,
                                                         typing.Sequence[Edge]]]
) -> ValidationReport:
    report = ValidationReport("sequential connection graph")
    if not g.directed:
        report.add(Rule.directed, "sequential connection graphs are directed")
        return report
    if isinstance(perms, SequentialSchedule):
        perms = perms.perms
    sg = underlying_graph(g)
    if not sg.is_symmetric():
        report.add(Rule.asymmetric, "underlying graph is not symmetric")

    schedules: typing.Dict[int, typing.Sequence[Edge]] = {}
    for v in range(g.n):
        in_edges = _in_edges(sg, v)
        if not in_edges:
            continue
        perm = [tuple(e) for e in perms.get(v, ())]
        if len(perm) != len(in_edges) or set(perm) != set(in_edges):
            report.add(Rule.permutation,
                       "schedule of vertex {} is not a permutation of its "
                       "in-edges {}".format(v, in_edges))
            continue
        schedules[v] = perm  # type: ignore[assignment]

    for v, perm in schedules.items():
        period = len(perm)
        for t in range(1, g.lifetime + 1):
            expected = perm[(t - 1) % period]
            active = [e for e in perm if g.is_active(e, t)]
            if len(active) > 1:
                report.add(Rule.multiple,
                           "{} in-edges of vertex {} active".format(
                               len(active), v), t)
            for e in active:
                if e != expected:
                    report.add(Rule.off_schedule,
                               "in-edge {} active, scheduled is {}".format(
                                   e, expected), t, e)
            if expected not in active:
                report.add(Rule.missing,
                           "scheduled in-edge {} inactive".format(expected),
                           t, expected)
    return report


def broadcast_active_sets(g: TemporalGraph,
                          sg: typing.Optional[StaticGraph] = None
                          ) -> ActiveSets:
    """
    A_t: vertices with all of their out-edges active at t
    """
    if sg is None:
        sg = underlying_graph(g)
    active_sets = []
    for t in range(1, g.lifetime + 1):
        active_sets.append(
            frozenset(v for v in range(g.n) if sg.neighbours(v) and all(
                g.is_active((v, u), t) for u in sg.neighbours(v))))
    return active_sets


def validate_broadcast(
        g: TemporalGraph) -> typing.Tuple[ValidationReport, ActiveSets]:
    """
    checks all-or-nothing out-edge activation and the acknowledgement rule
    :return: report, activation sets A_1..A_T
    """
    report = ValidationReport("broadcast network")
    if not g.directed:
        report.add(Rule.directed, "broadcast networks are directed")
        return report, []
    sg = underlying_graph(g)
    if not sg.is_symmetric():
        report.add(Rule.asymmetric, "underlying graph is not symmetric")

    for t in range(1, g.lifetime + 1):
        for v in range(g.n):
            neighbours = sg.neighbours(v)
            num_active = sum(
                1 for u in neighbours if g.is_active((v, u), t))
            if 0 < num_active < len(neighbours):
                report.add(Rule.partial,
                           "vertex {} sends to {} of {} neighbours".format(
                               v, num_active, len(neighbours)), t)

    active_sets = broadcast_active_sets(g, sg)
    activity = np.array([[v in active for active in active_sets]
                         for v in range(g.n)], dtype=bool).reshape(
                             g.n, g.lifetime)
    for v in range(g.n):
        times = np.flatnonzero(activity[v]) + 1
        # no constraint before the first activation
        for t_1, t_2 in zip(times, times[1:]):
            for u in sorted(sg.neighbours(v)):
                if not activity[u, t_1 - 1:t_2 - 1].any():
                    report.add(
                        Rule.acknowledgement,
                        "vertex {} re-activated at t={} without hearing "
                        "from neighbour {} since t={}".format(
                            v, t_2, u, t_1), int(t_2))
    return report, active_sets


def validate_always_connected(g: TemporalGraph) -> ValidationReport:
    report = ValidationReport("always connected")
    for t in range(1, g.lifetime + 1):
        snapshot = StaticGraph(g.n, g.snapshot(t), directed=False)
        if not is_connected(snapshot):
            report.add(Rule.disconnected,
                       "snapshot is not connected on all {} vertices".format(
                           g.n), t)
    return report


def validate_transport(g: TemporalGraph,
                       routes: typing.Sequence[Route]) -> ValidationReport:
    report = ValidationReport("public transport graph")
    for t in range(1, g.lifetime + 1):
        expected = scheduled_edges(routes, t, g.directed)
        actual = set(g.snapshot(t))
        for e in sorted(actual - expected):
            report.add(Rule.spurious,
                       "edge {} active but not scheduled".format(e), t, e)
        for e in sorted(expected - actual):
            report.add(Rule.unscheduled,
                       "scheduled edge {} inactive".format(e), t, e)
    return report
