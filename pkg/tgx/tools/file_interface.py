# -*- coding: UTF8 -*-
"""
Low- and high-level read/write functions for the plain-text formats:
TG1 (temporal graphs), TW1 (temporal walks), RT1 (transport routes),
SQ1 (sequential schedules) and BS1 (broadcast schedules).
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import io
import logging
import os
import typing
from pathlib import Path

from tgx import TgxException
from tgx.core.instance_classes import (BroadcastSchedule, InstanceException,
                                       Route, SequentialSchedule)
from tgx.core.temporal_graph import TemporalGraph
from tgx.core.walk import TemporalWalk
from tgx.tools import user
from tgx.tools._typing import PathStrHandle

logger = logging.getLogger(__name__)

Line = typing.Tuple[int, typing.List[str]]  # line number, tokens


class FileInterfaceException(TgxException):
    pass


class ParseException(FileInterfaceException):
    def __init__(self, line_number: int, detail: str):
        super(ParseException,
              self).__init__("line {}: {}".format(line_number, detail))
        self.line_number = line_number


def read_lines(file_path: PathStrHandle,
               comment_str: str = "#") -> typing.List[Line]:
    """
    tokenizes a whitespace-separated text file
    :param file_path: path of the file (or file handle)
    :param comment_str: string indicating a comment line to ignore
    :return: (1-based line number, tokens) of every non-empty line
    """
    if isinstance(file_path, io.IOBase) or hasattr(file_path, "read"):
        raw_lines = file_path.read().splitlines()  # type: ignore
    else:
        if not os.path.isfile(file_path):
            raise FileInterfaceException("file {} does not exist".format(
                file_path))
        with open(file_path, "rb") as f:
            raw_lines = []
            for number, raw_bytes in enumerate(f.read().splitlines(),
                                               start=1):
                try:
                    raw_lines.append(
                        raw_bytes.decode("utf-8-sig" if number ==
                                         1 else "utf-8"))
                except UnicodeDecodeError as e:
                    raise ParseException(
                        number, "not valid UTF-8 text ({})".format(e.reason))
    lines = []
    for number, raw in enumerate(raw_lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith(comment_str):
            continue
        lines.append((number, stripped.split()))
    return lines


def _ints(line: Line, count: typing.Optional[int] = None,
          what: str = "entries") -> typing.List[int]:
    number, tokens = line
    if count is not None and len(tokens) != count:
        raise ParseException(
            number, "expected {} {}, got {}".format(count, what,
                                                    len(tokens)))
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise ParseException(number,
                             "non-integer token in '{}'".format(
                                 " ".join(tokens)))


def _header(lines: typing.List[Line], magic: str,
            num_fields: int) -> typing.List[int]:
    if not lines:
        raise ParseException(1, "empty file, expected a {} header".format(
            magic))
    number, tokens = lines[0]
    if tokens[0] != magic:
        raise ParseException(
            number, "expected magic '{}', got '{}'".format(magic, tokens[0]))
    return _ints((number, tokens[1:]), num_fields, "header fields")


def _check_vertex(number: int, v: int, n: int) -> None:
    if not 0 <= v < n:
        raise ParseException(number,
                             "vertex {} outside [0, {}]".format(v, n - 1))


def _write(file_path: PathStrHandle, lines: typing.Iterable[str],
           confirm_overwrite: bool, what: str) -> None:
    if confirm_overwrite and isinstance(file_path, (str, Path)):
        if not user.check_and_confirm_overwrite(file_path):
            return
    text = "\n".join(lines) + "\n"
    if isinstance(file_path, (str, Path)):
        with open(file_path, 'w') as f:
            f.write(text)
        logger.info("%s saved to: %s", what, file_path)
    else:
        file_path.write(text)


def read_tg1_file(file_path: PathStrHandle) -> TemporalGraph:
    """
    parses a temporal graph in TG1 format
    (header "TG1 <n> <T> <directed>", then one "<t> <u> <v>" line per
    active edge instance, in any order)
    :param file_path: the file path (or file handle)
    :return: TemporalGraph, self-loops permitted iff the file contains any
    """
    lines = read_lines(file_path)
    n, lifetime, directed = _header(lines, "TG1", 3)
    if n < 1 or lifetime < 1 or directed not in (0, 1):
        raise ParseException(lines[0][0],
                             "need n >= 1, T >= 1 and directed in {0, 1}")
    snapshots: typing.List[typing.List[typing.Tuple[int, int]]] = [
        [] for _ in range(lifetime)
    ]
    self_loops = False
    for line in lines[1:]:
        t, u, v = _ints(line, 3, "entries (t u v)")
        if not 1 <= t <= lifetime:
            raise ParseException(line[0], "timestep {} outside [1, {}]".format(
                t, lifetime))
        _check_vertex(line[0], u, n)
        _check_vertex(line[0], v, n)
        self_loops |= u == v
        snapshots[t - 1].append((u, v))
    g = TemporalGraph(n, lifetime, snapshots, directed=bool(directed),
                      allow_self_loops=self_loops)
    if not hasattr(file_path, 'read'):
        logger.debug("Loaded %s from: %s", g, file_path)
    return g


def write_tg1_file(file_path: PathStrHandle, g: TemporalGraph,
                   confirm_overwrite: bool = False) -> None:
    lines = ["TG1 {} {} {}".format(g.n, g.lifetime, int(g.directed))]
    for t, snapshot in enumerate(g.snapshots, start=1):
        lines.extend("{} {} {}".format(t, u, v) for u, v in snapshot)
    _write(file_path, lines, confirm_overwrite, "Temporal graph")


def read_tw1_file(file_path: PathStrHandle) -> TemporalWalk:
    """
    parses a temporal walk in TW1 format
    (header "TW1 <start>", then "<t> <u> <v>" lines in step order)
    """
    lines = read_lines(file_path)
    start, = _header(lines, "TW1", 1)
    steps = []
    for line in lines[1:]:
        t, u, v = _ints(line, 3, "entries (t u v)")
        steps.append(((u, v), t))
    return TemporalWalk(start, steps)


def write_tw1_file(file_path: PathStrHandle, tw: TemporalWalk,
                   confirm_overwrite: bool = False) -> None:
    lines = ["TW1 {}".format(tw.start)]
    lines.extend("{} {} {}".format(t, u, v) for (u, v), t in tw.steps)
    _write(file_path, lines, confirm_overwrite, "Temporal walk")


def read_rt1_file(
        file_path: PathStrHandle) -> typing.Tuple[int, typing.List[Route]]:
    """
    parses transport routes in RT1 format
    (header "RT1 <n> <num-routes>", per route "ROUTE <L>" followed by
    "<offset> <u> <v>" lines with strictly increasing offsets ending at L)
    :return: vertex count, routes
    """
    lines = read_lines(file_path)
    n, num_routes = _header(lines, "RT1", 2)
    blocks: typing.List[typing.Tuple[int, int, typing.List[Line]]] = []
    for number, tokens in lines[1:]:
        if tokens[0] == "ROUTE":
            period, = _ints((number, tokens[1:]), 1, "route period")
            blocks.append((number, period, []))
        elif not blocks:
            raise ParseException(number, "step before the first ROUTE line")
        else:
            blocks[-1][2].append((number, tokens))
    if len(blocks) != num_routes:
        raise ParseException(
            lines[0][0], "header announces {} routes, found {}".format(
                num_routes, len(blocks)))
    routes = []
    for number, period, step_lines in blocks:
        steps = []
        for line in step_lines:
            offset, u, v = _ints(line, 3, "entries (offset u v)")
            _check_vertex(line[0], u, n)
            _check_vertex(line[0], v, n)
            steps.append(((u, v), offset))
        try:
            route = Route(steps)
        except InstanceException as e:
            raise ParseException(number, e.message)
        if route.period != period:
            raise ParseException(
                number, "route period {} differs from its final offset "
                "{}".format(period, route.period))
        routes.append(route)
    return n, routes


def write_rt1_file(file_path: PathStrHandle, n: int,
                   routes: typing.Sequence[Route],
                   confirm_overwrite: bool = False) -> None:
    lines = ["RT1 {} {}".format(n, len(routes))]
    for route in routes:
        lines.append("ROUTE {}".format(route.period))
        lines.extend("{} {} {}".format(o, u, v) for (u, v), o in route.steps)
    _write(file_path, lines, confirm_overwrite, "Routes")


def read_sq1_file(
        file_path: PathStrHandle) -> typing.Tuple[int, SequentialSchedule]:
    """
    parses a sequential schedule in SQ1 format
    (header "SQ1 <n>", then "<v> <u_1> ... <u_k>": the sources of v's
    in-edges in permutation order)
    """
    lines = read_lines(file_path)
    n, = _header(lines, "SQ1", 1)
    perms = {}
    for line in lines[1:]:
        v, *sources = _ints(line)
        _check_vertex(line[0], v, n)
        if v in perms:
            raise ParseException(line[0],
                                 "second schedule for vertex {}".format(v))
        for u in sources:
            _check_vertex(line[0], u, n)
        perms[v] = tuple((u, v) for u in sources)
    return n, SequentialSchedule(perms)


def write_sq1_file(file_path: PathStrHandle, n: int,
                   sched: SequentialSchedule,
                   confirm_overwrite: bool = False) -> None:
    lines = ["SQ1 {}".format(n)]
    for v, perm in sorted(sched.perms.items()):
        lines.append(" ".join(str(x) for x in [v] + [u for u, _ in perm]))
    _write(file_path, lines, confirm_overwrite, "Sequential schedule")


def read_bs1_file(
        file_path: PathStrHandle) -> typing.Tuple[int, BroadcastSchedule]:
    """
    parses a broadcast schedule in BS1 format
    (header "BS1 <n> <T>", then "<t> <v_1> ... <v_k>" once per timestep)
    """
    lines = read_lines(file_path)
    n, lifetime = _header(lines, "BS1", 2)
    active_sets: typing.Dict[int, typing.List[int]] = {}
    for line in lines[1:]:
        t, *active = _ints(line)
        if not 1 <= t <= lifetime:
            raise ParseException(line[0], "timestep {} outside [1, {}]".format(
                t, lifetime))
        if t in active_sets:
            raise ParseException(line[0],
                                 "second activation set for t={}".format(t))
        if not active:
            raise ParseException(line[0],
                                 "empty activation set at t={}".format(t))
        for v in active:
            _check_vertex(line[0], v, n)
        active_sets[t] = active
    missing = [t for t in range(1, lifetime + 1) if t not in active_sets]
    if missing:
        raise ParseException(
            lines[-1][0], "no activation set for t={}".format(missing[0]))
    return n, BroadcastSchedule(active_sets[t]
                                for t in range(1, lifetime + 1))


def write_bs1_file(file_path: PathStrHandle, n: int,
                   schedule: BroadcastSchedule,
                   confirm_overwrite: bool = False) -> None:
    lines = ["BS1 {} {}".format(n, len(schedule))]
    for t, active in enumerate(schedule.active_sets, start=1):
        lines.append(" ".join(str(x) for x in [t] + sorted(active)))
    _write(file_path, lines, confirm_overwrite, "Broadcast schedule")
