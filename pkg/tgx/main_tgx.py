"""
main executable of tgx: frequency analysis, exploration, oracle,
generators, validators and benchmarks
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import argparse
import itertools
import logging
import os
import sys
import time
import typing

from tgx.core.analysis import RegularityMode, frequency_table
from tgx.core.instance_classes import (BroadcastPolicy, gen_broadcast,
                                       gen_broadcast_from_schedule,
                                       gen_random_frequent, gen_random_routes,
                                       gen_sequential, gen_star_lower_bound,
                                       gen_transport, random_connected_graph,
                                       random_sequential_schedule)
from tgx.core.oracle import exists_exploration_within, fastest_exploration
from tgx.core.planner import (broadcast_bound, explore, sequential_bound,
                              transport_bound)
from tgx.core.result import Result
from tgx.core.static_graph import StaticGraph, diameter
from tgx.core.temporal_graph import TemporalGraph, underlying_graph
from tgx.core.validation import (ValidationReport, validate_always_connected,
                                 validate_broadcast, validate_exploration,
                                 validate_sequential, validate_temporal_walk,
                                 validate_transport)
from tgx.entry_points import UsageException
from tgx.tools import file_interface
from tgx.tools.settings import SETTINGS

logger = logging.getLogger(__name__)

SEP = "-" * 80


def resolve_seed(seed: typing.Optional[int]) -> int:
    """
    --seed, else $TGX_SEED, else 0
    """
    if seed is not None:
        return seed
    env_seed = os.environ.get("TGX_SEED")
    if not env_seed:
        return 0
    try:
        return int(env_seed)
    except ValueError:
        raise UsageException(
            "TGX_SEED must be an integer, got '{}'".format(env_seed))


def _save_graph(args: argparse.Namespace, g: TemporalGraph) -> None:
    if args.out:
        file_interface.write_tg1_file(args.out, g,
                                      confirm_overwrite=not args.no_warnings)
    else:
        file_interface.write_tg1_file(sys.stdout, g)


def _log_report(args: argparse.Namespace, report: Result) -> None:
    if getattr(args, "json", False):
        print(report.to_json())
    else:
        logger.info(report.pretty_str())


def _symmetric_directed(sg: StaticGraph) -> StaticGraph:
    if sg.directed:
        return sg
    edges = [e for e in sg.edges if e[0] != e[1]]
    return StaticGraph(sg.n, edges + [(v, u) for u, v in edges],
                       directed=True)


def _underlying(args: argparse.Namespace, seed: int) -> StaticGraph:
    if args.underlying:
        sg = underlying_graph(file_interface.read_tg1_file(args.underlying))
    elif args.complete:
        sg = StaticGraph(args.n, itertools.combinations(range(args.n), 2))
    else:
        sg = random_connected_graph(
            args.n, args.density, seed=seed,
            max_attempts=SETTINGS.random_graph_max_attempts)
    return _symmetric_directed(sg)


def freq(args: argparse.Namespace) -> int:
    g = file_interface.read_tg1_file(args.graph)
    mode = RegularityMode(args.mode or SETTINGS.regularity_mode)
    ft = frequency_table(g, with_regularity=args.regularity, mode=mode)
    for line in ft.lines():
        print(line)
    summary = Result("frequency table")
    summary.add_info({
        "edges": len(ft),
        "T": g.lifetime,
        "F_max": ft.max_frequency
    })
    if ft.max_regularity is not None:
        summary.add_info({
            "regularity_mode": mode.value,
            "R_max": ft.max_regularity
        })
    _log_report(args, summary)
    if args.save_table:
        from tgx.tools import pandas_bridge
        pandas_bridge.save_df_as_table(
            pandas_bridge.frequency_table_to_df(ft), args.save_table,
            confirm_overwrite=not args.no_warnings)
    return 0


def explore_cmd(args: argparse.Namespace) -> int:
    g = file_interface.read_tg1_file(args.graph)
    result = explore(g, args.start)
    _log_report(args, result.report)
    if args.out:
        file_interface.write_tw1_file(args.out, result.walk,
                                      confirm_overwrite=not args.no_warnings)
    if args.plot or args.save_plot:
        from tgx.tools import plot
        collection = plot.PlotCollection("tgx explore")
        collection.add_figure(
            "activation",
            plot.activation_figure(
                g, result.walk,
                title="exploration from {}, length {}".format(
                    args.start, result.walk.length)))
        if args.save_plot:
            collection.export(args.save_plot,
                              confirm_overwrite=not args.no_warnings)
        if args.plot:
            collection.show()
        collection.close()
    return 0


def oracle(args: argparse.Namespace) -> int:
    g = file_interface.read_tg1_file(args.graph)
    n_limit = args.limit if args.limit is not None else \
        SETTINGS.oracle_n_limit
    if args.within is not None:
        exists = exists_exploration_within(g, args.start, args.within,
                                           strict=not args.non_strict,
                                           n_limit=n_limit)
        print("exists: {}".format(str(exists).lower()))
        return 0
    result = fastest_exploration(g, args.start, n_limit=n_limit)
    if args.json:
        report = Result("oracle")
        report.add_info({
            "feasible": result.feasible,
            "optimum": result.optimum
        })
        print(report.to_json())
    else:
        print(result.pretty_str())
    if args.out and result.walk is not None:
        file_interface.write_tw1_file(args.out, result.walk,
                                      confirm_overwrite=not args.no_warnings)
    elif args.out:
        logger.warning("No exploration exists, %s not written.", args.out)
    return 0


def gen_star(args: argparse.Namespace) -> int:
    g, start = gen_star_lower_bound(args.n, args.r)
    if args.lifetime is not None and args.lifetime != g.lifetime:
        logger.warning("--lifetime ignored, the star instance uses T=%d.",
                       g.lifetime)
    _save_graph(args, g)
    logger.info("start: %d", start)
    return 0


def gen_transport_cmd(args: argparse.Namespace) -> int:
    if args.routes:
        n, routes = file_interface.read_rt1_file(args.routes)
    else:
        n = args.n
        routes = gen_random_routes(n, args.num_routes, args.max_period,
                                   seed=resolve_seed(args.seed))
    max_period = max(route.period for route in routes)
    lifetime = args.lifetime or max(transport_bound(n, max_period),
                                    max_period)
    g = gen_transport(routes, n, lifetime)
    if args.save_routes:
        file_interface.write_rt1_file(args.save_routes, n, routes,
                                      confirm_overwrite=not args.no_warnings)
    _save_graph(args, g)
    return 0


def gen_seq(args: argparse.Namespace) -> int:
    seed = resolve_seed(args.seed)
    if args.schedule:
        n, sched = file_interface.read_sq1_file(args.schedule)
        sg = StaticGraph(n, [e for perm in sched.perms.values() for e in perm],
                         directed=True)
    else:
        sg = _underlying(args, seed)
        sched = random_sequential_schedule(sg, seed=seed)
    lifetime = args.lifetime or max(sequential_bound(sg), 1)
    g = gen_sequential(sg, sched, lifetime)
    if args.save_schedule:
        file_interface.write_sq1_file(args.save_schedule, sg.n, sched,
                                      confirm_overwrite=not args.no_warnings)
    _save_graph(args, g)
    return 0


def gen_broadcast_cmd(args: argparse.Namespace) -> int:
    seed = resolve_seed(args.seed)
    sg = _underlying(args, seed)
    lifetime = args.lifetime or max(broadcast_bound(sg.n, diameter(sg)), sg.n)
    if args.schedule:
        n, schedule = file_interface.read_bs1_file(args.schedule)
        if n != sg.n:
            raise UsageException(
                "schedule has {} vertices, the underlying graph {}".format(
                    n, sg.n))
        g = gen_broadcast_from_schedule(sg, schedule, lifetime)
    else:
        g, schedule = gen_broadcast(
            sg, BroadcastPolicy(args.policy), lifetime, seed=seed,
            max_retries=SETTINGS.broadcast_max_retries)
    if args.save_schedule:
        file_interface.write_bs1_file(args.save_schedule, sg.n, schedule,
                                      confirm_overwrite=not args.no_warnings)
    _save_graph(args, g)
    return 0


def gen_random_frequent_cmd(args: argparse.Namespace) -> int:
    g = gen_random_frequent(args.n, args.f, args.density,
                            seed=resolve_seed(args.seed),
                            lifetime=args.lifetime,
                            max_attempts=SETTINGS.random_graph_max_attempts)
    _save_graph(args, g)
    return 0


def validate(args: argparse.Namespace) -> int:
    g = file_interface.read_tg1_file(args.graph)
    report: ValidationReport
    if args.kind == "walk":
        report = validate_temporal_walk(
            g, file_interface.read_tw1_file(args.walk))
    elif args.kind == "exploration":
        report = validate_exploration(
            g, file_interface.read_tw1_file(args.walk), args.start)
    elif args.kind == "sequential":
        _, sched = file_interface.read_sq1_file(args.schedule)
        report = validate_sequential(g, sched)
    elif args.kind == "broadcast":
        report, _ = validate_broadcast(g)
    elif args.kind == "always-connected":
        report = validate_always_connected(g)
    else:
        _, routes = file_interface.read_rt1_file(args.routes)
        report = validate_transport(g, routes)
    if not report.ok:
        print(report.pretty_str())
    logger.info(str(report))
    return 0 if report.ok else 1


def bench(args: argparse.Namespace) -> int:
    from tgx.tools import pandas_bridge
    seed = resolve_seed(args.seed)
    sizes = args.sizes or SETTINGS.bench_sizes
    timings = []
    for n in sizes:
        g = gen_random_frequent(n, args.f, seed=seed)
        t_0 = time.perf_counter()
        ft = frequency_table(g)
        t_1 = time.perf_counter()
        result = explore(g, 0, ft)
        t_2 = time.perf_counter()
        timings.append({
            "n": n,
            "T": g.lifetime,
            "edges": len(g.edges),
            "frequency_table_s": t_1 - t_0,
            "explore_s": t_2 - t_1,
            "achieved_length": result.walk.length
        })
        logger.debug("Benchmarked n=%d.", n)
    df = pandas_bridge.timings_to_df(timings)
    logger.info("%s\n%s\n%s", SEP, df.to_string(), SEP)
    if args.save_table:
        pandas_bridge.save_df_as_table(df, args.save_table,
                                       confirm_overwrite=not args.no_warnings)
    return 0


GENERATORS: typing.Dict[str, typing.Callable[[argparse.Namespace], int]] = {
    "star": gen_star,
    "transport": gen_transport_cmd,
    "seq": gen_seq,
    "broadcast": gen_broadcast_cmd,
    "random-frequent": gen_random_frequent_cmd,
}

COMMANDS: typing.Dict[str, typing.Callable[[argparse.Namespace], int]] = {
    "freq": freq,
    "explore": explore_cmd,
    "oracle": oracle,
    "gen": lambda args: GENERATORS[args.gen_class](args),
    "validate": validate,
    "bench": bench,
}


def run(args: argparse.Namespace) -> int:
    if args.subcommand == "config":
        from tgx import main_config
        return main_config.run(args)
    return COMMANDS[args.subcommand](args)
