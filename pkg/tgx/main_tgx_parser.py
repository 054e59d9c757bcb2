"""
argument parser of the tgx executable
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import argparse


def _shared_parser() -> argparse.ArgumentParser:
    shared_parser = argparse.ArgumentParser(add_help=False)
    usability_opts = shared_parser.add_argument_group("usability options")
    usability_opts.add_argument("-v", "--verbose", help="verbose output",
                                action="store_true")
    usability_opts.add_argument(
        "-q", "--quiet", "--silent", dest="silent", action="store_true",
        help="don't print reports, only data and warnings")
    usability_opts.add_argument(
        "--debug", help="verbose output with additional debug info",
        action="store_true")
    usability_opts.add_argument("--logfile", help="local logfile path")
    usability_opts.add_argument(
        "--no_warnings", action="store_true",
        help="no warnings requiring user confirmation")
    usability_opts.add_argument(
        "-c", "--config",
        help=".json file with parameters (priority over command line, "
        "matching keys also override the package settings)")
    return shared_parser


def _seed_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--seed", type=int, default=None,
        help="random seed (default: $TGX_SEED, else 0)")


def _underlying_options(parser: argparse.ArgumentParser) -> None:
    source = parser.add_argument_group("underlying graph")
    source.add_argument(
        "--underlying",
        help="TG1 file whose underlying graph is used (default: random)")
    source.add_argument("--complete", action="store_true",
                        help="use the complete graph on --n vertices")
    source.add_argument("--n", type=int, default=6,
                        help="vertex count of a generated graph")
    source.add_argument("--density", type=float, default=0.5,
                        help="edge probability of a random G(n, p) graph")


def parser() -> argparse.ArgumentParser:
    basic_desc = "temporal graph frequency analysis and exploration planner"
    lic = "(c) tgx authors"
    shared_parser = _shared_parser()

    main_parser = argparse.ArgumentParser(
        prog="tgx", description="{} {}".format(basic_desc, lic))
    sub_parsers = main_parser.add_subparsers(dest="subcommand")
    sub_parsers.required = True

    freq_parser = sub_parsers.add_parser(
        "freq", parents=[shared_parser],
        description="per-edge frequency (and regularity) table - {}".format(
            lic))
    freq_parser.add_argument("graph", help="temporal graph (TG1)")
    freq_parser.add_argument("-r", "--regularity", action="store_true",
                             help="also compute the per-edge regularity")
    freq_parser.add_argument(
        "--mode", choices=["three-point", "two-point"], default=None,
        help="regularity condition (default: settings.regularity_mode)")
    freq_parser.add_argument("--save_table",
                             help="export the table via pandas")
    freq_parser.add_argument("--json", action="store_true",
                             help="print the summary as a JSON object")

    explore_parser = sub_parsers.add_parser(
        "explore", parents=[shared_parser],
        description="frequency-weighted MST exploration - {}".format(lic))
    explore_parser.add_argument("graph", help="temporal graph (TG1)")
    explore_parser.add_argument("--start", type=int, required=True,
                                help="start vertex")
    explore_parser.add_argument("-o", "--out",
                                help="save the walk to this TW1 file")
    explore_parser.add_argument("--json", action="store_true",
                                help="print the report as a JSON object")
    explore_parser.add_argument("-p", "--plot", action="store_true",
                                help="show the activation raster with the "
                                "scheduled walk")
    explore_parser.add_argument("--save_plot",
                                help="save the activation raster plot")

    oracle_parser = sub_parsers.add_parser(
        "oracle", parents=[shared_parser],
        description="exact fastest exploration (small graphs) - {}".format(
            lic))
    oracle_parser.add_argument("graph", help="temporal graph (TG1)")
    oracle_parser.add_argument("--start", type=int, required=True,
                               help="start vertex")
    oracle_parser.add_argument(
        "--limit", type=int, default=None,
        help="largest accepted vertex count (default: settings.oracle_n_limit)")
    oracle_parser.add_argument("-o", "--out",
                               help="save the optimal walk to this TW1 file")
    oracle_parser.add_argument(
        "--within", type=int, metavar="ELL", default=None,
        help="decide whether an exploration of length < ELL exists")
    oracle_parser.add_argument("--non_strict", action="store_true",
                               help="with --within: length <= ELL")
    oracle_parser.add_argument("--json", action="store_true",
                               help="print the result as a JSON object")

    gen_parser = sub_parsers.add_parser(
        "gen", description="generate graph class instances - {}".format(lic))
    gen_sub = gen_parser.add_subparsers(dest="gen_class")
    gen_sub.required = True
    gen_shared = argparse.ArgumentParser(add_help=False)
    gen_shared.add_argument("-o", "--out",
                            help="TG1 output file (default: stdout)")
    gen_shared.add_argument("--lifetime", "-T", type=int, default=None,
                            help="lifetime T (default depends on the class)")

    star_parser = gen_sub.add_parser(
        "star", parents=[shared_parser, gen_shared],
        description="star lower-bound instance: center 0, the full star is "
        "active every r-th timestep and edge (0, 1) always. Start at vertex "
        "1 (v2 in 1-indexed notation). T = r(2n - 1).")
    star_parser.add_argument("--n", type=int, required=True,
                             help="vertex count (>= 3)")
    star_parser.add_argument("--r", type=int, required=True,
                             help="regularity (>= 1)")

    transport_parser = gen_sub.add_parser(
        "transport", parents=[shared_parser, gen_shared],
        description="public transport graph from periodic routes")
    transport_parser.add_argument(
        "--routes", help="RT1 routes file (default: random routes)")
    transport_parser.add_argument("--n", type=int, default=8,
                                  help="vertex count of random routes")
    transport_parser.add_argument("--num_routes", type=int, default=3,
                                  help="number of random routes")
    transport_parser.add_argument("--max_period", type=int, default=6,
                                  help="longest period of random routes")
    transport_parser.add_argument("--save_routes",
                                  help="save the routes to this RT1 file")
    _seed_option(transport_parser)

    seq_parser = gen_sub.add_parser(
        "seq", parents=[shared_parser, gen_shared],
        description="sequential connection graph")
    seq_parser.add_argument(
        "--schedule",
        help="SQ1 schedule, defines the graph (default: random schedule)")
    _underlying_options(seq_parser)
    seq_parser.add_argument("--save_schedule",
                            help="save the schedule to this SQ1 file")
    _seed_option(seq_parser)

    broadcast_parser = gen_sub.add_parser(
        "broadcast", parents=[shared_parser, gen_shared],
        description="broadcast network")
    broadcast_parser.add_argument(
        "--policy", choices=["round-robin", "greedy-random"],
        default="round-robin", help="activation policy")
    broadcast_parser.add_argument(
        "--schedule", help="BS1 schedule, repeated periodically")
    _underlying_options(broadcast_parser)
    broadcast_parser.add_argument("--save_schedule",
                                  help="save the schedule to this BS1 file")
    _seed_option(broadcast_parser)

    frequent_parser = gen_sub.add_parser(
        "random-frequent", parents=[shared_parser, gen_shared],
        description="random connected graph with every edge f-frequent")
    frequent_parser.add_argument("--n", type=int, required=True,
                                 help="vertex count (>= 2)")
    frequent_parser.add_argument("--f", type=int, required=True,
                                 help="frequency bound (>= 1)")
    frequent_parser.add_argument("--density", type=float, default=0.5,
                                 help="edge probability of G(n, p)")
    _seed_option(frequent_parser)

    validate_parser = sub_parsers.add_parser(
        "validate", description="validators - {}".format(lic))
    validate_sub = validate_parser.add_subparsers(dest="kind")
    validate_sub.required = True
    walk_parser = validate_sub.add_parser(
        "walk", parents=[shared_parser], description="temporal walk")
    walk_parser.add_argument("graph", help="temporal graph (TG1)")
    walk_parser.add_argument("walk", help="temporal walk (TW1)")
    exploration_parser = validate_sub.add_parser(
        "exploration", parents=[shared_parser],
        description="exploring temporal walk")
    exploration_parser.add_argument("graph", help="temporal graph (TG1)")
    exploration_parser.add_argument("walk", help="temporal walk (TW1)")
    exploration_parser.add_argument("--start", type=int, required=True,
                                    help="expected start vertex")
    sequential_parser = validate_sub.add_parser(
        "sequential", parents=[shared_parser],
        description="sequential connection graph")
    sequential_parser.add_argument("graph", help="temporal graph (TG1)")
    sequential_parser.add_argument("schedule", help="schedule (SQ1)")
    vbroadcast_parser = validate_sub.add_parser(
        "broadcast", parents=[shared_parser], description="broadcast network")
    vbroadcast_parser.add_argument("graph", help="temporal graph (TG1)")
    connected_parser = validate_sub.add_parser(
        "always-connected", parents=[shared_parser],
        description="every snapshot connected")
    connected_parser.add_argument("graph", help="temporal graph (TG1)")
    vtransport_parser = validate_sub.add_parser(
        "transport", parents=[shared_parser],
        description="public transport graph")
    vtransport_parser.add_argument("graph", help="temporal graph (TG1)")
    vtransport_parser.add_argument("routes", help="routes (RT1)")

    bench_parser = sub_parsers.add_parser(
        "bench", parents=[shared_parser],
        description="timing of frequency_table and explore - {}".format(lic))
    bench_parser.add_argument(
        "--sizes", type=int, nargs="+", default=None,
        help="vertex counts (default: settings.bench_sizes)")
    bench_parser.add_argument("--f", type=int, default=3,
                              help="frequency bound of the instances")
    bench_parser.add_argument("--save_table",
                              help="export the timings via pandas")
    _seed_option(bench_parser)

    config_parser = sub_parsers.add_parser(
        "config", description="package settings - {}".format(lic))
    config_sub = config_parser.add_subparsers(dest="config_command")
    config_sub.required = True
    config_shared = argparse.ArgumentParser(add_help=False)
    config_shared.add_argument("--no_color", help="don't color output",
                               action="store_true")
    config_shared.add_argument("params", nargs=argparse.REMAINDER,
                               help="parameter names (and values for set)")
    config_sub.add_parser("show", parents=[config_shared],
                          description="show the package settings")
    config_sub.add_parser(
        "set", parents=[config_shared],
        description="set parameters, e.g. 'tgx config set oracle_n_limit 12'"
        " - boolean parameters without a value are toggled")
    reset_parser = config_sub.add_parser(
        "reset", parents=[config_shared],
        description="reset the package settings (or the given parameters)")
    reset_parser.add_argument("-y", help="acknowledge automatically",
                              action="store_true")

    return main_parser
