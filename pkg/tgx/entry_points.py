"""
entry point of the tgx executable
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import argparse
import json
import logging
import os
import sys
import typing
from importlib import import_module

import argcomplete

from tgx import TgxException

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# argparse attributes holding paths that must exist / be writable
INPUT_PATH_ARGS = ("graph", "walk", "routes", "schedule", "underlying",
                   "config")
OUTPUT_PATH_ARGS = ("out", "save_table", "save_plot", "save_routes",
                    "save_schedule", "logfile")


class UsageException(TgxException):
    pass


class CommandSpec(typing.NamedTuple):
    subcommand: str
    flags: typing.Dict[str, typing.Any]
    input_paths: typing.Dict[str, str]
    output_paths: typing.Dict[str, str]

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'CommandSpec':
        flags = vars(args).copy()
        subcommand = " ".join(
            str(flags[key])
            for key in ("subcommand", "gen_class", "kind", "config_command")
            if flags.get(key))
        input_paths = {
            key: str(flags[key])
            for key in INPUT_PATH_ARGS if flags.get(key)
        }
        output_paths = {
            key: str(flags[key])
            for key in OUTPUT_PATH_ARGS if flags.get(key)
        }
        return cls(subcommand, flags, input_paths, output_paths)

    def validate(self) -> None:
        """
        checks all paths before any work starts
        """
        for key, path in self.input_paths.items():
            if not os.path.isfile(path):
                raise UsageException("{} file {} does not exist".format(
                    key, path))
        for key, path in self.output_paths.items():
            folder = os.path.dirname(os.path.abspath(path))
            if not os.path.isdir(folder):
                raise UsageException(
                    "folder of the {} path {} does not exist".format(
                        key, path))


def merge_config(args: argparse.Namespace) -> argparse.Namespace:
    """
    merge .json config file with the command line args (if --config was defined)
    :param args: parsed argparse NameSpace object
    :return: merged argparse NameSpace object
    """
    if not getattr(args, "config", None):
        return args
    with open(args.config) as config:
        try:
            config_dict = json.loads(config.read())
        except json.JSONDecodeError as e:
            raise UsageException("invalid config file {}: {}".format(
                args.config, e))
    if not isinstance(config_dict, dict):
        raise UsageException("config file {} must hold a JSON object".format(
            args.config))
    merged_config_dict = vars(args).copy()
    merged_config_dict.update(config_dict)

    # Override global settings for this session
    # if the config file contains matching keys.
    from tgx.tools.settings import SETTINGS
    SETTINGS.update_existing_keys(other=config_dict)
    return argparse.Namespace(**merged_config_dict)


def _configure_logging(args: argparse.Namespace) -> None:
    from tgx.tools import log
    log.configure_logging(verbose=getattr(args, "verbose", False),
                          silent=getattr(args, "silent", False),
                          debug=getattr(args, "debug", False),
                          local_logfile=getattr(args, "logfile", None))


def run(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """
    :param argv: command line arguments without the program name
    :return: exit code, 0 on success, 1 on failure, 2 on usage errors
    """
    parser = import_module("tgx.main_tgx_parser").parser()
    argcomplete.autocomplete(parser)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    from tgx.tools.file_interface import FileInterfaceException
    try:
        spec = CommandSpec.from_args(args)
        # logfile folder must exist before logging opens it
        if "logfile" in spec.output_paths:
            spec.validate()
        _configure_logging(args)
        spec.validate()
        args = merge_config(args)
        logger.debug("Running tgx %s", spec.subcommand)
        main_module = import_module("tgx.main_tgx")
        return main_module.run(args)
    except KeyboardInterrupt:
        return EXIT_FAILURE
    except (UsageException, FileInterfaceException) as e:
        logger.error(e.message)
        return EXIT_USAGE
    except TgxException as e:
        logger.error(e.message)
        return EXIT_FAILURE
    except Exception:
        logger.exception("Unhandled error in tgx")
        from tgx.tools import settings
        err_msg = "tgx crashed"
        if settings.SETTINGS.global_logfile_enabled:
            err_msg += f" - see {settings.GLOBAL_LOGFILE_PATH}"
        else:
            err_msg += " - no logfile written (disabled)"
        logger.error(err_msg)
        return EXIT_FAILURE


def main() -> None:
    sys.exit(run())
