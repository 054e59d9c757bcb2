"""
'tgx config': inspect and edit the package settings
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import argparse
import json
import logging
import os
import typing

from colorama import Style
from pygments import formatters, highlight, lexers

from tgx import TgxException
from tgx.tools import settings, user
from tgx.tools._typing import PathStr
from tgx.tools.settings_template import DEFAULT_SETTINGS_DICT_DOC

logger = logging.getLogger(__name__)

SEP = "-" * 80


class ConfigError(TgxException):
    pass


def log_info_dict_json(
    data: dict, colored: bool = True,
    parameter_subset: typing.Optional[typing.Sequence[str]] = None
) -> None:
    if parameter_subset:
        data = {
            key: value
            for key, value in data.items() if key in parameter_subset
        }
    data_str = json.dumps(data, indent=4, sort_keys=True)
    if colored and os.name != "nt":
        data_str = highlight(
            data_str, lexers.JsonLexer(),
            formatters.Terminal256Formatter(
                style=settings.SETTINGS.pygments_style))
    logger.info(data_str)


def show(
    config_path: PathStr, colored: bool = True,
    parameter_subset: typing.Optional[typing.Sequence[str]] = None
) -> None:
    with open(config_path) as config_file:
        log_info_dict_json(json.load(config_file), colored, parameter_subset)


def parse_value(token: str) -> typing.Any:
    for cast in (int, float):
        try:
            return cast(token)
        except ValueError:
            pass
    return token


def finalize_values(config: dict, key: str,
                    values: typing.List[typing.Any]) -> typing.Any:
    """
    Turns parsed values into the final value for the config at the given key,
    based on the previous type of that parameter.
    """
    if isinstance(config[key], bool):
        if not values:
            return not config[key]
        value = str(values[-1]).lower()
        if value not in ("true", "false"):
            raise ConfigError("{} expects true or false, got {}".format(
                key, values[-1]))
        return value == "true"
    if not values:
        raise ConfigError("no value given for {}".format(key))
    if isinstance(config[key], list):
        return values
    if isinstance(config[key], int) and not isinstance(values[0], int):
        raise ConfigError("{} expects an integer, got {}".format(
            key, values[0]))
    return values[0]


def set_config(config_path: PathStr, arg_list: typing.Sequence[str]) -> None:
    """
    'key value(s) key value(s) ...', boolean keys without value are toggled
    """
    with open(config_path) as config_file:
        config = json.load(config_file)
    if arg_list and arg_list[0] not in config:
        raise ConfigError("unknown parameter: {}".format(arg_list[0]))
    key: typing.Optional[str] = None
    values: typing.List[typing.Any] = []
    tokens: typing.List[typing.Optional[str]] = list(arg_list)
    for arg in tokens + [None]:
        if arg is None or arg in config:
            if key is not None:
                config[key] = finalize_values(config, key, values)
            key, values = arg, []
        else:
            values.append(parse_value(arg))
    settings.write_to_json_file(config_path, config)


def run(args: argparse.Namespace) -> int:
    config = settings.DEFAULT_PATH
    colored = not args.no_color
    if args.config_command == "show":
        style = Style.BRIGHT if colored else Style.NORMAL
        logger.info("\n".join(
            f"{style}{parameter}{Style.RESET_ALL}:\n{value_and_doc[1]}\n"
            for parameter, value_and_doc in sorted(
                DEFAULT_SETTINGS_DICT_DOC.items())
            if not args.params or parameter in args.params))
        logger.info("{0}\n{1}\n{0}".format(SEP, config))
        show(config, colored=colored, parameter_subset=args.params)
        return 0

    if not os.access(config, os.W_OK):
        raise ConfigError("no permission to modify {}".format(config))
    if args.config_command == "set":
        if not args.params:
            raise ConfigError("no configuration parameters given")
        set_config(config, args.params)
    elif args.params:
        settings.reset(config, parameter_subset=args.params)
    elif args.y or user.confirm(
            "Reset all package settings to the default settings? (y/n)"):
        settings.reset(config)
    else:
        return 0
    logger.info("{0}\nPackage settings:\n{0}".format(SEP))
    show(config, colored=colored)
    return 0
