# -*- coding: UTF8 -*-
"""
configuration of the package's loggers
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import getpass
import logging
import platform
import sys
import typing

import colorama
from colorama import Fore

from tgx.tools._typing import PathStr
from tgx.tools.settings import GLOBAL_LOGFILE_PATH, SETTINGS

colorama.init()

CONSOLE_ERROR_FMT = "{}[%(levelname)s]{} %(message)s".format(
    Fore.LIGHTRED_EX, Fore.RESET)
CONSOLE_WARN_FMT = "{}[%(levelname)s]{} %(message)s".format(
    Fore.LIGHTYELLOW_EX, Fore.RESET)
DEFAULT_LONG_FMT = ("[%(levelname)s][%(asctime)s]"
                    "[%(module)s.%(funcName)s():%(lineno)s]\n%(message)s")


class ConsoleFormatter(logging.Formatter):
    """
    Colours warnings and errors, keeps info and debug records plain.
    """
    def __init__(self, fmt: str = "%(message)s"):
        super(ConsoleFormatter, self).__init__(fmt)
        self.plain_fmt = fmt

    def format(self, record: logging.LogRecord) -> str:
        if record.levelno >= logging.ERROR:
            self._style._fmt = CONSOLE_ERROR_FMT
        elif record.levelno == logging.WARNING:
            self._style._fmt = CONSOLE_WARN_FMT
        else:
            self._style._fmt = self.plain_fmt
        return logging.Formatter.format(self, record)


# configures the package's root logger (see __init__.py)
def configure_logging(verbose: bool = False, silent: bool = False,
                      debug: bool = False,
                      console_fmt: typing.Optional[str] = None,
                      file_fmt: str = DEFAULT_LONG_FMT,
                      local_logfile: typing.Optional[PathStr] = None) -> None:
    logger = logging.getLogger("tgx")
    logger.setLevel(logging.DEBUG)
    logger.propagate = False

    # repeated runs in one process (tests) must not stack handlers
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        if isinstance(handler, logging.FileHandler):
            handler.close()

    logfiles: typing.List[PathStr] = []
    if SETTINGS.global_logfile_enabled:
        logfiles.append(GLOBAL_LOGFILE_PATH)
    if local_logfile is not None:
        logfiles.append(local_logfile)

    for logfile in logfiles:
        file_handler = logging.FileHandler(logfile)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(file_fmt))
        logger.addHandler(file_handler)

    if debug or verbose:
        console_level = logging.DEBUG
    elif silent:
        console_level = logging.WARNING
    else:
        console_level = logging.INFO

    if debug:
        console_fmt = DEFAULT_LONG_FMT
    elif console_fmt is None:
        console_fmt = SETTINGS.console_logging_format

    console_handler = logging.StreamHandler(stream=sys.stderr)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(ConsoleFormatter(console_fmt))
    logger.addHandler(console_handler)

    if debug:
        logger.debug(
            "System info:\nPython {pyversion}\n{platform}\n{user}\n".format(
                pyversion=platform.python_version(),
                platform=platform.platform(),
                user=getpass.getuser() + "@" + platform.node()))
