# -*- coding: UTF8 -*-
"""
container class for line-oriented reports
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import json
import logging
import typing

import numpy as np

from tgx import TgxException

logger = logging.getLogger(__name__)

Scalar = typing.Union[int, float, str, bool, None]


class ResultException(TgxException):
    pass


class Result(object):
    """
    Ordered key: value report plus optional raw arrays (not serialized).
    """
    def __init__(self, title: str = ""):
        self.title = title
        self.info: typing.Dict[str, Scalar] = {}
        self.np_arrays: typing.Dict[str, np.ndarray] = {}

    def __str__(self) -> str:
        return self.pretty_str()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Result):
            return False
        if self.info != other.info or self.title != other.title:
            return False
        if self.np_arrays.keys() != other.np_arrays.keys():
            return False
        return all(
            np.array_equal(self.np_arrays[k], other.np_arrays[k])
            for k in self.np_arrays)

    def __ne__(self, other: object) -> bool:
        return not self == other

    def __getitem__(self, key: str) -> Scalar:
        if key not in self.info:
            raise ResultException("no entry {} in result".format(key))
        return self.info[key]

    def pretty_str(self, title: bool = False) -> str:
        lines = []
        if title and self.title:
            lines.append(self.title)
        lines.extend("{}: {}".format(key, value)
                     for key, value in self.info.items())
        return "\n".join(lines)

    def add_info(self, info_dict: typing.Mapping[str, Scalar]) -> None:
        self.info.update(info_dict)

    def add_np_array(self, name: str, array: np.ndarray) -> None:
        self.np_arrays[name] = array

    def to_dict(self) -> typing.Dict[str, Scalar]:
        return dict(self.info)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())
