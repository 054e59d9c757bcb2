# -*- coding: UTF8 -*-
"""
conversion of frequency tables, reports and timings to pandas dataframes
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import logging
import typing

import pandas as pd

from tgx.core.analysis import FrequencyTable
from tgx.core.result import Result
from tgx.tools import user
from tgx.tools._typing import PathStr
from tgx.tools.settings import SETTINGS

logger = logging.getLogger(__name__)


def frequency_table_to_df(ft: FrequencyTable) -> pd.DataFrame:
    edges = list(ft.per_edge)
    data: typing.Dict[str, typing.List[int]] = {
        "u": [u for u, _ in edges],
        "v": [v for _, v in edges],
        "frequency": [ft.per_edge[e] for e in edges]
    }
    if ft.per_edge_regularity is not None:
        data["regularity"] = [ft.per_edge_regularity[e] for e in edges]
    return pd.DataFrame(data=data)


def result_to_df(result_obj: Result,
                 label: typing.Optional[str] = None) -> pd.DataFrame:
    if not isinstance(result_obj, Result):
        raise TypeError("result.Result required")
    if not result_obj.info:
        raise ValueError("cannot create a dataframe from an empty result")
    label = label or result_obj.title or "unnamed_result"
    return pd.DataFrame({label: pd.Series(result_obj.info)})


def timings_to_df(
        timings: typing.Sequence[typing.Mapping[str, float]]) -> pd.DataFrame:
    """
    one row per benchmark run, indexed by vertex count
    """
    df = pd.DataFrame.from_records(timings)
    if "n" in df:
        df = df.set_index("n")
    return df


def save_df_as_table(df: pd.DataFrame, path: PathStr,
                     format_str: typing.Optional[str] = None,
                     confirm_overwrite: bool = False) -> None:
    if confirm_overwrite and not user.check_and_confirm_overwrite(path):
        return
    if format_str is None:
        format_str = SETTINGS.table_export_format
    if format_str == "excel":
        # requires openpyxl to be installed
        with pd.ExcelWriter(path) as writer:
            df.to_excel(writer)
    else:
        getattr(df, "to_" + format_str)(path)
    logger.debug("%s table saved to: %s", format_str, path)
