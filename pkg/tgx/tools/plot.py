# -*- coding: UTF8 -*-
"""
activation raster plots of temporal graphs with scheduled walks on top
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import collections
import logging
import os
import typing

import matplotlib as mpl
import matplotlib.pyplot as plt
import numpy as np
from matplotlib.axes import Axes
from matplotlib.figure import Figure

from tgx import TgxException
from tgx.core.temporal_graph import TemporalGraph
from tgx.core.walk import TemporalWalk
from tgx.tools import user
from tgx.tools._typing import PathStr
from tgx.tools.settings import SETTINGS, SettingsContainer

logger = logging.getLogger(__name__)


def apply_settings(settings: SettingsContainer = SETTINGS) -> None:
    mpl.use(settings.plot_backend)
    mpl.rcParams.update({
        "figure.constrained_layout.use": True,
        "savefig.bbox": "tight",
    })


apply_settings(SETTINGS)


class PlotException(TgxException):
    pass


class PlotCollection:
    def __init__(self, title: str = ""):
        self.title = " ".join(title.splitlines())
        self.figures: typing.Dict[str, Figure] = collections.OrderedDict()

    def __str__(self) -> str:
        return self.title + " (" + str(len(self.figures)) + " figure(s))"

    def add_figure(self, name: str, fig: Figure) -> None:
        self.figures[name] = fig

    def show(self) -> None:
        if self.figures:
            plt.show()

    def close(self) -> None:
        for fig in self.figures.values():
            plt.close(fig)

    def export(self, file_path: PathStr,
               confirm_overwrite: bool = True) -> None:
        base, ext = os.path.splitext(str(file_path))
        for name, fig in self.figures.items():
            dest = file_path if len(self.figures) == 1 else (base + '_' +
                                                             name + ext)
            if confirm_overwrite and not user.check_and_confirm_overwrite(
                    dest):
                return
            fig.savefig(dest)
            logger.info("Plot saved to %s", dest)


def activation_matrix(g: TemporalGraph) -> np.ndarray:
    """
    :return: |E| x T bool matrix, rows in the order of g.edges
    """
    if not g.edges:
        return np.zeros((0, g.lifetime), dtype=bool)
    return np.vstack([g.activation(e) for e in g.edges])


def activation_raster(ax: Axes, g: TemporalGraph,
                      walk: typing.Optional[TemporalWalk] = None,
                      cmap: typing.Optional[str] = None,
                      walk_color: typing.Optional[str] = None) -> None:
    """
    Draws one row per underlying edge and one column per timestep,
    optionally marking the (edge, timestep) steps of a temporal walk.
    """
    if not g.edges:
        raise PlotException("nothing to plot, the graph has no edges")
    cmap = cmap or SETTINGS.plot_activation_cmap
    walk_color = walk_color or SETTINGS.plot_walk_color
    ax.imshow(activation_matrix(g), aspect="auto", interpolation="nearest",
              cmap=cmap, extent=(0.5, g.lifetime + 0.5, len(g.edges) - 0.5,
                                 -0.5))
    ax.set_yticks(np.arange(len(g.edges)))
    ax.set_yticklabels(["({}, {})".format(u, v) for u, v in g.edges])
    ax.set_xlabel("timestep")
    ax.set_ylabel("edge")
    if walk is None or not len(walk):
        return
    rows = {e: i for i, e in enumerate(g.edges)}
    ts = walk.timesteps
    ys = [rows[g.canonical(e)] for e in walk.edges]
    ax.plot(ts, ys, color=walk_color, marker="o", linestyle="-",
            label="walk from {}".format(walk.start))
    ax.legend()


def activation_figure(g: TemporalGraph,
                      walk: typing.Optional[TemporalWalk] = None,
                      title: str = "") -> Figure:
    fig = plt.figure(figsize=tuple(SETTINGS.plot_figsize))
    ax = fig.add_subplot(111)
    activation_raster(ax, g, walk)
    if title:
        ax.set_title(title)
    return fig
