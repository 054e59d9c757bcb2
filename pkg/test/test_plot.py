#!/usr/bin/env python
"""
Unit test for plot module
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import unittest

import numpy as np
from matplotlib.figure import Figure

import helpers
from tgx.core.planner import explore
from tgx.core.temporal_graph import TemporalGraph
from tgx.tools import plot


class TestActivationRaster(unittest.TestCase):
    def setUp(self) -> None:
        self.g = helpers.graph_from_activations(3, 4, {
            (0, 1): [1, 3],
            (1, 2): [2, 4]
        })

    def test_activation_matrix(self):
        np.testing.assert_array_equal(
            plot.activation_matrix(self.g),
            np.array([[True, False, True, False], [False, True, False,
                                                   True]]))

    def test_raster_with_walk(self):
        ax = Figure().add_subplot(111)
        plot.activation_raster(ax, self.g, explore(self.g, 0).walk)
        self.assertEqual(len(ax.get_yticks()), 2)
        self.assertEqual(len(ax.lines), 1)

    def test_nothing_to_plot(self):
        ax = Figure().add_subplot(111)
        with self.assertRaises(plot.PlotException):
            plot.activation_raster(ax, TemporalGraph(2, 1, [[]]))


if __name__ == '__main__':
    unittest.main(verbosity=2)
