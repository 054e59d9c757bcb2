#!/usr/bin/env python
"""
Unit test for tgx.core.planner module
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import unittest

import numpy as np

import helpers
from tgx.core import planner
from tgx.core.analysis import frequency_table
from tgx.core.instance_classes import (gen_random_frequent,
                                       gen_star_lower_bound,
                                       random_connected_graph)
from tgx.core.static_graph import StaticGraph
from tgx.core.temporal_graph import TemporalGraph
from tgx.core.validation import validate_exploration
from tgx.core.walk import Walk


class TestFWGraph(unittest.TestCase):
    def test_weights_are_frequencies(self):
        g = helpers.graph_from_activations(3, 3, {
            (0, 1): [1, 2, 3],
            (1, 2): [2],
            (0, 2): [1]
        })
        fw_graph = planner.build_fw_graph(g, frequency_table(g))
        self.assertFalse(fw_graph.directed)
        self.assertEqual(fw_graph.weights, {(0, 1): 1, (0, 2): 3, (1, 2): 2})

    def test_symmetric_directed_takes_max(self):
        g = helpers.graph_from_activations(2, 3, {
            (0, 1): [2],
            (1, 0): [1]
        }, directed=True)
        fw_graph = planner.build_fw_graph(g, frequency_table(g))
        self.assertEqual(fw_graph.weights, {(0, 1): 3})

    def test_asymmetric_directed(self):
        g = TemporalGraph(2, 1, [[(0, 1)]], directed=True)
        with self.assertRaises(planner.PlannerException):
            planner.build_fw_graph(g, frequency_table(g))

    def test_mismatching_table(self):
        g = TemporalGraph(3, 1, [[(0, 1), (1, 2)]])
        other = TemporalGraph(3, 1, [[(0, 1)]])
        with self.assertRaises(planner.PlannerException):
            planner.build_fw_graph(g, frequency_table(other))


class TestMinimumSpanningTree(unittest.TestCase):
    def test_triangle(self):
        sg = StaticGraph(3, [(0, 1), (1, 2), (0, 2)],
                         weights={(0, 1): 1, (1, 2): 2, (0, 2): 3})
        self.assertEqual(planner.minimum_spanning_tree(sg),
                         (((0, 1), (1, 2)), 3))

    def test_tree_is_its_own_mst(self):
        edges = [(0, 1), (1, 2), (1, 3)]
        sg = StaticGraph(4, edges, weights={(0, 1): 5, (1, 2): 2, (1, 3): 7})
        self.assertEqual(planner.minimum_spanning_tree(sg),
                         (tuple(edges), 14))

    def test_cycle_drops_heaviest(self):
        sg = StaticGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)],
                         weights={(0, 1): 1, (1, 2): 1, (2, 3): 1, (0, 3): 5})
        self.assertEqual(planner.minimum_spanning_tree(sg)[1], 3)

    def test_ties_are_deterministic(self):
        sg = StaticGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        self.assertEqual(planner.minimum_spanning_tree(sg)[0],
                         ((0, 1), (0, 3), (1, 2)))

    def test_disconnected_names_vertex(self):
        with self.assertRaisesRegex(planner.PlannerException, "vertex 2"):
            planner.minimum_spanning_tree(StaticGraph(3, [(0, 1)]))

    def test_directed(self):
        with self.assertRaises(planner.PlannerException):
            planner.minimum_spanning_tree(
                StaticGraph(2, [(0, 1), (1, 0)], directed=True))

    def test_against_brute_force(self):
        rng = np.random.default_rng(9)
        for seed in range(100):
            n = int(rng.integers(2, 8))
            sg = random_connected_graph(n, 0.5, seed=seed)
            weights = {e: int(rng.integers(1, 10)) for e in sg.edges}
            weighted = StaticGraph(n, sg.edges, weights=weights)
            tree, total = planner.minimum_spanning_tree(weighted)
            self.assertTrue(helpers.is_spanning_tree(n, tree))
            self.assertEqual(total, sum(weights[e] for e in tree))
            self.assertEqual(total, helpers.brute_force_mst_weight(weighted))


class TestTreeExplorationWalk(unittest.TestCase):
    def test_path_from_end(self):
        walk = planner.tree_exploration_walk(helpers.path_edges(3), 3, 0)
        self.assertEqual(walk.steps, ((0, 1), (1, 2)))

    def test_path_from_middle(self):
        walk = planner.tree_exploration_walk(helpers.path_edges(5), 5, 2)
        self.assertEqual(walk.steps,
                         ((2, 1), (1, 0), (0, 1), (1, 2), (2, 3), (3, 4)))

    def test_star_from_center(self):
        walk = planner.tree_exploration_walk([(0, 1), (0, 2)], 3, 0)
        self.assertEqual(walk.steps, ((0, 1), (1, 0), (0, 2)))

    def test_deepest_branch_last(self):
        tree = [(0, 1), (0, 2), (2, 3)]
        walk = planner.tree_exploration_walk(tree, 4, 0)
        self.assertEqual(walk.steps, ((0, 1), (1, 0), (0, 2), (2, 3)))

    def test_single_vertex(self):
        walk = planner.tree_exploration_walk([], 1, 0)
        self.assertEqual(len(walk), 0)
        self.assertEqual(walk.start, 0)

    def test_invalid_trees(self):
        with self.assertRaises(planner.PlannerException):
            planner.tree_exploration_walk([(0, 1)], 3, 0)
        with self.assertRaises(planner.PlannerException):
            planner.tree_exploration_walk([(0, 1), (1, 0)], 3, 0)
        with self.assertRaises(planner.PlannerException):
            planner.tree_exploration_walk([(0, 1), (1, 3)], 3, 0)
        with self.assertRaises(planner.PlannerException):
            planner.tree_exploration_walk([(0, 1), (1, 2)], 3, 3)

    def test_random_trees_every_start(self):
        rng = np.random.default_rng(10)
        for _ in range(200):
            n = int(rng.integers(2, 12))
            tree = helpers.random_tree(n, rng)
            tree_set = set(tree)
            for start in range(n):
                walk = planner.tree_exploration_walk(tree, n, start)
                self.assertEqual(walk.start, start)
                self.assertLessEqual(len(walk), 2 * n - 3)
                self.assertEqual(walk.vertices, set(range(n)))
                self.assertTrue(walk.check()[0])
                for u, v in walk:
                    self.assertIn((min(u, v), max(u, v)), tree_set)


class TestScheduleWalk(unittest.TestCase):
    def test_earliest_activations(self):
        g = helpers.graph_from_activations(3, 3, {
            (0, 1): [2],
            (1, 2): [1, 3]
        })
        tw = planner.schedule_walk(g, Walk([(0, 1), (1, 2)]))
        self.assertEqual(tw.steps, (((0, 1), 2), ((1, 2), 3)))

    def test_strictly_later(self):
        g = helpers.graph_from_activations(3, 8, {
            (0, 1): [2, 5, 8],
            (1, 2): [1, 3, 4, 6, 7]
        })
        tw = planner.schedule_walk(g, Walk([(0, 1), (1, 0), (0, 1)]))
        self.assertEqual(tw.timesteps, (2, 5, 8))

    def test_lifetime_exhausted(self):
        g = helpers.graph_from_activations(3, 8, {
            (0, 1): [2, 5, 8],
            (1, 2): [1, 3, 4, 6, 7]
        })
        with self.assertRaises(planner.LifetimeExhaustedException) as ctx:
            planner.schedule_walk(g,
                                  Walk([(0, 1), (1, 0), (0, 1), (1, 0)]))
        self.assertEqual(ctx.exception.step_index, 3)

    def test_edge_not_in_graph(self):
        g = TemporalGraph(3, 2, [[(0, 1)], [(1, 2)]])
        with self.assertRaises(planner.PlannerException):
            planner.schedule_walk(g, Walk([(0, 2)]))

    def test_prefix_monotone(self):
        g = gen_random_frequent(8, 3, seed=5)
        full = planner.explore(g, 0).walk
        plan, _ = planner.plan_exploration(g, 0)
        for k in range(len(full) + 1):
            prefix = planner.schedule_walk(
                g, Walk(plan.tree_walk.steps[:k], start=0))
            self.assertEqual(prefix, full.prefix(k))


class TestExplore(unittest.TestCase):
    def test_one_frequent_path(self):
        g = helpers.always_active(5, 10, helpers.path_edges(5))
        result = planner.explore(g, 2)
        self.assertEqual(result.walk.length, 6)
        self.assertTrue(validate_exploration(g, result.walk, 2).ok)
        report = result.report
        self.assertEqual(report["F_max"], 1)
        self.assertEqual(report["mst_weight"], 4)
        self.assertEqual(report["guarantee_2F"], 8)
        self.assertEqual(report["guarantee_f2n3"], 7)
        self.assertEqual(report["achieved_length"], 6)
        self.assertTrue(report["lifetime_sufficient"])
        np.testing.assert_array_equal(report.np_arrays["timesteps"],
                                      np.arange(1, 7))

    def test_star_instance(self):
        for n in (4, 5):
            for r in (1, 2, 3):
                g, start = gen_star_lower_bound(n, r)
                result = planner.explore(g, start)
                self.assertTrue(validate_exploration(g, result.walk, start))
                self.assertLessEqual(result.walk.length, r * (2 * n - 3))

    def test_single_vertex(self):
        g = TemporalGraph(1, 1, [[]])
        result = planner.explore(g, 0)
        self.assertEqual(len(result.walk), 0)
        self.assertEqual(result.report["achieved_length"], 0)
        self.assertEqual(result.report["F_max"], 0)

    def test_single_vertex_with_self_loop(self):
        g = TemporalGraph(1, 4, [[(0, 0)], [], [], [(0, 0)]],
                          allow_self_loops=True)
        result = planner.explore(g, 0)
        self.assertEqual(len(result.walk), 0)
        self.assertEqual(result.report["F_max"], 3)
        self.assertEqual(result.table[(0, 0)], 3)

    def test_short_lifetime(self):
        g = helpers.always_active(4, 2, helpers.path_edges(4))
        with self.assertRaises(planner.PlannerException):
            planner.explore(g, 0)

    def test_disconnected(self):
        g = helpers.always_active(4, 5, [(0, 1), (2, 3)])
        with self.assertRaises(planner.PlannerException):
            planner.explore(g, 0)

    def test_start_out_of_range(self):
        g = helpers.always_active(2, 2, [(0, 1)])
        with self.assertRaises(planner.PlannerException):
            planner.explore(g, 2)

    def test_precomputed_table_is_reused(self):
        g = gen_random_frequent(6, 2, seed=1)
        ft = frequency_table(g)
        result = planner.explore(g, 0, ft)
        self.assertIs(result.table, ft)
        self.assertEqual(result.walk, planner.explore(g, 0).walk)


class TestBounds(unittest.TestCase):
    def test_values(self):
        self.assertEqual(planner.transport_bound(5, 4), 28)
        self.assertEqual(
            planner.sequential_bound(
                StaticGraph(2, [(0, 1), (1, 0)], directed=True)), 4)
        self.assertEqual(planner.broadcast_bound(4, 2), 40)
        self.assertEqual(planner.always_connected_broadcast_bound(4, 3), 20)
        self.assertEqual(planner.star_lower_bound(4, 2), 7)
        self.assertEqual(planner.transport_bound(1, 4), 0)


if __name__ == '__main__':
    unittest.main(verbosity=2)
