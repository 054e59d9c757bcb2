#!/usr/bin/env python
"""
Unit test for file_interface module.
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import io
import os
import tempfile
import unittest

import helpers
from tgx.core.instance_classes import (BroadcastSchedule, Route,
                                       SequentialSchedule,
                                       gen_random_frequent)
from tgx.core.temporal_graph import TemporalGraph
from tgx.core.walk import TemporalWalk
from tgx.tools import file_interface


class MockFileTestCase(unittest.TestCase):
    def __init__(self, in_memory_buffer, *args, **kwargs):
        super(MockFileTestCase, self).__init__(*args, **kwargs)
        self.mock_file = in_memory_buffer

    @staticmethod
    def run_and_clear(test_method):
        def _decorator(self, *args, **kwargs):
            try:
                test_method(self, *args, **kwargs)
            finally:
                self.mock_file.seek(0)
                self.mock_file.truncate()

        return _decorator

    def write_text(self, text):
        self.mock_file.write(text)
        self.mock_file.seek(0)


class TestTG1File(MockFileTestCase):
    def __init__(self, *args, **kwargs):
        super(TestTG1File, self).__init__(io.StringIO(), *args, **kwargs)

    @MockFileTestCase.run_and_clear
    def test_write_read_integrity(self):
        g_out = gen_random_frequent(8, 3, seed=2)
        file_interface.write_tg1_file(self.mock_file, g_out)
        self.mock_file.seek(0)
        g_in = file_interface.read_tg1_file(self.mock_file)
        self.assertEqual(g_out, g_in)

    @MockFileTestCase.run_and_clear
    def test_directed_with_self_loops(self):
        g_out = TemporalGraph(2, 2, [[(1, 0), (1, 1)], [(0, 1)]],
                              directed=True, allow_self_loops=True)
        file_interface.write_tg1_file(self.mock_file, g_out)
        self.mock_file.seek(0)
        g_in = file_interface.read_tg1_file(self.mock_file)
        self.assertTrue(g_in.directed)
        self.assertTrue(g_in.allow_self_loops)
        self.assertEqual(g_out, g_in)

    @MockFileTestCase.run_and_clear
    def test_comments_and_any_order(self):
        self.write_text("# a path\nTG1 3 2 0\n\n2 2 1\n# late\n1 0 1\n")
        g = file_interface.read_tg1_file(self.mock_file)
        self.assertEqual(g.snapshots, (((0, 1), ), ((1, 2), )))
        self.assertFalse(g.allow_self_loops)

    @MockFileTestCase.run_and_clear
    def test_wrong_magic(self):
        self.write_text("TG2 3 2 0\n1 0 1\n")
        with self.assertRaisesRegex(file_interface.ParseException,
                                    "^line 1: "):
            file_interface.read_tg1_file(self.mock_file)

    @MockFileTestCase.run_and_clear
    def test_timestep_out_of_range_reports_line(self):
        self.write_text("TG1 3 2 0\n# comment\n3 0 1\n")
        with self.assertRaises(file_interface.ParseException) as ctx:
            file_interface.read_tg1_file(self.mock_file)
        self.assertEqual(ctx.exception.line_number, 3)

    @MockFileTestCase.run_and_clear
    def test_vertex_out_of_range(self):
        self.write_text("TG1 2 1 0\n1 0 2\n")
        with self.assertRaisesRegex(file_interface.ParseException,
                                    "line 2: vertex 2"):
            file_interface.read_tg1_file(self.mock_file)

    @MockFileTestCase.run_and_clear
    def test_malformed_entries(self):
        self.write_text("TG1 2 1 0\n1 0\n")
        with self.assertRaises(file_interface.ParseException):
            file_interface.read_tg1_file(self.mock_file)
        self.mock_file.seek(0)
        self.mock_file.truncate()
        self.write_text("TG1 2 1 0\n1 a 1\n")
        with self.assertRaises(file_interface.ParseException):
            file_interface.read_tg1_file(self.mock_file)

    @MockFileTestCase.run_and_clear
    def test_empty_file(self):
        with self.assertRaises(file_interface.ParseException):
            file_interface.read_tg1_file(self.mock_file)

    def test_missing_file(self):
        with self.assertRaises(file_interface.FileInterfaceException):
            file_interface.read_tg1_file("/no/such/file.tg1")

    def test_invalid_utf8_reports_line(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = os.path.join(tmp_dir, "latin1.tg1")
            with open(path, "wb") as f:
                f.write(b"TG1 2 1 0\n1 0 1\n# caf\xe9\n")
            with self.assertRaises(file_interface.ParseException) as ctx:
                file_interface.read_tg1_file(path)
        self.assertEqual(ctx.exception.line_number, 3)

    def test_path_integrity(self):
        g_out = helpers.always_active(3, 2, helpers.path_edges(3))
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = os.path.join(tmp_dir, "g.tg1")
            file_interface.write_tg1_file(path, g_out)
            self.assertEqual(file_interface.read_tg1_file(path), g_out)


class TestTW1File(MockFileTestCase):
    def __init__(self, *args, **kwargs):
        super(TestTW1File, self).__init__(io.StringIO(), *args, **kwargs)

    @MockFileTestCase.run_and_clear
    def test_write_read_integrity(self):
        tw_out = TemporalWalk(2, [((2, 1), 3), ((1, 0), 7)])
        file_interface.write_tw1_file(self.mock_file, tw_out)
        self.mock_file.seek(0)
        self.assertEqual(file_interface.read_tw1_file(self.mock_file), tw_out)

    @MockFileTestCase.run_and_clear
    def test_empty_walk(self):
        self.write_text("TW1 4\n")
        tw = file_interface.read_tw1_file(self.mock_file)
        self.assertEqual(tw.start, 4)
        self.assertEqual(len(tw), 0)

    @MockFileTestCase.run_and_clear
    def test_illegal_walk_still_parses(self):
        self.write_text("TW1 0\n5 0 1\n2 1 2\n")
        tw = file_interface.read_tw1_file(self.mock_file)
        self.assertFalse(tw.check()[0])


class TestRT1File(MockFileTestCase):
    def __init__(self, *args, **kwargs):
        super(TestRT1File, self).__init__(io.StringIO(), *args, **kwargs)

    @MockFileTestCase.run_and_clear
    def test_write_read_integrity(self):
        routes = [Route([((0, 1), 2), ((1, 2), 3)]), Route([((3, 2), 1)])]
        file_interface.write_rt1_file(self.mock_file, 4, routes)
        self.mock_file.seek(0)
        n, routes_in = file_interface.read_rt1_file(self.mock_file)
        self.assertEqual(n, 4)
        self.assertEqual(routes_in, routes)

    @MockFileTestCase.run_and_clear
    def test_period_mismatch(self):
        self.write_text("RT1 3 1\nROUTE 4\n1 0 1\n3 1 2\n")
        with self.assertRaisesRegex(file_interface.ParseException,
                                    "line 2: route period 4"):
            file_interface.read_rt1_file(self.mock_file)

    @MockFileTestCase.run_and_clear
    def test_route_count_mismatch(self):
        self.write_text("RT1 3 2\nROUTE 1\n1 0 1\n")
        with self.assertRaises(file_interface.ParseException):
            file_interface.read_rt1_file(self.mock_file)

    @MockFileTestCase.run_and_clear
    def test_step_before_route(self):
        self.write_text("RT1 3 1\n1 0 1\nROUTE 1\n1 0 1\n")
        with self.assertRaisesRegex(file_interface.ParseException, "line 2"):
            file_interface.read_rt1_file(self.mock_file)

    @MockFileTestCase.run_and_clear
    def test_non_chaining_route(self):
        self.write_text("RT1 4 1\nROUTE 2\n1 0 1\n2 2 3\n")
        with self.assertRaises(file_interface.ParseException):
            file_interface.read_rt1_file(self.mock_file)


class TestSQ1File(MockFileTestCase):
    def __init__(self, *args, **kwargs):
        super(TestSQ1File, self).__init__(io.StringIO(), *args, **kwargs)

    @MockFileTestCase.run_and_clear
    def test_write_read_integrity(self):
        sched = SequentialSchedule({
            0: ((2, 0), (1, 0)),
            1: ((0, 1), ),
            2: ((0, 2), )
        })
        file_interface.write_sq1_file(self.mock_file, 3, sched)
        self.mock_file.seek(0)
        self.assertEqual(file_interface.read_sq1_file(self.mock_file),
                         (3, sched))

    @MockFileTestCase.run_and_clear
    def test_duplicate_vertex(self):
        self.write_text("SQ1 2\n0 1\n0 1\n")
        with self.assertRaisesRegex(file_interface.ParseException, "line 3"):
            file_interface.read_sq1_file(self.mock_file)


class TestBS1File(MockFileTestCase):
    def __init__(self, *args, **kwargs):
        super(TestBS1File, self).__init__(io.StringIO(), *args, **kwargs)

    @MockFileTestCase.run_and_clear
    def test_write_read_integrity(self):
        schedule = BroadcastSchedule([{0}, {1, 2}, {0, 2}])
        file_interface.write_bs1_file(self.mock_file, 3, schedule)
        self.mock_file.seek(0)
        self.assertEqual(file_interface.read_bs1_file(self.mock_file),
                         (3, schedule))

    @MockFileTestCase.run_and_clear
    def test_missing_timestep(self):
        self.write_text("BS1 2 3\n1 0\n3 1\n")
        with self.assertRaisesRegex(file_interface.ParseException, "t=2"):
            file_interface.read_bs1_file(self.mock_file)

    @MockFileTestCase.run_and_clear
    def test_empty_set(self):
        self.write_text("BS1 2 1\n1\n")
        with self.assertRaises(file_interface.ParseException):
            file_interface.read_bs1_file(self.mock_file)

    @MockFileTestCase.run_and_clear
    def test_duplicate_timestep(self):
        self.write_text("BS1 2 2\n1 0\n1 1\n2 1\n")
        with self.assertRaisesRegex(file_interface.ParseException, "line 3"):
            file_interface.read_bs1_file(self.mock_file)


if __name__ == '__main__':
    unittest.main(verbosity=2)
