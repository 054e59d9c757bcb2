#!/usr/bin/env python
"""
Unit test for result module
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import json
import unittest

import numpy as np

from tgx.core import result


class TestResult(unittest.TestCase):
    def test_info_keeps_insertion_order(self):
        r = result.Result("exploration")
        r.add_info({"n": 4, "T": 20})
        r.add_info({"achieved_length": 5})
        self.assertEqual(r.pretty_str(), "n: 4\nT: 20\nachieved_length: 5")
        self.assertEqual(r.pretty_str(title=True).splitlines()[0],
                         "exploration")

    def test_json(self):
        r = result.Result()
        r.add_info({"feasible": True, "optimum": 7})
        r.add_np_array("timesteps", np.array([1, 3]))
        self.assertEqual(json.loads(r.to_json()), {
            "feasible": True,
            "optimum": 7
        })

    def test_missing_key(self):
        with self.assertRaises(result.ResultException):
            result.Result()["n"]

    def test_equality_covers_arrays(self):
        r1 = result.Result()
        r1.add_np_array("timesteps", np.array([1, 2]))
        r2 = result.Result()
        r2.add_np_array("timesteps", np.array([1, 2]))
        self.assertEqual(r1, r2)
        r2.add_np_array("timesteps", np.array([1, 3]))
        self.assertNotEqual(r1, r2)


if __name__ == '__main__':
    unittest.main(verbosity=2)
