#!/usr/bin/env python3
"""End-to-end checks of the magic command: outputs, exit codes and JSON artifacts."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

MAGIC = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("MAGIC_BUDGET_SECONDS", None)
    full_env.update(env or {})
    return subprocess.run([MAGIC, *args], capture_output=True, text=True, env=full_env, timeout=300)


class Cli(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = self.tmp.name

    def tearDown(self):
        self.tmp.cleanup()

    def path(self, name):
        return os.path.join(self.dir, name)

    def test_franklin8_sum6(self):
        r = run("count", "--family", "franklin8", "--sum", "6")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.split(), ["6", "64"])

    def test_usage_exit_code(self):
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("count", "--family", "magic", "--n", "3").returncode, 2)
        self.assertEqual(run("build", "--family", "no-such-family", "--n", "3").returncode, 2)

    def test_infeasible_exit_code(self):
        r = run("verify", "--family", "magic", "--n", "3", "--point", "[1,2,3,4,5,6,7,8,9]")
        self.assertEqual(r.returncode, 4)
        r = run("verify", "--family", "magic", "--n", "3", "--point", "[[2,7,6],[9,5,1],[4,3,8]]")
        self.assertEqual(r.returncode, 0)
        self.assertIn("15", r.stdout)

    def test_budget_exit_code(self):
        r = run("hilbert", "--family", "magic", "--n", "4", "--max-elements", "3")
        self.assertEqual(r.returncode, 3)
        r = run("--budget", "0.001", "hilbert", "--family", "magic-cube", "--n", "3", "--quiet")
        self.assertEqual(r.returncode, 3)

    def test_budget_environment_default(self):
        r = run("hilbert", "--family", "magic-cube", "--n", "3", "--quiet",
                env={"MAGIC_BUDGET_SECONDS": "0.001"})
        self.assertEqual(r.returncode, 3)
        self.assertIn("budget", r.stderr)
        r = run("hilbert", "--family", "magic", "--n", "3", "--quiet",
                env={"MAGIC_BUDGET_SECONDS": "60"})
        self.assertEqual(r.returncode, 0)

    def test_threads_flag(self):
        one = run("--threads", "1", "count", "--family", "magic", "--n", "4", "--sum", "8")
        two = run("--threads", "2", "count", "--family", "magic", "--n", "4", "--sum", "8")
        self.assertEqual(one.returncode, 0, one.stderr)
        self.assertEqual(one.stdout, two.stdout)

    def test_insufficient_samples(self):
        r = run("formula", "--samples", '{"samples":[[0,1],[3,5]]}', "--period", "3", "--degree", "2")
        self.assertNotEqual(r.returncode, 0)
        self.assertIn("insufficient samples for residue class", r.stderr)

    def test_pipeline_round_trip(self):
        sys_file, hb_file = self.path("sys.json"), self.path("hb.json")
        series_file, formula_file = self.path("series.json"), self.path("formula.json")
        steps = [
            ("build", "--family", "magic", "--n", "3", "-o", sys_file),
            ("hilbert", "--system", sys_file, "--quiet", "-o", hb_file),
            ("series", "--basis", hb_file, "-o", series_file),
            ("formula", "--series", series_file, "-o", formula_file),
        ]
        for step in steps:
            r = run(*step)
            self.assertEqual(r.returncode, 0, (step, r.stderr))
        r = run("expand", "--series", series_file, "--dmax", "9", "--json")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("25", r.stdout)
        r = run("eval", "--formula", formula_file, "--at", "9", "--at", "12", "--json")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("25", r.stdout)
        self.assertIn("41", r.stdout)

    def test_artifacts_reserialize_identically(self):
        sys_file, again = self.path("sys.json"), self.path("sys2.json")
        self.assertEqual(run("build", "--family", "pandiagonal", "--n", "4", "-o", sys_file).returncode, 0)
        self.assertEqual(run("build", "--system", sys_file, "-o", again).returncode, 0)
        with open(sys_file) as a, open(again) as b:
            self.assertEqual(json.load(a), json.load(b))
        hb1, hb2 = self.path("hb1.json"), self.path("hb2.json")
        self.assertEqual(run("hilbert", "--system", sys_file, "--quiet", "-o", hb1).returncode, 0)
        self.assertEqual(run("series", "--basis", hb1, "-o", self.path("s1.json")).returncode, 0)
        self.assertEqual(run("series", "--basis", hb1, "-o", self.path("s2.json")).returncode, 0)
        self.assertEqual(run("hilbert", "--system", sys_file, "--quiet", "-o", hb2).returncode, 0)
        for a, b in [(hb1, hb2), (self.path("s1.json"), self.path("s2.json"))]:
            with open(a) as fa, open(b) as fb:
                self.assertEqual(json.load(fa), json.load(fb))

    def test_group_orders(self):
        r = run("symmetry", "order", "--group", "G8")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("256", r.stdout)


if __name__ == "__main__":
    MAGIC = sys.argv.pop(1)
    unittest.main()
