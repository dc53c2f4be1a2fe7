"""End-to-end checks of the watchwalk command line: exit codes, JSON schemas,
and byte-identical census output across job counts."""

import json
import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

CLI = os.environ["WATCHWALK_CLI"]
ROOT = Path(os.environ["WATCHWALK_ROOT"])


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("WATCHWALK_MAX_N", None)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env, timeout=600)


def schema(name):
    return json.loads((ROOT / "schema" / f"{name}.schema.json").read_text())


class AnalyzeTest(unittest.TestCase):
    def analyze(self, source):
        proc = run("analyze", source)
        self.assertEqual(proc.returncode, 0, proc.stderr)
        report = json.loads(proc.stdout)
        jsonschema.validate(report, schema("analyze"))
        return report

    def test_windmill(self):
        report = self.analyze("fixture:fig2_windmill")
        self.assertEqual(report["n"], 15)
        self.assertEqual(report["arcs"], 32)
        self.assertEqual(report["gamma"], 4)
        self.assertEqual(report["gamma_sc"], 7)
        self.assertEqual(report["w"], 8)

    def test_transitive_generator(self):
        report = self.analyze("generator:transitive:6")
        self.assertEqual(report["w"], 0)
        self.assertEqual(report["condensation"]["components"], 6)

    def test_path_has_no_walk(self):
        report = self.analyze("fixture:fig1_path")
        self.assertFalse(report["exists"])
        self.assertIsNone(report["w"])
        self.assertIsNone(report["witness"])
        self.assertIsNone(report["gamma_sc"])
        self.assertEqual(report["gamma_wc"], 4)

    def test_bare_fixture_name_and_file(self):
        self.assertEqual(self.analyze("fig_paley7")["multiplicity"], 7)
        with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
            f.write("3 3\n0 1\n1 2\n2 0\n")
        try:
            report = self.analyze(f.name)
            self.assertEqual(report["w"], 3)
            self.assertEqual(report["gamma_sc"], 3)
        finally:
            os.unlink(f.name)

    def test_large_tournament_uses_fast_path(self):
        report = self.analyze("paley:31")
        self.assertEqual(report["n"], 31)
        self.assertIn(report["w"], (report["gamma"], report["gamma"] + 1))

    def test_large_transitive_is_fast(self):
        report = self.analyze("transitive:64")
        self.assertEqual(report["w"], 0)
        self.assertIsNone(report["gamma_cyc"])

    def test_human(self):
        proc = run("analyze", "paley:7", "--human")
        self.assertEqual(proc.returncode, 0)
        self.assertIn("multiplicity      7", proc.stdout)

    def test_parse_error_names_line(self):
        with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
            f.write("3 2\n0 1\n1 q\n")
        try:
            proc = run("analyze", f.name)
            self.assertEqual(proc.returncode, 2)
            self.assertIn("line 3", proc.stderr)
        finally:
            os.unlink(f.name)

    def test_capacity_error(self):
        with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
            f.write("30 1\n0 1\n")
        try:
            proc = run("analyze", f.name)
            self.assertEqual(proc.returncode, 2)
            self.assertIn("capacity", proc.stderr)
        finally:
            os.unlink(f.name)


class UsageTest(unittest.TestCase):
    def test_unknown_flag(self):
        self.assertEqual(run("analyze", "paley:7", "--bogus").returncode, 2)

    def test_unknown_subcommand(self):
        self.assertEqual(run("frobnicate").returncode, 2)

    def test_no_subcommand(self):
        self.assertEqual(run().returncode, 2)

    def test_unknown_input(self):
        self.assertEqual(run("analyze", "no-such-thing").returncode, 2)

    def test_unknown_property(self):
        proc = run("verify", "nope")
        self.assertEqual(proc.returncode, 2)
        self.assertIn("unknown property", proc.stderr)


class ConvertTest(unittest.TestCase):
    def test_tcode_of_transitive(self):
        proc = run("convert", "transitive:3", "--to", "tcode")
        self.assertEqual(proc.returncode, 0)
        self.assertEqual(proc.stdout.strip(), "T 3 111")

    def test_round_trip(self):
        edges = run("convert", "paley:7", "--to", "edge-list").stdout
        with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
            f.write(edges)
        try:
            tcode = run("convert", f.name, "--to", "tcode").stdout
            self.assertEqual(tcode, run("convert", "paley:7", "--to", "tcode").stdout)
            back = subprocess.run([CLI, "convert", "-", "--to", "edge-list"], input=tcode, capture_output=True, text=True)
            self.assertEqual(back.returncode, 0)
            self.assertEqual(back.stdout, edges)
        finally:
            os.unlink(f.name)

    def test_tcode_for_non_tournament(self):
        proc = run("convert", "fixture:fig2_windmill", "--to", "tcode")
        self.assertEqual(proc.returncode, 2)


class GenerateTest(unittest.TestCase):
    def test_random_is_seeded(self):
        a = run("generate", "random:10:4", "--to", "tcode").stdout
        b = run("generate", "random:10:4", "--to", "tcode").stdout
        self.assertEqual(a, b)
        self.assertTrue(a.startswith("T 10 "))

    def test_bad_spec(self):
        self.assertEqual(run("generate", "paley:8").returncode, 2)


class CensusTest(unittest.TestCase):
    def test_verify_small_orders(self):
        for n in range(2, 8):
            proc = run("census", "-n", str(n), "--verify")
            self.assertEqual(proc.returncode, 0, proc.stderr)
            self.assertIn("match", proc.stderr)

    def test_verify_explicit_reference_mismatch(self):
        ref = (ROOT / "data" / "appendixA.csv").read_text().replace("5,3,2,5,1,0", "5,3,2,5,2,0")
        with tempfile.NamedTemporaryFile("w", suffix=".csv", delete=False) as f:
            f.write(ref)
        try:
            proc = run("census", "-n", "5", "--verify", f.name)
            self.assertEqual(proc.returncode, 1)
            self.assertIn("mismatch n=5", proc.stderr)
        finally:
            os.unlink(f.name)

    def test_json_rows(self):
        proc = run("census", "-n", "7", "--format", "json")
        self.assertEqual(proc.returncode, 0)
        doc = json.loads(proc.stdout)
        jsonschema.validate(doc, schema("census"))
        self.assertEqual(len(doc["rows"]), 16)

    def test_large_gate(self):
        proc = run("census", "-n", "10")
        self.assertEqual(proc.returncode, 2)
        self.assertIn("allow-large", proc.stderr)

    def test_env_cap(self):
        proc = run("census", "-n", "7", env={"WATCHWALK_MAX_N": "6"})
        self.assertEqual(proc.returncode, 2)

    def test_jobs_do_not_change_output(self):
        with tempfile.TemporaryDirectory() as tmp:
            outputs = []
            for jobs in ("1", "3"):
                path = Path(tmp) / f"c{jobs}.csv"
                proc = run("census", "-n", "8", "--jobs", jobs, "--out", str(path))
                self.assertEqual(proc.returncode, 0, proc.stderr)
                outputs.append(path.read_bytes())
            self.assertEqual(outputs[0], outputs[1])

    def test_checkpoint(self):
        with tempfile.TemporaryDirectory() as tmp:
            ckpt = Path(tmp) / "ckpt"
            first = run("census", "-n", "7", "--checkpoint", str(ckpt))
            again = run("census", "-n", "7", "--checkpoint", str(ckpt))
            self.assertEqual(first.returncode, 0)
            self.assertEqual(first.stdout, again.stdout)

    def test_unwritable_output(self):
        self.assertEqual(run("census", "-n", "4", "--out", "/nonexistent-dir/x.csv").returncode, 2)


class VerifyTest(unittest.TestCase):
    def verify(self, *args):
        proc = run("verify", *args)
        report = json.loads(proc.stdout)
        jsonschema.validate(report, schema("verify"))
        return proc.returncode, report

    def test_domset(self):
        code, report = self.verify("domset", "--n", "7")
        self.assertEqual(code, 0)
        self.assertTrue(report["pass"])

    def test_nminustwo_order_eight(self):
        code, report = self.verify("nminustwo", "--n", "8")
        self.assertEqual(code, 0)
        self.assertGreater(report["checked"], 6000)

    def test_seeded(self):
        _, a = self.verify("strongify", "--seed", "9", "--samples", "5")
        _, b = self.verify("strongify", "--seed", "9", "--samples", "5")
        self.assertEqual(a, b)

    def test_list(self):
        proc = run("verify", "--list")
        self.assertEqual(proc.returncode, 0)
        self.assertIn("multipartite-exists", proc.stdout.split())


if __name__ == "__main__":
    unittest.main(verbosity=2)
