import json
import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

ZETACERT = os.environ["ZETACERT"]
ROOT = Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "schemas"
DATA = ROOT / "data"


def registry():
    resources = []
    for p in SCHEMAS.glob("*.json"):
        doc = json.loads(p.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


REGISTRY = registry()


def validate(doc, schema):
    s = json.loads((SCHEMAS / schema).read_text())
    jsonschema.Draft202012Validator(s, registry=REGISTRY).validate(doc)


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("ZETACERT_DIGITS", None)
    if env:
        e.update(env)
    return subprocess.run([ZETACERT, *args], capture_output=True, text=True, env=e)


class Forms(unittest.TestCase):
    def test_valid_spec(self):
        p = run("forms", "--a", "7", "--r", "1", "--n", "2")
        self.assertEqual(p.returncode, 0, p.stderr)
        doc = json.loads(p.stdout)
        validate(doc, "forms.json")
        self.assertTrue(doc["pass"])
        self.assertEqual([c["i"] for c in doc["plain"]["zeta_coeffs"]], [3, 5, 7])
        self.assertEqual(doc["plain"]["zeta_coeffs"], [dict(c, zeta_argument=c["i"], multiplier="1")
                                                       for c in doc["plain"]["zeta_coeffs"]])

    def test_even_a_rejected(self):
        p = run("forms", "--a", "8", "--r", "1", "--n", "2")
        self.assertEqual(p.returncode, 2)
        validate(json.loads(p.stderr), "error.json")

    def test_six_r_above_a_rejected(self):
        p = run("forms", "--a", "7", "--r", "2", "--n", "2")
        self.assertEqual(p.returncode, 2)
        self.assertIn("6r", json.loads(p.stderr)["error"]["message"])

    def test_csv(self):
        p = run("forms", "--a", "7", "--r", "1", "--n", "1", "--format", "csv")
        self.assertEqual(p.returncode, 0)
        lines = p.stdout.splitlines()
        self.assertEqual(lines[0], "kind,i,zeta_argument,multiplier,num,den")
        self.assertEqual(len(lines), 1 + 2 * 4)

    def test_digits_env(self):
        p = run("forms", "--a", "7", "--r", "1", "--n", "1", env={"ZETACERT_DIGITS": "60"})
        self.assertEqual(json.loads(p.stdout)["digits"], 60)
        p = run("forms", "--a", "7", "--r", "1", "--n", "1", env={"ZETACERT_DIGITS": "ten"})
        self.assertEqual(p.returncode, 2)

    def test_missing_flag(self):
        p = run("forms", "--a", "7", "--r", "1")
        self.assertEqual(p.returncode, 2)
        validate(json.loads(p.stderr), "error.json")


class Asymptotics(unittest.TestCase):
    def test_small_pair(self):
        p = run("asymptotics", "--a", "13", "--r", "2")
        self.assertEqual(p.returncode, 0, p.stderr)
        doc = json.loads(p.stdout)
        validate(doc, "asymptotics.json")
        self.assertTrue(all(c["pass"] for c in doc["checks"]))

    def test_large_a_default_r(self):
        p = run("asymptotics", "--a", "1001")
        self.assertEqual(p.returncode, 0, p.stderr)
        doc = json.loads(p.stdout)
        self.assertEqual(doc["r"], 72)
        extras = {c["name"]: c["pass"] for c in doc["assumptions"]["extras"]}
        self.assertTrue(extras["eps_pp_below_eps"])

    def test_small_a_warns(self):
        p = run("asymptotics", "--a", "5")
        self.assertEqual(p.returncode, 2)
        self.assertIn("large-a regime", json.loads(p.stderr)["error"]["message"])


class RankBound(unittest.TestCase):
    def test_record_and_determinism(self):
        with tempfile.TemporaryDirectory() as d:
            a, b = Path(d) / "a.json", Path(d) / "b.json"
            self.assertEqual(run("rank-bound", "--a", "1001", "--out", str(a)).returncode, 0)
            self.assertEqual(run("rank-bound", "--a", "1001", "--out", str(b)).returncode, 0)
            self.assertEqual(a.read_bytes(), b.read_bytes())
            doc = json.loads(a.read_text())
            validate(doc, "rank_bound.json")
            validate(json.loads(Path(str(a) + ".meta.json").read_text()), "meta.json")
            self.assertAlmostEqual(doc["bound"], 2 + doc["tau1"] + doc["tau2"], places=12)
            self.assertNotEqual(doc["tau1"], doc["tau2"])


class Rates(unittest.TestCase):
    def test_csv_and_json(self):
        p = run("rates", "--a", "13", "--r", "2", "--n", "20..27", "--format", "csv")
        self.assertEqual(p.returncode, 0, p.stderr)
        lines = p.stdout.splitlines()
        self.assertEqual(lines[0], "n,logSn_over_n,logSppn_over_n,sign,cos_reference,fitted_slope,log_eps_a")
        self.assertEqual([int(l.split(",")[0]) for l in lines[1:]], list(range(20, 28)))
        p = run("rates", "--a", "13", "--r", "2", "--n", "20,22,23,24,25,26,27,28")
        validate(json.loads(p.stdout), "rates.json")

    def test_bad_range(self):
        self.assertEqual(run("rates", "--a", "13", "--r", "2", "--n", "40..20").returncode, 2)
        self.assertEqual(run("rates", "--a", "13", "--r", "2", "--n", "20..x").returncode, 2)


class Criterion(unittest.TestCase):
    def test_gutnik(self):
        p = run("criterion", "--in", str(DATA / "gutnik1.json"))
        self.assertEqual(p.returncode, 0, p.stderr)
        doc = json.loads(p.stdout)
        validate(doc, "criterion.json")
        self.assertEqual(doc["reports"][0]["rank"], 4)

    def test_failed_check_exit_1(self):
        with tempfile.TemporaryDirectory() as d:
            f = Path(d) / "i.json"
            f.write_text(json.dumps({"kind": "rational_rank", "columns": [["1"], ["2"]], "expected_rank": 2}))
            p = run("criterion", "--in", str(f))
            self.assertEqual(p.returncode, 1)
            self.assertEqual(json.loads(p.stdout)["reports"][0]["rank"], 1)

    def test_malformed_json_line_context(self):
        with tempfile.TemporaryDirectory() as d:
            f = Path(d) / "bad.json"
            f.write_text('{\n  "kind": "rational_rank",\n  "columns": [["1", "0"],\n  ]\n}\n')
            p = run("criterion", "--in", str(f))
            self.assertEqual(p.returncode, 2)
            msg = json.loads(p.stderr)["error"]["message"]
            self.assertIn("bad.json:4:", msg)

    def test_fixtures_match_instance_schema(self):
        for f in DATA.glob("*.json"):
            validate(json.loads(f.read_text()), "instance.json")

    def test_unknown_kind(self):
        with tempfile.TemporaryDirectory() as d:
            f = Path(d) / "i.json"
            f.write_text('{"kind": "nope"}')
            self.assertEqual(run("criterion", "--in", str(f)).returncode, 2)


if __name__ == "__main__":
    unittest.main(verbosity=2)
