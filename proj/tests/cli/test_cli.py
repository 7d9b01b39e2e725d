import json
import os
import subprocess
import unittest

import jsonschema

BINARY = os.environ["PAINLEVE_CLI"]
with open(os.environ["PAINLEVE_SCHEMA"]) as f:
    SCHEMA = json.load(f)

SHIFTED = "p^2/(2*y) - 2*y^2 - x*y - b^2/(2*y)"
PIV = "p^2/(2*y) + 3/2*y^3 + 4*x*y^2 + 2*(x^2 - alpha)*y - beta^3/(2*y)"


def run(*args):
    p = subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=120)
    return p.returncode, p.stdout, p.stderr


def run_json(*args):
    code, out, err = run(*args, "--json")
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    return code, report


class ExitCodes(unittest.TestCase):
    def test_shifted_form_is_p34(self):
        code, r = run_json("--rhs", SHIFTED, "--param", "b!=0")
        self.assertEqual(code, 0)
        self.assertEqual(r["p34"]["outcome"], "EquivalentP34")
        self.assertEqual(r["p34"]["beta_squared"], "b^2")
        self.assertEqual(r["pii"]["outcome"], "NotEquivalent")
        self.assertEqual(r["classification"]["tag"], "FirstCase")
        self.assertTrue(r["classification"]["case_1_4"])

    def test_zero_equation(self):
        code, r = run_json("--coeffs", "0", "0", "0", "0")
        self.assertEqual(code, 1)
        self.assertEqual(r["classification"]["tag"], "MaximalDegeneration")
        self.assertEqual(r["pii"]["outcome"], "OutOfScope")

    def test_painleve_four(self):
        code, r = run_json("--rhs", PIV, "--param", "alpha", "beta")
        self.assertEqual(code, 1)
        self.assertEqual(r["p34"]["reason"], "I7 != 0")
        self.assertEqual(r["invariants"]["I7"]["verdict"], "NonZero")

    def test_beta_free_form_is_pii(self):
        code, r = run_json("--rhs", "p^2/(2*y) - 2*y^2 - x*y")
        self.assertEqual(code, 0)
        self.assertEqual(r["pii"]["outcome"], "EquivalentPII")
        self.assertEqual(r["pii"]["a_realized"], "0")
        self.assertEqual(r["invariants"]["I9"]["value"], "-1/(1250*y^3)")
        self.assertEqual(r["invariants"]["J"]["i9_sign"], "negative")

    def test_implicit_input(self):
        code, r = run_json("--implicit", "y + x", "p^2/2 + p + 2*y^3 + 4*x*y^2 + 2*x^2*y")
        self.assertEqual(code, 0)
        self.assertEqual(r["p34"]["beta_squared"], "1/4")

    def test_general_case(self):
        code, r = run_json("--rhs", "y^2 + x^2*p^3")
        self.assertEqual(code, 1)
        self.assertEqual(r["classification"]["tag"], "GeneralCase")


class InputErrors(unittest.TestCase):
    def assert_input_error(self, *args):
        code, out, err = run(*args)
        self.assertEqual(code, 3, err)
        self.assertTrue(err)

    def test_parse_error(self):
        self.assert_input_error("--rhs", "x +")

    def test_undeclared_parameter(self):
        self.assert_input_error("--rhs", "b*y")

    def test_degree_four(self):
        self.assert_input_error("--rhs", "p^4")

    def test_bad_constraint(self):
        self.assert_input_error("--rhs", "b*y", "--param", "b<0")

    def test_reserved_parameter(self):
        self.assert_input_error("--rhs", "y", "--param", "x")

    def test_missing_input(self):
        self.assert_input_error("--json")

    def test_wrong_coefficient_count(self):
        self.assert_input_error("--coeffs", "0", "0", "0")

    def test_vanishing_lead(self):
        self.assert_input_error("--implicit", "0", "y")


class Reports(unittest.TestCase):
    def test_json_is_byte_identical(self):
        args = ("--rhs", SHIFTED, "--param", "b!=0", "--seed", "17", "--json")
        self.assertEqual(run(*args)[1], run(*args)[1])

    def test_seed_is_recorded(self):
        _, r = run_json("--rhs", SHIFTED, "--param", "b!=0", "--seed", "17")
        self.assertEqual(r["seed"], 17)

    def test_verify_rechecks_transform(self):
        code, r = run_json("--rhs", SHIFTED, "--param", "b!=0", "--verify")
        self.assertEqual(code, 0)
        self.assertEqual(r["p34"]["verification"]["verdict"], "pass")
        self.assertGreaterEqual(r["p34"]["verification"]["samples_used"], 50)
        self.assertIsNone(r["pii"]["verification"])

    def test_text_and_json_agree(self):
        for args in (("--rhs", SHIFTED, "--param", "b!=0"), ("--coeffs", "0", "0", "0", "0"),
                     ("--rhs", "p^2/(2*y) - 2*y^2 - x*y")):
            code_t, text, _ = run(*args)
            code_j, r = run_json(*args)
            self.assertEqual(code_t, code_j)
            self.assertIn("classification  " + r["classification"]["description"], text)
            for key, label in (("pii", "PII"), ("p34", "P34")):
                line = label + "  " + r[key]["outcome"]
                if r[key]["reason"]:
                    line += ": " + r[key]["reason"]
                self.assertIn(line + "\n", text)
            for name, inv in r["invariants"].items():
                if name != "J" and inv["value"] is not None:
                    self.assertIn("= " + inv["value"], text)

    def test_tolerance_and_samples_flags(self):
        code, r = run_json("--rhs", SHIFTED, "--param", "b!=0", "--abs-tol", "1e-8", "--samples", "24")
        self.assertEqual(code, 0)


if __name__ == "__main__":
    unittest.main(verbosity=2)
