from __future__ import annotations

import json
import os
import tempfile
import unittest
from typing import TYPE_CHECKING
from unittest.mock import patch

import pytest

from python_renner.cli import EXIT_FAILED, EXIT_INPUT, EXIT_OK, main
from python_renner.oracle import OracleReport

from .compat import load_problem_cases, parametrize, parametrize_class, problem_path

if TYPE_CHECKING:
    from .compat import ProblemCase

problem_cases = load_problem_cases()


@parametrize_class
class TestMain(unittest.TestCase):
    @pytest.fixture(autouse=True)
    def inject_fixtures(self, capsys: pytest.CaptureFixture[str]) -> None:
        self._capsys = capsys

    def run_main(self, *argv: str) -> tuple[int, str, str]:
        status = main(list(argv))
        captured = self._capsys.readouterr()
        return status, captured.out, captured.err

    @parametrize("case", problem_cases)
    def test_classify(self, case: ProblemCase) -> None:
        status, out, _ = self.run_main("classify", case["path"])
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.splitlines()[0], case["expected"]["classify"])

    def test_classify_json(self) -> None:
        status, out, _ = self.run_main("classify", problem_path("a2"), "--json")
        self.assertEqual(status, EXIT_OK)
        result = json.loads(out)
        self.assertEqual(result["dim"], 2)
        self.assertEqual(result["J0"], [])
        self.assertEqual(result["Jgt"], [1, 2])
        self.assertTrue(result["q_sat"])
        self.assertEqual(result["components"][0]["type"], "Finite")

    def test_faces(self) -> None:
        status, out, _ = self.run_main("faces", problem_path("a2"), "--bound", "3")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.splitlines()[0], "14 faces (complete)")

        status, out, _ = self.run_main("faces", problem_path("a2"), "--bound", "3", "--json")
        result = json.loads(out)
        self.assertEqual(result["counts"], {"-1": 1, "0": 6, "1": 6, "2": 1})
        self.assertTrue(result["complete"])

        status, out, _ = self.run_main("faces", problem_path("a2_vertex"), "--dot")
        self.assertEqual(out.count("->"), 12)

    def test_faces_truncated(self) -> None:
        status, out, _ = self.run_main("faces", problem_path("a1_affine"), "--bound", "4", "--orbit-cap", "1000")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.splitlines()[0], "12 faces (truncated at sigma length 4)")

    def test_orbit_cap(self) -> None:
        status, out, _ = self.run_main("faces", problem_path("a2"), "--bound", "3")
        self.assertIn("orbit of mu: 6 points\n", out)

        status, out, _ = self.run_main("faces", problem_path("a2"), "--bound", "3", "--orbit-cap", "4")
        self.assertEqual(status, EXIT_OK)
        self.assertIn("orbit of mu: 4 points (stopped at the cap)\n", out)

        argv = ["faces", problem_path("a1_affine"), "--bound", "2", "--json"]
        status, out, _ = self.run_main(*argv, "--orbit-cap", "7")
        self.assertEqual(json.loads(out)["orbit"], {"points": 7, "complete": False})
        status, out, _ = self.run_main(*argv, "--orbit-cap", "20")
        self.assertEqual(json.loads(out)["orbit"], {"points": 20, "complete": False})

    def test_multiply(self) -> None:
        status, out, _ = self.run_main("renner", problem_path("a2"), "--mul", '{"unit": [1], "I": [1, 2]};{"I": [1]}')
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out, "(1, e|{1})\n")

        status, out, _ = self.run_main("renner", problem_path("a2"), "--json", "--mul", '{"I": null};{"I": [1]}')
        self.assertEqual(json.loads(out), {"unit": [], "sigma": [], "I": None})

    def test_bad_element(self) -> None:
        status, _, err = self.run_main("renner", problem_path("a2"), "--mul", '{"unit": [3], "I": [1]}')
        self.assertEqual(status, EXIT_INPUT)
        self.assertIn("error: column 1: ", err)

    def test_cross_section_lattice(self) -> None:
        status, out, _ = self.run_main("renner", problem_path("a2"))
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(len(out.splitlines()), 6)

    def test_table(self) -> None:
        argv = ["renner", problem_path("a2_vertex"), "--table", "--unit-bound", "3", "--sigma-bound", "3"]
        status, out, _ = self.run_main(*argv, "--json")
        self.assertEqual(status, EXIT_OK)
        result = json.loads(out)
        self.assertEqual(len(result["elements"]), 34)
        self.assertEqual(len(result["table"]), 34)
        self.assertTrue(result["complete"])

        status, out, _ = self.run_main(*argv)
        self.assertEqual(out.splitlines()[0], "34 elements (complete)")
        self.assertIn("cell of 0: 1 elements of 1", out)

    def test_verify_grm(self) -> None:
        argv = ["renner", problem_path("a2_vertex"), "--verify-grm", "--unit-bound", "3", "--sigma-bound", "3"]
        status, out, _ = self.run_main(*argv, "--samples", "500", "--json")
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(json.loads(out)["passed"])
        status, out, _ = self.run_main(*argv, "--samples", "500")
        self.assertEqual(status, EXIT_OK)
        self.assertNotIn("FAIL", out)

    def test_weights(self) -> None:
        status, out, _ = self.run_main("weights", problem_path("a2"), "--depth", "12", "--height", "2")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.splitlines()[0], "27 weights up to depth 12")
        self.assertNotIn("FAIL", out)

    def test_oracle(self) -> None:
        status, out, _ = self.run_main("oracle", problem_path("a2"))
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out, "14 faces against 14 geometric faces: isomorphic\n")

    def test_oracle_slice(self) -> None:
        status, out, _ = self.run_main("oracle", problem_path("a1_affine"), "--slice", "1", "--json")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(json.loads(out)["faces"], 4)

        status, _, err = self.run_main("oracle", problem_path("a1_affine"))
        self.assertEqual(status, EXIT_INPUT)
        self.assertIn("finite type slices: 1\n", err)

        status, _, err = self.run_main("oracle", problem_path("a1_affine"), "--slice", "one")
        self.assertEqual(status, EXIT_INPUT)

    def test_oracle_mismatch(self) -> None:
        report = OracleReport(3, 4, ["3 combinatorial faces against 4 geometric faces"], 1)
        with patch("python_renner.cli.compare_lattices", return_value=report):
            status, out, _ = self.run_main("oracle", problem_path("a2"))
        self.assertEqual(status, EXIT_FAILED)
        self.assertIn("MISMATCH", out)

    def test_input_errors(self) -> None:
        status, _, err = self.run_main("classify", problem_path("does_not_exist"))
        self.assertEqual(status, EXIT_INPUT)
        self.assertIn("error: ", err)

        directory = tempfile.mkdtemp()
        path = os.path.join(directory, "bad.json")
        with open(path, "w", encoding="utf-8") as f:
            f.write('{\n  "cartan": [[2, 1], [-1, 2]],\n  "mu": [1, 0]\n}')
        status, _, err = self.run_main("classify", path)
        self.assertEqual(status, EXIT_INPUT)
        self.assertIn("error: line 2, column 3: ", err)

    def test_out(self) -> None:
        path = os.path.join(tempfile.mkdtemp(), "lattice.json")
        status, out, _ = self.run_main("renner", problem_path("a2"), "--json", "--out", path)
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out, "")
        with open(path, encoding="utf-8") as f:
            self.assertEqual(len(json.load(f)), 5)
