import json
import math
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "schlicht"]


def run_cli(*args, stdin: str = ""):
    return subprocess.run(
        CLI + list(args), input=stdin, capture_output=True, text=True, timeout=120
    )


def build(name: str, order: int = 64) -> str:
    proc = run_cli("build", name, "--order", str(order))
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


class TestBuild:
    def test_koebe_coefficients_are_indices(self):
        payload = json.loads(build("koebe", 8))
        assert payload["order"] == 8
        assert payload["coeffs"] == [[float(k), 0.0] for k in range(9)]

    def test_unknown_tag_exits_two(self):
        proc = run_cli("build", "lemniscate")
        assert proc.returncode == 2

    def test_unknown_verb_exits_two(self):
        proc = run_cli("frobnicate")
        assert proc.returncode == 2

    def test_output_file(self, tmp_path):
        out = tmp_path / "f.json"
        proc = run_cli("build", "moebius", "--order", "4", "--output", str(out))
        assert proc.returncode == 0
        payload = json.loads(out.read_text())
        assert payload["coeffs"][1] == [2.0, 0.0]


class TestFunctional:
    def test_fekete_koebe_from_file(self, tmp_path):
        path = tmp_path / "koebe.json"
        path.write_text(build("koebe", 8))
        proc = run_cli("functional", "fekete", "--alpha", "0", "--input", str(path))
        assert proc.returncode == 0
        report = json.loads(proc.stdout)
        assert report["value"] == 3.0
        assert report["bound"] == 3.0
        assert report["margin"] == 0.0

    def test_fekete_from_pipe(self):
        proc = run_cli("functional", "fekete", "--alpha", "0.5", stdin=build("koebe", 8))
        assert proc.returncode == 0
        report = json.loads(proc.stdout)
        assert abs(report["value"] - 1.0) < 1e-12

    def test_hankel_koebe_three_by_three(self):
        proc = run_cli("functional", "hankel", "--q", "3", "--n", "1", "--function", "koebe")
        assert proc.returncode == 0
        value = json.loads(proc.stdout)["value"]
        assert abs(complex(value[0], value[1])) < 1e-10

    def test_bieberbach_koebe(self):
        proc = run_cli("functional", "bieberbach", "--function", "koebe")
        report = json.loads(proc.stdout)
        assert report["value"] == 0.0
        assert report["margin"] == 0.0

    def test_covering_koebe_extremal(self):
        proc = run_cli(
            "functional", "covering", "--xi", "-0.25", "--function", "koebe"
        )
        report = json.loads(proc.stdout)
        assert abs(report["value"] - 2.0) < 1e-9
        assert abs(report["margin"]) < 1e-9

    def test_covering_requires_xi(self):
        proc = run_cli("functional", "covering", "--function", "koebe")
        assert proc.returncode == 2

    def test_malformed_stdin_exits_two(self):
        proc = run_cli("functional", "bieberbach", stdin="not json {")
        assert proc.returncode == 2


class TestTransform:
    def test_double_libera_round_trip(self):
        once = run_cli("transform", "libera", stdin=build("koebe", 16))
        assert once.returncode == 0
        twice = run_cli("transform", "libera", stdin=once.stdout)
        assert twice.returncode == 0
        coeffs = json.loads(twice.stdout)["coeffs"]
        for k in range(1, 17):
            want = k * (2.0 / (k + 1.0)) ** 2
            assert abs(coeffs[k][0] - want) < 1e-12
            assert coeffs[k][1] == 0.0

    def test_convolve_requires_with(self):
        proc = run_cli("transform", "convolve", stdin=build("koebe", 8))
        assert proc.returncode == 2

    def test_linsum_endpoint(self, tmp_path):
        other = tmp_path / "identity.json"
        other.write_text(build("identity", 8))
        proc = run_cli(
            "transform", "linsum", "--t", "1", "--with", str(other),
            stdin=build("koebe", 8),
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout) == json.loads(other.read_text())

    def test_iterate_rejects_class_s_input(self):
        proc = run_cli(
            "transform", "iterate", "--alpha", "1", "--n", "1", stdin=build("koebe", 8)
        )
        assert proc.returncode == 2

    def test_iterate_sigma_on_moebius(self):
        proc = run_cli(
            "transform", "iterate-sigma", "--sigma", "3", "--n", "2",
            stdin=build("moebius", 8),
        )
        assert proc.returncode == 0
        coeffs = json.loads(proc.stdout)["coeffs"]
        for k in range(1, 9):
            want = 2.0 * (3.0 / (3.0 + k)) * (2.0 / (2.0 + k))
            assert abs(coeffs[k][0] - want) < 1e-12


class TestCheck:
    def test_starlike_koebe(self):
        proc = run_cli(
            "check", "--class", "starlike", "--function", "koebe", "--r", "0.5"
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload == {"class": "starlike", "holds": True, "r": 0.5}

    def test_injectivity_failure_still_exits_zero(self):
        proc = run_cli(
            "check", "--class", "injectivity", "--function", "thmA", "--r", "0.6"
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["holds"] is False

    def test_boundary_csv(self, tmp_path):
        path = tmp_path / "curve.csv"
        proc = run_cli(
            "check", "--class", "starlike", "--function", "koebe", "--r", "0.5",
            "--angles", "32", "--boundary", str(path),
        )
        assert proc.returncode == 0
        lines = path.read_text().strip().splitlines()
        assert lines[0] == "theta,re,im"
        assert len(lines) == 33
        theta, re, im = lines[1].split(",")
        assert float(theta) == 0.0
        # koebe at z = 0.5: 0.5/0.25 = 2
        assert abs(float(re) - 2.0) < 1e-9
        assert abs(float(im)) < 1e-12


class TestRadius:
    def test_local_univalence_named_function(self):
        proc = run_cli(
            "radius", "local-univalence", "--function", "thmA", "--tol", "1e-6"
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        mid = 0.5 * (payload["lo"] + payload["hi"])
        assert abs(mid - (math.sqrt(2.0) - 1.0)) < 1e-6
        assert payload["capped"] is False

    def test_predicate_flag_spelling(self):
        proc = run_cli(
            "radius", "--predicate", "convex", "--function", "koebe", "--tol", "1e-4"
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        mid = 0.5 * (payload["lo"] + payload["hi"])
        assert abs(mid - (2.0 - math.sqrt(3.0))) < 1e-4

    def test_function_and_input_conflict(self):
        proc = run_cli(
            "radius", "starlike", "--function", "koebe", "--input", "x.json"
        )
        assert proc.returncode == 2

    def test_degenerate_probe_exits_one(self):
        doc = json.dumps(
            {"order": 2, "coeffs": [[0.0, 0.0], [1.0, 0.0], [5000.0, 0.0]]}
        )
        proc = run_cli("radius", "local-univalence", stdin=doc)
        assert proc.returncode == 1
        assert "error:" in proc.stderr


class TestSample:
    def test_deterministic_bytes(self):
        a = run_cli("sample", "--seed", "7", "--atoms", "3", "--order", "16")
        b = run_cli("sample", "--seed", "7", "--atoms", "3", "--order", "16")
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout

    def test_measure_output(self):
        proc = run_cli("sample", "--seed", "3", "--atoms", "4", "--measure")
        assert proc.returncode == 0
        atoms = json.loads(proc.stdout)["atoms"]
        assert len(atoms) == 4
        assert abs(sum(mu for _, mu in atoms) - 1.0) < 1e-12

    def test_atom_count_validated(self):
        proc = run_cli("sample", "--atoms", "0")
        assert proc.returncode == 2


class TestReport:
    def test_hundred_samples_clean(self):
        proc = run_cli("report", "--seed", "0", "--samples", "100")
        assert proc.returncode == 0, proc.stderr
        payload = json.loads(proc.stdout)
        assert payload["total_violations"] == 0
        assert set(payload["checks"]) == {
            "coefficient_bound",
            "pommerenke",
            "ratio_positive",
            "bounded_turning",
            "starlike",
            "close_to_convex",
        }

    def test_single_atom_margins_exactly_zero(self):
        proc = run_cli("report", "--seed", "0", "--samples", "1")
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["checks"]["coefficient_bound"]["worst_margin"] == 0.0

    def test_byte_identical_repeats(self):
        a = run_cli("report", "--seed", "5", "--samples", "20")
        b = run_cli("report", "--seed", "5", "--samples", "20")
        assert a.stdout == b.stdout
        assert a.stdout.endswith("\n")
