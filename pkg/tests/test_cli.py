import json
import math

import numpy as np

from cartanbundle.cli import main
from cartanbundle.serialize import dumps, mat_from_json, mat_to_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_json(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(dumps(obj))
    return str(path)


class TestExpLog:
    def test_so_exp_quarter_turn(self, tmp_path, capsys):
        infile = write_json(
            tmp_path, "w.json", mat_to_json(np.array([[0.0, -math.pi / 2], [math.pi / 2, 0.0]]))
        )
        code, out, err = run_cli(capsys, "exp", "--so", "--in", infile)
        assert code == 0 and err == ""
        R = mat_from_json(json.loads(out))
        assert np.allclose(R, [[0, -1], [1, 0]], atol=1e-12)

    def test_se_roundtrip_via_files(self, tmp_path, capsys):
        screw = {
            "omega": mat_to_json(np.array([[0.0, -0.9], [0.9, 0.0]])),
            "v": [0.3, -0.7],
        }
        infile = write_json(tmp_path, "xi.json", screw)
        outfile = str(tmp_path / "g.json")
        code, _, _ = run_cli(capsys, "exp", "--se", "--in", infile, "--out", outfile)
        assert code == 0
        code, out, err = run_cli(capsys, "log", "--se", "--in", outfile)
        assert code == 0
        back = json.loads(out)
        assert np.allclose(mat_from_json(back["omega"]), [[0, -0.9], [0.9, 0]], atol=1e-10)
        assert np.allclose(back["v"], [0.3, -0.7], atol=1e-10)

    def test_log_branch_error(self, tmp_path, capsys):
        infile = write_json(tmp_path, "r.json", mat_to_json(-np.eye(2)))
        code, out, err = run_cli(capsys, "log", "--so", "--in", infile)
        assert code == 1
        msg = json.loads(err)
        assert msg["error"] == "log_branch_ambiguity"
        code, out, _ = run_cli(capsys, "log", "--so", "--allow-pi", "--in", infile)
        assert code == 0


class TestEmbedProject:
    def test_plane_embed(self, tmp_path, capsys):
        phi = 0.4
        frame = mat_to_json(np.array([[math.cos(phi)], [math.sin(phi)]]))
        infile = write_json(tmp_path, "plane.json", {"n": 2, "p": 1, "frame": frame})
        code, out, _ = run_cli(capsys, "embed", "--in", infile)
        assert code == 0
        obj = json.loads(out)
        R = mat_from_json(obj["R"])
        c, s = math.cos(2 * phi), math.sin(2 * phi)
        assert np.allclose(R, [[c, -s], [s, c]], atol=1e-12)
        assert obj["p"] == 1 and obj["q"] == 1

    def test_project_rotation(self, tmp_path, capsys):
        theta = 1.2
        c, s = math.cos(theta), math.sin(theta)
        infile = write_json(tmp_path, "r.json", mat_to_json(np.array([[c, -s], [s, c]])))
        code, out, _ = run_cli(capsys, "project", "--n", "2", "--p", "1", "--in", infile)
        assert code == 0
        frame = mat_from_json(json.loads(out)["frame"])
        V = np.array([math.cos(theta / 2), math.sin(theta / 2)])
        assert np.linalg.norm(np.outer(frame[:, 0], frame[:, 0]) - np.outer(V, V)) <= 1e-10


class TestSample:
    def test_byte_determinism(self, capsys):
        code1, out1, _ = run_cli(capsys, "sample", "--kind", "motion", "--n", "4", "--seed", "7", "--samples", "5")
        code2, out2, _ = run_cli(capsys, "sample", "--kind", "motion", "--n", "4", "--seed", "7", "--samples", "5")
        assert code1 == code2 == 0
        assert out1 == out2

    def test_seed_changes_output(self, capsys):
        _, out1, _ = run_cli(capsys, "sample", "--kind", "rotation", "--n", "3", "--seed", "1", "--samples", "2")
        _, out2, _ = run_cli(capsys, "sample", "--kind", "rotation", "--n", "3", "--seed", "2", "--samples", "2")
        assert out1 != out2

    def test_missing_dims(self, capsys):
        code, _, err = run_cli(capsys, "sample", "--kind", "rotation")
        assert code == 1
        assert json.loads(err)["error"] == "dimension_mismatch"


class TestVerify:
    def test_verify_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n", "4", "--p", "2", "--samples", "40", "--seed", "3")
        assert code == 0
        report = json.loads(out)
        assert report["pass"] is True
        assert all(r["pass"] for r in report["properties"])

    def test_verify_fails_with_absurd_tolerance(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--n", "4", "--p", "2", "--samples", "10",
            "--tol.recon", "1e-30",
        )
        assert code == 2
        assert json.loads(out)["pass"] is False


class TestMoebius:
    def test_csv_row_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "moebius", "--format", "csv",
            "--num-theta", "64", "--num-lambda", "9",
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 64 * 9 + 1
        assert lines[0].startswith("theta,")

    def test_json_lines(self, capsys):
        code, out, _ = run_cli(capsys, "moebius", "--num-theta", "4", "--num-lambda", "3")
        assert code == 0
        records = [json.loads(line) for line in out.strip().split("\n")]
        assert len(records) == 12
        assert "line_angle" in records[0]


class TestErrorHandling:
    def test_bad_json_input(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run_cli(capsys, "exp", "--so", "--in", str(path))
        assert code == 1
        assert json.loads(err)["error"] == "invalid_input"

    def test_unknown_command(self, capsys):
        code, _, err = run_cli(capsys, "frobnicate")
        assert code == 1
        assert json.loads(err)["error"] == "bad_arguments"

    def test_tol_override_flag(self, tmp_path, capsys):
        # an absurd singularity cutoff makes the translation solve refuse any angle
        c, s = math.cos(0.9), math.sin(0.9)
        motion = {"R": mat_to_json(np.array([[c, -s], [s, c]])), "X": [0.3, -0.7]}
        infile = write_json(tmp_path, "g.json", motion)
        code, out, err = run_cli(capsys, "log", "--se", "--in", infile, "--tol.sing=10.0")
        assert code == 1
        assert json.loads(err)["error"] == "y_omega_singular"
        code, out, err = run_cli(capsys, "log", "--se", "--in", infile)
        assert code == 0

    def test_bad_tol_value(self, capsys):
        code, _, err = run_cli(capsys, "moebius", "--tol.recon", "abc")
        assert code == 1
        assert json.loads(err)["error"] == "bad_arguments"
