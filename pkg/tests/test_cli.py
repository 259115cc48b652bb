import json
import math
import subprocess
import sys

import numpy as np
import pytest

from logitbands.cli import main
from logitbands.data import lavelle_csv_text


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def lavelle_file(tmp_path):
    path = tmp_path / "lavelle.csv"
    path.write_text(lavelle_csv_text())
    return str(path)


class TestFit:
    def test_bundled_json(self, capsys, lavelle_file):
        code, out, _ = run(capsys, "fit", "--data", lavelle_file, "--link", "logit",
                           "--schema", "binomial", "--format", "json")
        assert code == 0
        d = json.loads(out)
        assert d["beta0"] == pytest.approx(-0.789, abs=1e-3)
        assert d["beta1"] == pytest.approx(0.854, abs=1e-3)

    def test_table_output(self, capsys):
        code, out, _ = run(capsys, "fit", "--data", "@lavelle")
        assert code == 0
        assert "beta0         -0.788" in out

    def test_empty_file(self, capsys, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("")
        code, _, err = run(capsys, "fit", "--data", str(path))
        assert code == 3
        assert err.startswith("error:")

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "fit", "--data", str(tmp_path / "nope.csv"))
        assert code == 3

    def test_bad_row_reports_line(self, capsys, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("x,successes,trials\n0,1,2\n1,5,2\n")
        code, _, err = run(capsys, "fit", "--data", str(path))
        assert code == 3
        assert "line 3" in err

    def test_separated(self, capsys, tmp_path):
        path = tmp_path / "sep.csv"
        path.write_text("x,successes,trials\n0,0,10\n1,10,10\n")
        code, _, err = run(capsys, "fit", "--data", str(path))
        assert code == 4
        assert "separat" in err

    def test_bernoulli_schema(self, capsys, tmp_path):
        path = tmp_path / "bern.csv"
        path.write_text("x,y\n0,0\n0,1\n1,1\n1,0\n2,1\n")
        code, out, _ = run(capsys, "fit", "--data", str(path), "--schema", "bernoulli", "--format", "json")
        assert code == 0
        assert json.loads(out)["n_obs"] == 5


class TestCritical:
    def test_two_sided_from_data(self, capsys, lavelle_file):
        code, out, _ = run(capsys, "critical", "--data", lavelle_file, "--interval", "-1.3:0.8",
                           "--alpha", ".05", "--side", "two", "--format", "json")
        assert code == 0
        d = json.loads(out)
        assert d["w"] == pytest.approx(2.206, abs=0.01)
        assert d["phi"] == pytest.approx(0.809, abs=0.005)

    def test_phi_pi(self, capsys):
        code, out, _ = run(capsys, "critical", "--phi", "3.14159265", "--alpha", ".05", "--side", "two",
                           "--format", "json")
        assert code == 0
        assert json.loads(out)["w"] == pytest.approx(2.447, abs=1e-3)

    def test_one_sided_from_data(self, capsys, lavelle_file):
        code, out, _ = run(capsys, "critical", "--data", lavelle_file, "--interval", "-1.3:-0.2",
                           "--alpha", ".05", "--side", "one", "--format", "json")
        assert code == 0
        assert json.loads(out)["w"] == pytest.approx(1.754, abs=0.01)

    def test_unrestricted_interval(self, capsys):
        code, out, _ = run(capsys, "critical", "--data", "@lavelle", "--interval", "unrestricted",
                           "--format", "json")
        assert json.loads(out)["w"] == pytest.approx(math.sqrt(-2 * math.log(0.05)), abs=1e-9)

    def test_table_format(self, capsys):
        code, out, _ = run(capsys, "critical", "--phi", "1.0")
        assert code == 0
        assert out.startswith("w = ")

    def test_needs_phi_or_data(self, capsys):
        assert run(capsys, "critical")[0] == 3

    def test_bad_phi(self, capsys):
        assert run(capsys, "critical", "--phi", "0")[0] == 3

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["critical", "--interval", "2:1", "--data", "@lavelle"])
        assert exc.value.code == 2

    def test_json_key_set(self, capsys):
        d = json.loads(run(capsys, "critical", "--phi", "1.0", "--format", "json")[1])
        assert set(d) == {"alpha", "side", "source", "w", "phi", "level", "method", "achieved_coverage",
                          "quadrature_error_bound", "iterations", "bracket"}


class TestBand:
    def test_csv_matches_formula(self, capsys, lavelle_file, lavelle_fit):
        code, out, _ = run(capsys, "band", "--data", lavelle_file, "--interval", "-1.3:0.8", "--grid", "11")
        assert code == 0
        rows = np.array([[float(v) for v in line.split(",")] for line in out.splitlines()[1:]])
        x, center, se, lo, hi = rows.T
        b = lavelle_fit.beta_hat.as_array()
        np.testing.assert_allclose(center, b[0] + b[1] * x, atol=1e-12)
        w = 2.2058796994661143
        np.testing.assert_allclose(lo, 1 / (1 + np.exp(-center + w * se)), atol=1e-6)
        np.testing.assert_allclose(hi, 1 / (1 + np.exp(-center - w * se)), atol=1e-6)

    def test_grid_two(self, capsys):
        _, out, _ = run(capsys, "band", "--data", "@lavelle", "--interval", "-1.3:0.8", "--grid", "2")
        xs = [float(line.split(",")[0]) for line in out.splitlines()[1:]]
        assert xs == [-1.3, 0.8]

    def test_upper_above_fit(self, capsys):
        _, out, _ = run(capsys, "band", "--data", "@lavelle", "--interval", "-1.3:0.8", "--side", "upper",
                        "--format", "json")
        d = json.loads(out)
        assert d["lower_p"] is None
        p_hat = 1 / (1 + np.exp(-np.array(d["center_linear"])))
        assert np.all(np.array(d["upper_p"]) > p_hat)

    def test_unrestricted_uses_data_range(self, capsys):
        _, out, _ = run(capsys, "band", "--data", "@lavelle", "--interval", "unrestricted", "--grid", "3",
                        "--format", "json")
        d = json.loads(out)
        assert d["x"] == [-1.374, 1.504, 4.382]

    def test_output_dir_env(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("LOGITBANDS_OUTPUT_DIR", str(tmp_path))
        code, out, _ = run(capsys, "band", "--data", "@lavelle", "--interval", "-1.3:0.8", "-o", "sub/band.csv")
        assert code == 0 and out == ""
        assert (tmp_path / "sub" / "band.csv").read_text().startswith("x,center_linear,se,lower_p,upper_p\n")


class TestSimulate:
    ARGS = ("simulate", "--seed", "42", "--beta0", "0", "--beta1", "1.5", "--n", "25")

    def test_single_replication(self, capsys):
        code, out, _ = run(capsys, *self.ARGS, "--replications", "1")
        assert code == 0
        d = json.loads(out)
        assert d["estimated_error"] in (0.0, 1.0)
        assert d["replications_used"] + d["fit_failures"] == 1

    def test_byte_identical(self, tmp_path, capsys):
        paths = [tmp_path / f"r{i}.json" for i in range(2)]
        for p in paths:
            assert main([*self.ARGS, "--replications", "30", "-o", str(p)]) == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_csv(self, capsys):
        _, out, _ = run(capsys, *self.ARGS, "--replications", "5", "--format", "csv")
        header, row = out.splitlines()
        assert header.startswith("beta0,beta1,n,interval,a,b,design")
        assert row.split(",")[3] == "wide"

    def test_seed_required(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["simulate", "--beta0", "0", "--beta1", "1", "--n", "25"])
        assert exc.value.code == 2

    def test_missing_beta(self, capsys):
        assert run(capsys, "simulate", "--seed", "1", "--n", "25")[0] == 3

    def test_negative_explicit_interval(self, capsys):
        _, out, _ = run(capsys, *self.ARGS, "--replications", "2", "--interval", "-1:1")
        assert json.loads(out)["config"]["endpoints"] == [-1.0, 1.0]

    def test_sweep_flag_is_documented(self, capsys):
        with pytest.raises(SystemExit):
            main(["simulate", "--help"])
        assert "--sweep {equal,concentrated}" in capsys.readouterr().out


    def test_sweep_survives_degenerate_cells(self, capsys):
        code, out, _ = run(capsys, "simulate", "--sweep", "equal", "--replications", "1", "--seed", "1",
                           "--format", "csv")
        assert code == 0
        rows = [line.split(",") for line in out.splitlines()[1:]]
        assert len(rows) == 180
        failed = [r for r in rows if r[9] == ""]
        assert failed and all(r[12] == "1" for r in failed)
        assert all(r[14] != "" for r in rows)


class TestExample:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "example")
        assert code == 0
        assert "FAIL" not in out
        assert "two-sided w (-1.3, 0.8)" in out
        assert "one-sided w (-1.3, 2)" in out

    def test_json(self, capsys):
        d = json.loads(run(capsys, "example", "--format", "json")[1])
        phi = next(r for r in d if r["quantity"] == "phi (-1.3, 0.8)")
        assert phi["computed"] == pytest.approx(0.809, abs=0.005)
        assert set(d[0]) == {"quantity", "computed", "published", "tolerance", "passed"}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "logitbands", "critical", "--phi", "3.14159265"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("w = 2.44774")
