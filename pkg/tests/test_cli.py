import json

import numpy as np
import pytest

import specbasis.approximators as apx
from specbasis import fit_slope
from specbasis.cli import CSV_HEADER, main


def read_csv(path):
    lines = path.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    cols = lines[1].split(",")
    data = np.array([[float(v) for v in ln.split(",")] for ln in lines[2:]])
    return cols, data


class TestCoeffs:
    def test_reference_slopes(self, tmp_path):
        rc = main(["coeffs", "--preset", "exemplar", "--N", "400",
                   "--basis", "chebyshev,difference,quadfactor",
                   "--method", "reference", "--out", str(tmp_path)])
        assert rc == 0
        want = {"chebyshev": -5.0, "difference": -4.0, "quadfactor": -3.0}
        for basis, slope in want.items():
            cols, data = read_csv(tmp_path / f"coeffs_{basis}_reference.csv")
            assert cols == ["n", "value", "abs_value"]
            assert fit_slope(data[:, 2], 32, 256) == pytest.approx(slope, abs=0.3)

    def test_exact_preset_is_sparse(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "function": {"g_cheb": [1.0], "phi": 1.0, "vartheta": 0},
            "bases": ["chebyshev"], "methods": ["reference"], "N": [12],
            "out": str(tmp_path)}))
        assert main(["coeffs", "--config", str(cfg)]) == 0
        _, data = read_csv(tmp_path / "coeffs_chebyshev_reference.csv")
        assert np.count_nonzero(np.abs(data[:, 1]) > 1e-13) <= 3

    def test_rerun_is_byte_identical(self, tmp_path):
        args = ["coeffs", "--preset", "exemplar", "--N", "60",
                "--basis", "difference", "--method", "reference,interpolation",
                "--out", str(tmp_path)]
        assert main(args) == 0
        first = (tmp_path / "coeffs_difference_interpolation.csv").read_bytes()
        assert main(args) == 0
        second = (tmp_path / "coeffs_difference_interpolation.csv").read_bytes()
        assert first == second


class TestErrors:
    def test_exact_preset_zero_error(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "function": {"g_cheb": [1.0], "phi": 1.0, "vartheta": 0},
            "bases": ["difference"], "methods": ["truncation"],
            "N": [4, 8], "curve_N": [8], "out": str(tmp_path)}))
        assert main(["errors", "--config", str(cfg)]) == 0
        _, sweep = read_csv(tmp_path / "errnorm_difference_truncation.csv")
        assert np.all(sweep[:, 1] < 1e-14)
        _, curve = read_csv(tmp_path / "errcurve_difference_truncation_N8.csv")
        assert curve.shape[1] == 2
        assert np.all(curve[:, 1] < 1e-14)

    def test_interpolation_norms_nearly_identical(self, tmp_path):
        rc = main(["errors", "--preset", "exemplar", "--N", "16,32,64",
                   "--basis", "chebyshev,difference,quadfactor",
                   "--method", "interpolation", "--out", str(tmp_path)])
        assert rc == 0
        _, d = read_csv(tmp_path / "errnorm_difference_interpolation.csv")
        _, q = read_csv(tmp_path / "errnorm_quadfactor_interpolation.csv")
        np.testing.assert_allclose(d[:, 1], q[:, 1], rtol=1e-9)
        # the v-interpolant companion sweep is emitted alongside
        _, v = read_csv(tmp_path / "errnorm_vcheb_interpolation.csv")
        assert v.shape[0] == 3


class TestTables:
    def test_small_tables(self, tmp_path):
        rc = main(["tables", "--preset", "exemplar", "--N", "10,20",
                   "--out", str(tmp_path)])
        assert rc == 0
        cols, t1 = read_csv(tmp_path / "table1_coeff_ratios.csv")
        assert cols == ["n", "interp_ratio", "ls_ratio"]
        assert np.all(t1[:, 0] <= 20)
        cols, t2 = read_csv(tmp_path / "table2_error_ratios.csv")
        assert list(t2[:, 0]) == [10.0, 20.0]
        # the interpolation/truncation norm ratio is ~2 at every N
        np.testing.assert_allclose(t2[:, 1], 1.98, atol=0.1)


class TestAliasing:
    def test_synthetic_power_law(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "spectrum": {"kind": "power", "k": 4, "length": 16384},
            "N": [64], "out": str(tmp_path)}))
        assert main(["aliasing", "--config", str(cfg)]) == 0
        cols, data = read_csv(tmp_path / "aliasing_N64.csv")
        assert cols == ["n", "a_ref", "a_interp", "predicted", "measured",
                        "power_bound"]
        row8 = data[8]
        assert row8[3] == pytest.approx(row8[4], rel=0.05)   # predicted vs measured
        assert abs(row8[4]) <= row8[5]                        # bound holds

    def test_single_mode(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "spectrum": {"kind": "single", "degree": 96}, "N": [64],
            "out": str(tmp_path)}))
        assert main(["aliasing", "--config", str(cfg)]) == 0
        _, data = read_csv(tmp_path / "aliasing_N64.csv")
        hits = np.nonzero(np.abs(data[:, 4]) > 1e-13)[0]
        np.testing.assert_array_equal(hits, [32])
        assert data[32, 4] == pytest.approx(-1.0, abs=1e-12)

    def test_zero_tail(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "spectrum": {"kind": "single", "degree": 10}, "N": [64],
            "out": str(tmp_path)}))
        assert main(["aliasing", "--config", str(cfg)]) == 0
        _, data = read_csv(tmp_path / "aliasing_N64.csv")
        np.testing.assert_allclose(data[:, 3], 0.0, atol=1e-15)
        np.testing.assert_allclose(data[:, 4], 0.0, atol=1e-13)


class TestGrids:
    def test_json_output(self, tmp_path):
        rc = main(["grids", "--N", "8", "--format", "json",
                   "--out", str(tmp_path)])
        assert rc == 0
        nodes = json.loads((tmp_path / "grid_roots_N8.json").read_text())
        assert len(nodes) == 8
        lob = json.loads((tmp_path / "grid_lobatto_N8.json").read_text())
        assert lob[0] == -1.0 and lob[-1] == 1.0

    def test_csv_output(self, tmp_path):
        assert main(["grids", "--N", "4", "--out", str(tmp_path)]) == 0
        cols, data = read_csv(tmp_path / "grid_roots_N4.csv")
        assert cols == ["x"]
        assert np.all(np.diff(data[:, 0]) > 0)


class TestExitCodes:
    def test_config_error_bad_preset(self, tmp_path, capsys):
        assert main(["coeffs", "--preset", "nope", "--out", str(tmp_path)]) == 2
        assert "config error" in capsys.readouterr().err

    def test_config_error_nonincreasing_n(self, tmp_path):
        assert main(["coeffs", "--N", "20,10", "--out", str(tmp_path)]) == 2

    def test_config_error_bad_json(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{ not json")
        assert main(["coeffs", "--config", str(bad)]) == 2

    def test_numerical_failure(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setattr(apx, "COND_LIMIT", 1.0)
        rc = main(["coeffs", "--preset", "exemplar", "--N", "8",
                   "--basis", "difference", "--method", "leastsquares",
                   "--ncol", "32", "--out", str(tmp_path)])
        assert rc == 3
        assert "numerical failure" in capsys.readouterr().err

    def test_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2


def test_json_format_tables(tmp_path):
    rc = main(["coeffs", "--preset", "exemplar", "--N", "16",
               "--basis", "chebyshev", "--method", "reference",
               "--format", "json", "--out", str(tmp_path)])
    assert rc == 0
    doc = json.loads((tmp_path / "coeffs_chebyshev_reference.json").read_text())
    assert doc["columns"] == ["n", "value", "abs_value"]
    assert len(doc["rows"]) == 16
