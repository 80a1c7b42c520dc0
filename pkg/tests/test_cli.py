"""Command-line interface: flags, outputs, formats, exit codes."""

import csv
import io
import json
import math

import pytest

from latticedet.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_report(text):
    out = {}
    for line in text.strip().splitlines():
        key, _, value = line.partition(" = ")
        out[key] = value
    return out


def parse_csv(text):
    rows = list(csv.DictReader(io.StringIO(text)))
    return rows


class TestDetratio:
    def test_linear_p300_with_continuum(self, capsys):
        code, out, _ = run(
            capsys, "detratio", "linear", "--b", "1", "--p", "300", "--continuum"
        )
        assert code == 0
        report = parse_report(out)
        assert float(report["discrete_ratio"]) == pytest.approx(1.08533860, abs=1e-7)
        assert float(report["continuum_ratio"]) == pytest.approx(1.085339648, abs=1e-8)
        assert float(report["rel_error"]) == pytest.approx(1.0e-6, abs=5e-7)

    def test_linear_zero_strength(self, capsys):
        code, out, _ = run(capsys, "detratio", "linear", "--b", "0", "--p", "10")
        assert code == 0
        assert float(parse_report(out)["discrete_ratio"]) == 1.0

    def test_rosen_morse_with_continuum(self, capsys):
        code, out, _ = run(
            capsys, "detratio", "rosen-morse", "--l", "1", "--p", "3", "--continuum"
        )
        assert code == 0
        report = parse_report(out)
        assert float(report["discrete_ratio"]) == pytest.approx(0.719906832, abs=1e-8)
        assert float(report["continuum_ratio"]) == pytest.approx(0.710682047486, abs=1e-9)

    def test_usage_error_on_missing_flags(self, capsys):
        code, _, _ = run(capsys, "detratio", "linear", "--b", "1")
        assert code == 2


class TestSpectrum:
    def test_raw_csv_zero_mode_triple(self, capsys, tmp_path):
        path = tmp_path / "v.csv"
        path.write_text("-1\n-2\n-3\n", encoding="utf-8")
        code, out, _ = run(capsys, "spectrum", "--potential", str(path))
        assert code == 0
        values = [float(line) for line in out.strip().splitlines()]
        root3 = math.sqrt(3.0)
        assert values[0] == pytest.approx(-root3, abs=1e-7)
        assert values[1] == pytest.approx(0.0, abs=1e-10)
        assert values[2] == pytest.approx(root3, abs=1e-7)

    def test_builtin_free(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--potential", "free", "--p", "4")
        assert code == 0
        values = [float(line) for line in out.strip().splitlines()]
        want = [2.0 - 2.0 * math.cos(n * math.pi / 5.0) for n in range(1, 5)]
        assert values == pytest.approx(want, abs=1e-9)

    def test_robin_zero_equals_neumann_byte_for_byte(self, capsys, tmp_path):
        path = tmp_path / "v.csv"
        path.write_text("0.4\n-0.2\n0.9\n1.1\n", encoding="utf-8")
        code1, out1, _ = run(
            capsys, "spectrum", "--potential", str(path), "--bc", "robin:0,0", "--vectors"
        )
        code2, out2, _ = run(
            capsys, "spectrum", "--potential", str(path), "--bc", "neumann", "--vectors"
        )
        assert code1 == code2 == 0
        assert out1 == out2

    def test_potential_row_count_mismatch(self, capsys, tmp_path):
        path = tmp_path / "v.csv"
        path.write_text("1\n2\n", encoding="utf-8")
        code, _, err = run(capsys, "spectrum", "--potential", str(path), "--p", "5")
        assert code == 2
        assert "does not match" in err

    def test_bad_bc_spec(self, capsys):
        code, _, _ = run(
            capsys, "spectrum", "--potential", "free", "--p", "3", "--bc", "robin:1"
        )
        assert code == 2

    def test_vectors_in_csv(self, capsys):
        code, out, _ = run(
            capsys,
            "spectrum", "--potential", "linear:b=1", "--p", "3",
            "--vectors", "--format", "csv",
        )
        assert code == 0
        rows = parse_csv(out)
        assert list(rows[0].keys()) == ["n", "eigenvalue", "y1", "y2", "y3"]
        assert all(float(row["y1"]) == 1.0 for row in rows)


class TestFigure:
    def test_fig1_rows(self, capsys):
        code, out, _ = run(
            capsys,
            "figure", "fig1", "--bmin", "-2", "--bmax", "2", "--steps", "5",
            "--p", "20",
        )
        assert code == 0
        rows = parse_csv(out)
        assert [row["b"] for row in rows] == ["-2.0", "-1.0", "0.0", "1.0", "2.0"]
        middle = rows[2]
        assert float(middle["discrete_ratio"]) == 1.0
        assert float(middle["continuum_ratio"]) == 1.0

    def test_fig1_to_file(self, capsys, tmp_path):
        target = tmp_path / "fig1.csv"
        code, out, _ = run(
            capsys,
            "figure", "fig1", "--bmin", "-1", "--bmax", "1", "--steps", "3",
            "--p", "10", "--out", str(target),
        )
        assert code == 0
        assert out == ""
        text = target.read_text(encoding="utf-8")
        assert text.startswith("b,discrete_ratio,continuum_ratio\n")
        assert "\r" not in text

    def test_fig1_unwritable_path(self, capsys, tmp_path):
        code, _, err = run(
            capsys,
            "figure", "fig1", "--steps", "2", "--out",
            str(tmp_path / "missing" / "fig1.csv"),
        )
        assert code == 1
        assert err

    def test_fig2_rows(self, capsys):
        code, out, _ = run(
            capsys, "figure", "fig2", "--lmin", "-0.5", "--lmax", "0.5", "--steps", "3"
        )
        assert code == 0
        rows = parse_csv(out)
        assert list(rows[0].keys()) == ["l", "p3_ratio", "p5_ratio", "continuum_ratio"]
        at_zero = rows[1]
        assert float(at_zero["l"]) == 0.0
        for key in ("p3_ratio", "p5_ratio", "continuum_ratio"):
            assert float(at_zero[key]) == 1.0
        repulsive = rows[0]
        assert float(repulsive["l"]) == -0.5
        for key in ("p3_ratio", "p5_ratio", "continuum_ratio"):
            assert float(repulsive[key]) > 1.0

    def test_bad_range(self, capsys):
        code, _, _ = run(capsys, "figure", "fig1", "--bmin", "2", "--bmax", "-2")
        assert code == 2
        code, _, _ = run(capsys, "figure", "fig1", "--steps", "1")
        assert code == 2


class TestLommel:
    def test_closed_transitional_value(self, capsys):
        code, out, _ = run(
            capsys,
            "lommel", "eval", "--nu", "2000", "--p", "9", "--z", "2000",
            "--method", "closed",
        )
        assert code == 0
        assert float(parse_report(out)["closed"]) == pytest.approx(10.84393086, abs=1e-6)

    def test_all_methods_trivial_degree(self, capsys):
        code, out, _ = run(
            capsys,
            "lommel", "eval", "--nu", "0.5", "--p", "0", "--z", "3", "--method", "all",
        )
        assert code == 0
        report = parse_report(out)
        for method in ("closed", "recurrence", "bessel"):
            assert float(report[method]) == pytest.approx(1.0, rel=1e-12)

    def test_all_methods_agree(self, capsys):
        code, out, _ = run(
            capsys,
            "lommel", "eval", "--nu", "0.4", "--p", "5", "--z", "3", "--method", "all",
        )
        assert code == 0
        report = parse_report(out)
        assert float(report["max_pairwise_deviation"]) < 1e-9

    def test_all_includes_asymptotic_on_transitional_line(self, capsys):
        code, out, _ = run(
            capsys,
            "lommel", "eval", "--nu", "2000", "--p", "9", "--z", "2000",
            "--method", "all",
        )
        assert code == 0
        report = parse_report(out)
        assert float(report["asymptotic"]) == pytest.approx(10.85339648, abs=1e-6)

    def test_bessel_integer_order_flags_fallback(self, capsys):
        code, out, _ = run(
            capsys,
            "lommel", "eval", "--nu", "2", "--p", "4", "--z", "5", "--method", "bessel",
        )
        assert code == 0
        assert "closed-form fallback" in out

    def test_asymptotic_off_line_is_domain_error(self, capsys):
        code, _, err = run(
            capsys,
            "lommel", "eval", "--nu", "3", "--p", "4", "--z", "5",
            "--method", "asymptotic",
        )
        assert code == 1
        assert "transitional" in err

    def test_all_skips_inapplicable_routes(self, capsys):
        # non-integer order beyond the Bessel window: `all` still succeeds
        # with the closed, recurrence, and asymptotic routes
        code, out, _ = run(
            capsys,
            "lommel", "eval", "--nu", "2000.5", "--p", "9", "--z", "2000.5",
            "--method", "all",
        )
        assert code == 0
        report = parse_report(out)
        assert "bessel" not in report
        assert set(report) == {"closed", "recurrence", "asymptotic", "max_pairwise_deviation"}

    def test_bessel_outside_window_is_domain_error(self, capsys):
        code, _, err = run(
            capsys,
            "lommel", "eval", "--nu", "2000.5", "--p", "9", "--z", "2000.5",
            "--method", "bessel",
        )
        assert code == 1
        assert "series domain" in err


class TestConvergence:
    def test_unit_strength_table(self, capsys):
        code, out, _ = run(
            capsys, "convergence", "linear", "--b", "1", "--pmax", "300"
        )
        assert code == 0
        rows = {int(row["p"]): row for row in parse_csv(out)}
        assert sorted(rows) == [1, 3, 10, 30, 100, 300]
        assert float(rows[1]["discrete_ratio"]) == 1.0625
        assert float(rows[3]["discrete_ratio"]) == pytest.approx(1.07947, abs=1e-5)
        assert float(rows[10]["discrete_ratio"]) == pytest.approx(1.08456, abs=5e-6)
        errors = [float(rows[p]["abs_error"]) for p in sorted(rows)]
        assert errors == sorted(errors, reverse=True)

    def test_observed_convergence_order(self, capsys):
        # Richardson estimate from the last two rows: the three-point
        # Laplacian converges at second order in the step
        code, out, _ = run(
            capsys, "convergence", "linear", "--b", "1", "--pmax", "300"
        )
        assert code == 0
        rows = {int(row["p"]): row for row in parse_csv(out)}
        e100 = float(rows[100]["abs_error"])
        e300 = float(rows[300]["abs_error"])
        order = math.log(e100 / e300) / math.log(301.0 / 101.0)
        assert order == pytest.approx(2.0, abs=0.15)

    def test_zero_strength_errors_vanish(self, capsys):
        code, out, _ = run(capsys, "convergence", "linear", "--b", "0", "--pmax", "30")
        assert code == 0
        for row in parse_csv(out):
            assert float(row["abs_error"]) == 0.0


class TestZeromode:
    def test_descending_triple_report(self, capsys, tmp_path):
        path = tmp_path / "v.csv"
        path.write_text("-1\n-2\n-3\n", encoding="utf-8")
        code, out, _ = run(capsys, "zeromode", "--potential", str(path))
        assert code == 0
        report = parse_report(out)
        assert report["zero_mode"] == "1 1 -1"
        assert float(report["reduced_determinant"]) == -3.0
        assert float(report["eigenvalue_product"]) == pytest.approx(-3.0, abs=1e-10)
        assert float(report["cross_check_difference"]) < 1e-10

    def test_free_potential_exits_one(self, capsys, tmp_path):
        path = tmp_path / "v.csv"
        path.write_text("0\n0\n0\n", encoding="utf-8")
        code, _, err = run(capsys, "zeromode", "--potential", str(path))
        assert code == 1
        assert "characteristic(0)" in err
        assert "4.0" in err  # the free terminal value p + 1


class TestFormatsAndDeterminism:
    def test_csv_json_same_numbers(self, capsys):
        args = ["figure", "fig1", "--bmin", "-1", "--bmax", "1", "--steps", "5", "--p", "7"]
        code, csv_text, _ = run(capsys, *args, "--format", "csv")
        assert code == 0
        code, json_text, _ = run(capsys, *args, "--format", "json")
        assert code == 0
        csv_rows = parse_csv(csv_text)
        payload = json.loads(json_text)
        assert payload["meta"]["command"] == "figure fig1"
        assert payload["meta"]["parameters"]["steps"] == 5
        assert len(payload["data"]) == len(csv_rows)
        for csv_row, json_row in zip(csv_rows, payload["data"]):
            for key, value in json_row.items():
                assert float(csv_row[key]) == value

    def test_json_meta_version(self, capsys):
        import latticedet

        code, out, _ = run(
            capsys, "detratio", "linear", "--b", "1", "--p", "3", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["meta"]["version"] == latticedet.__version__

    def test_repeated_runs_byte_identical(self, capsys):
        args = [
            "figure", "fig2", "--lmin", "-2", "--lmax", "2", "--steps", "9",
            "--format", "csv",
        ]
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_thread_env_does_not_change_output(self, capsys, monkeypatch):
        args = ["convergence", "linear", "--b", "1.3", "--pmax", "100"]
        _, serial, _ = run(capsys, *args)
        monkeypatch.setenv("LATTICE_DET_THREADS", "4")
        _, threaded, _ = run(capsys, *args)
        assert serial == threaded

    def test_bad_thread_env(self, capsys, monkeypatch):
        monkeypatch.setenv("LATTICE_DET_THREADS", "zero")
        code, _, err = run(
            capsys, "figure", "fig1", "--bmin", "-1", "--bmax", "1", "--steps", "3"
        )
        assert code == 2
        assert "LATTICE_DET_THREADS" in err

    def test_data_floats_round_trip(self, capsys):
        code, out, _ = run(
            capsys,
            "detratio", "linear", "--b", "1", "--p", "300", "--format", "csv",
        )
        assert code == 0
        row = parse_csv(out)[0]
        from latticedet import LinearPotentialParams, det_ratio, linear_lattice_potential

        exact = det_ratio(linear_lattice_potential(LinearPotentialParams(1.0, 300)))
        assert float(row["discrete_ratio"]) == exact
