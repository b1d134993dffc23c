import pytest

from bernfloat.cli import main, parse_float_literal, read_coefficient_file
from bernfloat.experiments import COLUMNS


class TestParsing:
    def test_decimal_literal(self):
        assert parse_float_literal("0.25") == 0.25

    def test_hex_literal(self):
        assert parse_float_literal("0x1.8p-3") == 0.1875

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            parse_float_literal("nan")

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_float_literal("zorp")

    def test_coefficient_file(self, tmp_path):
        path = tmp_path / "poly.txt"
        path.write_text("# comment\n1.0\n\n-0x1p2\n16\n", encoding="utf-8")
        poly = read_coefficient_file(path)
        assert poly.coeffs == (1.0, -4.0, 16.0)

    def test_empty_coefficient_file(self, tmp_path):
        path = tmp_path / "poly.txt"
        path.write_text("# nothing\n", encoding="utf-8")
        with pytest.raises(ValueError):
            read_coefficient_file(path)


class TestFigures:
    def test_fig2_writes_csv(self, tmp_path, capsys):
        out = tmp_path / "fig2.csv"
        assert main(["fig2", "--out", str(out)]) == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == ",".join(COLUMNS)
        assert len(lines) == 46
        assert "wrote 45 rows" in capsys.readouterr().out

    def test_fig1_respects_emax(self, tmp_path):
        out = tmp_path / "fig1.csv"
        assert main(["fig1", "--emax", "2", "--out", str(out)]) == 0
        assert len(out.read_text(encoding="utf-8").splitlines()) == 7

    def test_fig1_rejects_bad_emax(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["fig1", "--emax", "0", "--out", str(tmp_path / "x.csv")])
        assert exc.value.code == 2

    def test_fig3_runs(self, tmp_path):
        out = tmp_path / "fig3.csv"
        assert main(["fig3", "--out", str(out)]) == 0
        assert len(out.read_text(encoding="utf-8").splitlines()) == 99


class TestEval:
    def test_family_eval_prints_record(self, capsys):
        assert main(["eval", "--family", "1", "2", "5", "--point", "0.3"]) == 0
        out = capsys.readouterr().out
        assert "dc = " in out and "vs = " in out
        assert "bound_improved = " in out

    def test_eval_writes_csv(self, tmp_path):
        out = tmp_path / "eval.csv"
        assert main(["eval", "--family", "1", "2", "5", "--point", "0.3",
                     "--out", str(out)]) == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 2
        assert lines[0].startswith("poly,s,exact,dc,vs")

    def test_coefficient_file_eval(self, tmp_path, capsys):
        path = tmp_path / "poly.txt"
        path.write_text("0x1p0\n-0x1p2\n0x1p4\n-0x1p6\n0x1p8\n-0x1p10\n",
                        encoding="utf-8")
        assert main(["eval", "--coeffs", str(path), "--point", "0.3"]) == 0
        out = capsys.readouterr().out
        # the file holds family coefficients, so family bounds appear
        assert "bound_improved = " in out
        assert "bound_improved = \n" not in out

    def test_outside_unit_interval(self, capsys):
        assert main(["eval", "--family", "1", "0", "3", "--point", "1.5"]) == 0
        out = capsys.readouterr().out
        assert "outside-unit-interval" in out
        assert "vs = \n" in out  # VS not defined there

    def test_point_required(self):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "--family", "1", "2", "5"])
        assert exc.value.code == 2

    def test_bad_point_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "--family", "1", "2", "5", "--point", "oops"])
        assert exc.value.code == 2

    def test_missing_file_is_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "--coeffs", str(tmp_path / "nope.txt"), "--point", "0.5"])
        assert exc.value.code == 2


class TestCheck:
    def test_small_check_passes(self, capsys):
        assert main(["check", "--scaling-samples", "2000",
                     "--triangle-samples", "200"]) == 0
        out = capsys.readouterr().out
        assert out.count("[PASS]") == 4
        assert "[FAIL]" not in out


class TestUsage:
    def test_unknown_command(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_no_command(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2
