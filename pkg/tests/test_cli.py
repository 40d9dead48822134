import csv
import io
import logging

from click.testing import CliRunner
import pytest
import yaml

from isdc.cli import cli
from isdc.experiments import SolAblation, SolMatrix, SolOrderStudy, read_csv

SMALL = ["--problem", "heat", "--grid", "16", "--dt", "1e-3"]


@pytest.fixture
def runner():
    yield CliRunner()
    logger = logging.getLogger("isdc")
    for handler in list(logger.handlers):
        if getattr(handler, "_isdc_handler", False):
            logger.removeHandler(handler)


def _records(output):
    return list(csv.DictReader(io.StringIO(output)))


def test_single_writes_csv_to_stdout(runner):
    result = runner.invoke(cli, ["--quiet", "single"] + SMALL)
    records = _records(result.output)
    pytest.assume(result.exit_code == 0)
    pytest.assume(len(records) == 1)
    pytest.assume(records[0]["converged"] == "True")
    pytest.assume(records[0]["grid"] == "16")


def test_single_with_output_file(runner, tmp_path):
    out = tmp_path / "single.csv"
    args = ["--quiet", "single", "--mode", "isdc-fixed", "--out", str(out)] + SMALL
    result = runner.invoke(cli, args + ["--no-early-stop"])
    rows = read_csv(out)
    pytest.assume(result.exit_code == 0)
    pytest.assume("ISDC" in result.output)
    pytest.assume(rows[0]["inner_cycles"] == 4 * rows[0]["sweeps"])


def test_single_with_smoother(runner, tmp_path):
    out = tmp_path / "single.csv"
    args = ["--quiet", "single", "--smoother", "jacobi", "--out", str(out)] + SMALL
    result = runner.invoke(cli, args)
    rows = read_csv(out)
    pytest.assume(result.exit_code == 0)
    pytest.assume(rows[0]["smoother"] == "jacobi")
    pytest.assume(rows[0]["converged"])


def test_early_stop_is_the_default(runner, tmp_path):
    out = tmp_path / "single.csv"
    args = ["--quiet", "single", "--mode", "isdc-fixed", "--l-cycles", "50"]
    result = runner.invoke(cli, args + ["--out", str(out)] + SMALL)
    rows = read_csv(out)
    pytest.assume(result.exit_code == 0)
    pytest.assume(rows[0]["early_stop"] is True)
    pytest.assume(rows[0]["inner_cycles"] < 100 * rows[0]["sweeps"])


def test_single_rejects_several_setups(runner, tmp_path):
    config = tmp_path / "runs.cfg"
    config.write_text("nu = [1, 10]\n")
    result = runner.invoke(cli, ["--quiet", "single", "--config", str(config)])
    assert result.exit_code == 1


def test_non_converged_run_is_not_an_error(runner, tmp_path):
    out = tmp_path / "single.csv"
    args = ["--quiet", "single", "--max-sweeps", "1", "--out", str(out)] + SMALL
    result = runner.invoke(cli, args)
    rows = read_csv(out)
    pytest.assume(result.exit_code == 0)
    pytest.assume(rows[0]["converged"] is False)
    pytest.assume(rows[0]["sweeps"] == 1)


def test_matrix_from_config(runner, tmp_path):
    config = tmp_path / "runs.cfg"
    config.write_text("problem = heat\ngrid = 16\nmode = [sdc-exact, isdc-fixed]\n")
    out = tmp_path / "matrix.csv"
    json_dir = tmp_path / "records"
    args = ["--quiet", "matrix", "--config", str(config), "--out", str(out)]
    result = runner.invoke(cli, args + ["--json", str(json_dir)])
    rows = read_csv(out)
    pytest.assume(result.exit_code == 0)
    pytest.assume([row["mode"] for row in rows] == ["sdc-exact", "isdc-fixed"])
    pytest.assume(rows[1]["savings_pct"] is not None)
    pytest.assume(len(list(json_dir.glob("run_*.json"))) == 2)


def test_matrix_saves_solution(runner, tmp_path):
    config = tmp_path / "runs.cfg"
    config.write_text("problem = heat\ngrid = 16\nmode = [sdc-exact, isdc-fixed]\n")
    args = ["--quiet", "matrix", "--config", str(config), "--name", "heat16"]
    result = runner.invoke(cli, args + ["--save", str(tmp_path)])
    sol = SolMatrix.load(tmp_path / "heat16" / "heat16.json")
    pytest.assume(result.exit_code == 0)
    pytest.assume("ISDC" in result.output)
    modes = [row["mode"] for row in sol.get_rows()]
    pytest.assume(modes == ["sdc-exact", "isdc-fixed"])
    pytest.assume(len(sol.get_records()) == 2)


def test_ablation_saves_solution(runner, tmp_path):
    args = ["--quiet", "ablation", "--save", str(tmp_path)] + SMALL
    result = runner.invoke(cli, args)
    sol = SolAblation.load(tmp_path / "results" / "results.json")
    pytest.assume(result.exit_code == 0)
    pytest.assume(len(sol.get_rows()) == 6)


@pytest.mark.parametrize(
    "text", ["nu = 1\nnu = 2\n", "colour = red\n", "grid = sixteen\n"]
)
def test_matrix_rejects_bad_config(runner, tmp_path, text):
    config = tmp_path / "runs.cfg"
    config.write_text(text)
    result = runner.invoke(cli, ["--quiet", "matrix", "--config", str(config)])
    assert result.exit_code == 1


def test_missing_config_file(runner, tmp_path):
    config = tmp_path / "missing.cfg"
    result = runner.invoke(cli, ["--quiet", "matrix", "--config", str(config)])
    pytest.assume(result.exit_code == 1)
    pytest.assume("does not exist" in result.output)


def test_unknown_flag_value(runner):
    result = runner.invoke(cli, ["single", "--mode", "exact"])
    assert result.exit_code == 2


def test_ablation(runner, tmp_path):
    out = tmp_path / "ablation.csv"
    result = runner.invoke(cli, ["--quiet", "ablation", "--out", str(out)] + SMALL)
    records = _records(out.read_text())
    pytest.assume(result.exit_code == 0)
    pytest.assume(len(records) == 6)
    pytest.assume(len({r["guess"] for r in records}) == 3)


def test_order(runner, tmp_path):
    args = ["--quiet", "order", "--problem", "dahlquist", "--sweeps", "1"]
    args += ["--sweeps", "2", "--dts", "0.1", "--dts", "0.05", "--final-time", "0.2"]
    args += ["--out", str(tmp_path / "order.csv"), "--json", str(tmp_path)]
    result = runner.invoke(cli, args)
    sol = SolOrderStudy.load(tmp_path / "order" / "order.json")
    pytest.assume(result.exit_code == 0)
    pytest.assume("Observed temporal order" in result.output)
    pytest.assume(len(sol.points) == 4)
    pytest.assume(len(_records((tmp_path / "order.csv").read_text())) == 4)


def test_order_rejects_bad_step(runner):
    args = ["--quiet", "order", "--problem", "dahlquist", "--dts", "0.3"]
    result = runner.invoke(cli, args + ["--final-time", "0.4"])
    assert result.exit_code == 1


def test_report(runner):
    result = runner.invoke(cli, ["report"])
    report = yaml.safe_load(result.output)
    pytest.assume(result.exit_code == 0)
    pytest.assume(set(report) == {"os", "python", "blas", "packages"})
    pytest.assume("numpy" in report["packages"])
