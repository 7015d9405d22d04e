import json
import time
from pathlib import Path

import pytest

from zetaline import checks
from zetaline.cli import RunConfig, cmd_build, cmd_series, cmd_verify, main
from zetaline.errors import DomainError


@pytest.fixture(scope="module")
def built(tmp_path_factory):
    out = tmp_path_factory.mktemp("cli") / "out"
    cfg = RunConfig(max_height=100.0, truncation_T=100.0,
                    sieve_limit=10**5, out_dir=out, grid_spacing=0.05)
    assert cmd_build(cfg) == 0
    return cfg


def _data_rows(path: Path):
    return [ln for ln in path.read_text().splitlines()
            if ln and not ln.startswith("#")][1:]


def test_build_outputs(built):
    assert len(_data_rows(built.zeros_path)) == 29
    assert built.samples_path.exists()
    assert built.exclusions_path.exists()
    assert built.sieve_path.exists()


def test_rebuild_is_idempotent(built):
    before = built.zeros_path.read_bytes(), built.samples_path.read_bytes()
    assert cmd_build(built) == 0
    after = built.zeros_path.read_bytes(), built.samples_path.read_bytes()
    assert before == after


def test_build_rejects_tiny_height(tmp_path):
    cfg = RunConfig(max_height=10.0, truncation_T=10.0, sieve_limit=100,
                    out_dir=tmp_path / "o")
    with pytest.raises(DomainError):
        cmd_build(cfg)


def test_config_invariant():
    with pytest.raises(DomainError):
        RunConfig(max_height=100.0, truncation_T=200.0)


def test_verify_kernels_fast(built):
    t0 = time.time()
    rc = cmd_verify(built, ["kernels"], make_plot=True)
    assert rc == 0
    assert time.time() - t0 < 10.0
    report = json.loads((built.out_dir / "report.json").read_text())
    assert len(report) == 20
    assert all(r["pass"] for r in report)
    assert (built.out_dir / "report.png").exists()
    header = (built.out_dir / "report.csv").read_text().splitlines()[0]
    assert header == "check_id,lhs,rhs,abs_diff,tolerance,tail,pass,seconds"


def test_verify_unknown_check(built):
    assert cmd_verify(built, ["nonsense"]) == 2


def test_verify_runs_all_by_default_names():
    assert checks.CHECK_NAMES == ("kernels", "thm22", "cor23", "thm24",
                                  "thm25", "thm31", "thm32", "thm33a",
                                  "thm33b", "thm34", "spur1")


def test_series_fstar_row_count(built):
    rc = cmd_series(built, "fstar", "2:100", 1.0, make_plot=True)
    assert rc == 0
    rows = (built.out_dir / "series_fstar.csv").read_text().splitlines()[1:]
    assert len(rows) == 99
    assert (built.out_dir / "series_fstar.png").exists()


def test_series_theta_monotone_past_minimum(built):
    assert cmd_series(built, "theta", "0:100", 1.0, make_plot=False) == 0
    rows = (built.out_dir / "series_theta.csv").read_text().splitlines()[1:]
    vals = [float(r.split(",")[1]) for r in rows]
    args = [float(r.split(",")[0]) for r in rows]
    tail = [v for a, v in zip(args, vals) if a >= 7.0]
    assert all(b > a for a, b in zip(tail, tail[1:]))


def test_series_range_validation(built):
    with pytest.raises(DomainError):
        cmd_series(built, "fstar", "2:1", 1.0)
    with pytest.raises(DomainError):
        cmd_series(built, "n_decomp", "10:5000", 10.0)


def test_main_entrypoint_usage_error(tmp_path):
    rc = main(["verify", "--max-height", "100", "--truncation-T", "200",
               "--out", str(tmp_path / "x")])
    assert rc == 2


def test_main_series_smoke(tmp_path, built):
    rc = main(["series", "--what", "theta", "--range", "0:20", "--step", "1",
               "--max-height", "100", "--sieve-limit", "100000",
               "--out", str(built.out_dir), "--no-plot"])
    assert rc == 0


def test_verify_thm33b_with_x_flag(built):
    rc = cmd_verify(built, ["thm33b"], make_plot=False, x=10.0)
    assert rc == 0
    report = json.loads((built.out_dir / "report.json").read_text())
    rec = [r for r in report if r["check_id"] == "f_star_from_line_b_x=10"]
    assert len(rec) == 1 and rec[0]["pass"]
