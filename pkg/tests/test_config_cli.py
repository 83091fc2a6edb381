"""Configuration loading/validation and the command-line entry point."""

from __future__ import annotations

import dataclasses
import json

import numpy as np
import pytest

from hharm.cli import EXIT_OK, EXIT_REFUSED, EXIT_TOLERANCE, EXIT_USAGE, main
from hharm.config import SCHEMA, ConfigError, RunConfig
from hharm.container import read_hhfld, write_hhfld
from hharm.fields import Grid
from hharm.transform import SpectralField, inverse
from hharm.windows import bump


# ---------------------------------------------------------------------------
# RunConfig
# ---------------------------------------------------------------------------

def test_config_defaults():
    cfg = RunConfig()
    assert (cfg.d, cfg.L_max, cfg.n_rho, cfg.n_s) == (1, 64, 256, 512)
    assert (cfg.r_max, cfg.s_half, cfg.seed) == (12.0, 40.0, 42)
    assert cfg.quadrature_mode == "grid"
    g = cfg.grid()
    assert (g.n_rho, g.n_s, g.d) == (256, 512, 1)
    t = cfg.times()
    assert t.size == cfg.n_t and t[0] == 0.0 and t[-1] == cfg.t_final


@pytest.mark.parametrize(
    "kw, frag",
    [
        ({"d": 0}, "d must be"),
        ({"L_max": -1}, "L_max"),
        ({"n_rho": 4}, "n_rho"),
        ({"n_s": 100}, "power of two"),
        ({"n_s": 4}, "power of two"),
        ({"r_max": 0.0}, "positive"),
        ({"n_t": 1}, "n_t"),
        ({"quadrature_mode": "fast"}, "quadrature_mode"),
        ({"tolerances": {"plancherel-ratio": -1.0}}, "positive"),
    ],
)
def test_config_validation(kw, frag):
    with pytest.raises(ConfigError, match=frag):
        RunConfig(**kw)


def test_config_tol_lookup():
    cfg = RunConfig(tolerances={"roundtrip": 1e-3})
    assert cfg.tol("roundtrip", 1e-6) == 1e-3
    assert cfg.tol("unlisted", 1e-6) == 1e-6


def test_config_json_roundtrip(tmp_path):
    cfg = RunConfig(L_max=16, n_rho=64, n_s=128, seed=7)
    d = cfg.as_dict()
    assert d["schema"] == SCHEMA
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps(d))
    back = RunConfig.from_json(p)
    assert dataclasses.asdict(back) == dataclasses.asdict(cfg)


@pytest.mark.parametrize(
    "text, frag",
    [
        ("{not json", "not valid JSON"),
        ("[1, 2]", "top level"),
        ('{"schema": "other/9"}', "schema"),
        (f'{{"schema": "{SCHEMA}", "n_sigma": 3}}', "unknown keys"),
    ],
)
def test_config_from_json_errors(tmp_path, text, frag):
    p = tmp_path / "bad.json"
    p.write_text(text)
    with pytest.raises(ConfigError, match=frag):
        RunConfig.from_json(p)


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

SMALL = {
    "schema": SCHEMA, "d": 1, "L_max": 8, "n_rho": 64, "r_max": 12.0,
    "n_s": 128, "s_half": 40.0, "n_t": 5, "t_final": 0.5,
}


@pytest.fixture
def small_cfg(tmp_path):
    p = tmp_path / "small.json"
    p.write_text(json.dumps(SMALL))
    return str(p)


@pytest.fixture
def small_grid():
    return Grid(d=1, n_rho=64, r_max=12.0, n_s=128, s_half=40.0)


@pytest.fixture
def band_file(tmp_path, small_grid):
    """A radial field band-limited to ell <= 4, carriers inside |lam| in [.5, 2]."""
    theta = np.zeros((5, small_grid.n_s), dtype=complex)
    for ell in range(5):
        theta[ell] = (0.8**ell) * bump(np.abs(small_grid.lam), 0.5, 2.0)
    f = inverse(SpectralField(small_grid, theta))
    p = tmp_path / "band.hhfld"
    write_hhfld(p, f)
    return str(p)


def test_transform_fwd_roundtrip(tmp_path, small_cfg, band_file, capsys):
    spec_path = str(tmp_path / "band_spec.hhfld")
    code = main(["transform", "--dir", "fwd", "--in", band_file,
                 "--out", spec_path, "--config", small_cfg])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "plancherel ratio" in out
    sf = read_hhfld(spec_path)
    assert isinstance(sf, SpectralField)

    back_path = str(tmp_path / "band_back.hhfld")
    code = main(["transform", "--dir", "inv", "--in", spec_path,
                 "--out", back_path, "--config", small_cfg])
    assert code == EXIT_OK
    f0 = read_hhfld(band_file)
    f1 = read_hhfld(back_path)
    num = np.sqrt(np.sum(np.abs(f1.values - f0.values) ** 2))
    den = np.sqrt(np.sum(np.abs(f0.values) ** 2))
    assert num / den < 1e-8


def test_transform_missing_file(tmp_path, capsys):
    code = main(["transform", "--dir", "fwd", "--in", str(tmp_path / "nope.hhfld"),
                 "--out", str(tmp_path / "o.hhfld")])
    assert code == EXIT_USAGE
    assert "missing file" in capsys.readouterr().err


def test_transform_wrong_kind(tmp_path, small_cfg, band_file, capsys):
    spec_path = str(tmp_path / "s.hhfld")
    main(["transform", "--dir", "fwd", "--in", band_file,
          "--out", spec_path, "--config", small_cfg])
    capsys.readouterr()
    code = main(["transform", "--dir", "fwd", "--in", spec_path,
                 "--out", str(tmp_path / "o.hhfld"), "--config", small_cfg])
    assert code == EXIT_USAGE
    assert "radial-field" in capsys.readouterr().err


def test_transform_corrupt_container(tmp_path, capsys):
    p = tmp_path / "junk.hhfld"
    p.write_bytes(b"NOTHH" + b"\x00" * 64)
    code = main(["transform", "--dir", "fwd", "--in", str(p),
                 "--out", str(tmp_path / "o.hhfld")])
    assert code == EXIT_USAGE
    assert "hharm:" in capsys.readouterr().err


def test_transform_tolerance_breach(tmp_path, band_file, capsys):
    strict = dict(SMALL, tolerances={"plancherel-ratio": 1e-30})
    p = tmp_path / "strict.json"
    p.write_text(json.dumps(strict))
    code = main(["transform", "--dir", "fwd", "--in", band_file,
                 "--out", str(tmp_path / "o.hhfld"), "--config", str(p)])
    assert code == EXIT_TOLERANCE
    assert "tolerance breach" in capsys.readouterr().err


def test_propagate_transport_demo(small_cfg, capsys):
    code = main(["propagate", "--eq", "schrodinger", "--transport-ell", "1",
                 "--t", "0.25", "--config", small_cfg])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "expected s-shift 4*t*(2*ell+d) = 3" in out


def test_propagate_bad_time(small_cfg, capsys):
    code = main(["propagate", "--eq", "schrodinger", "--transport-ell", "0",
                 "--t", "-1", "--config", small_cfg])
    assert code == EXIT_USAGE
    assert "--t must be positive" in capsys.readouterr().err


def test_propagate_transport_needs_schrodinger(small_cfg, capsys):
    code = main(["propagate", "--eq", "wave", "--transport-ell", "0",
                 "--config", small_cfg])
    assert code == EXIT_USAGE


def test_propagate_schrodinger_conserves(tmp_path, small_cfg, band_file, capsys):
    out_path = str(tmp_path / "st.hhfld")
    code = main(["propagate", "--eq", "schrodinger", "--in", band_file,
                 "--out", out_path, "--config", small_cfg])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "L2 conservation drift" in out
    st = read_hhfld(out_path)
    assert st.values.shape[0] == SMALL["n_t"]


def test_propagate_wave_zero_velocity(small_cfg, band_file, capsys):
    code = main(["propagate", "--eq", "wave", "--in", band_file,
                 "--config", small_cfg])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "velocity datum is zero" in out
    assert "energy conservation drift" in out


def test_propagate_wave_refuses_central_velocity(tmp_path, small_cfg, small_grid,
                                                 band_file, capsys):
    theta1 = np.zeros((5, small_grid.n_s), dtype=complex)
    theta1[0, small_grid.izero + 1] = 1.0  # velocity mass next to lambda = 0
    u1 = tmp_path / "u1.hhfld"
    write_hhfld(u1, SpectralField(small_grid, theta1))
    code = main(["propagate", "--eq", "wave", "--in", band_file,
                 "--u1", str(u1), "--config", small_cfg])
    err = capsys.readouterr().err
    assert code == EXIT_REFUSED
    assert "refused" in err and "lambda = 0" in err


def test_verify_unknown_suite(capsys):
    code = main(["verify", "everything"])
    assert code == EXIT_USAGE
    err = capsys.readouterr().err
    assert "unknown suite" in err and "plancherel" in err


def test_verify_suite_report(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code = main(["verify", "hardy", "--seed", "42", "--out", str(out_path)])
    captured = capsys.readouterr()
    assert code == EXIT_OK
    assert captured.out == ""  # report goes to the file, not stdout
    assert "wall time" in captured.err
    rep = json.loads(out_path.read_text())
    assert rep["schema"] == "hharm-report/1"
    assert rep["results"] and all(r["passed"] for r in rep["results"])


def test_verify_stdout_and_determinism(tmp_path, capsys):
    code = main(["verify", "translate-identity", "--seed", "42"])
    first = capsys.readouterr().out
    assert code == EXIT_OK
    code = main(["verify", "translate-identity", "--seed", "42"])
    second = capsys.readouterr().out
    assert code == EXIT_OK
    assert first == second
    rep = json.loads(first)
    assert rep["config"]["seed"] == 42
    assert rep["passed"] is True
