import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sectlab import experiments as ex
from sectlab.errors import ConfigError, DomainError


def _rows(eps, vals):
    return list(zip(eps, vals))


@given(st.floats(min_value=-2.0, max_value=2.0), st.floats(min_value=0.1, max_value=10.0))
def test_fit_recovers_power_of_inverse_eps(p, amp):
    eps = np.logspace(-8, -2, 20)
    fit = ex.fit_log_exponent(_rows(eps, amp * eps ** (-p)), "log_inv_eps")
    assert fit.slope == pytest.approx(p, abs=1e-9)
    assert fit.intercept == pytest.approx(math.log(amp), abs=1e-8)


def test_fit_recovers_power_of_log():
    eps = np.logspace(-12, -2, 25)
    fit = ex.fit_log_exponent(_rows(eps, np.log(1 / eps) ** 0.35), "loglog_inv_eps")
    assert fit.slope == pytest.approx(0.35, abs=1e-12)


def test_fit_with_noise():
    rng = np.random.default_rng(0)
    eps = np.logspace(-8, -2, 25)
    vals = np.log(1 / eps) ** 0.6 * (1 + 0.01 * rng.standard_normal(eps.size))
    assert ex.fit_log_exponent(_rows(eps, vals), "loglog_inv_eps").slope == pytest.approx(0.6, abs=0.02)


def test_fit_rejects_bad_input():
    eps = np.logspace(-8, -2, 10)
    with pytest.raises(DomainError):
        ex.fit_log_exponent(_rows(eps[:5], eps[:5]), "log_inv_eps")
    with pytest.raises(DomainError):
        ex.fit_log_exponent(_rows(eps, -eps), "log_inv_eps")
    with pytest.raises(DomainError):
        ex.fit_log_exponent(_rows(eps, eps), "sqrt")


def test_config_validation():
    with pytest.raises(ConfigError):
        ex.ExperimentConfig.for_experiment("nope")
    with pytest.raises(ConfigError):
        ex.ExperimentConfig.for_experiment("ei", eps_min=1.0, eps_max=0.5)
    with pytest.raises(ConfigError):
        ex.ExperimentConfig.for_experiment("ei", eps_count=3)
    with pytest.raises(ConfigError):
        ex.ExperimentConfig("ei", 1e-3, 1.0, 10, params={"gamma": 1})
    cfg = ex.ExperimentConfig.for_experiment("sharpness", delta=0.25, eps_count=None)
    assert cfg.param("delta") == 0.25 and cfg.eps_count == 25


def test_digest_ignores_output_location(tmp_path):
    a = ex.ExperimentConfig.for_experiment("ei", output_dir=tmp_path / "a")
    b = ex.ExperimentConfig.for_experiment("ei", output_dir=tmp_path / "b")
    c = ex.ExperimentConfig.for_experiment("ei", seed=1)
    assert a.digest() == b.digest() != c.digest()
    assert len(a.digest()) == 12


def test_ei_suite_csv_and_plot(tmp_path):
    cfg = ex.ExperimentConfig.for_experiment("ei", eps_count=12, output_dir=tmp_path, emit_plot_script=True)
    result, path = ex.run_and_write(cfg)
    assert result.passed and not result.unstable
    lines = path.read_text().splitlines()
    assert lines[0] == ",".join(result.columns)
    assert len(lines) == 1 + len(result.rows)
    first = lines[1].split(",")[0]
    assert "e" in first and len(first.split("e")[0].split(".")[1]) == 12
    gp = path.with_suffix(".gp").read_text()
    assert "set datafile separator ','" in gp and path.name in gp


def test_vitse_suite_passes():
    res = ex.run(ex.ExperimentConfig.for_experiment("vitse"))
    assert res.passed


def test_sharpness_small_run():
    cfg = ex.ExperimentConfig.for_experiment("sharpness", eps_min=1e-5, eps_count=10)
    res = ex.run(cfg)
    assert res.verdicts["lower_le_empirical"]
    assert res.verdicts["empirical_le_upper"] and not res.unstable


def test_exit_code_priorities():
    ok = ex.ExperimentResult("a", ("x",), [], verdicts={"v": True})
    bad = ex.ExperimentResult("b", ("x",), [], verdicts={"v": False})
    shaky = ex.ExperimentResult("c", ("x",), [], unstable=True)
    assert ex.exit_code([ok]) == 0
    assert ex.exit_code([ok, bad]) == 2
    assert ex.exit_code([bad, shaky]) == 4
