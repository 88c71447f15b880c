from pathlib import Path

from sectlab import cli


def test_config_file_with_flag_override(tmp_path, capsys):
    conf = tmp_path / "run.conf"
    conf.write_text("# ei sweep\neps-min = 1e-6\neps_count = 10\nseed = 3\n")
    out = tmp_path / "out"
    code = cli.main(["ei", "--config", str(conf), "--eps-count", "9", "--out", str(out)])
    assert code == 0
    files = list(out.glob("ei_*.csv"))
    assert len(files) == 1
    assert len(files[0].read_text().splitlines()) == 10
    assert "ei: sandwich: PASS" in capsys.readouterr().out


def test_bad_config_exits_3(tmp_path):
    assert cli.main(["ei", "--eps-min", "2", "--eps-max", "1", "--out", str(tmp_path)]) == 3
    conf = tmp_path / "bad.conf"
    conf.write_text("colour = red\n")
    assert cli.main(["ei", "--config", str(conf)]) == 3
    assert cli.main(["ei", "--config", str(tmp_path / "missing.conf")]) == 3


def test_failing_verdict_exits_2(tmp_path, capsys):
    # the sqf lower-exponent fit misses its window on the default range
    code = cli.main(["sqf", "--out", str(tmp_path), "--eps-count", "10"])
    assert code == 2
    assert "FAIL" in capsys.readouterr().out


def test_plot_script_flag(tmp_path):
    assert cli.main(["vitse", "--out", str(tmp_path), "--emit-plot-script"]) == 0
    assert len(list(Path(tmp_path).glob("vitse_*.gp"))) == 1
