from runge_lab.cli import main


def test_cli_figure(tmp_path, capsys):
    rc = main(["--out", str(tmp_path), "figure", "1"])
    assert rc == 0
    assert (tmp_path / "figure1.csv").exists()
    assert "figure 1" in capsys.readouterr().out


def test_cli_figure_usage_error(tmp_path, capsys):
    rc = main(["--out", str(tmp_path), "figure", "10"])
    assert rc == 2
    assert "supported" in capsys.readouterr().err


def test_cli_run_with_params_and_svg(tmp_path):
    rc = main(
        ["--out", str(tmp_path), "--svg", "run", "--method", "ridge", "--param", "alpha=0.1"]
    )
    assert rc == 0
    assert (tmp_path / "ridge.csv").exists()
    assert (tmp_path / "ridge.svg").exists()


def test_cli_run_bad_param(tmp_path, capsys):
    rc = main(["--out", str(tmp_path), "run", "--method", "lagrange", "--param", "alpha=1"])
    assert rc == 2
    assert "alpha" in capsys.readouterr().err


def test_cli_run_config_file(tmp_path):
    cfg = tmp_path / "exp.cfg"
    cfg.write_text("# demo config\nmethod = tikhonov\ndegree = 12\nlam = 0.01\n")
    rc = main(["--out", str(tmp_path), "run", "--config", str(cfg)])
    assert rc == 0
    assert (tmp_path / "tikhonov.csv").exists()


def test_cli_sweep(tmp_path, capsys):
    rc = main(["--out", str(tmp_path), "sweep", "--method", "lagrange", "--grid", "5,10"])
    assert rc == 0
    assert (tmp_path / "sweep_lagrange.csv").exists()


def test_cli_list_methods(capsys):
    rc = main(["list-methods"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "lagrange" in out and "figure 10" in out
