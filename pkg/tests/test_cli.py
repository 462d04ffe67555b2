import subprocess
import sys


from stickymass.cli import main, read_config


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_simulate(capsys):
    status, out, _ = run(capsys, "simulate", "--dist", "uniform:3", "--alpha", "0.5", "--n", "12", "--seed", "4")
    letters = out.split()
    assert status == 0 and len(letters) == 12 and set(letters) <= {"1", "2", "3"}
    _, again, _ = run(capsys, "simulate", "--dist", "uniform:3", "--alpha", "0.5", "--n", "12", "--seed", "4")
    assert again == out
    status, out, _ = run(capsys, "simulate", "--dist", "uniform:3", "--alpha", "0.5", "--n", "7", "--method", "repeats")
    assert status == 0 and len(out.split()) == 7


def test_estimate_from_file(tmp_path, capsys):
    f = tmp_path / "seq.txt"
    f.write_text("1 2 3 1\n")
    status, out, _ = run(capsys, "estimate", "--input", str(f), "--alpha", "0")
    fields = dict(line.split(": ") for line in out.splitlines())
    assert status == 0
    assert fields["phi1_interior"] == "2"
    assert fields["modified_good_turing_known"] == "1.0"
    assert fields["state_changes"] == "3"


def test_estimate_auto_and_clip(tmp_path, capsys):
    f = tmp_path / "seq.txt"
    f.write_text("1 1 2 3 3 4 4 4")
    status, out, _ = run(capsys, "estimate", "--input", str(f), "--alpha", "auto", "--clip")
    fields = dict(line.split(": ") for line in out.splitlines())
    assert status == 0 and "alpha_known" not in fields
    assert 0.0 <= float(fields["modified_good_turing_estimated"]) <= 1.0


def test_estimate_auto_needs_input(capsys):
    status, _, err = run(capsys, "estimate", "--dist", "uniform:3", "--n", "10", "--alpha", "auto")
    assert status == 2 and "--input" in err


def test_mse_and_config(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# grid\ndist = uniform:20\nalpha = 0.5\nalpha = 0.7\nn = 15\ntrials = 20\nseed = 3\n")
    status, out, _ = run(capsys, "mse", "--config", str(cfg))
    lines = out.splitlines()
    assert status == 0 and len(lines) == 3 and lines[0].startswith("alpha,n,trials")
    # a flag overrides the config value
    _, out2, _ = run(capsys, "mse", "--config", str(cfg), "--seed", "4")
    assert out2 != out
    assert read_config(str(cfg))["alpha"] == ["0.5", "0.7"]


def test_bad_config(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("just words\n")
    status, _, err = run(capsys, "mse", "--config", str(cfg))
    assert status == 2 and "key = value" in err


def test_bounds(capsys):
    status, out, _ = run(capsys, "bounds", "--n", "100", "--alpha", "0.5", "--dist", "uniform:120")
    fields = dict(line.split(": ") for line in out.splitlines())
    assert status == 0
    assert float(fields["lower_bound"]) <= float(fields["exact_mse"]) <= float(fields["upper_bound_leading"])
    status, out, _ = run(capsys, "bounds", "--n", "100", "--alpha", "0.5", "--csv")
    assert out.splitlines()[0].startswith("n,alpha,lower_bound")


def test_verify(capsys):
    status, out, _ = run(capsys, "verify", "--grid", "small")
    assert status == 0 and "ALL PASS" in out


def test_out_file(tmp_path, capsys):
    out = tmp_path / "s.txt"
    status, printed, _ = run(capsys, "simulate", "--dist", "uniform:2", "--alpha", "0", "--n", "5", "--out", str(out))
    assert status == 0 and printed == "" and len(out.read_text().split()) == 5


def test_invalid_values(capsys):
    status, _, err = run(capsys, "simulate", "--dist", "uniform:3", "--alpha", "1.5", "--n", "5")
    assert status == 2 and "alpha" in err


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "stickymass", "bounds", "--n", "50", "--alpha", "0.2"],
        capture_output=True, text=True, check=True,
    )
    assert "lower_bound" in res.stdout
