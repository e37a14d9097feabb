import io

import pytest

from tropicount.cli import run_cli


def run(*argv):
    out = io.StringIO()
    code = run_cli(list(argv), stdout=out)
    return code, out.getvalue()


def test_profile():
    code, out = run("profile", "--family", "square", "--d", "2", "--n", "1")
    assert code == 0
    assert "m=4\n" in out and "sigma=0,1,2,1,0\n" in out and "budget=3\n" in out


def test_oracle():
    code, out = run("oracle", "--family", "square", "--d", "2", "--n", "1")
    assert code == 0 and "marked_admissible=4" in out
    code, out = run("oracle", "--family", "pentagon", "--d", "2", "--d1", "1", "--strategy", "naive")
    assert code == 0 and "marked_admissible=4" in out


def test_bound_csv(tmp_path):
    path = tmp_path / "t.csv"
    code, out = run("bound", "--family", "pentagon", "--d", "2", "--d1", "1", "--n-list", "64:8192:x2", "--out", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "family,d,d1,d2,n,log_lb,n_ln_n,ratio,target"
    assert len(lines) == 9
    assert "fit: A=" in out


def test_bound_plot(tmp_path):
    fig = tmp_path / "ratio.png"
    code, _ = run("bound", "--family", "square", "--d", "1", "--n-list", "4,8,16", "--out", str(tmp_path / "b.csv"), "--plot", str(fig))
    assert code == 0 and fig.stat().st_size > 0


def test_construct_modes(tmp_path):
    code, out = run("construct", "--family", "square", "--d", "4")
    assert code == 0 and "family_size=4" in out and "marked_size=16" in out and "lower_bound=16" in out
    code, out = run("construct", "--family", "square", "--d", "4", "--mode", "iterate")
    assert code == 0 and len(out.splitlines()) == 4
    path = tmp_path / "s.jsonl"
    code, _ = run("construct", "--family", "square", "--d", "6", "--mode", "sample", "--seed", "7", "--samples", "5", "--marks", "--out", str(path))
    assert code == 0 and len(path.read_text().splitlines()) == 5
    code, out = run("check", str(path))
    assert code == 0 and out.count("admissible") == 5


def test_check_flags_bad_system(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"family": "square", "params": {"d": 2}, "n": 1, "intervals": [[1, 3], [2, 2], [2, 2]]}\n')
    code, out = run("check", str(path))
    assert code == 1 and "not proper" in out


def test_verify_passes():
    code, out = run("verify", "--family", "hexagonD", "--d", "2", "--d1", "1", "--oracle", "--samples", "20")
    assert code == 0
    assert "FAIL" not in out and "PASS oracle containment" in out


def test_render(tmp_path):
    code, out = run("render", "--family", "square", "--d", "3")
    assert code == 0 and out.count("<line") == 5
    png = tmp_path / "r.png"
    code, _ = run("render", "--family", "square", "--d", "3", "--out", str(png))
    assert code == 0 and png.read_bytes()[:4] == b"\x89PNG"


@pytest.mark.parametrize(
    "argv",
    [
        ("profile", "--family", "pentagon", "--d", "2"),
        ("profile", "--family", "pentagon", "--d", "2", "--d1", "2"),
        ("construct", "--family", "hexagonC", "--d", "2", "--d1", "1", "--d2", "1"),
        ("oracle", "--family", "square", "--d", "5", "--node-budget", "10"),
        ("render", "--family", "square", "--d", "3", "--index", "9"),
    ],
)
def test_domain_errors_exit_one(argv, capsys):
    assert run(*argv)[0] == 1
    assert "error:" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ("bogus",),
        ("profile", "--family", "square"),
        ("profile", "--family", "square", "--d", "2", "--frobnicate"),
        ("bound", "--family", "square", "--d", "1", "--n-list", "9:3"),
        ("construct", "--family", "square", "--d", "2", "--seed", "-1"),
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    assert run(*argv)[0] == 2
    assert "usage:" in capsys.readouterr().err
