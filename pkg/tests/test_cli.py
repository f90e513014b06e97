import json

import pytest

from matroid_hopf.cli import IDENTITIES, main, verify
from matroid_hopf.textformat import parse_matroid


@pytest.fixture
def write(tmp_path):
    def _write(text, name="m.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tutte_command(capsys, write):
    assert run(capsys, "tutte", write("n 3\nuniform 2 3\n"))[:2] == (0, "x^2 + x + y\n")
    assert run(capsys, "tutte", write("n 0\nuniform 0 0\n"))[:2] == (0, "1\n")
    assert run(capsys, "tutte", write("n 1\nuniform 1 1\n"), "--algorithm", "both")[:2] == (0, "x\n")
    assert run(capsys, "tutte", write("n 3\nuniform 1 3\n"), "--algorithm", "delcon")[:2] == (0, "y^2 + x + y\n")


def test_tutte_parse_error_exit_code(capsys, write):
    code, _, err = run(capsys, "tutte", write("n 2\nbases\n0\n0 1\n"))
    assert code == 2
    assert "line 2" in err and "unequal" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "tutte", str(tmp_path / "nope.txt"))
    assert code == 2


def test_coproduct_command(capsys, write):
    code, out, _ = run(capsys, "coproduct", write("n 0\nuniform 0 0\n"))
    assert code == 0 and out == "1 · [U_{0,0}] ⊗ [U_{0,0}]\n"
    code, out, _ = run(capsys, "coproduct", write("n 1\nuniform 1 1\n"))
    assert out.splitlines() == ["1 · [U_{0,0}] ⊗ [U_{1,1}]", "1 · [U_{1,1}] ⊗ [U_{0,0}]"]
    code, out, _ = run(capsys, "coproduct", write("n 2\nuniform 1 2\n"))
    assert [line.split(" ")[0] for line in out.splitlines()] == ["1", "2", "1"]


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "kook", "--nmax", "4")
    assert code == 0
    assert out.strip() == "PASS kook nmax=4 checked=92"
    code, out, _ = run(capsys, "verify", "recipe", "--nmax", "0")
    assert code == 0 and "checked=1" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "duality", "--nmax", "3", "--json")
    report = json.loads(out)
    assert code == 0
    assert report == {"identity": "duality", "nmax": 3, "checked": 24, "passed": True, "counterexample": None}


def test_verify_bounds_and_unknown_identity(capsys):
    assert run(capsys, "verify", "coassoc", "--nmax", "5")[0] == 2
    assert run(capsys, "verify", "duality", "--nmax", "7", "--extended")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["verify", "nonsense", "--nmax", "1"])
    assert info.value.code == 2


def test_verify_failure_reports_counterexample(capsys, monkeypatch):
    from matroid_hopf import cli, tutte

    monkeypatch.setitem(
        cli.IDENTITIES, "duality", (lambda m: (tutte.tutte_subset(m), tutte.tutte_subset(cli.dual(m))), 5)
    )
    code, out, _ = run(capsys, "verify", "duality", "--nmax", "2", "--json")
    report = json.loads(out)
    assert code == 1
    assert not report["passed"]
    ce = report["counterexample"]
    m = parse_matroid(ce["matroid"])
    assert m.size == 1
    assert ce["lhs"] != ce["rhs"]


def test_every_identity_runs_small():
    for name in IDENTITIES:
        assert verify(name, 2).passed


def test_catalog_command(capsys, tmp_path):
    for n, count in [(0, 1), (1, 2), (2, 5)]:
        out_dir = tmp_path / f"c{n}"
        code, out, _ = run(capsys, "catalog", "--n", str(n), "--out", str(out_dir))
        assert code == 0
        rows = (out_dir / "index.tsv").read_text().splitlines()[1:]
        assert len(rows) == count
        files = sorted(p for p in out_dir.iterdir() if p.suffix == ".txt")
        assert len(files) == count
        for f in files:
            parse_matroid(f.read_text())
    rows = (tmp_path / "c2" / "index.tsv").read_text().splitlines()[1:]
    assert len({r.split("\t")[1] for r in rows}) == 4
    assert run(capsys, "catalog", "--n", "7", "--out", str(tmp_path / "x"))[0] == 2


def test_outputs_are_deterministic(capsys, tmp_path):
    a = run(capsys, "verify", "phi", "--nmax", "3", "--json")
    b = run(capsys, "verify", "phi", "--nmax", "3", "--json")
    assert a == b
    run(capsys, "catalog", "--n", "3", "--out", str(tmp_path / "a"))
    run(capsys, "catalog", "--n", "3", "--out", str(tmp_path / "b"))
    for p in (tmp_path / "a").iterdir():
        assert p.read_bytes() == (tmp_path / "b" / p.name).read_bytes()


def test_memo_env_var(capsys, monkeypatch, write):
    monkeypatch.setenv("MATROID_HOPF_MEMO", "off")
    assert run(capsys, "tutte", write("n 4\nuniform 2 4\n"), "--algorithm", "both")[:2] == (
        0,
        "x^2 + y^2 + 2*x + 2*y\n",
    )
