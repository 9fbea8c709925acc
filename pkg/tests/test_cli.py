import json
import pathlib

import pytest

from arglp.cli import run
from arglp.textio import parse_framework
from conftest import DATA

GOLDEN = pathlib.Path(__file__).parent / "golden"


def cli(capsys, *argv):
    code = run([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name, argv", [
    ("four-args-complete.txt", ["solve", DATA / "four-args.af", "--semantics", "complete"]),
    ("four-args-ideal.txt", ["solve", DATA / "four-args.af", "--semantics", "ideal"]),
    ("tennis-afn-complete.txt", ["solve", DATA / "tennis-afn.raf", "--semantics", "complete"]),
    ("season-rafn-json.txt", ["solve", DATA / "tennis-season-rafn.raf", "--semantics", "preferred",
                              "--engine", "lp-normalized", "--json"]),
    ("season-compile-prop.txt", ["compile", DATA / "tennis-season-rafn.raf"]),
    ("season-compile-normal.txt", ["compile", DATA / "tennis-season-rafn.raf", "--target", "normal"]),
    ("tennis-flatten-n.txt", ["flatten", DATA / "tennis-afn.raf", "--interpretation", "n"]),
    ("tennis-flatten-d.txt", ["flatten", DATA / "tennis-afn.raf", "--interpretation", "d"]),
    ("winter-dot.txt", ["export-dot", DATA / "tennis-winter-rafn.raf"]),
    ("gen-asaf.txt", ["gen", "--kind", "asaf", "--args", "4", "--atts", "3", "--sups", "2",
                      "--seed", "11", "--recursion-rate", "0.5"]),
])
def test_golden_output(capsys, name, argv):
    code, out, _ = cli(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / name).read_text()
    assert cli(capsys, *argv)[1] == out  # byte-stable


def test_solve_text_format(capsys):
    code, out, _ = cli(capsys, "solve", DATA / "tennis-afn.raf", "--semantics", "complete")
    assert out == "in={p,w_i} out={r,w_e} undec={}\n"
    code, out, _ = cli(capsys, "solve", DATA / "four-args.af", "--semantics", "ideal", "--engine", "direct")
    assert out == "in={d} out={c} undec={a,b}\n"


def test_oracle_matches_solve(capsys):
    for sem in ("complete", "stable", "semi-stable"):
        a = cli(capsys, "oracle", DATA / "tennis-season-rafn.raf", "--semantics", sem)
        b = cli(capsys, "--backend", "numpy", "solve", DATA / "tennis-season-rafn.raf", "--semantics", sem)
        assert a == b


def test_validate(capsys):
    code, out, _ = cli(capsys, "validate", DATA / "tennis-afn.raf")
    assert code == 0 and out == "ok: afn, 4 arguments, 2 attacks, 1 supports\n"


def test_compile_to_file(capsys, tmp_path):
    target = tmp_path / "p.lp"
    code, out, _ = cli(capsys, "compile", DATA / "tennis-afn.raf", "-o", target)
    assert code == 0 and out == ""
    assert "w_e <- r." in target.read_text()


def test_strip_mediated(capsys, tmp_path):
    src = tmp_path / "chain.raf"
    src.write_text("#kind: afn arg(a). arg(b). arg(c). arg(d). att(b,c). att(c,d). sup(b,a).")
    _, full, _ = cli(capsys, "flatten", src, "--interpretation", "n")
    _, stripped, _ = cli(capsys, "flatten", src, "--interpretation", "n", "--strip-mediated")
    assert parse_framework(full).attack_pairs == {("b", "c"), ("c", "d"), ("a", "c")}
    assert parse_framework(stripped).attack_pairs == {("b", "c"), ("c", "d")}


def test_gen_output_is_valid_and_diff_agrees(capsys, tmp_path):
    for kind in ("raf", "afra", "rafn", "asaf", "rafd", "afrad"):
        code, out, _ = cli(capsys, "gen", "--kind", kind, "--args", "4", "--atts", "4", "--sups", "2",
                           "--seed", "3", "--recursion-rate", "0.5")
        assert code == 0
        path = tmp_path / f"g.{kind}"
        path.write_text(out)
        code, report, _ = cli(capsys, "diff", path, "--semantics", "complete")
        assert code == 0 and json.loads(report)["match"]


def test_gen_warns_about_ignored_supports(capsys):
    code, out, err = cli(capsys, "gen", "--kind", "af", "--args", "2", "--sups", "1")
    assert code == 0 and "warning" in err and "sup(" not in out


def test_diff_mismatch_exits_5(capsys, tmp_path):
    src = tmp_path / "m.raf"
    src.write_text("#kind: afn arg(a1). arg(a2). arg(a3). att(a1,a3). att(a3,a1). sup(a1,a2). sup(a3,a2).")
    code, out, _ = cli(capsys, "diff", src, "--semantics", "complete")
    assert code == 5
    report = json.loads(out)
    assert set(report) == {"semantics", "kind", "match", "lp_count", "direct_count", "lp_only",
                           "direct_only", "first_difference", "counterexample"}


@pytest.mark.parametrize("argv, code", [
    ([], 1),
    (["solve"], 1),
    (["solve", DATA / "four-args.af", "--semantics", "naive"], 1),
    (["frobnicate"], 1),
    (["validate", "/nonexistent/file.af"], 1),
    (["flatten", DATA / "four-args.af", "--interpretation", "n"], 1),
    (["flatten", DATA / "tennis-afd.raf", "--interpretation", "d", "--strip-mediated"], 1),
    (["gen", "--kind", "afn", "--args", "1", "--sups", "1"], 1),
])
def test_usage_errors_exit_1(capsys, argv, code):
    assert cli(capsys, *argv)[0] == code


def test_parse_validation_and_resource_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.af"
    bad.write_text("arg(a")
    code, _, err = cli(capsys, "validate", bad)
    assert code == 2 and "1:6" in err
    invalid = tmp_path / "invalid.af"
    invalid.write_text("arg(a). att(a,b).")
    assert cli(capsys, "validate", invalid)[0] == 3
    big = tmp_path / "big.af"
    big.write_text(" ".join(f"arg(a{i})." for i in range(17)))
    assert cli(capsys, "solve", big, "--semantics", "grounded", "--engine", "direct")[0] == 4
    assert cli(capsys, "solve", big, "--semantics", "grounded", "--engine", "direct", "--force")[0] == 0


def test_env_limit_override(capsys, monkeypatch):
    monkeypatch.setenv("ARGLP_LIMIT_ATOMS", "3")
    assert cli(capsys, "solve", DATA / "four-args.af", "--semantics", "complete")[0] == 4


def test_help_exits_0(capsys):
    assert cli(capsys, "--help")[0] == 0
