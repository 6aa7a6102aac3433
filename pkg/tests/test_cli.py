from __future__ import annotations

import json
import shutil

import pytest

from pseudalg import bundled_spec
from pseudalg.cli import main
from pseudalg.literal import parse_pseudotensor
from pseudalg.specfile import parse_spec

MUTATED = """hopf polynomial 1
algebra A generators e1 e2
product e2 e1 = [1 # 1] @H e2
product e2 e2 = [1 # 1] @H e1
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", ["twisted", "coboundary", "coboundary_dual", "twisted_current"])
def test_suite_all_passes_on_bundled_examples(capsys, name):
    code, out, _ = run(capsys, "check", bundled_spec(name), "--suite", "all")
    assert code == 0, out
    assert out.strip().endswith("all: PASS")


def test_failing_suite_exits_one_with_witness(capsys, tmp_path):
    path = tmp_path / "mutated.spec"
    path.write_text(MUTATED)
    code, out, _ = run(capsys, "check", str(path), "--suite", "assoc")
    assert code == 1
    assert "[FAIL] assoc/associativity (e2, e2, e1)  defect: [-1 # 1 # 1] @H e1" in out.splitlines()


def test_parse_error_exits_two(capsys, tmp_path):
    path = tmp_path / "broken.spec"
    path.write_text("hopf polynomial 1\nalgebra A generators e1\nproduct e1 e1 = [1 # ] @H e1\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "line 3, column 22" in err


def test_semantic_error_exits_two(capsys, tmp_path):
    path = tmp_path / "unknown.spec"
    path.write_text("hopf polynomial 1\nalgebra A generators e1\nproduct e1 e3 = [1 # 1] @H e1\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2 and "e3" in err


def test_unknown_suite_exits_two(capsys):
    code, _, err = run(capsys, "check", bundled_spec("coboundary"), "--suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_missing_r_exits_two(capsys):
    code, _, err = run(capsys, "aybe", bundled_spec("twisted"))
    assert code == 2 and "'r'" in err


def test_json_report_schema(capsys):
    code, out, _ = run(capsys, "check", bundled_spec("coboundary"), "--suite", "coassoc", "--json")
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["suite", "checks", "verdict"]
    assert data["verdict"] == "pass"
    assert all("defect" not in c for c in data["checks"])
    assert all(list(c)[:3] == ["name", "inputs", "verdict"] for c in data["checks"])


def test_json_defect_parses_back(capsys):
    code, out, _ = run(capsys, "check", bundled_spec("twisted_dsq"), "--suite", "compat", "--json")
    assert code == 1
    data = json.loads(out)
    sec = parse_spec(open(bundled_spec("twisted_dsq")).read()).section()
    defects = [c["defect"] for c in data["checks"] if c["verdict"] == "fail"]
    assert defects
    for text in defects:
        value = parse_pseudotensor(sec.module.hopf, text, sec.module, (2, 2))
        assert str(value) == text


def test_human_and_json_verdicts_agree(capsys):
    _, human, _ = run(capsys, "check", bundled_spec("twisted_dsq"), "--suite", "all")
    _, raw, _ = run(capsys, "check", bundled_spec("twisted_dsq"), "--suite", "all", "--json")
    data = json.loads(raw)
    lines = [l for l in human.splitlines() if l.startswith("[")]
    assert len(lines) == len(data["checks"])
    for line, entry in zip(lines, data["checks"]):
        assert line.startswith(f"[{entry['verdict'].upper()}]")


def test_value_commands(capsys):
    spec = bundled_spec("coboundary")
    code, out, _ = run(capsys, "deltar", spec)
    assert code == 0
    assert "delta_r (e1)  -- value = (e1, e1)" in out
    assert "delta_r (e2)  -- value = (e2, e1)" in out
    for cmd in ("aybe", "cybe", "thm44", "thm61", "cocycle1"):
        code, out, _ = run(capsys, cmd, spec)
        assert code == 0, (cmd, out)
    code, out, _ = run(capsys, "d0", spec, "--element", "(e2, e1) - (e1, e2)")
    assert code == 0 and "value = (e2, e1)" in out


def test_aybe_failure_exits_one(capsys, tmp_path):
    path = tmp_path / "r22.spec"
    path.write_text(open(bundled_spec("coboundary")).read().replace("r = (e2, e1) - (e1, e2)", "r = (e2, e2)"))
    code, out, _ = run(capsys, "aybe", str(path))
    assert code == 1 and "value = (e2, e2, e2)" in out


def test_dual_command_writes_spec(capsys, tmp_path):
    out_path = tmp_path / "dual.spec"
    code, _, _ = run(capsys, "dual", bundled_spec("coboundary"), "-o", str(out_path))
    assert code == 0
    assert out_path.read_text() == open(bundled_spec("coboundary_dual")).read()
    code, _, _ = run(capsys, "check", str(out_path), "--suite", "coassoc")
    assert code == 0


def test_cur_command_writes_spec(capsys, tmp_path):
    out_path = tmp_path / "cur.spec"
    code, _, _ = run(capsys, "cur", bundled_spec("twisted_trivial"), "--target-hopf", "polynomial 1",
                     "-o", str(out_path))
    assert code == 0
    assert out_path.read_text() == open(bundled_spec("twisted_current")).read()


def test_cur_rejects_nontrivial_input(capsys, tmp_path):
    code, _, err = run(capsys, "cur", bundled_spec("coboundary"), "--target-hopf", "cyclic 2",
                       "-o", str(tmp_path / "x.spec"))
    assert code == 2 and "H = k" in err


def test_cur_target_from_spec_file(capsys, tmp_path):
    out_path = tmp_path / "cur.spec"
    code, _, _ = run(capsys, "cur", bundled_spec("twisted_trivial"), "--target-hopf",
                     bundled_spec("coboundary"), "-o", str(out_path))
    assert code == 0
    assert out_path.read_text().startswith("hopf polynomial 1\n")


def test_input_file_is_never_overwritten(capsys, tmp_path):
    path = tmp_path / "ex.spec"
    shutil.copy(bundled_spec("coboundary"), path)
    before = path.read_text()
    code, _, err = run(capsys, "dual", str(path), "-o", str(path))
    assert code == 2 and "overwrite" in err
    assert path.read_text() == before


def test_usage_errors_exit_two(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "check", bundled_spec("coboundary"), "--degree-bound", "0")[0] == 2
    assert run(capsys, "check", "/nonexistent/file.spec")[0] == 2
