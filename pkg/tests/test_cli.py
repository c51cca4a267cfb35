import json

import pytest

from semicomp.cli import run
from semicomp.composition import Composition
from semicomp.digraph import Digraph
from semicomp.formats import format_comp, format_dg, parse_dg
from semicomp.verify import star_digraph, triangular_example

C3_COMP = "t 3\ntarcs\n0 1\n1 2\n2 0\nend\nhouse 0 1\nend\nhouse 1 1\nend\nhouse 2 1\nend\n"


@pytest.fixture
def files(tmp_path):
    paths = {}

    def put(name, text):
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
        return str(p)

    put("c3.comp", C3_COMP)
    put("bad.comp", "t 1\ntarcs\nend\nhouse 0 1\nend\n")
    put("star.dg", format_dg(star_digraph()))
    put("tri.comp", format_comp(triangular_example()))
    put("ext.comp", format_comp(Composition.extension(Digraph.cycle(3), [2, 1, 1])))
    put("arc.dg", "n 2\n0 1\n")
    put("notsc.dg", "n 3\n0 1\n1 2\n")
    return paths


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hamcycle_c3(files, capsys):
    code, out, _ = _run(capsys, "hamcycle", files["c3.comp"])
    assert code == 0 and out.strip() == "0 1 2"


def test_bad_comp_exit_2(files, capsys):
    code, _, err = _run(capsys, "expand", files["bad.comp"])
    assert code == 2 and "t must be at least 2" in err


def test_expand_round_trip(files, capsys):
    code, out, _ = _run(capsys, "expand", files["ext.comp"])
    assert code == 0
    assert parse_dg(out) == Composition.extension(Digraph.cycle(3), [2, 1, 1]).expanded


def test_absence_exit_1(files, capsys):
    code, out, _ = _run(capsys, "hamcycle", files["ext.comp"])
    assert code == 1 and "ABSENT" in out
    code, out, _ = _run(capsys, "hampath", files["ext.comp"])
    assert code == 0


def test_not_a_composition(files, capsys):
    code, _, err = _run(capsys, "hamcycle", files["notsc.dg"])
    assert code == 2 and "composition" in err


def test_missing_file(files, capsys):
    code, _, err = _run(capsys, "expand", files["c3.comp"] + ".nope")
    assert code == 2 and "cannot read" in err


def test_analyze_certificates(files, capsys):
    assert _run(capsys, "analyze", files["c3.comp"], "--cycle", "0 1 2")[0] == 0
    assert _run(capsys, "analyze", files["c3.comp"], "--cycle", "0 2 1")[0] == 3
    assert _run(capsys, "analyze", files["c3.comp"], "--path", "1 2 0")[0] == 0


def test_other_commands(files, capsys):
    code, out, _ = _run(capsys, "ssss", files["star.dg"])
    assert code == 0 and parse_dg(out).num_arcs == 6
    code, out, _ = _run(capsys, "pancyclic", files["tri.comp"])
    assert code == 1
    for cmd in ("decompose", "separators", "conn", "ear", "tournament"):
        code, out, _ = _run(capsys, cmd, files["c3.comp"])
        assert code == 0 and out, cmd
    code, _, _ = _run(capsys, "acyclic-span", files["arc.dg"])
    assert code == 0
    code, _, err = _run(capsys, "acyclic-span", files["c3.comp"], "--case", "b")
    assert code == 2


def test_verify_json(capsys):
    code, out, _ = _run(capsys, "verify", "--theorem", "obs-strong", "--max-n", "4", "--samples", "5", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["theorem_id"] == "obs-strong" and rep["passed"] and rep["failures"] == []
    assert "elapsed" not in rep


def test_verify_text_and_timings(capsys):
    code, out, _ = _run(capsys, "verify", "--theorem", "pancyclic", "--max-n", "6", "--samples", "0")
    assert code == 0 and "pancyclic" in out
    code, out, _ = _run(capsys, "verify", "--theorem", "two-vertices", "--max-n", "4", "--samples", "0", "--format", "json", "--timings")
    assert "elapsed" in json.loads(out)


def test_verify_unknown_theorem(capsys):
    with pytest.raises(SystemExit) as info:
        run(["verify", "--theorem", "nope"])
    assert info.value.code == 2
