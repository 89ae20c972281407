import json

import pytest

from perfdiv.formats import emit_graph6, parse_graph6
from perfdiv.graph import complete, cycle, disjoint_union, groetzsch, odd_torch, path
from perfdiv.harness.cli import main


@pytest.fixture
def g6file(tmp_path):
    def make(*graphs, extra=()):
        p = tmp_path / "in.g6"
        p.write_text("\n".join([emit_graph6(g) for g in graphs] + list(extra)) + "\n")
        return str(p)

    return make


def _json_lines(out):
    return [json.loads(line) for line in out.strip().splitlines()]


def test_catalog(capsys):
    assert main(["catalog", "--name", "groetzsch", "--emit", "g6"]) == 0
    line = capsys.readouterr().out.strip()
    assert parse_graph6(line).n == 11 and ord(line[0]) - 63 == 11
    assert main(["catalog", "--name", "torch5", "--stable", "0", "--emit", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["n"] == 7 and obj["provenance"] == {"k": 5, "stable": [0]}
    assert main(["catalog", "--name", "C5", "--emit", "dot"]) == 0
    assert "graph C5 {" in capsys.readouterr().out
    assert main(["catalog", "--name", "nope"]) == 2


def test_detect(capsys, g6file):
    path_ = g6file(odd_torch(5, [0]), path(4))
    assert main(["detect", "--pattern", "fork", "--input", path_]) == 0
    rows = _json_lines(capsys.readouterr().out)
    assert rows[0]["witness"] is not None and rows[1]["witness"] is None
    assert main(["detect", "--pattern", "odd-torch", "--input", path_]) == 0
    assert main(["detect", "--pattern", "zzz", "--input", path_]) == 2


def test_classify(capsys, g6file):
    assert main(["classify", "--input", g6file(groetzsch())]) == 0
    row = _json_lines(capsys.readouterr().out)[0]
    assert row["bull_free"] and row["P6_free"] and not row["F_free"]
    assert (row["omega"], row["chi"]) == (2, 4)


def test_check_pd(capsys, g6file):
    assert main(["check-pd", "--input", g6file(cycle(7))]) == 0
    row = _json_lines(capsys.readouterr().out)[0]
    assert row["perfectly_divisible"] and row["certificate"]["kind"] == "PD"
    assert main(["check-pd", "--input", g6file(groetzsch())]) == 1
    row = _json_lines(capsys.readouterr().out)[0]
    assert row["counterexample"]["vertices"] == list(range(11))


def test_color(capsys, g6file):
    assert main(["color", "--method", "pd", "--input", g6file(groetzsch())]) == 1
    captured = capsys.readouterr()
    assert "NotPerfectlyDivisibleError" in captured.err
    for method in ("exact", "pd", "basic", "p6bull"):
        assert main(["color", "--method", method, "--input", g6file(cycle(5))]) == 0
        row = _json_lines(capsys.readouterr().out)[0]
        assert row["palette"] == 3 or (method != "exact" and row["palette"] <= 4)


def test_verify_lemma(capsys, tmp_path):
    out = tmp_path / "report.jsonl"
    assert main(["verify", "--theorem", "lem-P6C3", "--gen", "n=8", "--out", str(out)]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["failures"] == 0 and summary["filter_hits"] > 0
    assert json.loads(out.read_text().splitlines()[-1])["summary"] is True


def test_verify_sanity_fails(capsys, g6file):
    assert main(["verify", "--theorem", "sanity-all-perfect", "--input", g6file(cycle(5), path(3))]) == 1
    lines = _json_lines(capsys.readouterr().out)
    assert lines[-1]["failures"] == 1 and lines[-1]["counterexamples"][0]["graph6"] == emit_graph6(cycle(5))


def test_verify_usage(capsys):
    assert main(["verify", "--list"]) == 0
    assert "thm-odd-torch-pd" in capsys.readouterr().out
    assert main(["verify", "--theorem", "lem-P6C3"]) == 2
    assert main(["verify", "--theorem", "bogus", "--gen", "n=3"]) == 2
    assert main(["verify", "--theorem", "lem-P6C3", "--gen", "k=3"]) == 2


def test_shrink(capsys, g6file):
    assert main(["shrink", "--claim", "perfect", "--input", g6file(disjoint_union(cycle(5), complete(2)))]) == 1
    row = _json_lines(capsys.readouterr().out)[0]
    assert row["n"] == 5
    assert main(["shrink", "--claim", "perfect", "--input", g6file(path(3))]) == 0


def test_gen(capsys):
    assert main(["gen", "--n", "4"]) == 0
    assert len(capsys.readouterr().out.split()) == 11
    assert main(["gen", "--n", "4", "--connected", "--up-to"]) == 0
    assert len(capsys.readouterr().out.split()) == 1 + 1 + 2 + 6
    assert main(["gen", "--n", "5", "--random", "p=0.5,seed=3,count=4"]) == 0
    first = capsys.readouterr().out
    main(["gen", "--n", "5", "--random", "p=0.5,seed=3,count=4"])
    assert capsys.readouterr().out == first
    assert main(["gen", "--n", "5", "--random", "seed=3"]) == 2


def test_malformed_input_reports_line(capsys, g6file):
    p = g6file(cycle(5), extra=["Dh c"])
    assert main(["classify", "--input", p]) == 2
    assert "line 2" in capsys.readouterr().err


def test_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("Dhc\n"))
    assert main(["detect", "--pattern", "C5", "--input", "-"]) == 0
    assert _json_lines(capsys.readouterr().out)[0]["witness"]["kind"] == "C5"


def test_bad_arguments():
    assert main([]) == 2
    assert main(["color", "--method", "nope", "--input", "x"]) == 2
    assert main(["classify", "--input", "/nonexistent/file"]) == 2


def test_comments_and_non_ascii_input(capsys, tmp_path):
    p = tmp_path / "in.g6"
    p.write_bytes(b"# header\n\nDhc\nD\xffc\n")
    assert main(["detect", "--pattern", "C5", "--input", str(p)]) == 2
    captured = capsys.readouterr()
    assert len(_json_lines(captured.out)) == 1
    assert "line 4: non-ASCII byte (byte offset 1)" in captured.err
