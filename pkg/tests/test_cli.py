import json

import pytest

from masip.catalog import bundled_catalog_path
from masip.cli import main


def test_catalog_validate_ok(capsys):
    code = main(["catalog", "validate", str(bundled_catalog_path("arm-thumb"))])
    out = capsys.readouterr().out
    assert code == 0
    assert "arm-thumb: 78 mnemonics" in out


def test_catalog_validate_duplicate_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.catalog"
    bad.write_text("name x\nadd\nadd\n")
    code = main(["catalog", "validate", str(bad)])
    err = capsys.readouterr().err
    assert code == 2
    assert err.startswith("error:")
    assert ":3:" in err  # line number of the duplicate
    assert "\n" not in err.strip()


def test_catalog_validate_missing_file_exits_2(tmp_path, capsys):
    code = main(["catalog", "validate", str(tmp_path / "nope.catalog")])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_profile_to_stdout(tmp_path, capsys):
    asm = tmp_path / "a.s"
    asm.write_text("push {r4}\nmov r0, #0\nmov r1, r0\n")
    code = main(
        [
            "profile",
            str(asm),
            "--catalog",
            str(bundled_catalog_path("toy")),
            "--app",
            "demo",
            "--domain",
            "X",
        ]
    )
    captured = capsys.readouterr()
    assert code == 0
    obj = json.loads(captured.out)
    assert obj["used"] == ["mov", "push"]
    assert obj["counts"] == {"mov": 2, "push": 1}


def test_profile_writes_file(tmp_path, capsys):
    asm = tmp_path / "a.s"
    asm.write_text("mov r0, r1\n")
    out = tmp_path / "profile.json"
    code = main(
        [
            "profile",
            str(asm),
            "--catalog",
            str(bundled_catalog_path("toy")),
            "--app",
            "demo",
            "--domain",
            "X",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    assert json.loads(out.read_text())["used"] == ["mov"]


def test_profile_lenient_unknowns_warn_but_succeed(tmp_path, capsys):
    asm = tmp_path / "a.s"
    asm.write_text("mov r0, r1\nfrob r9\n")
    code = main(
        [
            "profile",
            str(asm),
            "--catalog",
            str(bundled_catalog_path("toy")),
            "--app",
            "demo",
            "--domain",
            "X",
        ]
    )
    captured = capsys.readouterr()
    assert code == 0
    assert "warning:" in captured.err
    assert "frob" in captured.err
    assert json.loads(captured.out)["unknown"] == ["frob"]


def test_profile_strict_unknown_exits_2(tmp_path, capsys):
    asm = tmp_path / "a.s"
    asm.write_text("frob r9\n")
    code = main(
        [
            "profile",
            str(asm),
            "--catalog",
            str(bundled_catalog_path("toy")),
            "--app",
            "demo",
            "--domain",
            "X",
            "--mode",
            "strict",
        ]
    )
    captured = capsys.readouterr()
    assert code == 2
    assert "error:" in captured.err
    assert "frob" in captured.err


def test_analyze_writes_all_outputs(tmp_path, corpora, capsys):
    out_dir = tmp_path / "results"
    code = main(
        [
            "analyze",
            "--config",
            str(corpora[("arm-thumb", "intra")]),
            "--kind",
            "intra",
            "--out-dir",
            str(out_dir),
            "--table-format",
            "both",
        ]
    )
    assert code == 0
    names = sorted(p.name for p in out_dir.iterdir())
    assert names == [
        "intra_figure.png",
        "intra_plot.csv",
        "intra_suite.json",
        "intra_table.csv",
        "intra_table.md",
    ]


def test_analyze_kind_both(tmp_path, corpora):
    out_dir = tmp_path / "results"
    code = main(
        [
            "analyze",
            "--config",
            str(corpora[("arm-thumb", "inter")]),
            "--out-dir",
            str(out_dir),
            "--figures",
            "none",
        ]
    )
    assert code == 0
    names = {p.name for p in out_dir.iterdir()}
    assert {"intra_suite.json", "inter_suite.json", "intra_plot.csv", "inter_plot.csv"} <= names


def test_analyze_stdout_single_kind(corpora, capsys):
    code = main(
        ["analyze", "--config", str(corpora[("arm-thumb", "intra")]), "--kind", "intra"]
    )
    captured = capsys.readouterr()
    assert code == 0
    obj = json.loads(captured.out)
    assert obj["kind"] == "intra"
    assert len(obj["results"]) == 6


def test_analyze_both_requires_out_dir(corpora, capsys):
    code = main(["analyze", "--config", str(corpora[("arm-thumb", "intra")])])
    captured = capsys.readouterr()
    assert code == 1
    assert "out-dir" in captured.err


def test_analyze_group_size_exceeding_domains_exits_1(tmp_path, capsys):
    corpus = tmp_path / "c"
    corpus.mkdir()
    (corpus / "toy.catalog").write_text(bundled_catalog_path("toy").read_text())
    (corpus / "a.s").write_text("mov r0, r1\n")
    config = corpus / "config.json"
    config.write_text(
        json.dumps(
            {
                "catalog": "toy.catalog",
                "group_size": 7,
                "domains": {f"D{i}": {"a": ["a.s"]} for i in range(6)},
            }
        )
    )
    code = main(["analyze", "--config", str(config), "--kind", "inter"])
    captured = capsys.readouterr()
    assert code == 1
    assert "error:" in captured.err
    assert "group_size" in captured.err


def test_analyze_bad_config_exits_2(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text("{ not json")
    code = main(["analyze", "--config", str(config), "--kind", "intra"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_usage_error_exits_1(capsys):
    code = main(["analyze", "--config", "x", "--kind", "sideways"])
    captured = capsys.readouterr()
    assert code == 1
    assert "error:" in captured.err


def test_fixtures_command(tmp_path, capsys):
    code = main(["fixtures", "--arch", "arm-thumb", "--out-dir", str(tmp_path / "f")])
    captured = capsys.readouterr()
    assert code == 0
    assert (tmp_path / "f" / "intra" / "config.json").is_file()
    assert (tmp_path / "f" / "inter" / "config.json").is_file()
    assert captured.out.count("wrote") == 2


def test_determinism_across_runs(tmp_path, corpora):
    config = str(corpora[("arm-thumb", "intra")])
    dirs = [tmp_path / "run1", tmp_path / "run2"]
    for d in dirs:
        code = main(
            ["analyze", "--config", config, "--kind", "intra", "--out-dir", str(d)]
        )
        assert code == 0
    for name in ("intra_suite.json", "intra_table.csv", "intra_plot.csv", "intra_figure.png"):
        assert (dirs[0] / name).read_bytes() == (dirs[1] / name).read_bytes()
