import json
import os

import pytest
from click.testing import CliRunner

from compmt.cli import main


@pytest.fixture(scope="module")
def runner():
    return CliRunner()


@pytest.fixture(scope="module")
def corpus_dir(tmp_path_factory, runner):
    out = tmp_path_factory.mktemp("cli") / "corpus"
    result = runner.invoke(
        main, ["generate", "--seed", "1", "--scale", "0.01",
               "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert "audit clean" in result.output
    return out


def test_generate_writes_all_files(corpus_dir):
    names = {p.name for p in corpus_dir.iterdir()}
    assert names == {"train.jsonl", "dev.jsonl", "test.jsonl", "gen.jsonl",
                     "corpus.tsv", "manifest.json"}
    manifest = json.loads((corpus_dir / "manifest.json").read_text())
    assert manifest["counts"] == {"train": 616, "dev": 50, "test": 50,
                                  "gen": 760}


def test_validate_ok(runner):
    result = runner.invoke(main, ["validate"])
    assert result.exit_code == 0, result.output
    assert "42 pattern grammars" in result.output


def test_audit_existing_corpus(runner, corpus_dir):
    result = runner.invoke(main, ["audit", "--corpus", str(corpus_dir)])
    assert result.exit_code == 0, result.output
    assert "no leakage" in result.output


def test_audit_missing_corpus_is_io_error(runner, tmp_path):
    result = runner.invoke(main, ["audit", "--corpus",
                                  str(tmp_path / "nope")])
    assert result.exit_code == 2


def test_score_self_hypotheses(runner, corpus_dir, tmp_path):
    gen = [json.loads(line) for line in
           (corpus_dir / "gen.jsonl").read_text().splitlines()]
    hyp_path = tmp_path / "hyp.jsonl"
    with open(hyp_path, "w", encoding="utf-8") as fh:
        for rec in gen:
            fh.write(json.dumps({"id": rec["id"],
                                 "hypothesis": rec["target"]}) + "\n")
    report_path = tmp_path / "report.json"
    result = runner.invoke(
        main, ["score", "--corpus", str(corpus_dir), "--hyp", str(hyp_path),
               "--report", str(report_path)])
    assert result.exit_code == 0, result.output
    assert "[overall]" in result.output and "100.00" in result.output
    report = json.loads(report_path.read_text())
    assert report["overall"]["exact_pct"] == 100.0
    assert report["scored"] == len(gen)


def test_score_missing_hypothesis_file(runner, corpus_dir, tmp_path):
    result = runner.invoke(
        main, ["score", "--corpus", str(corpus_dir),
               "--hyp", str(tmp_path / "absent.jsonl")])
    assert result.exit_code == 2


def test_inspect_pattern_filter(runner, corpus_dir):
    result = runner.invoke(
        main, ["inspect", "--corpus", str(corpus_dir),
               "--pattern", "active_to_passive", "--limit", "3"])
    assert result.exit_code == 0, result.output
    assert result.output.count("src:") == 3
    assert "/active_to_passive]" in result.output


def test_inspect_depth_filter(runner, corpus_dir):
    result = runner.invoke(
        main, ["inspect", "--corpus", str(corpus_dir), "--split", "gen",
               "--depth", "cp=5", "--limit", "2"])
    assert result.exit_code == 0, result.output
    assert "CP=5" in result.output


def test_inspect_regex_filter(runner, corpus_dir):
    result = runner.invoke(
        main, ["inspect", "--corpus", str(corpus_dir), "--split", "gen",
               "--regex", r"^What\b", "--limit", "1"])
    assert result.exit_code == 0, result.output
    assert "src: What" in result.output


def test_inspect_bad_depth_filter(runner, corpus_dir):
    result = runner.invoke(
        main, ["inspect", "--corpus", str(corpus_dir), "--depth", "xx=1"])
    assert result.exit_code == 2


def test_generate_wo_concat(runner, tmp_path):
    out = tmp_path / "corpus"
    result = runner.invoke(
        main, ["generate", "--seed", "2", "--scale", "0.01", "--wo-concat",
               "--out", str(out)])
    assert result.exit_code == 0, result.output
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["augmentations"]["concatenated"] == 0
    assert manifest["config"]["with_concat"] is False


def test_out_dir_env_variable(runner, tmp_path, monkeypatch):
    out = tmp_path / "from-env"
    monkeypatch.setenv("COMPMT_OUT_DIR", str(out))
    result = runner.invoke(
        main, ["generate", "--seed", "3", "--scale", "0.002"])
    assert result.exit_code == 0, result.output
    assert (out / "manifest.json").exists()


def test_config_file_and_flag_overrides(runner, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"master_seed": 5, "scale": 0.002,
                               "out_dir": str(tmp_path / "a")}),
                   encoding="utf-8")
    result = runner.invoke(
        main, ["generate", "--config", str(cfg),
               "--out", str(tmp_path / "b")])
    assert result.exit_code == 0, result.output
    assert (tmp_path / "b" / "manifest.json").exists()
    assert not (tmp_path / "a").exists()


def test_bad_config_file_is_io_error(runner, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"no_such_key": 1}', encoding="utf-8")
    result = runner.invoke(main, ["validate", "--config", str(cfg)])
    assert result.exit_code == 2
    result = runner.invoke(main, ["validate", "--config",
                                  str(tmp_path / "missing.json")])
    assert result.exit_code == 2
