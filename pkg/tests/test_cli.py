import csv
import json

import pytest

from memsum.cli import main


def run_cli(*argv):
    return main([str(a) for a in argv])


def read_rows(path):
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh]


def test_help_exits_zero(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli("--help")
    assert exc.value.code == 0
    assert "memsum" in capsys.readouterr().out


def test_run_treekvd_on_mini_corpus(tmp_path, mini_corpus_path):
    out = tmp_path / "run1"
    rc = run_cli("run", "--corpus", mini_corpus_path, "--out", out,
                 "--system", "treekvd", "--wm", "20", "--trace")
    assert rc == 0
    rows = read_rows(out / "summaries.jsonl")
    assert len(rows) == 5
    for row in rows:
        assert abs(row["n_tokens"] - 190) < 50
        assert row["sentence_ids"] == sorted(row["sentence_ids"])
        assert row["text"]
    assert (out / "metrics.csv").exists()
    assert (out / "bins.json").exists()
    assert (out / "trace.jsonl").exists()
    with open(out / "metrics.csv", encoding="utf-8") as fh:
        table = list(csv.DictReader(fh))
    doc_rows = [r for r in table if not r["doc_id"].startswith("__")]
    assert len(doc_rows) == 5
    assert all(r["coverage"] for r in doc_rows)


def test_run_is_byte_deterministic(tmp_path, mini_corpus_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    for out in (out1, out2):
        rc = run_cli("run", "--corpus", mini_corpus_path, "--out", out,
                     "--system", "graphkvd", "--wm", "10", "--seed", "3")
        assert rc == 0
    assert (out1 / "summaries.jsonl").read_bytes() == \
        (out2 / "summaries.jsonl").read_bytes()


def test_run_lead_band_exemption(tmp_path, mini_corpus_path):
    out = tmp_path / "lead"
    rc = run_cli("run", "--corpus", mini_corpus_path, "--out", out,
                 "--system", "lead", "--selector", "greedy")
    assert rc == 0
    rows = read_rows(out / "summaries.jsonl")
    assert len(rows) == 5   # greedy-by-position summaries may leave the band


def test_run_random_seeded(tmp_path, mini_corpus_path):
    out1, out2 = tmp_path / "r1", tmp_path / "r2"
    run_cli("run", "--corpus", mini_corpus_path, "--out", out1,
            "--system", "random", "--seed", "5")
    run_cli("run", "--corpus", mini_corpus_path, "--out", out2,
            "--system", "random", "--seed", "5")
    assert (out1 / "summaries.jsonl").read_bytes() == \
        (out2 / "summaries.jsonl").read_bytes()


def test_run_missing_corpus_fails(tmp_path):
    rc = run_cli("run", "--corpus", tmp_path / "nope.jsonl", "--out",
                 tmp_path / "o")
    assert rc == 2


def test_config_file_overrides_flags(tmp_path, mini_corpus_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("wm = 5\nsystem = lead\nselector = greedy\n")
    out = tmp_path / "cfg-run"
    rc = run_cli("run", "--corpus", mini_corpus_path, "--out", out,
                 "--system", "treekvd", "--config", cfg)
    assert rc == 0
    meta = json.loads((out / "run.json").read_text())
    assert meta["system"] == "lead" and meta["wm"] == 5


def test_compare_two_runs(tmp_path, mini_corpus_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    run_cli("run", "--corpus", mini_corpus_path, "--out", a, "--system", "lead",
            "--selector", "greedy")
    run_cli("run", "--corpus", mini_corpus_path, "--out", b, "--system", "random")
    rc = run_cli("compare", a, b)
    assert rc == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0].startswith("system,")
    assert len(lines) == 3
    assert lines[1].startswith("lead,") and lines[2].startswith("random,")


def test_compare_identical_runs_identical_columns(tmp_path, mini_corpus_path,
                                                  capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        run_cli("run", "--corpus", mini_corpus_path, "--out", out,
                "--system", "random", "--seed", "11")
    run_cli("compare", a, b)
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[1] == lines[2]


def test_compare_needs_two_runs(tmp_path, capsys):
    rc = run_cli("compare")
    assert rc == 2


def test_compare_rejects_mismatched_corpora(tmp_path, mini_corpus_path):
    from memsum.corpus import read_corpus, write_corpus
    docs = list(read_corpus(open(mini_corpus_path, encoding="utf-8")))
    small = tmp_path / "small.jsonl"
    with open(small, "w", encoding="utf-8") as fh:
        write_corpus(docs[:2], fh)
    a, b = tmp_path / "a", tmp_path / "b"
    run_cli("run", "--corpus", mini_corpus_path, "--out", a, "--system", "lead",
            "--selector", "greedy")
    run_cli("run", "--corpus", small, "--out", b, "--system", "lead",
            "--selector", "greedy")
    assert run_cli("compare", a, b) == 2


def test_validate_clean_corpus(mini_corpus_path, capsys):
    assert run_cli("validate", "--corpus", mini_corpus_path) == 0
    assert "0 diagnostics" in capsys.readouterr().out


def test_validate_reports_problems(tmp_path, capsys):
    bad = tmp_path / "bad.jsonl"
    conllu = "1\tloop\tloop\tNOUN\t_\t_\t2\tdep\t_\t_\n2\tback\tback\tNOUN\t_\t_\t1\tdep\t_\t_\n"
    bad.write_text(json.dumps({
        "doc_id": "bad", "sections": [{"name": "body", "conllu": conllu}],
        "reference": None}) + "\n")
    # the lenient reader drops the cyclic sentence, leaving an empty document
    with pytest.warns(UserWarning):
        rc = run_cli("validate", "--corpus", bad)
    assert rc == 0


def test_oracle_selector_via_cli(tmp_path, mini_corpus_path):
    out = tmp_path / "oracle"
    rc = run_cli("run", "--corpus", mini_corpus_path, "--out", out,
                 "--system", "lead", "--selector", "oracle")
    assert rc == 0
    rows = read_rows(out / "summaries.jsonl")
    assert len(rows) == 5


def test_jobs_parallel_output_matches_serial(tmp_path, mini_corpus_path):
    a, b = tmp_path / "serial", tmp_path / "parallel"
    run_cli("run", "--corpus", mini_corpus_path, "--out", a,
            "--system", "treekvd", "--wm", "5")
    run_cli("run", "--corpus", mini_corpus_path, "--out", b,
            "--system", "treekvd", "--wm", "5", "--jobs", "4")
    assert (a / "summaries.jsonl").read_bytes() == (b / "summaries.jsonl").read_bytes()
    assert (a / "metrics.csv").read_bytes() == (b / "metrics.csv").read_bytes()
