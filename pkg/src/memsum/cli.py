"""Batch command line: run a scoring system + selector over a JSONL corpus,
compare finished runs, or validate corpus structure.

Outputs of ``run``: summaries.jsonl (one row per document), metrics.csv,
bins.json, and optionally trace.jsonl. Re-running with the same config and
seed produces byte-identical summaries.jsonl.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import json
import logging
import sys
from pathlib import Path

from . import baselines, graphkvd, metrics, selector, treekvd
from .corpus import Document, read_corpus, validate_document
from .memory import SimulationParams
from .metrics import DocResult, rouge_tokens
from .overlap import OverlapConfig
from .propositions import build_document_propositions

log = logging.getLogger("memsum")

SYSTEMS = ("treekvd", "graphkvd", "fullgraph", "textrank", "lead", "random",
           "random-wgt")
SELECTORS = ("knapsack", "greedy", "oracle")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="memsum",
                                 description="working-memory extractive summarizer")
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="score a corpus and extract summaries")
    run.add_argument("--corpus", required=True, help="JSONL corpus path")
    run.add_argument("--out", required=True, help="output directory")
    run.add_argument("--system", choices=SYSTEMS, default="treekvd")
    run.add_argument("--selector", choices=SELECTORS, default="knapsack")
    run.add_argument("--budget", type=int, default=190, help="token budget W")
    run.add_argument("--sigma", type=int, default=50, help="soft band half-width")
    run.add_argument("--wm", type=int, default=50, help="working-memory capacity")
    run.add_argument("--recall-limit", type=int, default=5)
    run.add_argument("--persistence", type=int, default=5)
    run.add_argument("--early-stop", type=float, default=0.5)
    run.add_argument("--scoring", choices=("tree", "eigen", "freq"), default="tree")
    run.add_argument("--gamma", type=float, default=0.01)
    run.add_argument("--enrich-k", type=int, default=2)
    run.add_argument("--window", type=int, default=50)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--jobs", type=int, default=1)
    run.add_argument("--trace", action="store_true", help="write trace.jsonl")
    run.add_argument("--stopwords-path", default=None)
    run.add_argument("--keep-adjectives", action="store_true")
    run.add_argument("--config", default=None,
                     help="key=value file; entries override flags")

    cmp_ = sub.add_parser("compare", help="merge finished run directories")
    cmp_.add_argument("runs", nargs="*", help="run output directories")
    cmp_.add_argument("--out", default="-", help="merged CSV path (default stdout)")

    val = sub.add_parser("validate", help="structural checks on a corpus")
    val.add_argument("--corpus", required=True)
    return ap


def apply_config_file(args: argparse.Namespace, path: str) -> None:
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        value = value.strip()
        if not hasattr(args, key):
            raise SystemExit(f"config: unknown key {key!r}")
        current = getattr(args, key)
        if isinstance(current, bool):
            setattr(args, key, value.lower() in ("1", "true", "yes"))
        elif isinstance(current, int):
            setattr(args, key, int(value))
        elif isinstance(current, float):
            setattr(args, key, float(value))
        else:
            setattr(args, key, value)


def sim_params(args) -> SimulationParams:
    return SimulationParams(wm=args.wm, recall_limit=args.recall_limit,
                            persistence=args.persistence, gamma=args.gamma,
                            enrich_k=args.enrich_k, early_stop=args.early_stop,
                            scoring=args.scoring)


def score_document(doc: Document, args):
    """Per-sentence scores, trace coverage, and trace when a simulator ran."""
    config = OverlapConfig.default(args.stopwords_path,
                                   drop_adjectives=not args.keep_adjectives)
    if args.system in ("treekvd", "graphkvd"):
        mod = treekvd if args.system == "treekvd" else graphkvd
        result = mod.simulate(doc, sim_params(args), config)
        sent_scores = selector.sentence_scores_from_propositions(
            doc, result.trees, result.table)
        cov = metrics.coverage(result.trace, len(result.props))
        return sent_scores, cov, result.trace
    if args.system == "fullgraph":
        table = baselines.fullgraph_scores(doc, window=args.window, config=config)
        trees = build_document_propositions(doc)
        return selector.sentence_scores_from_propositions(doc, trees, table), None, None
    if args.system == "textrank":
        return baselines.textrank_scores(doc, window=args.window).scores, None, None
    if args.system == "lead":
        return baselines.lead_scores(doc).scores, None, None
    if args.system == "random":
        return baselines.random_scores(doc, args.seed).scores, None, None
    if args.system == "random-wgt":
        return baselines.random_wgt_scores(doc, args.seed).scores, None, None
    raise ValueError(f"unknown system {args.system}")


def select_sentences(doc: Document, scores: dict[int, float], args):
    lengths = [len(s.tokens) for s in doc.sentences]
    ordered = [scores.get(i, 0.0) for i in range(len(doc.sentences))]
    if args.selector == "knapsack":
        return selector.knapsack_select(lengths, ordered, args.budget, args.sigma)
    if args.selector == "greedy":
        return selector.greedy_select(lengths, ordered, args.budget, args.sigma)
    if args.selector == "oracle":
        return selector.oracle_select(doc, args.budget, args.sigma)
    raise ValueError(f"unknown selector {args.selector}")


def process_document(doc: Document, args):
    scores, cov, trace = score_document(doc, args)
    sel = select_sentences(doc, scores, args)
    summary_sentences = [rouge_tokens(doc.sentences[i].text())
                         for i in sel.sentence_ids]
    doc_sentences = [rouge_tokens(s.text()) for s in doc.sentences]
    result = metrics.evaluate_summary(doc.doc_id, summary_sentences,
                                      doc.reference_summary, doc_sentences,
                                      trace_coverage=cov)
    row = {
        "doc_id": doc.doc_id,
        "sentence_ids": sel.sentence_ids,
        "text": " ".join(doc.sentences[i].text() for i in sel.sentence_ids),
        "n_tokens": sel.total_tokens,
        "score": round(sel.total_score, 9),
    }
    if sel.infeasible:
        row["infeasible"] = True
    trace_rows = [rec.to_json() for rec in trace] if trace else None
    return row, result, trace_rows


def cmd_run(args) -> int:
    corpus_path = Path(args.corpus)
    if not corpus_path.exists():
        print(f"error: corpus not found: {corpus_path}", file=sys.stderr)
        return 2
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(corpus_path, encoding="utf-8") as fh:
        docs = list(read_corpus(fh))
    docs.sort(key=lambda d: d.doc_id)

    rows: dict[str, dict] = {}
    results: dict[str, DocResult] = {}
    traces: dict[str, list] = {}
    failures = 0

    def work(doc):
        return doc.doc_id, process_document(doc, args)

    if args.jobs > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=args.jobs) as pool:
            futures = {pool.submit(work, doc): doc.doc_id for doc in docs}
            for fut in concurrent.futures.as_completed(futures):
                doc_id = futures[fut]
                try:
                    _, (row, result, trace_rows) = fut.result()
                except Exception as exc:   # noqa: BLE001 - degrade per document
                    log.warning("document %s failed: %s", doc_id, exc)
                    failures += 1
                    continue
                rows[doc_id] = row
                results[doc_id] = result
                if trace_rows:
                    traces[doc_id] = trace_rows
    else:
        for doc in docs:
            try:
                _, (row, result, trace_rows) = work(doc)
            except Exception as exc:   # noqa: BLE001
                log.warning("document %s failed: %s", doc.doc_id, exc)
                failures += 1
                continue
            rows[doc.doc_id] = row
            results[doc.doc_id] = result
            if trace_rows:
                traces[doc.doc_id] = trace_rows

    ordered_ids = sorted(rows)
    with open(out_dir / "summaries.jsonl", "w", encoding="utf-8") as fh:
        for doc_id in ordered_ids:
            fh.write(json.dumps(rows[doc_id], sort_keys=True) + "\n")

    res_list = [results[i] for i in ordered_ids]
    fieldnames = ["doc_id", "r1", "r2", "rl", "uniq", "red_rl", "red_rl_d",
                  "n_tokens", "coverage"]
    with open(out_dir / "metrics.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=fieldnames)
        writer.writeheader()
        for r in res_list:
            writer.writerow({
                "doc_id": r.doc_id,
                "r1": f"{100 * r.r1:.2f}", "r2": f"{100 * r.r2:.2f}",
                "rl": f"{100 * r.rl:.2f}", "uniq": f"{100 * r.uniq:.2f}",
                "red_rl": f"{100 * r.red_rl:.2f}",
                "red_rl_d": f"{100 * r.red_rl_d:.2f}",
                "n_tokens": r.n_tokens,
                "coverage": "" if r.coverage is None else f"{100 * r.coverage:.2f}",
            })
        for extra in metrics.corpus_summary_rows(res_list):
            writer.writerow({
                "doc_id": extra["doc_id"],
                "r1": f"{100 * extra['r1']:.2f}", "r2": f"{100 * extra['r2']:.2f}",
                "rl": f"{100 * extra['rl']:.2f}",
                "uniq": f"{100 * extra['uniq']:.2f}",
                "red_rl": f"{100 * extra['red_rl']:.2f}",
                "red_rl_d": f"{100 * extra['red_rl_d']:.2f}",
                "n_tokens": f"{extra['n_tokens']:.2f}",
                "coverage": "",
            })
        writer.writerow({"doc_id": "__failed__", "n_tokens": failures})

    binned = metrics.bin_by_document_redundancy(res_list)
    with open(out_dir / "bins.json", "w", encoding="utf-8") as fh:
        json.dump({"bin_width": binned.bin_width, "bins": binned.bins}, fh,
                  indent=2, sort_keys=True)
        fh.write("\n")

    if args.trace:
        with open(out_dir / "trace.jsonl", "w", encoding="utf-8") as fh:
            for doc_id in ordered_ids:
                for rec in traces.get(doc_id, []):
                    rec = dict(rec)
                    rec["doc_id"] = doc_id
                    fh.write(json.dumps(rec, sort_keys=True) + "\n")

    meta = {"system": args.system, "selector": args.selector,
            "budget": args.budget, "sigma": args.sigma, "wm": args.wm,
            "seed": args.seed, "doc_ids": ordered_ids, "failures": failures}
    with open(out_dir / "run.json", "w", encoding="utf-8") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return 0


def cmd_compare(args) -> int:
    if len(args.runs) < 2:
        print("error: compare needs at least two run directories", file=sys.stderr)
        return 2
    runs = []
    for run_dir in args.runs:
        meta_path = Path(run_dir) / "run.json"
        csv_path = Path(run_dir) / "metrics.csv"
        if not meta_path.exists() or not csv_path.exists():
            print(f"error: {run_dir} is not a finished run", file=sys.stderr)
            return 2
        meta = json.loads(meta_path.read_text(encoding="utf-8"))
        with open(csv_path, encoding="utf-8") as fh:
            rows = {row["doc_id"]: row for row in csv.DictReader(fh)}
        runs.append((run_dir, meta, rows))
    base_ids = runs[0][1]["doc_ids"]
    for run_dir, meta, _ in runs[1:]:
        if meta["doc_ids"] != base_ids:
            print(f"error: {run_dir} was produced on a different corpus",
                  file=sys.stderr)
            return 2
    header = ["system", "wm", "selector", "r1", "r2", "rl", "uniq", "red_rl",
              "n_tokens_mean", "n_tokens_std"]
    lines = [",".join(header)]
    for run_dir, meta, rows in runs:
        mean = rows["__mean__"]
        std = rows["__std__"]
        lines.append(",".join([
            meta["system"], str(meta.get("wm", "")), meta["selector"],
            mean["r1"], mean["r2"], mean["rl"], mean["uniq"], mean["red_rl"],
            mean["n_tokens"], std["n_tokens"]]))
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
    return 0


def cmd_validate(args) -> int:
    path = Path(args.corpus)
    if not path.exists():
        print(f"error: corpus not found: {path}", file=sys.stderr)
        return 2
    n_docs = 0
    n_diags = 0
    with open(path, encoding="utf-8") as fh:
        for doc in read_corpus(fh):
            n_docs += 1
            for diag in validate_document(doc):
                print(str(diag))
                n_diags += 1
    print(f"checked {n_docs} documents, {n_diags} diagnostics")
    return 0 if n_diags == 0 else 1


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    args = build_parser().parse_args(argv)
    if getattr(args, "config", None):
        apply_config_file(args, args.config)
    if args.command == "run":
        return cmd_run(args)
    if args.command == "compare":
        return cmd_compare(args)
    if args.command == "validate":
        return cmd_validate(args)
    raise AssertionError("unreachable")


if __name__ == "__main__":
    raise SystemExit(main())
