"""Relevancy and redundancy metrics: n-gram and LCS ROUGE F1, n-gram
uniqueness, pairwise and best-partner sentence redundancy, simulation
coverage, and redundancy binning of corpus results.

ROUGE here tokenizes by lowercased whitespace splitting with no stemming or
stopword removal, so values are comparable within this package only.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from statistics import fmean, pstdev

from .memory import CycleRecord


def rouge_tokens(text: str) -> list[str]:
    return text.lower().split()


def ngram_counts(tokens: list[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def _f1(p: float, r: float) -> float:
    return 2 * p * r / (p + r) if (p + r) > 0 else 0.0


def rouge_n(candidate: list[str], reference: list[str], n: int
            ) -> tuple[float, float, float]:
    """Clipped n-gram overlap (precision, recall, F1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cand = ngram_counts(candidate, n)
    ref = ngram_counts(reference, n)
    n_cand = sum(cand.values())
    n_ref = sum(ref.values())
    if n_cand == 0 or n_ref == 0:
        return 0.0, 0.0, 0.0
    match = sum(min(count, ref[g]) for g, count in cand.items() if g in ref)
    p = match / n_cand
    r = match / n_ref
    return p, r, _f1(p, r)


def lcs_length(a: list[str], b: list[str]) -> int:
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, start=1):
            if x == y:
                cur.append(prev[j - 1] + 1)
            else:
                cur.append(max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def rouge_l(candidate: list[str], reference: list[str]
            ) -> tuple[float, float, float]:
    """Longest-common-subsequence precision, recall, F1."""
    if not candidate or not reference:
        return 0.0, 0.0, 0.0
    lcs = lcs_length(candidate, reference)
    p = lcs / len(candidate)
    r = lcs / len(reference)
    return p, r, _f1(p, r)


def uniq(tokens: list[str]) -> tuple[float, bool]:
    """Geometric mean of (1 - unique/total) over 1..3-grams.

    Returns (score, defined); texts shorter than 3 tokens are undefined and
    report 0.
    """
    if len(tokens) < 3:
        return 0.0, False
    parts = []
    for n in (1, 2, 3):
        counts = ngram_counts(tokens, n)
        total = sum(counts.values())
        parts.append(1.0 - len(counts) / total)
    prod = parts[0] * parts[1] * parts[2]
    return prod ** (1.0 / 3.0), True


def red_rl(sentences: list[list[str]]) -> tuple[float, bool]:
    """Mean pairwise ROUGE-L F1 over distinct sentence pairs."""
    if len(sentences) < 2:
        return 0.0, False
    total = 0.0
    pairs = 0
    for i in range(len(sentences)):
        for j in range(i + 1, len(sentences)):
            total += rouge_l(sentences[i], sentences[j])[2]
            pairs += 1
    return total / pairs, True


def red_rl_d(sentences: list[list[str]]) -> tuple[float, bool]:
    """Mean over sentences of the best-partner ROUGE-L F1 (document
    redundancy robust to length)."""
    if len(sentences) < 2:
        return 0.0, False
    total = 0.0
    for i in range(len(sentences)):
        best = 0.0
        for j in range(len(sentences)):
            if i == j:
                continue
            score = rouge_l(sentences[i], sentences[j])[2]
            if score > best:
                best = score
        total += best
    return total / len(sentences), True


def coverage(trace: list[CycleRecord], total_props: int) -> float:
    """Share of propositions that were ever retained in a pruned tree."""
    if total_props == 0:
        return 0.0
    kept: set[int] = set()
    for rec in trace:
        kept.update(rec.kept)
    return len(kept) / total_props


@dataclass
class DocResult:
    doc_id: str
    r1: float = 0.0
    r2: float = 0.0
    rl: float = 0.0
    uniq: float = 0.0
    red_rl: float = 0.0
    red_rl_d: float = 0.0
    n_tokens: int = 0
    coverage: float | None = None
    has_reference: bool = False


def evaluate_summary(doc_id: str, summary_sentences: list[list[str]],
                     reference: str | None,
                     document_sentences: list[list[str]] | None = None,
                     trace_coverage: float | None = None) -> DocResult:
    res = DocResult(doc_id=doc_id)
    all_tokens = [t for sent in summary_sentences for t in sent]
    res.n_tokens = len(all_tokens)
    if reference:
        ref_tokens = rouge_tokens(reference)
        res.r1 = rouge_n(all_tokens, ref_tokens, 1)[2]
        res.r2 = rouge_n(all_tokens, ref_tokens, 2)[2]
        res.rl = rouge_l(all_tokens, ref_tokens)[2]
        res.has_reference = True
    res.uniq = uniq(all_tokens)[0]
    res.red_rl = red_rl(summary_sentences)[0]
    if document_sentences is not None:
        res.red_rl_d = red_rl_d(document_sentences)[0]
    res.coverage = trace_coverage
    return res


@dataclass
class BinnedReport:
    bin_width: float
    bins: list[dict]


def bin_by_document_redundancy(results: list[DocResult],
                               bin_width: float = 0.1) -> BinnedReport:
    """Equal-width bins over document redundancy; per-bin means of summary
    ROUGE-L, summary redundancy, and summary length. Empty bins omitted."""
    if bin_width <= 0:
        raise ValueError("bin width must be positive")
    groups: dict[int, list[DocResult]] = {}
    for res in results:
        groups.setdefault(int(res.red_rl_d / bin_width), []).append(res)
    bins = []
    for idx in sorted(groups):
        members = groups[idx]
        bins.append({
            "lo": idx * bin_width,
            "hi": (idx + 1) * bin_width,
            "count": len(members),
            "mean_rl": fmean(r.rl for r in members),
            "mean_red_rl": fmean(r.red_rl for r in members),
            "mean_n_tokens": fmean(r.n_tokens for r in members),
        })
    return BinnedReport(bin_width=bin_width, bins=bins)


def corpus_summary_rows(results: list[DocResult]) -> list[dict]:
    """Mean and standard deviation rows for a per-document result list."""
    if not results:
        return []
    def col(values):
        return fmean(values), pstdev(values) if len(values) > 1 else 0.0
    fields = ["r1", "r2", "rl", "uniq", "red_rl", "red_rl_d", "n_tokens"]
    mean_row = {"doc_id": "__mean__"}
    std_row = {"doc_id": "__std__"}
    for name in fields:
        values = [getattr(r, name) for r in results]
        mean_row[name], std_row[name] = col(values)
    return [mean_row, std_row]
