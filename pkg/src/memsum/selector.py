"""Sentence selection under a soft token budget.

The main selector solves the 0-1 knapsack exactly over total summary length,
accepting only lengths L with |L - W| < sigma; when no subset reaches the
band it falls back to the best subset under the upper bound and flags the
selection infeasible. A greedy selector and a reference-guided hill-climb
selector are provided for comparison runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Document
from .memory import ScoreTable
from .metrics import ngram_counts, rouge_tokens
from .propositions import PropositionTree

NEG_INF = float("-inf")


@dataclass
class Selection:
    sentence_ids: list[int]
    total_tokens: int
    total_score: float
    selector: str
    infeasible: bool = False
    overshoot: bool = False


def knapsack_select(lengths: list[int], scores: list[float], budget: int,
                    sigma: int) -> Selection:
    """Exact DP over total length; prefers higher score, then shorter length,
    then the lexicographically smallest id set."""
    n = len(lengths)
    if any(l <= 0 for l in lengths):
        raise ValueError("sentence lengths must be positive")
    if any(s < 0 for s in scores):
        raise ValueError("scores must be non-negative")
    cap = budget + sigma - 1
    lo = max(0, budget - sigma + 1)
    if n == 0 or cap < 1:
        return Selection([], 0, 0.0, "knapsack", infeasible=True)

    # suf[i][l] = best score from items i.. using total length exactly l
    suf = [[NEG_INF] * (cap + 1) for _ in range(n + 1)]
    suf[n][0] = 0.0
    for i in range(n - 1, -1, -1):
        li, si = lengths[i], scores[i]
        row, nxt = suf[i], suf[i + 1]
        for l in range(cap + 1):
            exclude = nxt[l]
            include = nxt[l - li] + si if l >= li and nxt[l - li] > NEG_INF else NEG_INF
            row[l] = include if include > exclude else exclude

    def pick_target(lo_l: int, hi_l: int) -> tuple[float, int] | None:
        best = None
        for l in range(lo_l, hi_l + 1):
            if suf[0][l] == NEG_INF:
                continue
            if best is None or suf[0][l] > best[0]:
                best = (suf[0][l], l)
        return best

    target = pick_target(lo, cap)
    infeasible = target is None
    if infeasible:
        target = pick_target(0, cap)
    if target is None:
        return Selection([], 0, 0.0, "knapsack", infeasible=True)
    best_score, best_len = target

    # forward greedy reconstruction: include the earliest items compatible
    # with the optimum, which yields the lexicographically smallest id set
    chosen: list[int] = []
    l = best_len
    for i in range(n):
        li, si = lengths[i], scores[i]
        if l >= li and suf[i + 1][l - li] > NEG_INF and \
                suf[i + 1][l - li] + si == suf[i][l]:
            chosen.append(i)
            l -= li
    total_len = sum(lengths[i] for i in chosen)
    total_score = sum(scores[i] for i in chosen)
    return Selection(chosen, total_len, total_score, "knapsack",
                     infeasible=infeasible)


def greedy_select(lengths: list[int], scores: list[float], budget: int,
                  sigma: int) -> Selection:
    """Insert highest-scored sentences until the budget is met; flags the
    selection when the total lands outside the band."""
    order = sorted(range(len(lengths)), key=lambda i: (-scores[i], i))
    chosen: list[int] = []
    total = 0
    for i in order:
        if total >= budget:
            break
        chosen.append(i)
        total += lengths[i]
    chosen.sort()
    score = sum(scores[i] for i in chosen)
    overshoot = abs(total - budget) >= sigma
    return Selection(chosen, total, score, "greedy", overshoot=overshoot)


def oracle_select(doc: Document, budget: int, sigma: int) -> Selection:
    """Reference-guided hill climb: repeatedly add the sentence with the best
    unigram+bigram recall gain per token while the summary stays under the
    band's upper edge; stops early once no addition improves recall."""
    if doc.reference_summary is None:
        raise ValueError(f"document {doc.doc_id} has no reference summary")
    ref_tokens = rouge_tokens(doc.reference_summary)
    ref1 = ngram_counts(ref_tokens, 1)
    ref2 = ngram_counts(ref_tokens, 2)
    n_ref1 = max(1, sum(ref1.values()))
    n_ref2 = max(1, sum(ref2.values()))
    lengths = [len(s.tokens) for s in doc.sentences]

    def objective(ids: list[int]) -> float:
        toks: list[str] = []
        for i in sorted(ids):
            toks.extend(rouge_tokens(doc.sentences[i].text()))
        c1 = ngram_counts(toks, 1)
        c2 = ngram_counts(toks, 2)
        r1 = sum(min(c, ref1[g]) for g, c in c1.items() if g in ref1) / n_ref1
        r2 = sum(min(c, ref2[g]) for g, c in c2.items() if g in ref2) / n_ref2
        return r1 + r2

    chosen: list[int] = []
    total = 0
    current = 0.0
    cap = budget + sigma
    while True:
        best = None
        for i in range(len(doc.sentences)):
            if i in chosen or lengths[i] == 0:
                continue
            if total + lengths[i] >= cap:
                continue
            gain = (objective(chosen + [i]) - current) / lengths[i]
            if gain <= 0.0:
                continue
            if best is None or (gain, -i) > (best[0], -best[1]):
                best = (gain, i)
        if best is None:
            break
        _, i = best
        chosen.append(i)
        total += lengths[i]
        current = objective(chosen)
    chosen.sort()
    return Selection(chosen, total, current, "oracle",
                     infeasible=abs(total - budget) >= sigma)


def sentence_scores_from_propositions(doc: Document,
                                      trees: list[PropositionTree],
                                      table: ScoreTable) -> dict[int, float]:
    """Sentence score = sum of its propositions' scores."""
    out = {i: 0.0 for i in range(len(doc.sentences))}
    for tree in trees:
        total = sum(table.scores.get(p.id, 0.0) for p in tree.nodes)
        out[tree.sentence_id] = out.get(tree.sentence_id, 0.0) + total
    return out
