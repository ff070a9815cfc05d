"""Comparison scorers: PageRank over the windowed proposition graph,
TF-IDF TextRank over sentences, lead, and the two random baselines."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from .corpus import Document
from .memory import ScoreTable
from .overlap import OverlapConfig, OverlapScorer
from .propositions import build_document_propositions


@dataclass
class SentenceScores:
    scores: dict[int, float]
    system: str
    params: dict = field(default_factory=dict)
    converged: bool = True


def pagerank(n: int, edges: dict[tuple[int, int], float], *,
             damping: float = 0.85, tol: float = 1e-9,
             max_iter: int = 200) -> tuple[np.ndarray, bool]:
    """Weighted PageRank on an undirected graph given as {(u, v): w}.

    Dangling mass is redistributed uniformly; converged when the L1 change
    drops below ``tol``. Returns (scores summing to 1, converged flag).
    """
    if n == 0:
        return np.zeros(0), True
    if not edges:
        return np.full(n, 1.0 / n), True
    rows, cols, vals = [], [], []
    for (u, v), w in edges.items():
        rows.extend([u, v])
        cols.extend([v, u])
        vals.extend([w, w])
    m = sparse.csr_matrix((vals, (rows, cols)), shape=(n, n))
    out_weight = np.asarray(m.sum(axis=1)).ravel()
    dangling = out_weight == 0
    inv = np.zeros(n)
    inv[~dangling] = 1.0 / out_weight[~dangling]
    # column-stochastic transition: follow edges proportionally to weight
    transition = m.multiply(inv[:, None]).T.tocsr()
    r = np.full(n, 1.0 / n)
    teleport = (1.0 - damping) / n
    converged = False
    for _ in range(max_iter):
        dangling_mass = r[dangling].sum() / n
        new_r = teleport + damping * (transition @ r + dangling_mass)
        if np.abs(new_r - r).sum() < tol:
            r = new_r
            converged = True
            break
        r = new_r
    r = r / r.sum()
    return r, converged


def fullgraph_scores(doc: Document, window: int = 50,
                     config: OverlapConfig | None = None) -> ScoreTable:
    """Propositions as nodes, overlap-weighted edges within a sentence
    window, PageRank as the score."""
    trees = build_document_propositions(doc)
    props = {p.id: p for tr in trees for p in tr.nodes}
    scorer = OverlapScorer(props, config or OverlapConfig.default())
    ids = sorted(props)
    index = {pid: i for i, pid in enumerate(ids)}
    edges: dict[tuple[int, int], float] = {}
    for a_pos, pid in enumerate(ids):
        pa = props[pid]
        for qid in ids[a_pos + 1:]:
            pb = props[qid]
            if abs(pa.sentence_id - pb.sentence_id) > window:
                continue
            if not (scorer.static_pool(pid) & scorer.static_pool(qid)):
                continue
            w = scorer.phi(pa, pb)
            if w > 0.0:
                edges[(index[pid], index[qid])] = w
    r, _ = pagerank(len(ids), edges)
    table = ScoreTable.for_ids(ids)
    for pid in ids:
        table.scores[pid] = float(r[index[pid]])
    return table


def _sentence_lemmas(doc: Document, sent_id: int) -> list[str]:
    return [t.lemma.lower() for t in doc.sentences[sent_id].tokens
            if t.upos != "PUNCT"]


def textrank_scores(doc: Document, window: int = 50) -> SentenceScores:
    """Sentence graph weighted by TF-IDF cosine (IDF from the document's own
    sentences), window-limited, scored with PageRank."""
    n = len(doc.sentences)
    if n == 0:
        return SentenceScores(scores={}, system="textrank")
    if n == 1:
        return SentenceScores(scores={0: 1.0}, system="textrank")
    docs_lemmas = [_sentence_lemmas(doc, i) for i in range(n)]
    df: dict[str, int] = {}
    for lemmas in docs_lemmas:
        for term in set(lemmas):
            df[term] = df.get(term, 0) + 1
    idf = {term: math.log(n / count) + 1.0 for term, count in df.items()}
    vectors: list[dict[str, float]] = []
    for lemmas in docs_lemmas:
        tf: dict[str, float] = {}
        for term in lemmas:
            tf[term] = tf.get(term, 0.0) + 1.0
        vec = {term: count * idf[term] for term, count in tf.items()}
        norm = math.sqrt(sum(v * v for v in vec.values()))
        if norm > 0:
            vec = {term: v / norm for term, v in vec.items()}
        vectors.append(vec)
    edges: dict[tuple[int, int], float] = {}
    for i in range(n):
        vi = vectors[i]
        for j in range(i + 1, min(n, i + window + 1)):
            vj = vectors[j]
            if len(vj) < len(vi):
                vi_, vj_ = vj, vi
            else:
                vi_, vj_ = vi, vj
            cos = sum(w * vj_.get(term, 0.0) for term, w in vi_.items())
            if cos > 0.0:
                edges[(i, j)] = cos
    r, converged = pagerank(n, edges)
    return SentenceScores(scores={i: float(r[i]) for i in range(n)},
                          system="textrank", converged=converged)


def lead_scores(doc: Document) -> SentenceScores:
    n = len(doc.sentences)
    return SentenceScores(scores={i: float(n - i) for i in range(n)}, system="lead")


def random_scores(doc: Document, seed: int) -> SentenceScores:
    rng = random.Random(seed)
    return SentenceScores(scores={i: rng.random() for i in range(len(doc.sentences))},
                          system="random", params={"seed": seed})


def random_wgt_scores(doc: Document, seed: int) -> SentenceScores:
    """Uniform draw scaled by the owning section's share of document tokens."""
    rng = random.Random(seed)
    section_tokens = [0] * len(doc.sections)
    total = 0
    for sent in doc.sentences:
        section_tokens[sent.section_id] += len(sent.tokens)
        total += len(sent.tokens)
    shares = [count / total if total else 0.0 for count in section_tokens]
    scores = {}
    for i, sent in enumerate(doc.sentences):
        scores[i] = rng.random() * shares[sent.section_id]
    return SentenceScores(scores=scores, system="random-wgt", params={"seed": seed})
