"""Lexical overlap between propositions.

Two propositions overlap through a greedy maximum matching over their
functors, weighted by Jaccard similarity of lemma sets (stopwords,
punctuation, and adjectives discarded). The overlap score is the mean weight
of the matched pairs.

Pointer arguments stand for their target proposition's literal lemma content
(predicate plus literal arguments, one level), but only while the target is
accessible in the structure under evaluation; a pointer to a pruned, absent
proposition contributes nothing until the target is recalled.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping

from .propositions import Functor, FunctorKind, Proposition


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    """Built-in English stopword list, or one word per line from ``path``."""
    if path is None:
        text = resources.files("memsum.data").joinpath("stopwords.txt").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return frozenset(w.strip().lower() for w in text.splitlines() if w.strip())


@dataclass(frozen=True)
class OverlapConfig:
    stopwords: frozenset[str]
    drop_adjectives: bool = True

    @classmethod
    def default(cls, stopwords_path: str | Path | None = None,
                drop_adjectives: bool = True) -> "OverlapConfig":
        return cls(stopwords=load_stopwords(stopwords_path),
                   drop_adjectives=drop_adjectives)


def jaccard(a: frozenset[str], b: frozenset[str]) -> float:
    """|a & b| / |a | b|; zero when both sets are empty."""
    if not a or not b:
        return 0.0
    inter = len(a & b)
    if inter == 0:
        return 0.0
    return inter / len(a | b)


Alignment = list[tuple[int, int, float]]   # (functor index in p1, in p2, weight)


class OverlapScorer:
    """Pairwise proposition overlap with per-proposition lemma caching.

    ``props`` maps proposition id -> Proposition for pointer resolution.
    ``present`` (a set of proposition ids, or None for unrestricted) controls
    which pointer targets are resolvable in a given evaluation.
    """

    def __init__(self, props: Mapping[int, Proposition], config: OverlapConfig):
        self.props = props
        self.config = config
        self._literal: dict[int, frozenset[str]] = {}
        self._functor_literal: dict[tuple[int, int], frozenset[str]] = {}
        self._static_pool: dict[int, frozenset[str]] = {}
        self._phi_cache: dict[tuple, float] = {}
        # per proposition: [(pointer target or None, literal lemma set), ...]
        self._table: dict[int, list[tuple[int | None, frozenset[str]]]] = {}

    # -- lemma sets -------------------------------------------------------

    def _token_lemmas(self, functor: Functor) -> frozenset[str]:
        out = set()
        for t in functor.tokens:
            if t.upos == "PUNCT":
                continue
            if self.config.drop_adjectives and t.upos == "ADJ":
                continue
            lemma = t.lemma.lower()
            if not lemma or lemma in self.config.stopwords:
                continue
            if not any(ch.isalnum() for ch in lemma):
                continue
            out.add(lemma)
        return frozenset(out)

    def literal_content(self, pid: int) -> frozenset[str]:
        """Lemmas of a proposition's own predicate and literal arguments."""
        cached = self._literal.get(pid)
        if cached is None:
            p = self.props[pid]
            s: set[str] = set()
            for f in p.functors:
                if f.kind is not FunctorKind.POINTER:
                    s |= self._token_lemmas(f)
            cached = frozenset(s)
            self._literal[pid] = cached
        return cached

    def functor_lemmas(self, p: Proposition, idx: int,
                       present: frozenset[int] | None) -> frozenset[str]:
        f = p.functors[idx]
        if f.kind is FunctorKind.POINTER:
            if f.target not in self.props:
                return frozenset()
            if present is not None and f.target not in present:
                return frozenset()
            return self.literal_content(f.target)
        key = (p.id, idx)
        cached = self._functor_literal.get(key)
        if cached is None:
            cached = self._token_lemmas(f)
            self._functor_literal[key] = cached
        return cached

    def functor_table(self, pid: int) -> list[tuple[int | None, frozenset[str]]]:
        """Materialized functor entries: (pointer target | None, lemma set)."""
        cached = self._table.get(pid)
        if cached is None:
            p = self.props[pid]
            cached = []
            for f in p.functors:
                if f.kind is FunctorKind.POINTER:
                    if f.target in self.props:
                        cached.append((f.target, self.literal_content(f.target)))
                    else:
                        cached.append((f.target, frozenset()))
                else:
                    cached.append((None, self._token_lemmas(f)))
            self._table[pid] = cached
        return cached

    def static_pool(self, pid: int) -> frozenset[str]:
        """Upper bound of a proposition's lemma pool (all pointers resolved).

        Sound prefilter: presence restrictions only shrink lemma sets, so a
        pair whose static pools are disjoint always has overlap zero.
        """
        cached = self._static_pool.get(pid)
        if cached is None:
            p = self.props[pid]
            s = set(self.literal_content(pid))
            for t in p.pointer_targets():
                if t in self.props:
                    s |= self.literal_content(t)
            cached = frozenset(s)
            self._static_pool[pid] = cached
        return cached

    # -- alignment and overlap --------------------------------------------

    def _resolved_sets(self, pid: int,
                       present: frozenset[int] | None) -> list[frozenset[str]]:
        if present is None:
            return [entry for _, entry in self.functor_table(pid)]
        return [entry if target is None or target in present else frozenset()
                for target, entry in self.functor_table(pid)]

    def align(self, p1: Proposition, p2: Proposition,
              present: frozenset[int] | None = None) -> Alignment:
        """Greedy maximum matching over functor pairs.

        Highest-weight pair first; ties break on (lower p1 index, lower p2
        index); zero-weight pairs are never matched; each functor used once.
        """
        sets1 = self._resolved_sets(p1.id, present)
        sets2 = self._resolved_sets(p2.id, present)
        pairs = []
        for i, a in enumerate(sets1):
            if not a:
                continue
            for j, b in enumerate(sets2):
                if not b or a.isdisjoint(b):
                    continue
                inter = len(a & b)
                pairs.append((-(inter / len(a | b)), i, j))
        pairs.sort()
        used1: set[int] = set()
        used2: set[int] = set()
        out: Alignment = []
        for negw, i, j in pairs:
            if i in used1 or j in used2:
                continue
            used1.add(i)
            used2.add(j)
            out.append((i, j, -negw))
        return out

    def _presence_key(self, p: Proposition, present: frozenset[int] | None):
        if present is None:
            return None
        return tuple((t in present) for t in p.pointer_targets())

    def phi(self, p1: Proposition, p2: Proposition,
            present: frozenset[int] | None = None) -> float:
        """Mean weight over the greedy alignment; zero when nothing aligns."""
        if self.static_pool(p1.id).isdisjoint(self.static_pool(p2.id)):
            return 0.0
        key = (p1.id, p2.id, self._presence_key(p1, present), self._presence_key(p2, present))
        cached = self._phi_cache.get(key)
        if cached is not None:
            return cached
        alignment = self.align(p1, p2, present)
        value = sum(w for _, _, w in alignment) / len(alignment) if alignment else 0.0
        self._phi_cache[key] = value
        return value

    def phi_by_id(self, id1: int, id2: int,
                  present: frozenset[int] | None = None) -> float:
        return self.phi(self.props[id1], self.props[id2], present)
