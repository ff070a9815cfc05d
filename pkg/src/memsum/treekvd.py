"""Tree-based working-memory simulator.

Working memory is a pruned proposition tree; long-term memory is a forest of
pruned fragments. Each cycle reads one sentence's proposition tree and tries,
in order: direct attachment at the best-overlapping node pair, recall of a
bridging path from the forest, replacement of a stale memory tree, or
persistence (with a hard reset when persistence expires). Only cycles that
installed new content update scores.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .corpus import Document
from .memory import (CycleRecord, MemoryTree, ScoreTable, SimulationParams,
                     adjust_root, closeness_of_root, memory_select,
                     update_scores)
from .overlap import OverlapConfig, OverlapScorer
from .propositions import Proposition, PropositionTree, build_document_propositions


@dataclass
class Fragment:
    """A pruned subtree kept in long-term memory with its internal edges."""
    nodes: frozenset[int]
    adj: dict[int, tuple[int, ...]]


@dataclass
class LongTermForest:
    fragments: list[Fragment] = field(default_factory=list)
    index: dict[str, set[int]] = field(default_factory=dict)   # lemma -> prop ids

    def node_ids(self) -> set[int]:
        out: set[int] = set()
        for f in self.fragments:
            out |= f.nodes
        return out

    def add_tree(self, tree: MemoryTree, scorer: OverlapScorer) -> None:
        if not tree:
            return
        adj = {n: tuple(sorted(neigh)) for n, neigh in tree.adjacency().items()}
        self.fragments.append(Fragment(nodes=frozenset(tree.parent), adj=adj))
        for n in tree.parent:
            for lemma in scorer.static_pool(n):
                self.index.setdefault(lemma, set()).add(n)

    def fragment_of(self, node: int) -> Fragment:
        for f in self.fragments:
            if node in f.nodes:
                return f
        raise KeyError(node)

    def remove_path(self, path: list[int]) -> None:
        """Recalled nodes leave the forest; the remainder of their fragment
        splits into connected components that stay behind."""
        frag = self.fragment_of(path[0])
        removed = set(path)
        assert removed <= frag.nodes
        self.fragments.remove(frag)
        for n in removed:
            for lemma, ids in self.index.items():
                ids.discard(n)
        remaining = set(frag.nodes) - removed
        seen: set[int] = set()
        for start in sorted(remaining):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                u = stack.pop()
                for v in frag.adj[u]:
                    if v in remaining and v not in comp:
                        comp.add(v)
                        stack.append(v)
            seen |= comp
            sub_adj = {n: tuple(v for v in frag.adj[n] if v in comp)
                       for n in sorted(comp)}
            self.fragments.append(Fragment(nodes=frozenset(comp), adj=sub_adj))


@dataclass
class SimulationResult:
    table: ScoreTable
    trace: list[CycleRecord]
    props: dict[int, Proposition]
    trees: list[PropositionTree]


def splice_incoming(tree: MemoryTree, t: int, p: int,
                    incoming: PropositionTree) -> MemoryTree:
    """Attach the incoming tree, re-rooted at p, below memory node t."""
    local = as_memory_tree(incoming).rerooted(p)
    merged = dict(tree.parent)
    merged.update(local.parent)
    merged[p] = t
    return MemoryTree(root=tree.root, parent=merged)


def attach_direct(incoming: PropositionTree, tree: MemoryTree,
                  scorer: OverlapScorer) -> tuple[int, int, float] | None:
    """Best (t, p) pair by overlap; ties prefer the most recent memory node,
    then the most general (lowest-id) incoming node. None when all zero."""
    if not tree:
        return None
    p_ids = incoming.ids()
    present = frozenset(tree.parent) | frozenset(p_ids)
    p_pools = [(p, scorer.static_pool(p)) for p in p_ids]
    best: tuple[float, int, int] | None = None
    for t in sorted(tree.parent):
        pool_t = scorer.static_pool(t)
        for p, pool_p in p_pools:
            if pool_t.isdisjoint(pool_p):
                continue
            w = scorer.phi_by_id(t, p, present)
            if w <= 0.0:
                continue
            key = (w, t, -p)
            if best is None or key > (best[0], best[1], -best[2]):
                best = (w, t, p)
    if best is None:
        return None
    return best[1], best[2], best[0]


def recall_attach(incoming: PropositionTree, tree: MemoryTree,
                  forest: LongTermForest, scorer: OverlapScorer,
                  recall_limit: int, early_stop: float,
                  ) -> tuple[int, list[int], int, float] | None:
    """Search the forest for a bridging path between memory and the incoming
    tree.

    Candidate anchors (t, f0) are tried in decreasing overlap; from each
    anchor, simple paths inside the anchor's fragment are extended
    depth-first (recent neighbor first) up to the length limit. Every link of
    a candidate must be strictly positive. The search returns the best found
    and stops early once that best exceeds ``early_stop``.
    """
    if not tree or not forest.fragments:
        return None
    t_nodes = sorted(tree.parent)
    p_ids = incoming.ids()
    base_present = frozenset(tree.parent) | frozenset(p_ids)

    # a successful path must exit into the incoming tree with positive
    # overlap, so fragments with no lexical contact with it cannot bridge
    incoming_pool = frozenset().union(*(scorer.static_pool(p) for p in p_ids))
    viable: set[int] = set()
    for frag in forest.fragments:
        if any(scorer.static_pool(n) & incoming_pool for n in frag.nodes):
            viable |= frag.nodes
    if not viable:
        return None

    anchors: list[tuple[float, int, int]] = []
    for t in t_nodes:
        pool_t = scorer.static_pool(t)
        for f0 in sorted(viable):
            if not (pool_t & scorer.static_pool(f0)):
                continue
            w = scorer.phi_by_id(t, f0, base_present | {f0})
            if w > 0.0:
                anchors.append((w, t, f0))
    # decreasing overlap, then most recent memory node and fragment node
    anchors.sort(key=lambda a: (-a[0], -a[1], -a[2]))

    best: tuple[float, int, list[int], int] | None = None
    for anchor_w, t, f0 in anchors:
        frag = forest.fragment_of(f0)
        stack: list[list[int]] = [[f0]]
        while stack:
            path = stack.pop()
            present = base_present | frozenset(path)
            # candidate exit to the incoming tree from the path's last node
            exit_best: tuple[float, int] | None = None
            for p in p_ids:
                w = scorer.phi_by_id(path[-1], p, present)
                if w <= 0.0:
                    continue
                if exit_best is None or (w, -p) > (exit_best[0], -exit_best[1]):
                    exit_best = (w, p)
            if exit_best is not None:
                internal = sum(
                    scorer.phi_by_id(path[i - 1], path[i], present)
                    for i in range(1, len(path)))
                anchor_full = scorer.phi_by_id(t, path[0], present)
                total = anchor_full + internal + exit_best[0]
                if best is None or total > best[0]:
                    best = (total, t, path, exit_best[1])
            if len(path) < recall_limit:
                for nxt in sorted(frag.adj[path[-1]], reverse=True):
                    if nxt in path:
                        continue
                    link = scorer.phi_by_id(path[-1], nxt,
                                            present | {nxt})
                    if link > 0.0:
                        stack.append(path + [nxt])
            if best is not None and best[0] > early_stop:
                return best[1], best[2], best[3], best[0]
    if best is None:
        return None
    return best[1], best[2], best[3], best[0]


def should_replace(incoming: PropositionTree, tree: MemoryTree,
                   incoming_tree: MemoryTree) -> bool:
    """Replace a stale memory tree when the incoming tree is larger and has a
    more central root."""
    if len(incoming.ids()) <= len(tree):
        return False
    return closeness_of_root(incoming_tree) > closeness_of_root(tree)


def as_memory_tree(incoming: PropositionTree) -> MemoryTree:
    parent: dict[int, int | None] = {incoming.root: None}
    for u, v in incoming.edges:
        parent[v] = u
    missing = set(incoming.ids()) - set(parent)
    if missing:
        raise ValueError(f"proposition tree edges do not cover nodes {sorted(missing)}")
    return MemoryTree(root=incoming.root, parent=parent)


def simulate_trees(prop_trees: list[PropositionTree],
                   params: SimulationParams,
                   scorer: OverlapScorer,
                   forest: LongTermForest | None = None,
                   initial_tree: MemoryTree | None = None,
                   validate: bool = False,
                   ) -> SimulationResult:
    """Run the memory cycles over pre-built proposition trees.

    With validate=True every cycle asserts the structural invariants:
    capacity, tree connectivity, score monotonicity, and the partition of
    captured propositions between working memory and the forest.
    """
    props: dict[int, Proposition] = dict(scorer.props)
    table = ScoreTable.for_ids(sorted(props))
    trace: list[CycleRecord] = []
    tree = initial_tree if initial_tree is not None else MemoryTree.empty()
    forest = forest if forest is not None else LongTermForest()
    psi = 0
    prev_scores = dict(table.scores) if validate else None

    for cycle, incoming in enumerate(prop_trees):
        mode = "persist"
        recalled: tuple[int, ...] = ()
        attached = False
        new_tree: MemoryTree | None = None

        if not tree:
            new_tree = as_memory_tree(incoming)
            mode = "replace"
            attached = True
        else:
            direct = attach_direct(incoming, tree, scorer)
            if direct is not None:
                t, p, _ = direct
                new_tree = splice_incoming(tree, t, p, incoming)
                mode = "direct"
                attached = True
            else:
                rec = recall_attach(incoming, tree, forest, scorer,
                                    params.recall_limit, params.early_stop)
                if rec is not None:
                    t, path, p, _ = rec
                    forest.remove_path(path)
                    grown = dict(tree.parent)
                    prev = t
                    for node in path:
                        grown[node] = prev
                        prev = node
                    grown_tree = MemoryTree(root=tree.root, parent=grown)
                    new_tree = splice_incoming(grown_tree, path[-1], p, incoming)
                    recalled = tuple(path)
                    mode = "recall"
                    attached = True
                else:
                    incoming_tree = as_memory_tree(incoming)
                    if should_replace(incoming, tree, incoming_tree):
                        forest.add_tree(tree, scorer)
                        new_tree = incoming_tree
                        mode = "replace"
                        attached = True

        if attached:
            assert new_tree is not None
            new_tree = adjust_root(new_tree)
            kept, pruned = memory_select(params.wm, new_tree)
            for frag in pruned:
                forest.add_tree(frag, scorer)
            update_scores(kept, table, params.scoring)
            psi = 0
            tree = kept
        else:
            psi += 1
            if psi >= params.persistence:
                forest.add_tree(tree, scorer)
                tree = MemoryTree.empty()
                psi = 0
                mode = "reset"

        table.cycle = cycle + 1
        kept_now = tuple(sorted(tree.parent)) if attached else ()
        trace.append(CycleRecord(cycle=cycle, sentence_id=incoming.sentence_id,
                                 mode=mode, kept=kept_now, recalled=recalled))

        if validate:
            assert len(tree.parent) <= params.wm, "capacity exceeded"
            tree.validate()
            forest_ids = forest.node_ids()
            assert not (set(tree.parent) & forest_ids), \
                "a proposition is both in memory and in the forest"
            if attached:
                assert table.total() > sum(prev_scores.values()), \
                    "attached cycle did not increase the total score"
            for pid, value in table.scores.items():
                assert value >= prev_scores[pid] - 1e-12, "score decreased"
            prev_scores = dict(table.scores)
    return SimulationResult(table=table, trace=trace, props=props,
                            trees=prop_trees)


def simulate(doc: Document, params: SimulationParams,
             config: OverlapConfig | None = None,
             validate: bool = False) -> SimulationResult:
    """Simulate reading a document; returns scores, trace, and propositions."""
    trees = build_document_propositions(doc)
    props = {p.id: p for tr in trees for p in tr.nodes}
    scorer = OverlapScorer(props, config or OverlapConfig.default())
    return simulate_trees(trees, params, scorer, validate=validate)
