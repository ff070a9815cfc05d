"""Graph-based working-memory simulator.

Long-term memory is a single weighted undirected proposition graph that only
grows; working memory is the maximum spanning tree of the cycle's working
subgraph, pruned to capacity. Each incoming node connects to its best
overlapping memory node; unattachable nodes recall shortest paths from the
long-term graph; discarded or reset memory triggers enrichment by free-recall
order. Members of the pruned tree score fully, their graph neighbors score
with a decay factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .corpus import Document
from .memory import (CycleRecord, MemoryTree, ScoreTable, SimulationParams,
                     adjust_root, memory_select, node_importance,
                     update_scores)
from .overlap import OverlapConfig, OverlapScorer
from .propositions import Proposition, PropositionTree, build_document_propositions
from .treekvd import SimulationResult, as_memory_tree, should_replace

@dataclass
class LongTermGraph:
    """Grow-only weighted proposition graph with capture-order metadata."""
    weights: dict[tuple[int, int], float] = field(default_factory=dict)
    adj: dict[int, set[int]] = field(default_factory=dict)
    recency: dict[int, int] = field(default_factory=dict)    # id -> first cycle
    context: dict[int, int] = field(default_factory=dict)    # id -> section

    @staticmethod
    def _key(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u < v else (v, u)

    def add_node(self, node: int, cycle: int, section: int) -> None:
        if node not in self.adj:
            self.adj[node] = set()
            self.recency[node] = cycle
            self.context[node] = section

    def add_edge(self, u: int, v: int, weight: float) -> None:
        """Edges persist with their creation-time weight."""
        if u == v:
            raise ValueError("self-loops are not allowed")
        key = self._key(u, v)
        if key in self.weights:
            return
        if not (0.0 < weight <= 1.0):
            raise ValueError(f"edge weight must be in (0, 1], got {weight}")
        self.weights[key] = weight
        self.adj[u].add(v)
        self.adj[v].add(u)

    def weight(self, u: int, v: int) -> float:
        return self.weights[self._key(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return self._key(u, v) in self.weights

    def nodes(self) -> set[int]:
        return set(self.adj)


@dataclass
class WorkingGraph:
    """The cycle's working structure G': nodes and weighted edges."""
    nodes: set[int] = field(default_factory=set)
    edges: dict[tuple[int, int], float] = field(default_factory=dict)

    @staticmethod
    def _key(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u < v else (v, u)

    def add_edge(self, u: int, v: int, weight: float) -> None:
        self.nodes.add(u)
        self.nodes.add(v)
        key = self._key(u, v)
        if key not in self.edges:
            self.edges[key] = weight

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {n: set() for n in self.nodes}
        for (u, v) in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def connected(self) -> bool:
        if not self.nodes:
            return False
        adj = self.adjacency()
        start = next(iter(sorted(self.nodes)))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen == self.nodes


def attach_nodes(incoming: PropositionTree, tree: MemoryTree,
                 scorer: OverlapScorer, graph: LongTermGraph,
                 ) -> tuple[WorkingGraph, list[int]]:
    """Union of the incoming and memory trees; every incoming node links to
    its best-overlap memory node. Returns the working graph and the incoming
    nodes that found no link."""
    g = WorkingGraph()
    present = frozenset(graph.nodes()) | frozenset(tree.parent) | frozenset(incoming.ids())
    # syntactic edges are exact references: full binding strength
    for u, v in incoming.edges:
        g.add_edge(u, v, 1.0)
    g.nodes.update(incoming.ids())
    for child, par in tree.parent.items():
        g.nodes.add(child)
        if par is not None:
            g.add_edge(par, child, graph.weight(par, child)
                       if graph.has_edge(par, child) else 1.0)
    unattached: list[int] = []
    t_pools = [(t, scorer.static_pool(t)) for t in sorted(tree.parent)]
    for p in incoming.ids():
        pool_p = scorer.static_pool(p)
        best: tuple[float, int] | None = None
        for t, pool_t in t_pools:
            if pool_t.isdisjoint(pool_p):
                continue
            w = scorer.phi_by_id(t, p, present)
            if w <= 0.0:
                continue
            if best is None or (w, t) > best:
                best = (w, t)
        if best is None:
            unattached.append(p)
        else:
            g.add_edge(best[1], p, best[0])
    return g, unattached


def shortest_paths(graph: LongTermGraph, start: int, goal: int,
                   max_len: int, cap: int = 64) -> list[list[int]]:
    """All shortest paths start..goal (inclusive) in the unweighted graph,
    up to ``max_len`` nodes, deterministic order, capped."""
    if start not in graph.adj or goal not in graph.adj:
        return []
    if start == goal:
        return [[start]]
    dist = {start: 0}
    frontier = [start]
    parents: dict[int, list[int]] = {start: []}
    found_d: int | None = None
    while frontier:
        nxt = []
        for u in sorted(frontier):
            for v in sorted(graph.adj[u]):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parents[v] = [u]
                    nxt.append(v)
                elif dist[v] == dist[u] + 1:
                    parents[v].append(u)
        if goal in dist:
            found_d = dist[goal]
            break
        frontier = nxt
        if frontier and dist[frontier[0]] >= max_len:
            return []
    if found_d is None or found_d + 1 > max_len:
        return []
    paths: list[list[int]] = []

    def backtrack(node: int, suffix: list[int]):
        if len(paths) >= cap:
            return
        if node == start:
            paths.append([start] + suffix)
            return
        for par in sorted(parents[node]):
            backtrack(par, [node] + suffix)

    backtrack(goal, [])
    return paths


def recall_paths(unattached: list[int], incoming: PropositionTree,
                 tree: MemoryTree, graph: LongTermGraph, scorer: OverlapScorer,
                 recall_limit: int, g: WorkingGraph,
                 ) -> dict[int, tuple[int, list[int]]]:
    """For each pending incoming node, pick the best (entry node, shortest
    path to a memory node) by anchored overlap with a length penalty; chosen
    path nodes and edges join the working graph."""
    if not tree:
        return {}
    out: dict[int, tuple[int, list[int]]] = {}
    t_nodes = sorted(tree.parent)
    base_present = (frozenset(graph.nodes()) | frozenset(tree.parent)
                    | frozenset(incoming.ids()))
    sizes = tree.subtree_sizes()
    importance = {t: node_importance(t, tree, sizes) for t in t_nodes}

    for p in sorted(unattached):
        pool_p = scorer.static_pool(p)
        best: tuple[tuple[float, int, int], int, list[int]] | None = None
        for f0 in sorted(graph.nodes()):
            if f0 in tree.parent:
                continue
            if not (pool_p & scorer.static_pool(f0)):
                continue
            w0 = scorer.phi_by_id(p, f0, base_present)
            if w0 <= 0.0:
                continue
            for t in t_nodes:
                for path in shortest_paths(graph, f0, t, recall_limit):
                    internal = sum(graph.weight(path[i - 1], path[i])
                                   for i in range(1, len(path)))
                    value = w0 + importance[t] * internal * math.exp(-len(path))
                    key = (value, t, f0)
                    if best is None or key > best[0]:
                        best = (key, t, path)
        if best is not None and best[0][0] > 0.0:
            _, t, path = best
            out[p] = (t, path)
            for node in path:
                g.nodes.add(node)
            for i in range(1, len(path)):
                g.add_edge(path[i - 1], path[i], graph.weight(path[i - 1], path[i]))
            g.add_edge(p, path[0], scorer.phi_by_id(p, path[0], base_present))
    return out


def enrich(g: WorkingGraph, graph: LongTermGraph, current_section: int,
           k: int, scorer: OverlapScorer) -> int:
    """Connect each working node to its top-k candidates from long-term
    memory, same-section first, then earliest-captured first. Long-term
    memory itself is untouched; returns the number of edges added."""
    added = 0
    present = frozenset(graph.nodes()) | frozenset(g.nodes)
    for p in sorted(g.nodes):
        pool_p = scorer.static_pool(p)
        candidates = []
        for cand in sorted(graph.nodes()):
            if cand == p or cand in g.nodes:
                continue
            if not (pool_p & scorer.static_pool(cand)):
                continue
            w = scorer.phi_by_id(p, cand, present)
            if w <= 0.0:
                continue
            same_section = graph.context.get(cand) == current_section
            candidates.append((not same_section, graph.recency.get(cand, 0), -w, cand))
        candidates.sort()
        for (_, _, negw, cand) in candidates[:k]:
            g.add_edge(p, cand, -negw)
            added += 1
    return added


def maximum_spanning_tree(g: WorkingGraph) -> MemoryTree:
    """Greedy edge insertion by descending weight, ties to lower endpoints;
    root at the node with maximal closeness."""
    if not g.connected():
        raise ValueError("working graph is disconnected; attachment must handle this")
    nodes = sorted(g.nodes)
    if len(nodes) == 1:
        return MemoryTree(root=nodes[0], parent={nodes[0]: None})
    comp = {n: n for n in nodes}

    def find(x: int) -> int:
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    ordered = sorted(g.edges.items(), key=lambda kv: (-kv[1], kv[0][0], kv[0][1]))
    chosen: list[tuple[int, int]] = []
    for (u, v), _w in ordered:
        ru, rv = find(u), find(v)
        if ru != rv:
            comp[ru] = rv
            chosen.append((u, v))
            if len(chosen) == len(nodes) - 1:
                break
    adj: dict[int, list[int]] = {n: [] for n in nodes}
    for u, v in chosen:
        adj[u].append(v)
        adj[v].append(u)
    tree = MemoryTree(root=nodes[0],
                      parent=_orient(adj, nodes[0]))
    return adjust_root(tree)


def _orient(adj: dict[int, list[int]], root: int) -> dict[int, int | None]:
    parent: dict[int, int | None] = {root: None}
    stack = [root]
    while stack:
        u = stack.pop()
        for v in sorted(adj[u]):
            if v not in parent:
                parent[v] = u
                stack.append(v)
    return parent


def update_scores_decay(kept: MemoryTree, graph: LongTermGraph,
                        table: ScoreTable, gamma: float,
                        strategy: str = "tree") -> None:
    """Members score by the shared strategy; long-term neighbors of the kept
    tree score gamma * c with subtree size 1 and depth below their closest
    kept node."""
    update_scores(kept, table, strategy)
    if not kept:
        return
    member_depth = kept.depths()
    neighbors: dict[int, int] = {}
    for n in kept.parent:
        for u in graph.adj.get(n, ()):
            if u in kept.parent:
                continue
            d = member_depth[n]
            if u not in neighbors or d < neighbors[u]:
                neighbors[u] = d
    for u in sorted(neighbors):
        if strategy == "freq":
            c = 1.0
        elif strategy == "eigen":
            c = 0.0   # outside the tree, centrality contribution is zero
        else:
            c = (1.0 / len(kept)) * math.exp(1.0 / (neighbors[u] + 1))
        table.add(u, gamma * c)


def simulate_trees(prop_trees: list[PropositionTree],
                   params: SimulationParams,
                   scorer: OverlapScorer,
                   graph: LongTermGraph | None = None,
                   initial_tree: MemoryTree | None = None,
                   validate: bool = False,
                   ) -> SimulationResult:
    props: dict[int, Proposition] = dict(scorer.props)
    table = ScoreTable.for_ids(sorted(props))
    trace: list[CycleRecord] = []
    tree = initial_tree if initial_tree is not None else MemoryTree.empty()
    graph = graph if graph is not None else LongTermGraph()
    psi = 0
    prev_scores = dict(table.scores) if validate else None
    prev_graph_size = len(graph.nodes())

    for cycle, incoming in enumerate(prop_trees):
        mode = "persist"
        recalled: tuple[int, ...] = ()
        attached = False
        section = props[incoming.root].section_id
        g: WorkingGraph | None = None

        if not tree:
            g = WorkingGraph()
            for u, v in incoming.edges:
                g.add_edge(u, v, 1.0)
            g.nodes.update(incoming.ids())
            enrich(g, graph, section, params.enrich_k, scorer)
            mode = "replace"
            attached = True
        else:
            g, unattached = attach_nodes(incoming, tree, scorer, graph)
            if len(unattached) < len(incoming.ids()):
                mode = "direct"
                attached = True
            else:
                found = recall_paths(unattached, incoming, tree, graph, scorer,
                                     params.recall_limit, g)
                if found:
                    recalled = tuple(sorted({n for (_t, path) in found.values()
                                             for n in path if n not in tree.parent}))
                    mode = "recall"
                    attached = True
                elif should_replace(incoming, tree, as_memory_tree(incoming)):
                    g = WorkingGraph()
                    for u, v in incoming.edges:
                        g.add_edge(u, v, 1.0)
                    g.nodes.update(incoming.ids())
                    enrich(g, graph, section, params.enrich_k, scorer)
                    mode = "replace"
                    attached = True

        if attached and g is not None and g.connected():
            for n in sorted(g.nodes):
                graph.add_node(n, cycle, props[n].section_id if n in props else section)
            for (u, v), w in sorted(g.edges.items()):
                graph.add_edge(u, v, w)
            mst = maximum_spanning_tree(g)
            kept, _pruned = memory_select(params.wm, mst)
            update_scores_decay(kept, graph, table, params.gamma, params.scoring)
            psi = 0
            tree = kept
        else:
            attached = False
            psi += 1
            if psi >= params.persistence:
                tree = MemoryTree.empty()
                psi = 0
                mode = "reset"
            elif mode != "persist":
                mode = "persist"

        table.cycle = cycle + 1
        kept_now = tuple(sorted(tree.parent)) if attached else ()
        trace.append(CycleRecord(cycle=cycle, sentence_id=incoming.sentence_id,
                                 mode=mode, kept=kept_now, recalled=recalled))

        if validate:
            assert len(tree.parent) <= params.wm, "capacity exceeded"
            tree.validate()
            assert set(tree.parent) <= graph.nodes() or not tree, \
                "working tree escaped the long-term graph"
            assert len(graph.nodes()) >= prev_graph_size, "graph shrank"
            prev_graph_size = len(graph.nodes())
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
    trees = build_document_propositions(doc)
    props = {p.id: p for tr in trees for p in tr.nodes}
    scorer = OverlapScorer(props, config or OverlapConfig.default())
    return simulate_trees(trees, params, scorer, validate=validate)
