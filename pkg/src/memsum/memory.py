"""Working-memory tree machinery shared by both simulators.

A memory tree is a connected rooted tree over proposition ids, capped at WM
nodes per cycle. Retention walks root-to-leaf preferring the most recent
child, then fills breadth-first (the "keep the most general and most recent"
selection); the root is the node with maximal closeness centrality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass
class MemoryTree:
    root: int
    parent: dict[int, int | None]               # child -> parent, root -> None

    @classmethod
    def empty(cls) -> "MemoryTree":
        return cls(root=-1, parent={})

    @classmethod
    def from_edges(cls, root: int, edges: list[tuple[int, int]]) -> "MemoryTree":
        parent: dict[int, int | None] = {root: None}
        for u, v in edges:
            parent[v] = u
        return cls(root=root, parent=parent)

    def __bool__(self) -> bool:
        return bool(self.parent)

    def __len__(self) -> int:
        return len(self.parent)

    @property
    def nodes(self) -> set[int]:
        return set(self.parent)

    def children_map(self) -> dict[int, list[int]]:
        kids: dict[int, list[int]] = {n: [] for n in self.parent}
        for child, par in self.parent.items():
            if par is not None:
                kids[par].append(child)
        for lst in kids.values():
            lst.sort()
        return kids

    def edges(self) -> list[tuple[int, int]]:
        return [(par, child) for child, par in self.parent.items() if par is not None]

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {n: [] for n in self.parent}
        for child, par in self.parent.items():
            if par is not None:
                adj[par].append(child)
                adj[child].append(par)
        for lst in adj.values():
            lst.sort()
        return adj

    def depth(self, node: int) -> int:
        """Depth counted from 1 at the root."""
        d = 1
        cur = node
        while self.parent[cur] is not None:
            cur = self.parent[cur]
            d += 1
        return d

    def depths(self) -> dict[int, int]:
        """All node depths in one traversal (root depth 1)."""
        kids = self.children_map()
        out = {self.root: 1} if self.parent else {}
        stack = [self.root] if self.parent else []
        while stack:
            u = stack.pop()
            for v in kids[u]:
                out[v] = out[u] + 1
                stack.append(v)
        return out

    def subtree_sizes(self) -> dict[int, int]:
        kids = self.children_map()
        sizes: dict[int, int] = {}

        def walk(n: int) -> int:
            total = 1
            for c in kids[n]:
                total += walk(c)
            sizes[n] = total
            return total

        if self.parent:
            walk(self.root)
        return sizes

    def rerooted(self, new_root: int) -> "MemoryTree":
        """Same node and edge set with parent pointers oriented from new_root."""
        adj = self.adjacency()
        parent: dict[int, int | None] = {new_root: None}
        stack = [new_root]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in parent:
                    parent[v] = u
                    stack.append(v)
        return MemoryTree(root=new_root, parent=parent)

    def validate(self) -> None:
        if not self.parent:
            return
        assert self.root in self.parent and self.parent[self.root] is None
        seen = set()
        stack = [self.root]
        kids = self.children_map()
        while stack:
            u = stack.pop()
            assert u not in seen, f"cycle at {u}"
            seen.add(u)
            stack.extend(kids[u])
        assert seen == set(self.parent), "memory tree is not connected"


def closeness_centrality(adj: dict[int, list[int]], node: int) -> float:
    """(reachable - 1) / sum of shortest-path lengths; 0 for isolated nodes."""
    dist = {node: 0}
    frontier = [node]
    total = 0
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    total += dist[v]
                    nxt.append(v)
        frontier = nxt
    reachable = len(dist) - 1
    if reachable == 0 or total == 0:
        return 0.0
    return reachable / total


def closeness_of_root(tree: MemoryTree) -> float:
    if not tree:
        return 0.0
    return closeness_centrality(tree.adjacency(), tree.root)


def distance_sums(tree: MemoryTree) -> dict[int, int]:
    """Sum of shortest-path lengths from each node, by rerooting DP."""
    adj = tree.adjacency()
    n = len(adj)
    order: list[int] = []
    parent: dict[int, int | None] = {tree.root: None}
    stack = [tree.root]
    while stack:
        u = stack.pop()
        order.append(u)
        for v in adj[u]:
            if v not in parent:
                parent[v] = u
                stack.append(v)
    size = {u: 1 for u in adj}
    down = {u: 0 for u in adj}
    for u in reversed(order):
        p = parent[u]
        if p is not None:
            size[p] += size[u]
            down[p] += down[u] + size[u]
    sums = {tree.root: down[tree.root]}
    for u in order:
        p = parent[u]
        if p is not None:
            sums[u] = sums[p] + n - 2 * size[u]
    return sums


def adjust_root(tree: MemoryTree) -> MemoryTree:
    """Re-root at the node with maximal closeness; ties to the lowest id.

    On a connected tree, maximal closeness (n-1)/sum is minimal distance
    sum, compared exactly as integers.
    """
    if len(tree) <= 1:
        return tree
    sums = distance_sums(tree)
    new_root = min(sorted(sums), key=lambda node: (sums[node], node))
    if new_root == tree.root:
        return tree
    return tree.rerooted(new_root)


def memory_select(wm: int, tree: MemoryTree) -> tuple[MemoryTree, list[MemoryTree]]:
    """Prune to at most ``wm`` nodes.

    Walk from the root descending to the most recent (highest-id) child until
    a leaf or the cap; then take remaining nodes breadth-first, recent first.
    Pruned nodes come back grouped as the maximal subtrees they formed.
    """
    if wm < 1:
        raise ValueError("working memory capacity must be >= 1")
    if len(tree) <= wm:
        return tree, []
    kids = tree.children_map()
    kept: list[int] = []
    cur = tree.root
    while True:
        kept.append(cur)
        if len(kept) == wm or not kids[cur]:
            break
        cur = max(kids[cur])
    if len(kept) < wm:
        kept_set = set(kept)
        frontier = [tree.root]
        while frontier and len(kept) < wm:
            nxt = []
            for u in frontier:
                for v in sorted(kids[u], reverse=True):
                    if v not in kept_set and len(kept) < wm:
                        kept.append(v)
                        kept_set.add(v)
                    nxt.append(v)
            frontier = nxt
    kept_set = set(kept)

    new_parent: dict[int, int | None] = {}
    for n in kept_set:
        par = tree.parent[n]
        new_parent[n] = par if (par in kept_set) else None
    kept_tree = MemoryTree(root=tree.root, parent=new_parent)

    pruned_nodes = set(tree.parent) - kept_set
    fragments: list[MemoryTree] = []
    assigned: set[int] = set()
    for n in sorted(pruned_nodes):
        if n in assigned:
            continue
        # climb to the top of this pruned component
        top = n
        while tree.parent[top] is not None and tree.parent[top] in pruned_nodes:
            top = tree.parent[top]
        if top in assigned:
            continue
        frag_parent: dict[int, int | None] = {top: None}
        stack = [top]
        while stack:
            u = stack.pop()
            for v in kids[u]:
                if v in pruned_nodes:
                    frag_parent[v] = u
                    stack.append(v)
        fragments.append(MemoryTree(root=top, parent=frag_parent))
        assigned |= set(frag_parent)
    return kept_tree, fragments


def node_importance(node: int, tree: MemoryTree,
                    sizes: dict[int, int] | None = None) -> float:
    """(subtree size / tree size) * exp(1 / depth), depth(root) = 1."""
    if sizes is None:
        sizes = tree.subtree_sizes()
    return (sizes[node] / len(tree)) * math.exp(1.0 / tree.depth(node))


def eigenvector_centrality(tree: MemoryTree, tol: float = 1e-10,
                           max_iter: int = 1000) -> dict[int, float]:
    """Shifted power iteration on the tree adjacency, L2-normalized.

    Trees are bipartite (eigenvalues come in +/- pairs), so the iteration
    runs on A + I: same eigenvectors, strictly dominant top eigenvalue.
    """
    nodes = sorted(tree.parent)
    if len(nodes) == 1:
        return {nodes[0]: 1.0}
    index = {n: i for i, n in enumerate(nodes)}
    n = len(nodes)
    a = np.zeros((n, n))
    for child, par in tree.parent.items():
        if par is not None:
            a[index[par], index[child]] = 1.0
            a[index[child], index[par]] = 1.0
    x = np.full(n, 1.0 / math.sqrt(n))
    for _ in range(max_iter):
        y = a @ x + x
        norm = np.linalg.norm(y)
        if norm == 0:
            break
        y /= norm
        if np.linalg.norm(y - x) < tol:
            x = y
            break
        x = y
    return {node: float(x[index[node]]) for node in nodes}


@dataclass
class ScoreTable:
    """Cumulative proposition scores; entries never decrease."""
    scores: dict[int, float]
    cycle: int = 0

    @classmethod
    def for_ids(cls, ids) -> "ScoreTable":
        return cls(scores={i: 0.0 for i in ids})

    def add(self, pid: int, amount: float) -> None:
        if amount < 0:
            raise ValueError("score increments must be non-negative")
        self.scores[pid] = self.scores.get(pid, 0.0) + amount

    def total(self) -> float:
        return sum(self.scores.values())


def update_scores(tree: MemoryTree, table: ScoreTable, strategy: str = "tree") -> None:
    """Add each kept node's importance to its cumulative score.

    tree: subtree-size/depth importance; freq: +1 per cycle kept;
    eigen: eigenvector centrality in the pruned tree.
    """
    if not tree:
        return
    if strategy == "tree":
        sizes = tree.subtree_sizes()
        depths = tree.depths()
        total = len(tree)
        for n in tree.parent:
            table.add(n, (sizes[n] / total) * math.exp(1.0 / depths[n]))
    elif strategy == "freq":
        for n in tree.parent:
            table.add(n, 1.0)
    elif strategy == "eigen":
        cent = eigenvector_centrality(tree)
        for n, value in cent.items():
            table.add(n, value)
    else:
        raise ValueError(f"unknown scoring strategy: {strategy}")


@dataclass(frozen=True)
class SimulationParams:
    wm: int = 50                 # working-memory capacity in propositions
    recall_limit: int = 5        # max recalled path length (R)
    persistence: int = 5         # max cycles an unattached tree survives (Psi)
    gamma: float = 0.01          # neighbor decay factor (graph simulator)
    enrich_k: int = 2            # enrichment fan-out (graph simulator)
    early_stop: float = 0.5      # recall early-termination threshold (tree simulator)
    scoring: str = "tree"        # tree | eigen | freq

    def __post_init__(self):
        if self.wm < 1 or self.recall_limit < 1 or self.persistence < 1:
            raise ValueError("wm, recall_limit, and persistence must be >= 1")
        if not (0.0 < self.gamma < 1.0):
            raise ValueError("gamma must be in (0, 1)")
        if self.enrich_k < 1:
            raise ValueError("enrich_k must be >= 1")
        if not (0.0 < self.early_stop <= 1.0):
            raise ValueError("early_stop must be in (0, 1]")
        if self.scoring not in ("tree", "eigen", "freq"):
            raise ValueError(f"unknown scoring strategy: {self.scoring}")


@dataclass
class CycleRecord:
    """One trace row per memory cycle."""
    cycle: int
    sentence_id: int
    mode: str                    # direct | recall | replace | persist | reset
    kept: tuple[int, ...]
    recalled: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {"cycle": self.cycle, "sentence_id": self.sentence_id,
                "mode": self.mode, "kept": list(self.kept),
                "recalled": list(self.recalled)}
