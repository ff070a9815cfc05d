"""Compile dependency trees into proposition trees.

Three passes over a sentence's dependency tree:

1. merge: dependents fold into their heads (function words, single-token
   modifiers, multi-word expressions), so nodes may hold several tokens;
2. promote: coordinating conjunctions move to head position above their
   conjuncts;
3. extract: every non-leaf node becomes a proposition ``pred(arg, ..., $N)``
   whose leaf children are literal arguments and whose non-leaf children are
   pointer arguments, inducing a tree over the propositions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .corpus import Sentence, Token

# Heads that behave like clausal predicates, either by tag or by relation.
CLAUSAL_UPOS = {"VERB", "AUX"}
CLAUSAL_DEPRELS = {"root", "ccomp", "xcomp", "advcl", "acl", "csubj", "parataxis"}
# Nominal or non-core dependents of a clausal predicate.
NOMINAL_DEPRELS = {"nsubj", "obj", "iobj", "obl", "vocative", "expl", "dislocated",
                   "nmod", "appos", "nummod"}
FUNCTION_UPOS = {"ADP", "AUX", "CCONJ", "SCONJ", "DET", "PART", "PUNCT"}
SINGLE_TOKEN_MODIFIER_DEPRELS = {"amod", "det", "case", "mark", "aux", "cop",
                                 "advmod", "nummod", "punct", "clf"}
MWE_DEPRELS = {"fixed", "flat", "compound", "goeswith"}


class FunctorKind(Enum):
    PREDICATE = "predicate"
    LITERAL = "literal"
    POINTER = "pointer"


@dataclass(frozen=True)
class Functor:
    kind: FunctorKind
    tokens: tuple[Token, ...] = ()
    target: int | None = None   # proposition id, pointer functors only

    def __post_init__(self):
        if self.kind is FunctorKind.POINTER:
            if self.tokens or self.target is None:
                raise ValueError("pointer functor carries a target id and no tokens")
        elif not self.tokens:
            raise ValueError(f"{self.kind.value} functor needs at least one token")

    def text(self) -> str:
        return " ".join(t.form for t in self.tokens)


@dataclass(frozen=True)
class Proposition:
    id: int                       # document-scoped, assigned in pre-order
    predicate: Functor
    args: tuple[Functor, ...]
    sentence_id: int
    section_id: int
    degenerate: bool = False      # single-node sentence, no arguments

    @property
    def functors(self) -> tuple[Functor, ...]:
        return (self.predicate,) + self.args

    def pointer_targets(self) -> tuple[int, ...]:
        return tuple(a.target for a in self.args if a.kind is FunctorKind.POINTER)

    def literal_tokens(self) -> list[Token]:
        toks = list(self.predicate.tokens)
        for a in self.args:
            toks.extend(a.tokens)
        return toks


@dataclass
class PropositionTree:
    nodes: list[Proposition]
    edges: list[tuple[int, int]]          # (parent id, child id), pointer-induced
    root: int
    sentence_id: int

    def by_id(self, pid: int) -> Proposition:
        for p in self.nodes:
            if p.id == pid:
                return p
        raise KeyError(pid)

    def children(self, pid: int) -> list[int]:
        return [v for (u, v) in self.edges if u == pid]

    def ids(self) -> list[int]:
        return [p.id for p in self.nodes]


@dataclass
class _Node:
    """Mutable dependency node used during merging and promotion."""
    tokens: list[Token]
    deprel: str
    upos: str
    children: list["_Node"] = field(default_factory=list)
    parent: "_Node | None" = None

    @property
    def min_index(self) -> int:
        return min(t.index for t in self.tokens)

    def sorted_tokens(self) -> list[Token]:
        return sorted(self.tokens, key=lambda t: t.index)

    def is_clausal_predicate(self) -> bool:
        return self.upos in CLAUSAL_UPOS or self.deprel in CLAUSAL_DEPRELS


def _build_nodes(sentence: Sentence) -> _Node:
    nodes = {t.index: _Node(tokens=[t], deprel=t.deprel, upos=t.upos)
             for t in sentence.tokens}
    root = None
    for t in sentence.tokens:
        node = nodes[t.index]
        if t.head == 0:
            root = node
        else:
            parent = nodes[t.head]
            parent.children.append(node)
            node.parent = parent
    assert root is not None
    for node in nodes.values():
        node.children.sort(key=lambda n: n.min_index)
    return root


def _is_function_word(v: _Node) -> bool:
    return all(t.upos in FUNCTION_UPOS for t in v.tokens)


def _is_discourse_modifier(v: _Node) -> bool:
    return v.deprel == "discourse" and all(t.upos != "ADV" for t in v.tokens)


def _should_merge(u: _Node, v: _Node) -> bool:
    # (c) multi-word expressions and wrongly split tokens always fold in.
    if v.deprel in MWE_DEPRELS:
        return True
    # (b) a modifier that is still a single token folds into any head.
    if len(v.tokens) == 1 and v.deprel in SINGLE_TOKEN_MODIFIER_DEPRELS:
        return True
    # (a) function words / non-adverbial discourse markers fold into nominal
    # or non-core dependents of clausal predicates even when multi-token.
    if (u.parent is not None and u.parent.is_clausal_predicate()
            and u.deprel in NOMINAL_DEPRELS
            and (_is_function_word(v) or _is_discourse_modifier(v))):
        return True
    return False


def merge_pass(root: _Node) -> _Node:
    """Fold dependents into heads bottom-up; transplanted children are
    reconsidered against their new head."""
    order: list[_Node] = []

    def postorder(n: _Node):
        for c in n.children:
            postorder(c)
        order.append(n)

    postorder(root)
    for u in order:
        queue = list(u.children)
        while queue:
            v = queue.pop(0)
            if v.parent is not u:
                continue
            if _should_merge(u, v):
                u.tokens.extend(v.tokens)
                u.children.remove(v)
                for c in v.children:
                    c.parent = u
                    u.children.append(c)
                    queue.append(c)
        u.children.sort(key=lambda n: n.min_index)
    return root


def promote_conjunctions(root: _Node) -> _Node:
    """Move each cc node to the position of the coordination head; the head
    and its conj children become the cc node's children. Deepest first."""

    def depth_of(n: _Node) -> int:
        d = 0
        while n.parent is not None:
            d += 1
            n = n.parent
        return d

    while True:
        cc_nodes: list[tuple[int, int, _Node]] = []

        def collect(n: _Node):
            for c in n.children:
                collect(c)
            if n.deprel == "cc" and n.parent is not None:
                cc_nodes.append((depth_of(n), n.min_index, n))

        collect(root)
        if not cc_nodes:
            return root
        cc_nodes.sort(key=lambda item: (-item[0], item[1]))
        _, _, v = cc_nodes[0]

        g = v.parent
        if g.deprel == "conj" and g.parent is not None:
            u = g.parent
        else:
            u = g
        # Detach v, put it where u was, and gather u plus u's conj children.
        v.parent.children.remove(v)
        grand = u.parent
        if grand is not None:
            pos = grand.children.index(u)
            grand.children[pos] = v
        else:
            root = v
        v.parent = grand
        v.deprel, u.deprel = u.deprel, "conj"
        conjuncts = [u] + [c for c in u.children if c.deprel == "conj"]
        for c in conjuncts:
            if c is not u:
                u.children.remove(c)
        u.parent = None
        for c in conjuncts:
            c.parent = v
            v.children.append(c)
        v.children.sort(key=lambda n: n.min_index)


def extract_propositions(root: _Node, sentence: Sentence,
                         id_start: int) -> PropositionTree:
    """One proposition per non-leaf node; single-node sentences yield one
    degenerate argument-less proposition."""
    props: list[Proposition] = []
    edges: list[tuple[int, int]] = []

    if not root.children:
        pred = Functor(FunctorKind.PREDICATE, tuple(root.sorted_tokens()))
        props.append(Proposition(id=id_start, predicate=pred, args=(),
                                 sentence_id=sentence.sentence_id,
                                 section_id=sentence.section_id, degenerate=True))
        return PropositionTree(nodes=props, edges=[], root=id_start,
                               sentence_id=sentence.sentence_id)

    # Pre-order id assignment over non-leaf nodes, children in token order.
    ids: dict[int, int] = {}
    counter = id_start

    def assign(n: _Node):
        nonlocal counter
        if n.children:
            ids[id(n)] = counter
            counter += 1
            for c in n.children:
                assign(c)

    assign(root)

    def emit(n: _Node):
        args: list[Functor] = []
        for c in n.children:
            if c.children:
                args.append(Functor(FunctorKind.POINTER, target=ids[id(c)]))
                edges.append((ids[id(n)], ids[id(c)]))
            else:
                args.append(Functor(FunctorKind.LITERAL, tuple(c.sorted_tokens())))
        props.append(Proposition(
            id=ids[id(n)],
            predicate=Functor(FunctorKind.PREDICATE, tuple(n.sorted_tokens())),
            args=tuple(args),
            sentence_id=sentence.sentence_id,
            section_id=sentence.section_id))
        for c in n.children:
            if c.children:
                emit(c)

    emit(root)
    props.sort(key=lambda p: p.id)
    return PropositionTree(nodes=props, edges=edges, root=id_start,
                           sentence_id=sentence.sentence_id)


def build_proposition_tree(sentence: Sentence, id_start: int = 1) -> PropositionTree:
    """Full pipeline for one sentence: merge, promote, extract."""
    root = _build_nodes(sentence)
    root = merge_pass(root)
    root = promote_conjunctions(root)
    return extract_propositions(root, sentence, id_start)


def build_document_propositions(doc) -> list[PropositionTree]:
    """Proposition trees for every sentence, ids consecutive across the
    document starting at 1."""
    trees = []
    next_id = 1
    for sent in doc.sentences:
        if not sent.tokens:
            continue
        tree = build_proposition_tree(sent, id_start=next_id)
        next_id += len(tree.nodes)
        trees.append(tree)
    return trees


def format_proposition(p: Proposition) -> str:
    """Render as ``pred(arg, ..., $N)`` with pointer args as $id."""
    parts = []
    for a in p.args:
        if a.kind is FunctorKind.POINTER:
            parts.append(f"${a.target}")
        else:
            parts.append(a.text())
    return f"{p.predicate.text()}({', '.join(parts)})"


def dump_tree(tree: PropositionTree) -> str:
    """Debug dump, one ``id: pred(arg, $N)`` line per proposition."""
    return "\n".join(f"{p.id}: {format_proposition(p)}" for p in tree.nodes)
