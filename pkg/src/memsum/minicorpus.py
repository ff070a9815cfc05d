"""Deterministic synthetic corpus of section-structured technical documents.

Used by the test suite and the demos: five documents of 84 sentences each
with section-crossing topical redundancy and abstract-style references,
pre-parsed into the document model (no external parser involved). Run
``python -m memsum.minicorpus out.jsonl`` to regenerate the bundled file.
"""

from __future__ import annotations

import random
import sys

from .corpus import Document, Sentence, Token

TOPICS = [
    {
        "name": "reactor",
        "nouns": ["reactor", "coolant", "turbine", "sensor", "valve", "core",
                  "pressure", "loop", "pump", "vessel", "shield", "rod",
                  "moderator", "exchanger", "grid"],
        "verbs": [("heats", "heat"), ("drives", "drive"), ("monitors", "monitor"),
                  ("regulates", "regulate"), ("measures", "measure"),
                  ("controls", "control"), ("cools", "cool"), ("absorbs", "absorb")],
        "adjs": ["thermal", "primary", "secondary", "critical", "stable", "rapid"],
    },
    {
        "name": "galaxy",
        "nouns": ["galaxy", "halo", "cluster", "star", "disk", "bulge", "gas",
                  "merger", "spectrum", "redshift", "mass", "formation",
                  "luminosity", "survey", "model"],
        "verbs": [("predicts", "predict"), ("traces", "trace"), ("forms", "form"),
                  ("dominates", "dominate"), ("constrains", "constrain"),
                  ("reproduces", "reproduce"), ("hosts", "host"), ("obscures", "obscure")],
        "adjs": ["spiral", "massive", "faint", "distant", "young", "compact"],
    },
    {
        "name": "enzyme",
        "nouns": ["enzyme", "substrate", "membrane", "protein", "pathway", "cell",
                  "inhibitor", "receptor", "ligand", "kinase", "antibody",
                  "mutation", "assay", "culture", "marker"],
        "verbs": [("binds", "bind"), ("activates", "activate"), ("blocks", "block"),
                  ("catalyzes", "catalyze"), ("degrades", "degrade"),
                  ("expresses", "express"), ("signals", "signal"), ("encodes", "encode")],
        "adjs": ["active", "soluble", "stable", "native", "mutant", "specific"],
    },
    {
        "name": "glacier",
        "nouns": ["glacier", "icefield", "moraine", "meltwater", "basin", "fjord",
                  "terminus", "crevasse", "bedrock", "snowline", "runoff",
                  "calving", "plateau", "sediment", "till"],
        "verbs": [("erodes", "erode"), ("advances", "advance"), ("retreats", "retreat"),
                  ("deposits", "deposit"), ("carves", "carve"), ("feeds", "feed"),
                  ("drains", "drain"), ("thins", "thin")],
        "adjs": ["alpine", "polar", "seasonal", "steep", "frozen", "deep"],
    },
    {
        "name": "market",
        "nouns": ["market", "price", "trader", "asset", "index", "volatility",
                  "volume", "spread", "order", "liquidity", "portfolio",
                  "hedge", "margin", "signal", "shock"],
        "verbs": [("moves", "move"), ("tracks", "track"), ("absorbs", "absorb"),
                  ("amplifies", "amplify"), ("dampens", "dampen"),
                  ("clears", "clear"), ("reprices", "reprice"), ("widens", "widen")],
        "adjs": ["liquid", "volatile", "efficient", "thin", "global", "stable"],
    },
]

SECTIONS = [("introduction", 18), ("methods", 26), ("results", 24),
            ("discussion", 16)]

# off-topic interludes (acknowledgment-style) that break attachment chains
ASIDE = {
    "nouns": ["committee", "grant", "draft", "colleague", "revision", "agency",
              "workshop", "reviewer", "funding"],
    "verbs": [("thanks", "thank"), ("acknowledges", "acknowledge"),
              ("supports", "support"), ("reviews", "review")],
    "adjs": ["anonymous", "generous", "earlier", "helpful"],
}


def _tok(index, form, lemma, upos, head, deprel):
    return Token(index=index, form=form, lemma=lemma, upos=upos, head=head,
                 deprel=deprel)


def _noun_phrase(rng, nouns, adjs, start, head, deprel, with_adj):
    """the (ADJ)? NOUN, attached at ``head``; returns (tokens, noun index)."""
    toks = []
    idx = start
    noun_idx = idx + 1 + (1 if with_adj else 0)
    toks.append(_tok(idx, "the", "the", "DET", noun_idx, "det"))
    idx += 1
    if with_adj:
        adj = rng.choice(adjs)
        toks.append(_tok(idx, adj, adj, "ADJ", noun_idx, "amod"))
        idx += 1
    noun = rng.choice(nouns)
    toks.append(_tok(idx, noun, noun, "NOUN", head, deprel))
    return toks, noun_idx


def _simple_sentence(rng, topic, nouns) -> list[Token]:
    """the N1 V the N2 of the N3 (and the N4)? ."""
    verb_form, verb_lemma = rng.choice(topic["verbs"])
    toks: list[Token] = []
    subj, subj_idx = _noun_phrase(rng, nouns, topic["adjs"], 1, 0, "nsubj",
                                  rng.random() < 0.45)
    verb_idx = subj_idx + 1
    for t in subj:
        toks.append(_tok(t.index, t.form, t.lemma, t.upos,
                         verb_idx if t.deprel == "nsubj" else t.head, t.deprel))
    toks.append(_tok(verb_idx, verb_form, verb_lemma, "VERB", 0, "root"))
    obj, obj_idx = _noun_phrase(rng, nouns, topic["adjs"], verb_idx + 1, verb_idx,
                                "obj", rng.random() < 0.3)
    toks.extend(obj)
    idx = obj_idx + 1
    if rng.random() < 0.6:
        # of the N3 as nmod of the object
        nmod_noun_idx = idx + 2
        toks.append(_tok(idx, "of", "of", "ADP", nmod_noun_idx, "case"))
        toks.append(_tok(idx + 1, "the", "the", "DET", nmod_noun_idx, "det"))
        n3 = rng.choice(nouns)
        toks.append(_tok(nmod_noun_idx, n3, n3, "NOUN", obj_idx, "nmod"))
        idx = nmod_noun_idx + 1
    if rng.random() < 0.3:
        # and the N4 conjoined with the object
        conj_noun_idx = idx + 2
        toks.append(_tok(idx, "and", "and", "CCONJ", conj_noun_idx, "cc"))
        toks.append(_tok(idx + 1, "the", "the", "DET", conj_noun_idx, "det"))
        n4 = rng.choice(nouns)
        toks.append(_tok(conj_noun_idx, n4, n4, "NOUN", obj_idx, "conj"))
        idx = conj_noun_idx + 1
    toks.append(_tok(idx, ".", ".", "PUNCT", verb_idx, "punct"))
    return toks


def _rich_sentence(rng, topic, nouns) -> list[Token]:
    """Two coordinated clauses with obliques and nominal modifiers; compiles
    into about five propositions, typical of dense technical prose."""
    v1_form, v1_lemma = rng.choice(topic["verbs"])
    v2_form, v2_lemma = rng.choice(topic["verbs"])
    n0, n1, n2, n3, n4, n5, n6 = (rng.choice(nouns) for _ in range(7))
    a1, a2 = rng.choice(topic["adjs"]), rng.choice(topic["adjs"])
    return [
        _tok(1, "in", "in", "ADP", 3, "case"),
        _tok(2, "the", "the", "DET", 3, "det"),
        _tok(3, n0, n0, "NOUN", 8, "obl"),
        _tok(4, ",", ",", "PUNCT", 8, "punct"),
        _tok(5, "the", "the", "DET", 7, "det"),
        _tok(6, a1, a1, "ADJ", 7, "amod"),
        _tok(7, n1, n1, "NOUN", 8, "nsubj"),
        _tok(8, v1_form, v1_lemma, "VERB", 0, "root"),
        _tok(9, "the", "the", "DET", 10, "det"),
        _tok(10, n2, n2, "NOUN", 8, "obj"),
        _tok(11, "of", "of", "ADP", 13, "case"),
        _tok(12, "the", "the", "DET", 13, "det"),
        _tok(13, n3, n3, "NOUN", 10, "nmod"),
        _tok(14, "and", "and", "CCONJ", 17, "cc"),
        _tok(15, "the", "the", "DET", 16, "det"),
        _tok(16, n4, n4, "NOUN", 17, "nsubj"),
        _tok(17, v2_form, v2_lemma, "VERB", 8, "conj"),
        _tok(18, "the", "the", "DET", 20, "det"),
        _tok(19, a2, a2, "ADJ", 20, "amod"),
        _tok(20, n5, n5, "NOUN", 17, "obj"),
        _tok(21, "of", "of", "ADP", 23, "case"),
        _tok(22, "the", "the", "DET", 23, "det"),
        _tok(23, n6, n6, "NOUN", 20, "nmod"),
        _tok(24, ".", ".", "PUNCT", 8, "punct"),
    ]


def _clausal_sentence(rng, topic, nouns) -> list[Token]:
    """in the N0 , the N1 V that the N2 V2 the N3 ."""
    verb_form, verb_lemma = rng.choice(topic["verbs"])
    verb2_form, verb2_lemma = rng.choice(topic["verbs"])
    n0, n1, n2, n3 = (rng.choice(nouns) for _ in range(4))
    return [
        _tok(1, "in", "in", "ADP", 3, "case"),
        _tok(2, "the", "the", "DET", 3, "det"),
        _tok(3, n0, n0, "NOUN", 7, "obl"),
        _tok(4, ",", ",", "PUNCT", 7, "punct"),
        _tok(5, "the", "the", "DET", 6, "det"),
        _tok(6, n1, n1, "NOUN", 7, "nsubj"),
        _tok(7, verb_form, verb_lemma, "VERB", 0, "root"),
        _tok(8, "that", "that", "SCONJ", 11, "mark"),
        _tok(9, "the", "the", "DET", 10, "det"),
        _tok(10, n2, n2, "NOUN", 11, "nsubj"),
        _tok(11, verb2_form, verb2_lemma, "VERB", 7, "ccomp"),
        _tok(12, "the", "the", "DET", 13, "det"),
        _tok(13, n3, n3, "NOUN", 11, "obj"),
        _tok(14, ".", ".", "PUNCT", 7, "punct"),
    ]


def build_document(doc_index: int, seed: int = 13,
                   sections: list[tuple[str, int]] | None = None,
                   rich: bool = False) -> Document:
    topic = TOPICS[doc_index % len(TOPICS)]
    rng = random.Random(seed * 1000 + doc_index)
    sections = sections or SECTIONS
    # core nouns recur in every section: cross-section redundancy
    core = topic["nouns"][:6]
    sentences: list[Sentence] = []
    section_ranges: list[tuple[str, range]] = []
    highlight_texts: list[str] = []
    repeated: list[Token] | None = None

    for sec_id, (sec_name, count) in enumerate(sections):
        start = len(sentences)
        local = core + rng.sample(topic["nouns"][6:], 5)
        aside_at = set(rng.sample(range(2, count - 1), 2)) if count > 6 else set()
        for k in range(count):
            if k in aside_at or (k - 1) in aside_at:
                toks = _simple_sentence(rng, ASIDE, ASIDE["nouns"])
            elif repeated is not None and rng.random() < 0.08:
                toks = repeated
            elif rich and rng.random() < 0.75:
                toks = _rich_sentence(rng, topic, local)
            elif rng.random() < 0.25:
                toks = _clausal_sentence(rng, topic, local)
            else:
                toks = _simple_sentence(rng, topic, local)
            if repeated is None and sec_id == 0 and k == 2:
                repeated = toks
            sent = Sentence(tokens=tuple(toks), sentence_id=len(sentences),
                            section_id=sec_id)
            sentences.append(sent)
            if k in (0, 1):
                highlight_texts.append(sent.text())
        section_ranges.append((sec_name, range(start, len(sentences))))

    reference = " ".join(highlight_texts[:6])
    return Document(doc_id=f"{topic['name']}-{doc_index:03d}",
                    sections=section_ranges, sentences=sentences,
                    reference_summary=reference)


def build_corpus(n_docs: int = 5, seed: int = 13) -> list[Document]:
    return [build_document(i, seed=seed) for i in range(n_docs)]


def build_long_document(n_sentences: int, seed: int = 13) -> Document:
    """Single dense document with a custom sentence count (performance
    checks); rich sentences approximate real technical prose."""
    per = max(1, n_sentences // 4)
    counts = [per, per, per, n_sentences - 3 * per]
    secs = [(name, counts[i]) for i, (name, _) in enumerate(SECTIONS)]
    return build_document(0, seed=seed, sections=secs, rich=True)


def main(argv: list[str] | None = None) -> int:
    argv = argv if argv is not None else sys.argv[1:]
    if len(argv) != 1:
        print("usage: python -m memsum.minicorpus OUT.jsonl", file=sys.stderr)
        return 2
    from .corpus import write_corpus
    with open(argv[0], "w", encoding="utf-8") as fh:
        n = write_corpus(build_corpus(), fh)
    print(f"wrote {n} documents to {argv[0]}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
