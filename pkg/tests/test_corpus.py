import io
import random

import pytest

from memsum.corpus import (ConlluError, Document, Sentence, Token,
                           TreeStructureError, document_to_conllu,
                           parse_conllu, read_corpus, validate_document,
                           write_corpus)


def conllu_line(i, form, upos, head, deprel, lemma=None):
    return "\t".join([str(i), form, lemma or form.lower(), upos, "_", "_",
                      str(head), deprel, "_", "_"])


MINIMAL = "\n".join([
    conllu_line(1, "Stars", "NOUN", 2, "nsubj"),
    conllu_line(2, "shine", "VERB", 0, "root"),
    conllu_line(3, "brightly", "ADV", 2, "advmod"),
    "",
])


def test_parse_minimal_tree():
    doc = parse_conllu(MINIMAL)
    assert len(doc.sentences) == 1
    sent = doc.sentences[0]
    assert sent.root_index == 2
    assert [t.form for t in sent.tokens] == ["Stars", "shine", "brightly"]
    assert doc.sections == [("body", range(0, 1))]


def test_self_loop_is_structural_error():
    bad = conllu_line(1, "loop", "NOUN", 1, "dep")
    with pytest.raises(ValueError):
        parse_conllu(bad + "\n")


def test_cycle_detected():
    text = "\n".join([
        conllu_line(1, "a", "NOUN", 2, "dep"),
        conllu_line(2, "b", "NOUN", 1, "dep"),
        conllu_line(3, "c", "VERB", 0, "root"),
        "",
    ])
    with pytest.raises(TreeStructureError):
        parse_conllu(text)


def test_multi_root_detected():
    text = "\n".join([
        conllu_line(1, "a", "VERB", 0, "root"),
        conllu_line(2, "b", "VERB", 0, "root"),
        "",
    ])
    with pytest.raises(TreeStructureError):
        parse_conllu(text)


def test_lenient_mode_drops_bad_sentence():
    text = "\n".join([
        conllu_line(1, "a", "VERB", 0, "root"),
        conllu_line(2, "b", "VERB", 0, "root"),
        "",
        conllu_line(1, "fine", "VERB", 0, "root"),
        "",
    ])
    with pytest.warns(UserWarning):
        doc = parse_conllu(text, strict=False)
    assert len(doc.sentences) == 1
    assert doc.sentences[0].tokens[0].form == "fine"


def test_malformed_column_count_reports_line():
    with pytest.raises(ConlluError) as err:
        parse_conllu("1\tonly\tthree\n")
    assert "line 1" in str(err.value)


def test_multiword_ranges_and_empty_nodes_skipped():
    text = "\n".join([
        "1-2\tdel\t_\t_\t_\t_\t_\t_\t_\t_",
        conllu_line(1, "de", "ADP", 2, "case"),
        conllu_line(2, "el", "NOUN", 0, "root"),
        "3.1\tghost\t_\t_\t_\t_\t_\t_\t_\t_",
        "",
    ])
    doc = parse_conllu(text)
    assert [t.form for t in doc.sentences[0].tokens] == ["de", "el"]


def test_missing_lemma_falls_back_to_lowercased_form():
    text = "\t".join(["1", "Bright", "_", "ADJ", "_", "_", "0", "root", "_", "_"])
    doc = parse_conllu(text + "\n")
    assert doc.sentences[0].tokens[0].lemma == "bright"


def test_sections_from_comments():
    text = "\n".join([
        "# doc_id = demo",
        "# section = intro",
        conllu_line(1, "a", "VERB", 0, "root"),
        "",
        "# section = body",
        conllu_line(1, "b", "VERB", 0, "root"),
        "",
        conllu_line(1, "c", "VERB", 0, "root"),
        "",
    ])
    doc = parse_conllu(text)
    assert doc.doc_id == "demo"
    assert [name for name, _ in doc.sections] == ["intro", "body"]
    assert [s.section_id for s in doc.sentences] == [0, 1, 1]


def test_validate_clean_document():
    doc = parse_conllu(MINIMAL)
    assert validate_document(doc) == []


def test_validate_overlapping_sections():
    doc = parse_conllu(MINIMAL)
    doc.sections = [("a", range(0, 1)), ("b", range(0, 1))]
    diags = validate_document(doc)
    assert len(diags) == 1
    assert "'a'" in diags[0].message and "'b'" in diags[0].message


def test_validate_zero_token_sentence():
    doc = parse_conllu(MINIMAL)
    doc.sentences.append(Sentence(tokens=(), sentence_id=1, section_id=0))
    doc.sections = [("body", range(0, 2))]
    diags = validate_document(doc)
    assert len(diags) == 1 and "zero tokens" in diags[0].message


def random_document(rng: random.Random, n_sentences=6) -> Document:
    """Random valid document: every non-root head points at an earlier token."""
    sentences = []
    words = ["alpha", "beta", "gamma", "delta", "epsilon", "zeta"]
    for sid in range(n_sentences):
        n = rng.randint(1, 8)
        tokens = []
        for i in range(1, n + 1):
            head = 0 if i == 1 else rng.randint(1, i - 1)
            deprel = "root" if head == 0 else rng.choice(["nsubj", "obj", "nmod", "det"])
            form = rng.choice(words)
            tokens.append(Token(index=i, form=form, lemma=form, upos="NOUN",
                                head=head, deprel=deprel))
        sentences.append(Sentence(tokens=tuple(tokens), sentence_id=sid,
                                  section_id=0 if sid < n_sentences // 2 else 1))
    sections = [("intro", range(0, n_sentences // 2)),
                ("rest", range(n_sentences // 2, n_sentences))]
    return Document(doc_id=f"rand-{rng.randint(0, 999)}", sections=sections,
                    sentences=sentences, reference_summary="alpha beta")


@pytest.mark.parametrize("seed", range(25))
def test_roundtrip_conllu(seed):
    doc = random_document(random.Random(seed))
    again = parse_conllu(document_to_conllu(doc))
    # section names and token fields survive the round trip
    assert [name for name, _ in again.sections] == [name for name, _ in doc.sections]
    assert [list(rng) for _, rng in again.sections] == [list(rng) for _, rng in doc.sections]
    assert again.sentences == doc.sentences
    assert again.doc_id == doc.doc_id


@pytest.mark.parametrize("seed", range(10))
def test_roundtrip_jsonl(seed):
    doc = random_document(random.Random(1000 + seed))
    buf = io.StringIO()
    write_corpus([doc], buf)
    again = list(read_corpus(buf.getvalue()))[0]
    assert again.sentences == doc.sentences
    assert again.reference_summary == doc.reference_summary


def test_parser_never_emits_invalid_sentences():
    # fuzzed head permutations; parser must either raise or produce valid trees
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 5)
        heads = [rng.randint(0, n) for _ in range(n)]
        lines = [conllu_line(i + 1, "w", "NOUN", heads[i], "dep" if heads[i] else "root")
                 for i in range(n)]
        try:
            doc = parse_conllu("\n".join(lines) + "\n")
        except (ValueError, ConlluError):
            continue
        assert validate_document(doc) == []
