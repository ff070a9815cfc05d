"""Document model and CoNLL-U / JSONL corpus reading, writing, validation.

A corpus is a JSON Lines file with one document per line:

    {"doc_id": str, "sections": [{"name": str, "conllu": str}], "reference": str|null}

where each ``conllu`` block holds standard 10-column CoNLL-U sentences.
"""

from __future__ import annotations

import json
import logging
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

log = logging.getLogger(__name__)


class ConlluError(ValueError):
    """Malformed CoNLL-U input (bad column count, bad ids)."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class TreeStructureError(ValueError):
    """A sentence whose head pointers do not form a single-rooted tree."""


@dataclass(frozen=True)
class Token:
    index: int          # 1-based position within the sentence
    form: str
    lemma: str
    upos: str
    head: int           # index of the head token, 0 for the syntactic root
    deprel: str

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"token index must be >= 1, got {self.index}")
        if self.head < 0:
            raise ValueError(f"token head must be >= 0, got {self.head}")
        if self.head == self.index:
            raise ValueError(f"token {self.index} has itself as head")
        if not self.deprel:
            raise ValueError(f"token {self.index} has an empty deprel")


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    sentence_id: int    # global 0-based position in the document
    section_id: int

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def root_index(self) -> int:
        for tok in self.tokens:
            if tok.head == 0:
                return tok.index
        raise TreeStructureError(f"sentence {self.sentence_id} has no root")

    def text(self) -> str:
        return " ".join(t.form for t in self.tokens)


@dataclass
class Document:
    doc_id: str
    sections: list[tuple[str, range]]   # (name, sentence index range)
    sentences: list[Sentence]
    reference_summary: str | None = None

    def __len__(self) -> int:
        return len(self.sentences)

    def section_name(self, section_id: int) -> str:
        return self.sections[section_id][0]


@dataclass(frozen=True)
class Diagnostic:
    doc_id: str
    message: str
    sentence_id: int | None = None

    def __str__(self) -> str:
        where = f" (sentence {self.sentence_id})" if self.sentence_id is not None else ""
        return f"{self.doc_id}{where}: {self.message}"


def check_sentence_tree(tokens: list[Token]) -> str | None:
    """Return an error message if the head pointers are not a single-rooted tree."""
    if not tokens:
        return "sentence has no tokens"
    n = len(tokens)
    indices = [t.index for t in tokens]
    if indices != list(range(1, n + 1)):
        return f"token indices are not consecutive from 1: {indices}"
    roots = [t.index for t in tokens if t.head == 0]
    if len(roots) != 1:
        return f"expected exactly one root, found {len(roots)}"
    for t in tokens:
        if t.head > n:
            return f"token {t.index} points to nonexistent head {t.head}"
    # Walk up from every token; a cycle never reaches the root.
    for t in tokens:
        seen = set()
        cur = t.index
        while cur != 0:
            if cur in seen:
                return f"cycle in head pointers involving token {cur}"
            seen.add(cur)
            cur = tokens[cur - 1].head
    return None


def _parse_token_line(line: str, line_no: int) -> Token | None:
    """Parse one CoNLL-U token line; None for multiword ranges / empty nodes."""
    cols = line.split("\t")
    if len(cols) != 10:
        raise ConlluError(f"expected 10 tab-separated columns, got {len(cols)}", line_no)
    tok_id = cols[0]
    if "-" in tok_id or "." in tok_id:
        return None
    try:
        index = int(tok_id)
        head = int(cols[6]) if cols[6] != "_" else 0
    except ValueError as exc:
        raise ConlluError(f"non-numeric token id or head: {exc}", line_no) from None
    form = cols[1]
    lemma = cols[2] if cols[2] != "_" else form.lower()
    deprel = cols[7] if cols[7] != "_" else "dep"
    return Token(index=index, form=form, lemma=lemma, upos=cols[3], head=head, deprel=deprel)


def parse_conllu(stream: TextIO | str, *, doc_id: str = "doc",
                 strict: bool = True) -> Document:
    """Parse a CoNLL-U character stream into a Document.

    Comment lines ``# doc_id = ...`` and ``# section = ...`` carry metadata;
    a document without section comments becomes a single section "body".
    Multiword-token ranges ("3-4") and empty nodes ("3.1") are skipped.

    With strict=True a sentence whose heads are cyclic or multi-rooted raises
    TreeStructureError naming the sentence; otherwise it is dropped with a
    warning (noisy-corpus mode used by the JSONL reader).
    """
    if isinstance(stream, str):
        lines: Iterable[str] = stream.splitlines()
    else:
        lines = (ln.rstrip("\n") for ln in stream)

    sentences: list[Sentence] = []
    section_names: list[str] = []
    section_starts: list[int] = []
    current_section = None
    pending: list[Token] = []
    pending_start_line = 0

    def flush(end_line: int):
        nonlocal pending
        if not pending:
            return
        problem = check_sentence_tree(pending)
        if problem is not None:
            msg = (f"{doc_id}: sentence starting at line {pending_start_line}: {problem}")
            if strict:
                pending = []
                raise TreeStructureError(msg)
            warnings.warn(f"dropping sentence: {msg}")
            pending = []
            return
        sec = current_section if current_section is not None else 0
        sentences.append(Sentence(tokens=tuple(pending), sentence_id=len(sentences),
                                  section_id=sec))
        pending = []

    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            flush(line_no)
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" in body:
                key, _, value = body.partition("=")
                key = key.strip()
                value = value.strip()
                if key == "doc_id":
                    doc_id = value
                elif key == "section":
                    flush(line_no)
                    if not section_names or section_names[-1] != value:
                        section_names.append(value)
                        section_starts.append(len(sentences))
                    current_section = len(section_names) - 1
            continue
        if not pending:
            pending_start_line = line_no
        tok = _parse_token_line(line, line_no)
        if tok is not None:
            pending.append(tok)
    flush(-1)

    if not section_names:
        section_names = ["body"]
        section_starts = [0]
    section_starts.append(len(sentences))
    sections = [(name, range(section_starts[i], section_starts[i + 1]))
                for i, name in enumerate(section_names)]
    return Document(doc_id=doc_id, sections=sections, sentences=sentences)


def document_to_conllu(doc: Document) -> str:
    """Serialize a Document back to CoNLL-U (inverse of parse_conllu)."""
    out: list[str] = [f"# doc_id = {doc.doc_id}"]
    for sec_id, (name, rng) in enumerate(doc.sections):
        out.append(f"# section = {name}")
        for sent_idx in rng:
            sent = doc.sentences[sent_idx]
            for t in sent.tokens:
                out.append("\t".join([str(t.index), t.form, t.lemma, t.upos, "_", "_",
                                      str(t.head), t.deprel, "_", "_"]))
            out.append("")
    return "\n".join(out) + "\n"


def validate_document(doc: Document) -> list[Diagnostic]:
    """Structural diagnostics; empty list iff every invariant holds."""
    diags: list[Diagnostic] = []
    covered: dict[int, str] = {}
    for name, rng in doc.sections:
        for idx in rng:
            if idx in covered:
                diags.append(Diagnostic(doc.doc_id,
                                        f"sections '{covered[idx]}' and '{name}' overlap "
                                        f"at sentence {idx}"))
            covered[idx] = name
    for idx in range(len(doc.sentences)):
        if idx not in covered:
            diags.append(Diagnostic(doc.doc_id, f"sentence {idx} not covered by any section",
                                    sentence_id=idx))
    for sent in doc.sentences:
        if not sent.tokens:
            diags.append(Diagnostic(doc.doc_id, "sentence has zero tokens",
                                    sentence_id=sent.sentence_id))
            continue
        problem = check_sentence_tree(list(sent.tokens))
        if problem is not None:
            diags.append(Diagnostic(doc.doc_id, problem, sentence_id=sent.sentence_id))
        for t in sent.tokens:
            if not t.lemma:
                diags.append(Diagnostic(doc.doc_id, f"token {t.index} has empty lemma",
                                        sentence_id=sent.sentence_id))
    return diags


def read_corpus(stream: TextIO | str) -> Iterator[Document]:
    """Read a JSONL corpus container, one Document per line.

    Invalid sentences inside a document are dropped with a warning; documents
    with unreadable JSON raise.
    """
    if isinstance(stream, str):
        lines: Iterable[str] = stream.splitlines()
    else:
        lines = stream
    for line in lines:
        line = line.strip()
        if not line:
            continue
        rec = json.loads(line)
        doc_id = rec["doc_id"]
        sentences: list[Sentence] = []
        sections: list[tuple[str, range]] = []
        for sec in rec["sections"]:
            start = len(sentences)
            part = parse_conllu(sec["conllu"], doc_id=doc_id, strict=False)
            for sent in part.sentences:
                sentences.append(Sentence(tokens=sent.tokens, sentence_id=len(sentences),
                                          section_id=len(sections)))
            sections.append((sec["name"], range(start, len(sentences))))
        yield Document(doc_id=doc_id, sections=sections, sentences=sentences,
                       reference_summary=rec.get("reference"))


def write_corpus(docs: Iterable[Document], stream: TextIO) -> int:
    """Write Documents as the JSONL container; returns the document count."""
    n = 0
    for doc in docs:
        secs = []
        for sec_id, (name, rng) in enumerate(doc.sections):
            lines = []
            for idx in rng:
                for t in doc.sentences[idx].tokens:
                    lines.append("\t".join([str(t.index), t.form, t.lemma, t.upos, "_",
                                            "_", str(t.head), t.deprel, "_", "_"]))
                lines.append("")
            secs.append({"name": name, "conllu": "\n".join(lines)})
        rec = {"doc_id": doc.doc_id, "sections": secs,
               "reference": doc.reference_summary}
        stream.write(json.dumps(rec, sort_keys=True) + "\n")
        n += 1
    return n
