"""Watch working memory evolve while reading a document.

Each cycle ingests one sentence's propositions, attaches them to the memory
tree (falling back to recall from long-term memory, then replacement), prunes
to capacity, and reinforces whatever was retained. Run:
python demos/02_memory_simulation.py
"""

from importlib import resources

from memsum import treekvd
from memsum.corpus import read_corpus
from memsum.memory import SimulationParams


def main():
    corpus = resources.files("memsum.data").joinpath("mini_corpus.jsonl")
    doc = next(iter(read_corpus(corpus.read_text("utf-8"))))
    print(f"document {doc.doc_id}: {len(doc.sentences)} sentences,",
          f"{len(doc.sections)} sections")

    params = SimulationParams(wm=5, recall_limit=5, persistence=5)
    result = treekvd.simulate(doc, params)

    print(f"\n{len(result.props)} propositions extracted")
    print("\nfirst twelve memory cycles (capacity 5):")
    for rec in result.trace[:12]:
        extra = f" recalled={list(rec.recalled)}" if rec.recalled else ""
        print(f"  cycle {rec.cycle:2d}  sentence {rec.sentence_id:2d}  "
              f"{rec.mode:8s} kept={list(rec.kept)}{extra}")

    modes = {}
    for rec in result.trace:
        modes[rec.mode] = modes.get(rec.mode, 0) + 1
    print("\nattachment modes over the whole document:", modes)

    top = sorted(result.table.scores.items(), key=lambda kv: -kv[1])[:5]
    print("\nhighest-scored propositions:")
    for pid, score in top:
        prop = result.props[pid]
        args = ", ".join(f.text() or f"${f.target}" for f in prop.args)
        print(f"  {score:6.2f}  #{pid} (sentence {prop.sentence_id}): "
              f"{prop.predicate.text()}({args})")


if __name__ == "__main__":
    main()
