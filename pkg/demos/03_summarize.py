"""End-to-end extraction: simulate, score sentences, select under a budget.

Compares the two memory simulators against the lead baseline on one bundled
document, all through the exact soft-budget selector. Run:
python demos/03_summarize.py
"""

from importlib import resources

from memsum import graphkvd, treekvd
from memsum.baselines import lead_scores
from memsum.corpus import read_corpus
from memsum.memory import SimulationParams
from memsum.metrics import rouge_l, rouge_n, rouge_tokens
from memsum.selector import knapsack_select, sentence_scores_from_propositions

BUDGET, SIGMA = 190, 50


def summarize(doc, scores, label):
    lengths = [len(s.tokens) for s in doc.sentences]
    ordered = [scores.get(i, 0.0) for i in range(len(doc.sentences))]
    sel = knapsack_select(lengths, ordered, BUDGET, SIGMA)
    text_tokens = []
    for i in sel.sentence_ids:
        text_tokens.extend(rouge_tokens(doc.sentences[i].text()))
    ref = rouge_tokens(doc.reference_summary)
    r1 = rouge_n(text_tokens, ref, 1)[2]
    rl = rouge_l(text_tokens, ref)[2]
    print(f"  {label:10s} {len(sel.sentence_ids):2d} sentences, "
          f"{sel.total_tokens} tokens, R1={100 * r1:.1f} RL={100 * rl:.1f}")
    return sel


def main():
    corpus = resources.files("memsum.data").joinpath("mini_corpus.jsonl")
    doc = next(iter(read_corpus(corpus.read_text("utf-8"))))
    print(f"document {doc.doc_id}, budget {BUDGET} +/- {SIGMA} tokens\n")

    params = SimulationParams(wm=50)
    for mod, label in ((treekvd, "tree-sim"), (graphkvd, "graph-sim")):
        res = mod.simulate(doc, params)
        scores = sentence_scores_from_propositions(doc, res.trees, res.table)
        summarize(doc, scores, label)
    sel = summarize(doc, lead_scores(doc).scores, "lead")

    print("\nlead summary head:")
    for i in sel.sentence_ids[:3]:
        print("   ", doc.sentences[i].text())


if __name__ == "__main__":
    main()
