"""Redundancy measurement and the selector trade-off.

Shows n-gram uniqueness, pairwise sentence redundancy, best-partner document
redundancy, and how the exact selector keeps summary lengths inside the band
while a greedy selector overshoots. Run: python demos/04_redundancy_metrics.py
"""

from importlib import resources

from memsum import treekvd
from memsum.corpus import read_corpus
from memsum.memory import SimulationParams
from memsum.metrics import (bin_by_document_redundancy, evaluate_summary,
                            red_rl_d, rouge_tokens, uniq)
from memsum.selector import (greedy_select, knapsack_select,
                             sentence_scores_from_propositions)


def main():
    corpus = resources.files("memsum.data").joinpath("mini_corpus.jsonl")
    docs = list(read_corpus(corpus.read_text("utf-8")))

    print("document redundancy (best-partner ROUGE-L, x100):")
    for doc in docs:
        sents = [rouge_tokens(s.text()) for s in doc.sentences]
        value, _ = red_rl_d(sents)
        print(f"  {doc.doc_id:14s} {100 * value:5.1f}")

    print("\nselector comparison on each document (budget 190 +/- 50):")
    results = []
    for doc in docs:
        res = treekvd.simulate(doc, SimulationParams(wm=50))
        scores = sentence_scores_from_propositions(doc, res.trees, res.table)
        lengths = [len(s.tokens) for s in doc.sentences]
        ordered = [scores[i] for i in range(len(lengths))]
        exact = knapsack_select(lengths, ordered, 190, 50)
        greedy = greedy_select(lengths, ordered, 190, 50)
        print(f"  {doc.doc_id:14s} exact {exact.total_tokens:3d} tokens | "
              f"greedy {greedy.total_tokens:3d} tokens"
              + ("  <- overshoot" if greedy.overshoot else ""))

        summary = [rouge_tokens(doc.sentences[i].text())
                   for i in exact.sentence_ids]
        doc_sents = [rouge_tokens(s.text()) for s in doc.sentences]
        results.append(evaluate_summary(doc.doc_id, summary,
                                        doc.reference_summary, doc_sents))

    print("\nsummary uniqueness vs its own redundancy:")
    for r in results:
        print(f"  {r.doc_id:14s} uniq={100 * r.uniq:5.2f} "
              f"redRL={100 * r.red_rl:5.2f} RL={100 * r.rl:5.2f}")

    report = bin_by_document_redundancy(results, bin_width=0.05)
    print("\nresults binned by document redundancy:")
    for b in report.bins:
        print(f"  [{b['lo']:.2f}, {b['hi']:.2f})  n={b['count']}  "
              f"mean RL={100 * b['mean_rl']:.1f}  "
              f"mean redRL={100 * b['mean_red_rl']:.1f}  "
              f"mean tokens={b['mean_n_tokens']:.0f}")


if __name__ == "__main__":
    main()
