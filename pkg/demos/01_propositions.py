"""From a dependency parse to a proposition tree, step by step.

A proposition packs a predicate with its arguments; non-leaf dependents
become pointer arguments ($N), so each sentence compiles into a small tree
of content units. Run: python demos/01_propositions.py
"""

from memsum.corpus import parse_conllu
from memsum.propositions import build_proposition_tree, dump_tree

CONLLU = """\
# doc_id = demo
1\tthis\tthis\tDET\t_\t_\t5\tdet\t_\t_
2\tsemi\tsemi\tADV\t_\t_\t4\tamod\t_\t_
3\t-\t-\tPUNCT\t_\t_\t4\tpunct\t_\t_
4\tanalytical\tanalytical\tADJ\t_\t_\t5\tamod\t_\t_
5\tmodel\tmodel\tNOUN\t_\t_\t6\tnsubj\t_\t_
6\tpredicts\tpredict\tVERB\t_\t_\t0\troot\t_\t_
7\tgalaxy\tgalaxy\tNOUN\t_\t_\t8\tcompound\t_\t_
8\tformation\tformation\tNOUN\t_\t_\t6\tobj\t_\t_
9\tand\tand\tCCONJ\t_\t_\t12\tcc\t_\t_
10\tthe\tthe\tDET\t_\t_\t12\tdet\t_\t_
11\tstar\tstar\tNOUN\t_\t_\t12\tcompound\t_\t_
12\tburst\tburst\tNOUN\t_\t_\t8\tconj\t_\t_
13\tof\tof\tADP\t_\t_\t14\tcase\t_\t_
14\tgalaxies\tgalaxy\tNOUN\t_\t_\t12\tnmod\t_\t_
"""


def main():
    doc = parse_conllu(CONLLU)
    sentence = doc.sentences[0]
    print("sentence:", sentence.text())
    print()

    tree = build_proposition_tree(sentence, id_start=1)
    print("propositions (one per non-leaf node after merging and promotion):")
    print(dump_tree(tree))
    print()
    print("tree edges (induced by pointer arguments):", sorted(tree.edges))
    print("root proposition:", tree.root)

    # function words fold into their heads ("of galaxies"), determiners and
    # single-token modifiers merge ("this model"), compounds join ("galaxy
    # formation"), and the coordinating conjunction is promoted to head the
    # two conjuncts.


if __name__ == "__main__":
    main()
