"""Hand-built walkthrough fixtures shared by unit and acceptance tests.

Two reference reading scenarios: a three-cycle biomedical passage
(antioxidants / cystic fibrosis) and a two-cycle astrophysics passage (mhd
turbulence), with hand-assigned proposition functors and tree shapes that
the simulators are expected to reproduce.
"""

from __future__ import annotations

from memsum.corpus import Token
from memsum.propositions import Functor, FunctorKind, Proposition, PropositionTree


def _tokens(spec: str) -> tuple[Token, ...]:
    """'word/UPOS word/UPOS ...' -> fixture tokens (heads unused here)."""
    toks = []
    for i, item in enumerate(spec.split(), start=1):
        form, _, upos = item.rpartition("/")
        toks.append(Token(index=i, form=form, lemma=form.lower(), upos=upos,
                          head=0, deprel="dep"))
    return tuple(toks)


def prop(pid: int, pred: str, *args: str | int, sentence_id: int = 0,
         section_id: int = 0) -> Proposition:
    """Build a proposition from 'word/UPOS ...' functor specs; integer args
    are pointers to other propositions."""
    functors = []
    for a in args:
        if isinstance(a, int):
            functors.append(Functor(FunctorKind.POINTER, target=a))
        else:
            functors.append(Functor(FunctorKind.LITERAL, _tokens(a)))
    return Proposition(id=pid, predicate=Functor(FunctorKind.PREDICATE, _tokens(pred)),
                       args=tuple(functors), sentence_id=sentence_id,
                       section_id=section_id)


def tree(props: list[Proposition], edges: list[tuple[int, int]], root: int,
         sentence_id: int) -> PropositionTree:
    return PropositionTree(nodes=props, edges=edges, root=root,
                           sentence_id=sentence_id)


def biomedical_walkthrough():
    """Three memory cycles over a biomedical passage; WM = 5.

    Sentence 1: in healthy people, reactive oxidant species are controlled by
    a number of enzymatic and nonenzymatic antioxidants.
    Sentence 2: in patients with cystic fibrosis (cf), deficiency of
    nonenzymatic antioxidants is linked to malabsortion of lipid-soluble
    vitamins.
    Sentence 3: furthermore, pulmonary inflammation in cf patients also
    contributes to depletion of antioxidants.
    """
    p = {}
    p[1] = prop(1, "people/NOUN", "healthy/ADJ", sentence_id=0)
    p[2] = prop(2, "species/NOUN", "reactive/ADJ", sentence_id=0)
    p[3] = prop(3, "species/NOUN", "oxidant/ADJ", sentence_id=0)
    p[4] = prop(4, "are/AUX controlled/VERB", "antioxidants/NOUN", "species/NOUN",
                "in/ADP people/NOUN", sentence_id=0)
    p[5] = prop(5, "of/ADP", "a/DET number/NOUN", "antioxidants/NOUN", sentence_id=0)
    p[6] = prop(6, "antioxidants/NOUN", "enzymatic/ADJ", sentence_id=0)
    p[7] = prop(7, "antioxidants/NOUN", "nonenzimatic/ADJ", sentence_id=0)

    p[8] = prop(8, "with/ADP", "patients/NOUN", "cystic/ADJ fibrosis/NOUN",
                sentence_id=1)
    p[9] = prop(9, "be/AUX", "cystic/ADJ fibrosis/NOUN", "cf/NOUN", sentence_id=1)
    p[10] = prop(10, "of/ADP", "deficiency/NOUN", 7, sentence_id=1)
    p[11] = prop(11, "is/AUX linked/VERB", "malabsortion/NOUN", 10, 8, sentence_id=1)
    p[12] = prop(12, "of/ADP", "malabsortion/NOUN", "vitamins/NOUN", sentence_id=1)
    p[13] = prop(13, "vitamins/NOUN", "lipid-soluble/ADJ", sentence_id=1)

    p[14] = prop(14, "inflammation/NOUN", "pulmonary/ADJ", sentence_id=2)
    p[15] = prop(15, "inflammation/NOUN", 8, sentence_id=2)
    p[16] = prop(16, "contributes/VERB", 15, "to/ADP depletion/NOUN", sentence_id=2)
    p[17] = prop(17, "of/ADP", "depletion/NOUN", "antioxidants/NOUN", sentence_id=2)

    trees = [
        tree([p[i] for i in range(1, 8)],
             [(4, 1), (4, 2), (4, 3), (4, 5), (5, 6), (5, 7)], root=4, sentence_id=0),
        tree([p[i] for i in range(8, 14)],
             [(10, 11), (11, 8), (11, 12), (8, 9), (12, 13)], root=10, sentence_id=1),
        tree([p[i] for i in range(14, 18)],
             [(16, 15), (15, 14), (16, 17)], root=16, sentence_id=2),
    ]
    return p, trees


def astrophysics_walkthrough():
    """Two memory cycles over an astrophysics passage; WM = 5.

    Memory holds earlier material about finding scaling relations for mhd
    turbulence; cycle k reads the structure-function sentence (props 81-87),
    cycle k+1 reads the bridge-relations sentence (props 88-90).
    """
    p = {}
    p[21] = prop(21, "the/DET simple/ADJ scaling/NOUN", 22, sentence_id=0)
    p[22] = prop(22, "see/VERB", "we/PRON", "at/ADP most/ADV critical/ADJ points/NOUN",
                 sentence_id=0)
    p[24] = prop(24, "must/AUX be/AUX generalized/VERB", "that/SCONJ", 21, 25,
                 sentence_id=0)
    p[25] = prop(25, "to/PART multiscaling/NOUN", "in/ADP turbulence/NOUN",
                 sentence_id=0)

    p[71] = prop(71, "behooves/VERB", "therefore/ADV", "it/PRON", "us/PRON",
                 72, 75, 77, sentence_id=1)
    p[72] = prop(72, "to/PART examine/VERB first/ADV the/DET dynamic/ADJ multiscaling/NOUN",
                 "of/ADP structure/NOUN functions/NOUN", 73, sentence_id=1)
    p[73] = prop(73, "in/ADP a/DET shell/NOUN model/NOUN for/ADP mhd/NOUN",
                 "three/NUM dimensional/ADJ", "3d/NOUN mhd/NOUN", sentence_id=1)
    p[75] = prop(75, "are/AUX related/VERB", "dynamic/ADJ multiscaling/NOUN exponents/NOUN",
                 "by/ADP linear/ADJ bridge/NOUN relations/NOUN to/ADP equal/ADJ time/NOUN multiscaling/NOUN exponents/NOUN",
                 sentence_id=1)
    p[77] = prop(77, "have/AUX not/PART been/AUX able/ADJ", "we/PRON", 78, sentence_id=2)
    p[78] = prop(78, "to/PART find/VERB", 79, "so/ADV far/ADV", sentence_id=2)
    p[79] = prop(79, "such/DET relations/NOUN", "for/ADP mhd/NOUN turbulence/NOUN",
                 sentence_id=2)
    p[80] = prop(80, "and/CCONJ", 71, "scalar/ADJ turbulence/NOUN", sentence_id=2)

    p[81] = prop(81, "obtain/VERB", "therefore/ADV", "we/PRON", 82, 84, sentence_id=3)
    p[82] = prop(82, "and/CCONJ", "equal/ADJ time/NOUN", 83, sentence_id=3)
    p[83] = prop(83, "time/NOUN dependent/ADJ structure/NOUN functions/NOUN",
                 "for/ADP a/DET shell/NOUN model/NOUN", sentence_id=3)
    p[84] = prop(84, "for/ADP 3/NUM d/NOUN mhd/NOUN turbulence/NOUN from/ADP these/PRON",
                 "and/CCONJ", 86, sentence_id=3)
    p[85] = prop(85, "equal/ADJ time/NOUN", "dynamic/ADJ", 87, sentence_id=3)
    p[86] = prop(86, "and/CCONJ", 85, sentence_id=3)
    p[87] = prop(87, "multiscaling/NOUN", "exponents/NOUN", sentence_id=3)

    p[88] = prop(88, "try/VERB", "then/ADV", "we/PRON", 89, sentence_id=4)
    p[89] = prop(89, "to/PART see/VERB", 90, sentence_id=4)
    p[90] = prop(90, "suggest/VERB", "if/SCONJ", "these/PRON",
                 "any/DET bridge/NOUN relations/NOUN", sentence_id=4)

    incoming_k = tree([p[i] for i in (81, 82, 83, 84, 85, 86, 87)],
                      [(81, 82), (82, 83), (81, 84), (84, 86), (86, 85), (85, 87)],
                      root=81, sentence_id=3)
    incoming_k1 = tree([p[i] for i in (88, 89, 90)],
                       [(88, 89), (89, 90)], root=88, sentence_id=4)
    # memory tree at the start of cycle k: root 71 with the chain to 79
    memory_edges = [(71, 80), (71, 77), (77, 78), (78, 79)]
    # long-term fragments: the earlier scaling discussion
    forest_fragments = [
        {"nodes": [24, 21, 25], "edges": [(24, 21), (24, 25)]},
    ]
    context_props = [22, 72, 73, 75]
    return p, incoming_k, incoming_k1, memory_edges, forest_fragments, context_props
