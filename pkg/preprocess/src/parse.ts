/**
 * Deterministic rule-based dependency annotation ("builtin-en" model).
 *
 * This is a lightweight stand-in for a trained parser: part-of-speech tags
 * come from closed-class lexicons plus suffix heuristics, and every
 * non-root head is either the sentence root or a strictly later token,
 * which makes the produced structure a single-rooted acyclic tree by
 * construction.
 */

export interface ParsedToken {
  index: number;      // 1-based
  form: string;
  lemma: string;
  upos: string;
  head: number;       // 0 for the root
  deprel: string;
}

const DETERMINERS = new Set([
  'the', 'a', 'an', 'this', 'that', 'these', 'those', 'each', 'every',
  'some', 'any', 'no', 'both', 'all', 'such', 'another', 'either', 'neither',
]);
const ADPOSITIONS = new Set([
  'of', 'in', 'on', 'at', 'by', 'for', 'with', 'from', 'to', 'into', 'over',
  'under', 'between', 'during', 'through', 'against', 'about', 'within',
  'across', 'without', 'among', 'after', 'before', 'above', 'below', 'near',
  'around', 'per', 'via', 'upon',
]);
const PRONOUNS = new Set([
  'we', 'it', 'they', 'he', 'she', 'i', 'you', 'us', 'them', 'him', 'her',
  'one', 'its', 'our', 'their', 'his', 'this', 'which', 'who', 'what',
]);
const AUXILIARIES = new Set([
  'is', 'are', 'was', 'were', 'be', 'been', 'being', 'am', 'has', 'have',
  'had', 'do', 'does', 'did', 'will', 'would', 'can', 'could', 'may',
  'might', 'must', 'shall', 'should',
]);
const COORDINATORS = new Set(['and', 'or', 'but', 'nor']);
const SUBORDINATORS = new Set([
  'that', 'because', 'while', 'although', 'though', 'if', 'since',
  'whether', 'when', 'where', 'as', 'unless', 'until',
]);
const COMMON_VERBS = new Set([
  'show', 'present', 'propose', 'describe', 'use', 'find', 'obtain',
  'observe', 'report', 'study', 'measure', 'analyze', 'derive', 'estimate',
  'detect', 'suggest', 'indicate', 'demonstrate', 'consider', 'compare',
  'compute', 'calculate', 'introduce', 'discuss', 'develop', 'apply',
  'perform', 'provide', 'require', 'assume', 'define', 'denote', 'see',
  'note', 'yield', 'give', 'take', 'make', 'expect', 'follow', 'lead',
  'result', 'contain', 'include', 'produce', 'predict', 'confirm',
  'heat', 'cool', 'drive', 'trace', 'link', 'form', 'rise', 'hold',
  'increase', 'decrease', 'lose', 'agree', 'contribute', 'control',
]);

function verbLike(word: string): boolean {
  if (COMMON_VERBS.has(word)) return true;
  if (word.length > 3 && word.endsWith('s') && COMMON_VERBS.has(word.slice(0, -1))) {
    return true;
  }
  return false;
}

export function tagToken(form: string, prevUpos: string | null): string {
  const w = form.toLowerCase();
  if (/^@x[a-z]+$/.test(w)) return 'SYM';
  if (/^\d/.test(w)) return 'NUM';
  if (!/[a-z0-9]/i.test(w)) return 'PUNCT';
  if (AUXILIARIES.has(w)) return 'AUX';
  if (DETERMINERS.has(w)) return 'DET';
  if (ADPOSITIONS.has(w)) return 'ADP';
  if (COORDINATORS.has(w)) return 'CCONJ';
  if (SUBORDINATORS.has(w)) return 'SCONJ';
  if (PRONOUNS.has(w)) return 'PRON';
  if (verbLike(w)) return 'VERB';
  if (prevUpos === 'AUX' && /(?:ed|ing|en)$/.test(w)) return 'VERB';
  if (/ly$/.test(w) && w.length > 3) return 'ADV';
  if (/(?:ical|ive|ous|able|ible|ful|less|ar|ary)$/.test(w) && w.length > 4) {
    return 'ADJ';
  }
  return 'NOUN';
}

const NOMINAL = new Set(['NOUN', 'PROPN', 'SYM', 'NUM', 'PRON']);

function nextNominal(upos: string[], start: number, limit = 6): number {
  for (let j = start; j < upos.length && j < start + limit; j++) {
    if (upos[j] === 'PUNCT') break;
    if (NOMINAL.has(upos[j])) return j;
  }
  return -1;
}

function nextVerb(upos: string[], start: number): number {
  for (let j = start; j < upos.length; j++) {
    if (upos[j] === 'VERB') return j;
  }
  return -1;
}

/**
 * Parse one tokenized sentence. Heads are expressed as 1-based indices;
 * every non-root head is either the root index or a later token, so the
 * result can never contain a cycle and has exactly one root.
 */
export function parseSentence(tokens: string[]): ParsedToken[] {
  if (tokens.length === 0) return [];
  const upos: string[] = [];
  for (let i = 0; i < tokens.length; i++) {
    upos.push(tagToken(tokens[i], i > 0 ? upos[i - 1] : null));
  }

  // root: first verb, else first auxiliary, else first nominal, else token 1
  let rootIdx = upos.indexOf('VERB');
  if (rootIdx < 0) rootIdx = upos.indexOf('AUX');
  if (rootIdx < 0) rootIdx = upos.findIndex((u) => NOMINAL.has(u));
  if (rootIdx < 0) rootIdx = 0;

  const out: ParsedToken[] = [];
  let sawObject = false;
  for (let i = 0; i < tokens.length; i++) {
    const tag = upos[i];
    let head = rootIdx + 1;
    let deprel = 'dep';
    if (i === rootIdx) {
      head = 0;
      deprel = 'root';
    } else if (tag === 'PUNCT') {
      deprel = 'punct';
    } else if (tag === 'DET' || tag === 'ADJ' || tag === 'NUM' || tag === 'ADV') {
      const j = nextNominal(upos, i + 1);
      if (j >= 0) {
        head = j + 1;
        deprel = tag === 'DET' ? 'det' : tag === 'ADJ' ? 'amod'
          : tag === 'NUM' ? 'nummod' : 'advmod';
      } else if (tag === 'ADV') {
        deprel = 'advmod';
      }
    } else if (tag === 'ADP') {
      const j = nextNominal(upos, i + 1);
      if (j >= 0) {
        head = j + 1;
        deprel = 'case';
      }
    } else if (tag === 'AUX') {
      deprel = 'aux';
    } else if (tag === 'CCONJ') {
      const j = nextNominal(upos, i + 1);
      if (j >= 0) {
        head = j + 1;
        deprel = 'cc';
      } else {
        deprel = 'cc';
      }
    } else if (tag === 'SCONJ') {
      const v = nextVerb(upos, i + 1);
      if (v >= 0) {
        head = v + 1;
        deprel = 'mark';
      } else {
        deprel = 'mark';
      }
    } else if (tag === 'VERB') {
      deprel = 'ccomp';   // secondary predicates hang off the root
    } else if (NOMINAL.has(tag)) {
      if (i + 1 < tokens.length && NOMINAL.has(upos[i + 1])) {
        head = i + 2;
        deprel = 'compound';
      } else if (i < rootIdx) {
        deprel = 'nsubj';
      } else if (!sawObject) {
        deprel = 'obj';
        sawObject = true;
      } else {
        deprel = 'obl';
      }
    }
    // safety net: the head must be the root or a strictly later token
    if (head !== 0 && head !== rootIdx + 1 && head <= i + 1) {
      head = rootIdx + 1;
      deprel = 'dep';
    }
    out.push({
      index: i + 1,
      form: tokens[i],
      lemma: tokens[i].toLowerCase(),
      upos: tag,
      head,
      deprel,
    });
  }
  return out;
}

/** Structural self-check used by tests: single root, no cycles, heads in range. */
export function validateParse(tokens: ParsedToken[]): string | null {
  const n = tokens.length;
  const roots = tokens.filter((t) => t.head === 0);
  if (roots.length !== 1) return `expected one root, found ${roots.length}`;
  for (const t of tokens) {
    if (t.head < 0 || t.head > n) return `head out of range at ${t.index}`;
    if (t.head === t.index) return `self-loop at ${t.index}`;
  }
  for (const t of tokens) {
    const seen = new Set<number>();
    let cur = t.index;
    while (cur !== 0) {
      if (seen.has(cur)) return `cycle through ${cur}`;
      seen.add(cur);
      cur = tokens[cur - 1].head;
    }
  }
  return null;
}

export const MODELS = ['builtin-en'];
