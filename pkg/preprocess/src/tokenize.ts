/** Sentence splitting and tokenization for cleaned article text. */

// Abbreviations that should not terminate a sentence.
const ABBREVIATIONS = new Set([
  'fig', 'figs', 'eq', 'eqs', 'ref', 'refs', 'sec', 'secs', 'et', 'al',
  'e.g', 'i.e', 'vs', 'etc', 'dr', 'mr', 'ms', 'no', 'cf', 'ca', 'approx',
]);

export function splitSentences(text: string): string[] {
  const sentences: string[] = [];
  let current = '';
  const chars = text;
  for (let i = 0; i < chars.length; i++) {
    const ch = chars[i];
    current += ch;
    if (ch === '.' || ch === '!' || ch === '?') {
      const next = chars[i + 1];
      if (next !== undefined && !/\s/.test(next)) {
        continue; // mid-token period (decimal, version number)
      }
      const tail = current.slice(0, -1);
      const lastWord = (tail.match(/([A-Za-z.]+)\s*$/) || [])[1] || '';
      if (ABBREVIATIONS.has(lastWord.toLowerCase().replace(/\.$/, ''))) {
        continue;
      }
      const trimmed = current.trim();
      if (trimmed) {
        sentences.push(trimmed);
      }
      current = '';
    }
  }
  const rest = current.trim();
  if (rest) {
    sentences.push(rest);
  }
  return sentences;
}

// Placeholders stay whole; words keep internal hyphens/underscores; numbers
// keep decimal points; anything else splits into single characters.
const TOKEN_PATTERN =
  /@x[a-z]+|[A-Za-z]+(?:[-_'][A-Za-z]+)*|\d+(?:\.\d+)?|\S/g;

export function tokenize(sentence: string): string[] {
  return sentence.match(TOKEN_PATTERN) ?? [];
}
