/**
 * Text cleanup for raw article corpora.
 *
 * Inline math and citation placeholders are normalized to single opaque
 * tokens rather than deleted, so token offsets stay meaningful downstream.
 */

// Documented normalization rules, applied in order.
export const CLEANUP_RULES: Array<[RegExp, string]> = [
  [/@xmath\d*/g, '@xmath'],
  [/@xcite\w*/g, '@xcite'],
];

export function cleanText(raw: string): string {
  let text = raw;
  for (const [pattern, replacement] of CLEANUP_RULES) {
    text = text.replace(pattern, replacement);
  }
  return text;
}
