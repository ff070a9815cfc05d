/**
 * Article-to-corpus conversion: clean each section, split and tokenize its
 * sentences, annotate them, and emit one JSONL record per article in the
 * downstream corpus container format.
 */

import { cleanText } from './clean';
import { MODELS, parseSentence, validateParse, ParsedToken } from './parse';
import { splitSentences, tokenize } from './tokenize';

export interface RawArticle {
  article_id: string;
  sections: Array<{ heading: string; text: string }>;
  abstract?: string | null;
}

export interface CorpusRecord {
  doc_id: string;
  sections: Array<{ name: string; conllu: string }>;
  reference: string | null;
}

export interface ConvertCounts {
  articles: number;
  sentences: number;
  failures: number;
  skippedArticles: number;
}

export function renderConllu(sentences: ParsedToken[][], section: string): string {
  const lines: string[] = [`# section = ${section}`];
  for (const sent of sentences) {
    for (const t of sent) {
      lines.push(
        [t.index, t.form, t.lemma, t.upos, '_', '_', t.head, t.deprel, '_', '_']
          .join('\t'),
      );
    }
    lines.push('');
  }
  return lines.join('\n');
}

export function convertArticle(
  article: RawArticle,
  model: string,
): { record: CorpusRecord | null; sentences: number; failures: number } {
  if (!MODELS.includes(model)) {
    throw new Error(`unknown parser model: ${model}`);
  }
  let sentenceCount = 0;
  let failures = 0;
  const sections: Array<{ name: string; conllu: string }> = [];
  for (const section of article.sections) {
    const parsed: ParsedToken[][] = [];
    for (const sentence of splitSentences(cleanText(section.text))) {
      const tokens = tokenize(sentence);
      if (tokens.length === 0) {
        continue;
      }
      const annotated = parseSentence(tokens);
      if (validateParse(annotated) !== null) {
        failures += 1;
        continue;
      }
      parsed.push(annotated);
      sentenceCount += 1;
    }
    if (parsed.length > 0) {
      sections.push({ name: section.heading, conllu: renderConllu(parsed, section.heading) });
    }
  }
  if (sections.length === 0) {
    return { record: null, sentences: 0, failures };
  }
  const abstract = (article.abstract ?? '').trim();
  return {
    record: {
      doc_id: article.article_id,
      sections,
      reference: abstract ? cleanText(abstract) : null,
    },
    sentences: sentenceCount,
    failures,
  };
}

export function convertCorpus(
  rawLines: string[],
  model: string,
): { records: CorpusRecord[]; counts: ConvertCounts } {
  const counts: ConvertCounts = {
    articles: 0,
    sentences: 0,
    failures: 0,
    skippedArticles: 0,
  };
  const records: CorpusRecord[] = [];
  for (const line of rawLines) {
    const trimmed = line.trim();
    if (!trimmed) continue;
    const article = JSON.parse(trimmed) as RawArticle;
    const { record, sentences, failures } = convertArticle(article, model);
    counts.failures += failures;
    if (record === null) {
      counts.skippedArticles += 1;
      continue;
    }
    counts.articles += 1;
    counts.sentences += sentences;
    records.push(record);
  }
  return { records, counts };
}
