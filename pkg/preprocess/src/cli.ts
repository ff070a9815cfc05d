#!/usr/bin/env node
/**
 * memsum-preprocess --in raw.jsonl --out corpus.jsonl [--model builtin-en]
 *
 * Input: one article per line, {"article_id", "sections":[{"heading","text"}],
 * "abstract"}. Output: the corpus container consumed by the summarizer.
 */

import * as fs from 'node:fs';

import { convertCorpus } from './convert';
import { MODELS } from './parse';

function usage(): string {
  return [
    'usage: memsum-preprocess --in raw.jsonl --out corpus.jsonl [--model NAME]',
    `models: ${MODELS.join(', ')}`,
  ].join('\n');
}

export function main(argv: string[]): number {
  const args: Record<string, string> = {};
  for (let i = 0; i < argv.length; i += 2) {
    const key = argv[i];
    const value = argv[i + 1];
    if (!key.startsWith('--') || value === undefined) {
      process.stderr.write(usage() + '\n');
      return 2;
    }
    args[key.slice(2)] = value;
  }
  const input = args['in'];
  const output = args['out'];
  const model = args['model'] ?? 'builtin-en';
  if (!input || !output) {
    process.stderr.write(usage() + '\n');
    return 2;
  }
  if (!MODELS.includes(model)) {
    process.stderr.write(`error: unknown model ${model}; ${usage()}\n`);
    return 2;
  }
  if (!fs.existsSync(input)) {
    process.stderr.write(`error: input not found: ${input}\n`);
    return 2;
  }
  const lines = fs.readFileSync(input, 'utf-8').split('\n');
  const { records, counts } = convertCorpus(lines, model);
  const body = records.map((r) => JSON.stringify(r)).join('\n');
  fs.writeFileSync(output, body.length ? body + '\n' : '');
  process.stdout.write(
    `articles=${counts.articles} sentences=${counts.sentences} ` +
    `failures=${counts.failures} skipped=${counts.skippedArticles}\n`,
  );
  return 0;
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
