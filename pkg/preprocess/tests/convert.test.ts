import assert from 'node:assert/strict';
import * as fs from 'node:fs';
import * as path from 'node:path';
import { test } from 'node:test';

import { convertArticle, convertCorpus } from '../src/convert';

const FIXTURE = path.join(__dirname, '..', '..', 'fixtures', 'articles.jsonl');

test('three-article fixture converts with no failures', () => {
  const lines = fs.readFileSync(FIXTURE, 'utf-8').split('\n');
  const { records, counts } = convertCorpus(lines, 'builtin-en');
  assert.equal(counts.articles, 3);
  assert.equal(counts.skippedArticles, 0);
  assert.equal(counts.failures, 0);
  assert.ok(counts.sentences >= 10);
  for (const record of records) {
    assert.ok(record.doc_id);
    assert.ok(record.sections.length >= 2);
    for (const section of record.sections) {
      assert.ok(section.conllu.includes(`# section = ${section.name}`));
      // ten tab-separated columns on every token line
      for (const line of section.conllu.split('\n')) {
        if (!line || line.startsWith('#')) continue;
        assert.equal(line.split('\t').length, 10);
      }
    }
    assert.ok(record.reference);
  }
});

test('placeholders survive conversion as opaque tokens', () => {
  const lines = fs.readFileSync(FIXTURE, 'utf-8').split('\n');
  const { records } = convertCorpus(lines, 'builtin-en');
  const all = records.map((r) => r.sections.map((s) => s.conllu).join('\n')).join('\n');
  assert.ok(all.includes('\t@xmath\t'));
  assert.ok(all.includes('\t@xcite\t'));
  assert.ok(!/@xmath\d/.test(all));
});

test('article with empty sections is skipped and counted', () => {
  const { records, counts } = convertCorpus(
    [JSON.stringify({ article_id: 'empty', sections: [{ heading: 'a', text: '' }] })],
    'builtin-en');
  assert.equal(records.length, 0);
  assert.equal(counts.skippedArticles, 1);
});

test('empty input produces zero counts', () => {
  const { records, counts } = convertCorpus([], 'builtin-en');
  assert.deepEqual(records, []);
  assert.deepEqual(counts,
    { articles: 0, sentences: 0, failures: 0, skippedArticles: 0 });
});

test('unknown model is rejected', () => {
  assert.throws(() => convertArticle(
    { article_id: 'x', sections: [{ heading: 'a', text: 'b .' }] }, 'nope'));
});

test('missing abstract yields a null reference', () => {
  const { record } = convertArticle(
    { article_id: 'na', sections: [{ heading: 'a', text: 'the core heats .' }] },
    'builtin-en');
  assert.ok(record);
  assert.equal(record!.reference, null);
});
