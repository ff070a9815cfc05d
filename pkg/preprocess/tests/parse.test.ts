import assert from 'node:assert/strict';
import { test } from 'node:test';

import { parseSentence, tagToken, validateParse } from '../src/parse';
import { splitSentences, tokenize } from '../src/tokenize';

test('tags closed classes and placeholders', () => {
  assert.equal(tagToken('the', null), 'DET');
  assert.equal(tagToken('of', null), 'ADP');
  assert.equal(tagToken('and', null), 'CCONJ');
  assert.equal(tagToken('is', null), 'AUX');
  assert.equal(tagToken('@xmath', null), 'SYM');
  assert.equal(tagToken('4.8', null), 'NUM');
  assert.equal(tagToken(',', null), 'PUNCT');
  assert.equal(tagToken('rapidly', null), 'ADV');
  assert.equal(tagToken('reactor', null), 'NOUN');
});

test('simple clause gets a verbal root with subject and object', () => {
  const parsed = parseSentence(tokenize('the reactor heats the coolant .'));
  assert.equal(validateParse(parsed), null);
  const root = parsed.find((t) => t.head === 0)!;
  assert.equal(root.form, 'heats');
  const subj = parsed.find((t) => t.form === 'reactor')!;
  assert.equal(subj.deprel, 'nsubj');
  assert.equal(subj.head, root.index);
});

test('single token sentence is its own root', () => {
  const parsed = parseSentence(['yes']);
  assert.equal(parsed.length, 1);
  assert.equal(parsed[0].head, 0);
});

test('every non-root head is the root or a later token', () => {
  const parsed = parseSentence(
    tokenize('we present simultaneous observations of a sample of 13 stars .'));
  const root = parsed.find((t) => t.head === 0)!;
  for (const t of parsed) {
    if (t.head === 0) continue;
    assert.ok(t.head === root.index || t.head > t.index,
      `token ${t.index} (${t.form}) points backwards to ${t.head}`);
  }
});

test('structural validity over many generated sentences', () => {
  const vocab = ['the', 'of', 'and', 'is', 'reactor', 'coolant', 'shows',
    'rapid', 'thermal', '@xmath', '4.8', ',', '.', 'we', 'that', 'derive'];
  // deterministic linear-congruential stream keeps the test reproducible
  let state = 12345;
  const next = () => {
    state = (state * 1103515245 + 12345) % 2147483648;
    return state;
  };
  for (let round = 0; round < 300; round++) {
    const n = 1 + (next() % 14);
    const tokens: string[] = [];
    for (let i = 0; i < n; i++) {
      tokens.push(vocab[next() % vocab.length]);
    }
    const parsed = parseSentence(tokens);
    assert.equal(validateParse(parsed), null,
      `invalid parse for: ${tokens.join(' ')}`);
    assert.equal(parsed.length, tokens.length);
  }
});

test('fixture paragraphs parse into valid trees end to end', () => {
  const text = 'wolf rayet stars are evolved massive stars . ' +
    'the radio flux @xmath measured at @xcite traces the ionized envelope .';
  for (const sentence of splitSentences(text)) {
    const parsed = parseSentence(tokenize(sentence));
    assert.equal(validateParse(parsed), null);
  }
});
