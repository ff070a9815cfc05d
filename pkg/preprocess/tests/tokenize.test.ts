import assert from 'node:assert/strict';
import { test } from 'node:test';

import { splitSentences, tokenize } from '../src/tokenize';

test('splits on terminal punctuation', () => {
  const got = splitSentences('the core heats up . the loop drains ! done ?');
  assert.deepEqual(got, ['the core heats up .', 'the loop drains !', 'done ?']);
});

test('keeps abbreviations and decimals together', () => {
  const got = splitSentences('see fig. 3 for details . flux is 4.8 ghz .');
  assert.deepEqual(got, ['see fig. 3 for details .', 'flux is 4.8 ghz .']);
});

test('trailing text without punctuation becomes a sentence', () => {
  assert.deepEqual(splitSentences('no terminal mark here'),
    ['no terminal mark here']);
});

test('empty input yields no sentences', () => {
  assert.deepEqual(splitSentences(''), []);
  assert.deepEqual(splitSentences('   '), []);
});

test('tokenizer keeps placeholders and hyphenated words whole', () => {
  assert.deepEqual(tokenize('the semi-analytical flux @xmath rises ,'),
    ['the', 'semi-analytical', 'flux', '@xmath', 'rises', ',']);
});

test('tokenizer splits punctuation but keeps decimals', () => {
  assert.deepEqual(tokenize('( 4.8 , 8.4 ghz )'),
    ['(', '4.8', ',', '8.4', 'ghz', ')']);
});
