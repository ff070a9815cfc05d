import assert from 'node:assert/strict';
import { test } from 'node:test';

import { cleanText } from '../src/clean';

test('text without artifacts is unchanged', () => {
  const text = 'the reactor heats the coolant .';
  assert.equal(cleanText(text), text);
});

test('math and citation placeholders normalize to single opaque tokens', () => {
  assert.equal(cleanText('flux @xmath12 at @xcite'), 'flux @xmath at @xcite');
  assert.equal(cleanText('bounds @xmath0 and @xmath123 hold'),
    'bounds @xmath and @xmath hold');
  assert.equal(cleanText('see @xcite1 and @xciteX'), 'see @xcite and @xcite');
});

test('bare placeholders stay put', () => {
  assert.equal(cleanText('@xmath @xcite'), '@xmath @xcite');
});

test('empty string passes through', () => {
  assert.equal(cleanText(''), '');
});

test('placeholders are retained, never deleted', () => {
  const cleaned = cleanText('energy @xmath42 rises');
  assert.ok(cleaned.includes('@xmath'));
  assert.equal(cleaned.split(' ').length, 3);
});
