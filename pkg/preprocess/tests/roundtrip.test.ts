/**
 * Round-trip acceptance: converted output must pass the summarizer's own
 * corpus validation with zero diagnostics. The check drives the summarizer
 * strictly through its public CLI.
 */

import assert from 'node:assert/strict';
import { spawnSync } from 'node:child_process';
import * as fs from 'node:fs';
import * as os from 'node:os';
import * as path from 'node:path';
import { test } from 'node:test';

import { main } from '../src/cli';

const PKG_ROOT = path.join(__dirname, '..', '..');          // preprocess/
const REPO_ROOT = path.join(PKG_ROOT, '..');                // repository root
const FIXTURE = path.join(PKG_ROOT, 'fixtures', 'articles.jsonl');

function convert(tmp: string, input: string): string {
  const out = path.join(tmp, 'corpus.jsonl');
  const rc = main(['--in', input, '--out', out, '--model', 'builtin-en']);
  assert.equal(rc, 0);
  return out;
}

test('converted fixture passes downstream validation with zero diagnostics', () => {
  const tmp = fs.mkdtempSync(path.join(os.tmpdir(), 'preprocess-'));
  const corpus = convert(tmp, FIXTURE);
  const result = spawnSync('python3', ['-m', 'memsum.cli', 'validate',
    '--corpus', corpus], {
    encoding: 'utf-8',
    env: {
      ...process.env,
      PYTHONPATH: path.join(REPO_ROOT, 'src'),
    },
  });
  assert.equal(result.status, 0,
    `validator reported problems:\n${result.stdout}\n${result.stderr}`);
  assert.match(result.stdout, /checked 3 documents, 0 diagnostics/);
});

test('cli reports counts and handles empty input', () => {
  const tmp = fs.mkdtempSync(path.join(os.tmpdir(), 'preprocess-'));
  const empty = path.join(tmp, 'empty.jsonl');
  fs.writeFileSync(empty, '');
  const out = path.join(tmp, 'out.jsonl');
  const rc = main(['--in', empty, '--out', out]);
  assert.equal(rc, 0);
  assert.equal(fs.readFileSync(out, 'utf-8'), '');
});

test('cli rejects unknown models and missing files', () => {
  const tmp = fs.mkdtempSync(path.join(os.tmpdir(), 'preprocess-'));
  assert.equal(main(['--in', FIXTURE, '--out', path.join(tmp, 'x.jsonl'),
    '--model', 'bert-large']), 2);
  assert.equal(main(['--in', path.join(tmp, 'missing.jsonl'),
    '--out', path.join(tmp, 'y.jsonl')]), 2);
  assert.equal(main(['--badflag']), 2);
});
