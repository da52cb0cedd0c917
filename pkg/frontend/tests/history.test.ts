import { describe, expect, it } from 'vitest';

import { HISTORY_CAP, SessionHistory } from '../src/history.js';
import type { ColormapDoc } from '../src/types.js';

function makeDoc(seed: number): ColormapDoc {
  return {
    format_version: 1,
    profile: { kind: 'diverging', inverted: false, l_min: 5, l_max: 95, n: 31 },
    points: [
      [5, seed, 0],
      [95, 0, seed],
    ],
    hex: ['#101010', '#FAFAFA'],
    shelf: [{ lab: [50, seed, -seed], center: 0.25, extent: 0.3 }],
    config: { seed, cvd: 'deutan:1', iter_count: 5500 },
    cost: { uniformity: 0.01, smoothness: 0.1, cvd: 0, total: 0.1085 },
  };
}

describe('SessionHistory', () => {
  it('restore reproduces shelf and config exactly', () => {
    const history = new SessionHistory();
    const doc = makeDoc(7);
    history.push(doc);
    const restored = history.restore(0);
    expect(restored.shelf).toEqual(doc.shelf);
    expect(restored.config).toEqual(doc.config);
    expect(restored.doc).toEqual(doc);
  });

  it('restored state is isolated from later mutations', () => {
    const history = new SessionHistory();
    const doc = makeDoc(3);
    history.push(doc);
    doc.shelf[0].center = 0.99; // caller mutates its own copy afterwards
    (doc.config as Record<string, unknown>).seed = -1;
    const restored = history.restore(0);
    expect(restored.shelf[0].center).toBe(0.25);
    expect(restored.config.seed).toBe(3);
    restored.shelf[0].center = 0.5; // and mutating a restore is harmless
    expect(history.restore(0).shelf[0].center).toBe(0.25);
  });

  it('newest entries come first', () => {
    const history = new SessionHistory();
    history.push(makeDoc(1));
    history.push(makeDoc(2));
    expect(history.restore(0).config.seed).toBe(2);
    expect(history.restore(1).config.seed).toBe(1);
  });

  it('caps the number of entries', () => {
    const history = new SessionHistory();
    for (let k = 0; k < HISTORY_CAP + 10; k++) history.push(makeDoc(k));
    expect(history.length).toBe(HISTORY_CAP);
    expect(history.restore(0).config.seed).toBe(HISTORY_CAP + 9);
  });

  it('throws on a missing entry', () => {
    expect(() => new SessionHistory().restore(0)).toThrow();
  });
});
