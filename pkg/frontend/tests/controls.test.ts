import { describe, expect, it } from 'vitest';

import { canFlip, flipDocument } from '../src/controls.js';
import type { ColormapDoc } from '../src/types.js';

function doc(kind: 'linear' | 'diverging' | 'wave', inverted = false): ColormapDoc {
  return {
    format_version: 1,
    profile: { kind, inverted, l_min: 5, l_max: 95, n: 5 },
    points: [
      [5, 1, 0],
      [27.5, 2, 0],
      [50, 3, 0],
      [72.5, 4, 0],
      [95, 5, 0],
    ],
    hex: ['#000000', '#333333', '#777777', '#BBBBBB', '#FFFFFF'],
    shelf: [],
    config: {},
    cost: null,
  };
}

describe('flipDocument', () => {
  it('reverses points and hex stops', () => {
    const flipped = flipDocument(doc('linear'));
    expect(flipped.points[0]).toEqual([95, 5, 0]);
    expect(flipped.hex[0]).toBe('#FFFFFF');
  });

  it('a flipped linear profile is the inverted profile', () => {
    expect(flipDocument(doc('linear')).profile?.inverted).toBe(true);
    expect(flipDocument(doc('linear', true)).profile?.inverted).toBe(false);
  });

  it('a diverging profile is symmetric and keeps its flag', () => {
    expect(flipDocument(doc('diverging')).profile?.inverted).toBe(false);
    expect(flipDocument(doc('diverging', true)).profile?.inverted).toBe(true);
  });

  it('wave profiles cannot flip', () => {
    expect(canFlip('wave')).toBe(false);
    const original = doc('wave');
    expect(flipDocument(original)).toBe(original);
  });

  it('does not mutate the input', () => {
    const original = doc('linear');
    flipDocument(original);
    expect(original.points[0]).toEqual([5, 1, 0]);
    expect(original.profile?.inverted).toBe(false);
  });
});
