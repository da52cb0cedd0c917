import { describe, expect, it } from 'vitest';

import { hexToLab, labToHex } from '../src/color.js';
import { RIBBON_STEPS, ribbonColumns } from '../src/ribbon.js';

const STOPS = ['#1A0633', '#35528B', '#2E8B8B', '#7FC55F', '#F2E34C'];

describe('ribbonColumns', () => {
  it('samples at no fewer than 256 steps by default', () => {
    expect(ribbonColumns(STOPS).length).toBeGreaterThanOrEqual(256);
    expect(ribbonColumns(STOPS).length).toBe(RIBBON_STEPS);
  });

  it('endpoint pixels equal the server hex stops verbatim', () => {
    const columns = ribbonColumns(STOPS, 300);
    expect(columns[0]).toBe(STOPS[0]);
    expect(columns[columns.length - 1]).toBe(STOPS[STOPS.length - 1]);
  });

  it('columns at stop positions reproduce the stops', () => {
    const width = 4 * (STOPS.length - 1) + 1; // stop positions land on columns
    const columns = ribbonColumns(STOPS, width);
    STOPS.forEach((stop, i) => {
      expect(columns[4 * i]).toBe(stop);
    });
  });

  it('an identity simulation strip equals the main ribbon', () => {
    // the CVD strip is rendered from simulated_hex; with an identity model
    // the server returns the original stops, so the strips must match
    const main = ribbonColumns(STOPS, 256);
    const strip = ribbonColumns([...STOPS], 256);
    expect(strip).toEqual(main);
  });

  it('interpolates smoothly between stops', () => {
    const columns = ribbonColumns(['#000000', '#FFFFFF'], 101);
    const mid = hexToLab(columns[50]);
    expect(mid[0]).toBeGreaterThan(40);
    expect(mid[0]).toBeLessThan(60);
    const luminances = columns.map((c) => hexToLab(c)[0]);
    for (let k = 1; k < luminances.length; k++) {
      expect(luminances[k]).toBeGreaterThanOrEqual(luminances[k - 1] - 1e-6);
    }
  });

  it('degenerate stop lists stay total', () => {
    expect(ribbonColumns([], 10)).toEqual([]);
    expect(ribbonColumns(['#FF0000'], 4)).toEqual(['#FF0000', '#FF0000', '#FF0000', '#FF0000']);
  });
});

describe('color conversions', () => {
  it('round-trips hex through Lab', () => {
    for (const stop of STOPS) {
      expect(labToHex(hexToLab(stop))).toBe(stop);
    }
  });

  it('matches the backend white point convention', () => {
    const white = hexToLab('#FFFFFF');
    expect(white[0]).toBeCloseTo(100, 4);
    expect(white[1]).toBeCloseTo(0, 4);
    expect(white[2]).toBeCloseTo(0, 4);
  });

  it('matches the backend red reference value', () => {
    const red = hexToLab('#FF0000');
    expect(red[0]).toBeCloseTo(53.2408, 2);
    expect(red[1]).toBeCloseTo(80.0925, 2);
    expect(red[2]).toBeCloseTo(67.2032, 2);
  });
});
