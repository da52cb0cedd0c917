/**
 * Ribbon sampling: expand the server's hex control stops into pixel columns
 * for the main gradient and the deficiency-simulation strip.
 */

import { hexToLab, labToHex, lerpLab } from './color.js';
import type { Lab } from './types.js';

export const RIBBON_STEPS = 512;

/**
 * Sample a hex stop list to `width` columns, interpolating between stops in
 * Lab. The first and last columns are the endpoint stops verbatim.
 */
export function ribbonColumns(hexStops: string[], width: number = RIBBON_STEPS): string[] {
  if (hexStops.length === 0) return [];
  if (hexStops.length === 1) return new Array(width).fill(hexStops[0]);
  const labs: Lab[] = hexStops.map(hexToLab);
  const n = labs.length;
  const out = new Array<string>(width);
  for (let k = 0; k < width; k++) {
    if (k === 0) {
      out[k] = hexStops[0];
      continue;
    }
    if (k === width - 1) {
      out[k] = hexStops[n - 1];
      continue;
    }
    const pos = (k * (n - 1)) / (width - 1);
    const i = Math.min(Math.floor(pos), n - 2);
    out[k] = labToHex(lerpLab(labs[i], labs[i + 1], pos - i));
  }
  return out;
}

/** Paint columns onto a canvas, stretching to its device size. */
export function drawColumns(canvas: HTMLCanvasElement, columns: string[]): void {
  const ctx = canvas.getContext('2d');
  if (!ctx || columns.length === 0) return;
  const { width, height } = canvas;
  const colWidth = width / columns.length;
  for (let k = 0; k < columns.length; k++) {
    ctx.fillStyle = columns[k];
    ctx.fillRect(Math.floor(k * colWidth), 0, Math.ceil(colWidth) + 1, height);
  }
}
