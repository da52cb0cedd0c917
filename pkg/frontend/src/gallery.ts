/**
 * Preview gallery: the current colormap applied to a few synthetic scalar
 * fields, plus any CSV grid the user drops in. Rendering is client-side
 * display sampling of the server's control points.
 */

import { labToSrgb, lerpLab } from './color.js';
import type { Lab } from './types.js';

export function sampleFields(): { name: string; data: number[][] }[] {
  const ramp: number[][] = [];
  for (let y = 0; y < 24; y++) {
    const row: number[] = [];
    for (let x = 0; x < 96; x++) row.push(x + (y % 2 === 0 ? 2 * Math.sin(x / 6) : 0));
    ramp.push(row);
  }
  const ridges: number[][] = [];
  for (let y = 0; y < 48; y++) {
    const row: number[] = [];
    for (let x = 0; x < 96; x++) {
      row.push(Math.sin(x / 7) * Math.cos(y / 5) + 0.3 * Math.sin((x + 2 * y) / 11));
    }
    ridges.push(row);
  }
  const blobs: number[][] = [];
  for (let y = 0; y < 48; y++) {
    const row: number[] = [];
    for (let x = 0; x < 96; x++) {
      const d1 = Math.hypot(x - 28, y - 20) / 16;
      const d2 = Math.hypot(x - 66, y - 30) / 22;
      row.push(Math.exp(-d1 * d1) - Math.exp(-d2 * d2));
    }
    blobs.push(row);
  }
  return [
    { name: 'ramp', data: ramp },
    { name: 'ridges', data: ridges },
    { name: 'peaks', data: blobs },
  ];
}

export function renderField(
  canvas: HTMLCanvasElement,
  points: Lab[],
  field: number[][],
): void {
  const ctx = canvas.getContext('2d');
  if (!ctx || points.length < 2) return;
  const rows = field.length;
  const cols = field[0].length;
  canvas.width = cols;
  canvas.height = rows;
  let lo = Infinity;
  let hi = -Infinity;
  for (const row of field)
    for (const v of row) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  const span = hi > lo ? hi - lo : 1;
  const img = ctx.createImageData(cols, rows);
  const n = points.length;
  for (let y = 0; y < rows; y++) {
    for (let x = 0; x < cols; x++) {
      const t = hi > lo ? (field[y][x] - lo) / span : 0.5;
      const pos = t * (n - 1);
      const i = Math.min(Math.floor(pos), n - 2);
      const lab = lerpLab(points[i], points[i + 1], pos - i);
      const [r, g, b] = labToSrgb(lab);
      const offset = (y * cols + x) * 4;
      img.data[offset] = Math.round(r * 255);
      img.data[offset + 1] = Math.round(g * 255);
      img.data[offset + 2] = Math.round(b * 255);
      img.data[offset + 3] = 255;
    }
  }
  ctx.putImageData(img, 0, 0);
}

export function parseCsvGrid(text: string): number[][] {
  const rows = text
    .trim()
    .split(/\r?\n/)
    .map((line) => line.split(',').map((cell) => Number(cell.trim())));
  if (rows.some((row) => row.length !== rows[0].length || row.some((v) => !Number.isFinite(v)))) {
    throw new Error('CSV grid must be rectangular and numeric');
  }
  return rows;
}

export class PreviewGallery {
  readonly element: HTMLElement;
  private points: Lab[] = [];
  private custom: { name: string; data: number[][] } | null = null;

  constructor() {
    this.element = document.createElement('div');
    this.element.className = 'gallery';
    const drop = document.createElement('div');
    drop.className = 'gallery-drop';
    drop.textContent = 'drop a CSV grid here to preview your own data';
    drop.addEventListener('dragover', (e) => e.preventDefault());
    drop.addEventListener('drop', async (e) => {
      e.preventDefault();
      const file = e.dataTransfer?.files[0];
      if (!file) return;
      try {
        this.custom = { name: file.name, data: parseCsvGrid(await file.text()) };
        this.render();
      } catch (err) {
        drop.textContent = err instanceof Error ? err.message : String(err);
      }
    });
    this.element.appendChild(drop);
  }

  setPoints(points: Lab[]): void {
    this.points = points;
    this.render();
  }

  private render(): void {
    this.element.querySelectorAll('.gallery-item').forEach((el) => el.remove());
    if (this.points.length < 2) return;
    const fields = [...sampleFields(), ...(this.custom ? [this.custom] : [])];
    for (const field of fields) {
      const item = document.createElement('figure');
      item.className = 'gallery-item';
      const canvas = document.createElement('canvas');
      renderField(canvas, this.points, field.data);
      const caption = document.createElement('figcaption');
      caption.textContent = field.name;
      item.append(canvas, caption);
      this.element.appendChild(item);
    }
  }
}
