/**
 * Control-point curve editor: projections of the colormap curve onto the
 * A-B, L-A, and L-B planes. Dragging a point produces an edit (scale
 * position plus new Lab color) that the session turns into a refinement —
 * the curve itself is never rewritten client-side.
 */

import { labToHex } from './color.js';
import type { Lab } from './types.js';

export type Projection = 'A-B' | 'L-A' | 'L-B';

export interface CurveEdit {
  position: number; // (index)/(n-1)
  lab: Lab;
}

const SIZE = 220;
const CHROMA_RANGE = 110; // plotted a/b span

interface Axes {
  x: (lab: Lab) => number;
  y: (lab: Lab) => number;
  apply: (lab: Lab, xVal: number, yVal: number) => Lab;
}

function axes(projection: Projection): Axes {
  switch (projection) {
    case 'A-B':
      return {
        x: (lab) => lab[1],
        y: (lab) => lab[2],
        apply: (lab, x, y) => [lab[0], x, y],
      };
    case 'L-A':
      return {
        x: (lab) => lab[1],
        y: (lab) => lab[0],
        apply: (lab, x, _y) => [lab[0], x, lab[2]], // L is pinned by the profile
      };
    case 'L-B':
      return {
        x: (lab) => lab[2],
        y: (lab) => lab[0],
        apply: (lab, x, _y) => [lab[0], lab[1], x],
      };
  }
}

function toCanvas(value: number, axis: 'chroma' | 'lightness'): number {
  if (axis === 'chroma') return ((value + CHROMA_RANGE) / (2 * CHROMA_RANGE)) * SIZE;
  return SIZE - (value / 100) * SIZE;
}

function fromCanvas(px: number, axis: 'chroma' | 'lightness'): number {
  if (axis === 'chroma') return (px / SIZE) * 2 * CHROMA_RANGE - CHROMA_RANGE;
  return ((SIZE - px) / SIZE) * 100;
}

export class CurveEditor {
  readonly element: HTMLElement;
  private canvas: HTMLCanvasElement;
  private projection: Projection = 'A-B';
  private points: Lab[] = [];
  private onEditHandlers: ((edit: CurveEdit) => void)[] = [];

  constructor() {
    this.element = document.createElement('div');
    this.element.className = 'curve-editor';

    const tabs = document.createElement('div');
    tabs.className = 'curve-tabs';
    (['A-B', 'L-A', 'L-B'] as Projection[]).forEach((p) => {
      const btn = document.createElement('button');
      btn.textContent = p;
      btn.addEventListener('click', () => {
        this.projection = p;
        this.render();
      });
      tabs.appendChild(btn);
    });

    this.canvas = document.createElement('canvas');
    this.canvas.width = SIZE;
    this.canvas.height = SIZE;
    this.canvas.className = 'curve-canvas';
    this.canvas.addEventListener('pointerdown', (e) => this.beginDrag(e));

    this.element.append(tabs, this.canvas);
  }

  onEdit(handler: (edit: CurveEdit) => void): void {
    this.onEditHandlers.push(handler);
  }

  setPoints(points: Lab[]): void {
    this.points = points.map((p) => [...p] as Lab);
    this.render();
  }

  private coords(lab: Lab): [number, number] {
    const ax = axes(this.projection);
    const xAxis = this.projection === 'A-B' || this.projection === 'L-A' ? 'chroma' : 'chroma';
    const yAxis = this.projection === 'A-B' ? 'chroma' : 'lightness';
    return [toCanvas(ax.x(lab), xAxis), toCanvas(ax.y(lab), yAxis)];
  }

  private render(): void {
    const ctx = this.canvas.getContext('2d');
    if (!ctx) return;
    ctx.clearRect(0, 0, SIZE, SIZE);
    ctx.strokeStyle = '#666';
    ctx.beginPath();
    this.points.forEach((p, i) => {
      const [x, y] = this.coords(p);
      if (i === 0) ctx.moveTo(x, y);
      else ctx.lineTo(x, y);
    });
    ctx.stroke();
    this.points.forEach((p) => {
      const [x, y] = this.coords(p);
      ctx.fillStyle = labToHex(p);
      ctx.strokeStyle = '#222';
      ctx.beginPath();
      ctx.arc(x, y, 4.5, 0, 2 * Math.PI);
      ctx.fill();
      ctx.stroke();
    });
  }

  private beginDrag(e: PointerEvent): void {
    if (this.points.length === 0) return;
    const rect = this.canvas.getBoundingClientRect();
    const px = ((e.clientX - rect.left) / rect.width) * SIZE;
    const py = ((e.clientY - rect.top) / rect.height) * SIZE;
    let best = 0;
    let bestDist = Infinity;
    this.points.forEach((p, i) => {
      const [x, y] = this.coords(p);
      const d = Math.hypot(x - px, y - py);
      if (d < bestDist) {
        bestDist = d;
        best = i;
      }
    });
    if (bestDist > 16) return;

    const index = best;
    const ax = axes(this.projection);
    const yAxis = this.projection === 'A-B' ? 'chroma' : 'lightness';
    const original = this.points[index];

    const onMove = (ev: PointerEvent) => {
      const mx = ((ev.clientX - rect.left) / rect.width) * SIZE;
      const my = ((ev.clientY - rect.top) / rect.height) * SIZE;
      const xVal = fromCanvas(mx, 'chroma');
      const yVal = fromCanvas(my, yAxis);
      this.points[index] = ax.apply(original, xVal, yVal);
      this.render();
    };
    const onUp = () => {
      window.removeEventListener('pointermove', onMove);
      window.removeEventListener('pointerup', onUp);
      const edit: CurveEdit = {
        position: index / (this.points.length - 1),
        lab: [...this.points[index]] as Lab,
      };
      this.onEditHandlers.forEach((h) => h(edit));
    };
    window.addEventListener('pointermove', onMove);
    window.addEventListener('pointerup', onUp);
  }
}
