/**
 * LCh color picker: a lightness slider cuts through the color solid and a
 * chroma-hue slice canvas shows the displayable colors at that lightness.
 * The chosen color is draggable onto the preference shelf.
 */

import { inGamut, labToHex, lchToLab, maxChroma } from './color.js';
import type { Lab } from './types.js';

const SLICE_SIZE = 220;
const CHROMA_MAX = 135;

export class LchPicker {
  readonly element: HTMLElement;
  private lightness = 60;
  private chroma = 50;
  private hue = 30;
  private slice: HTMLCanvasElement;
  private swatch: HTMLElement;
  private onPickHandlers: ((lab: Lab) => void)[] = [];

  constructor() {
    this.element = document.createElement('div');
    this.element.className = 'picker';

    const slider = document.createElement('input');
    slider.type = 'range';
    slider.min = '0';
    slider.max = '100';
    slider.value = String(this.lightness);
    slider.className = 'picker-lightness';
    slider.addEventListener('input', () => {
      this.lightness = Number(slider.value);
      this.renderSlice();
      this.updateSwatch();
    });

    this.slice = document.createElement('canvas');
    this.slice.width = SLICE_SIZE;
    this.slice.height = SLICE_SIZE;
    this.slice.className = 'picker-slice';
    this.slice.addEventListener('pointerdown', (e) => this.pickFromSlice(e));

    this.swatch = document.createElement('div');
    this.swatch.className = 'picker-swatch';
    this.swatch.draggable = true;
    this.swatch.addEventListener('dragstart', (e) => {
      e.dataTransfer?.setData('application/x-lab-color', JSON.stringify(this.current()));
    });

    const label = document.createElement('div');
    label.className = 'picker-label';
    label.textContent = 'drag the swatch onto the shelf';

    this.element.append(slider, this.slice, this.swatch, label);
    this.renderSlice();
    this.updateSwatch();
  }

  current(): Lab {
    return lchToLab([this.lightness, this.chroma, this.hue]);
  }

  onPick(handler: (lab: Lab) => void): void {
    this.onPickHandlers.push(handler);
  }

  /** hue on x, chroma on y (bottom = 0) */
  private pickFromSlice(e: PointerEvent): void {
    const rect = this.slice.getBoundingClientRect();
    const x = (e.clientX - rect.left) / rect.width;
    const y = (e.clientY - rect.top) / rect.height;
    this.hue = x * 360;
    this.chroma = (1 - y) * CHROMA_MAX;
    const cmax = maxChroma(this.lightness, this.hue);
    this.chroma = Math.min(this.chroma, cmax);
    this.updateSwatch();
    const lab = this.current();
    this.onPickHandlers.forEach((h) => h(lab));
  }

  private renderSlice(): void {
    const ctx = this.slice.getContext('2d');
    if (!ctx) return;
    const img = ctx.createImageData(SLICE_SIZE, SLICE_SIZE);
    for (let px = 0; px < SLICE_SIZE; px++) {
      const hue = (px / (SLICE_SIZE - 1)) * 360;
      const cmax = maxChroma(this.lightness, hue);
      for (let py = 0; py < SLICE_SIZE; py++) {
        const chroma = (1 - py / (SLICE_SIZE - 1)) * CHROMA_MAX;
        const offset = (py * SLICE_SIZE + px) * 4;
        if (chroma <= cmax) {
          const lab = lchToLab([this.lightness, chroma, hue]);
          const [r, g, b] = hexToRgbBytes(labToHex(lab));
          img.data[offset] = r;
          img.data[offset + 1] = g;
          img.data[offset + 2] = b;
          img.data[offset + 3] = 255;
        } else {
          img.data[offset + 3] = 0;
        }
      }
    }
    ctx.clearRect(0, 0, SLICE_SIZE, SLICE_SIZE);
    ctx.putImageData(img, 0, 0);
  }

  private updateSwatch(): void {
    const lab = this.current();
    this.swatch.style.background = inGamut(lab) ? labToHex(lab) : '#808080';
    this.swatch.title = `L ${lab[0].toFixed(1)}, a ${lab[1].toFixed(1)}, b ${lab[2].toFixed(1)}`;
  }
}

function hexToRgbBytes(hex: string): [number, number, number] {
  const s = hex.replace('#', '');
  return [parseInt(s.slice(0, 2), 16), parseInt(s.slice(2, 4), 16), parseInt(s.slice(4, 6), 16)];
}
