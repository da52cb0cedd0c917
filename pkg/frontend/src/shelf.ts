/**
 * The preference shelf: color blocks the user drops, drags, and stretches
 * along a horizontal strip. Geometry is kept as pure functions so the
 * pixel-to-model mapping stays testable and bijective within rounding.
 */

import { labToHex } from './color.js';
import type { Lab, ShelfBlock } from './types.js';

export interface BlockGeometry {
  left: number; // px
  width: number; // px
}

export function blockToGeometry(block: ShelfBlock, shelfWidth: number): BlockGeometry {
  const width = block.extent * shelfWidth;
  return { left: block.center * shelfWidth - width / 2, width };
}

export function geometryToBlock(
  geometry: BlockGeometry,
  shelfWidth: number,
  lab: Lab,
): ShelfBlock {
  const extent = clamp(geometry.width / shelfWidth, 0.02, 1);
  const center = clamp((geometry.left + geometry.width / 2) / shelfWidth, 0, 1);
  return { lab, center, extent };
}

function clamp(v: number, lo: number, hi: number): number {
  return Math.min(Math.max(v, lo), hi);
}

export interface ShelfCallbacks {
  onChange(blocks: ShelfBlock[]): void;
}

const MIN_EXTENT_PX = 14;

export class ShelfView {
  readonly element: HTMLElement;
  private blocks: ShelfBlock[] = [];

  constructor(private callbacks: ShelfCallbacks) {
    this.element = document.createElement('div');
    this.element.className = 'shelf';
    this.element.addEventListener('dragover', (e) => e.preventDefault());
    this.element.addEventListener('drop', (e) => this.onDrop(e));
  }

  setBlocks(blocks: ShelfBlock[]): void {
    this.blocks = blocks.map((b) => ({ ...b, lab: [...b.lab] as Lab }));
    this.render();
  }

  getBlocks(): ShelfBlock[] {
    return this.blocks.map((b) => ({ ...b, lab: [...b.lab] as Lab }));
  }

  /** Drop of a picker color (payload: JSON Lab triple) adds a block. */
  private onDrop(e: DragEvent): void {
    e.preventDefault();
    const payload = e.dataTransfer?.getData('application/x-lab-color');
    if (!payload) return;
    const lab = JSON.parse(payload) as Lab;
    const rect = this.element.getBoundingClientRect();
    const center = clamp((e.clientX - rect.left) / rect.width, 0, 1);
    this.blocks.push({ lab, center, extent: 0.1 });
    this.render();
    this.callbacks.onChange(this.getBlocks());
  }

  private render(): void {
    this.element.textContent = '';
    const width = this.element.clientWidth || 600;
    this.blocks.forEach((block, index) => {
      const geo = blockToGeometry(block, width);
      const el = document.createElement('div');
      el.className = 'shelf-block';
      el.style.left = `${geo.left}px`;
      el.style.width = `${Math.max(geo.width, MIN_EXTENT_PX)}px`;
      el.style.background = labToHex(block.lab);
      el.title = `center ${block.center.toFixed(2)}, extent ${block.extent.toFixed(2)}`;

      const handle = document.createElement('div');
      handle.className = 'shelf-block-handle';
      el.appendChild(handle);

      el.addEventListener('pointerdown', (e) =>
        this.beginDrag(e, index, e.target === handle ? 'stretch' : 'move'),
      );
      this.element.appendChild(el);
    });
  }

  private beginDrag(e: PointerEvent, index: number, mode: 'move' | 'stretch'): void {
    e.preventDefault();
    const rect = this.element.getBoundingClientRect();
    const start = this.blocks[index];
    const startX = e.clientX;
    const startY = e.clientY;
    let mutated = false;
    let removed = false;

    const onMove = (ev: PointerEvent) => {
      const dx = ev.clientX - startX;
      if (mode === 'move') {
        // dragging well clear of the strip discards the block
        if (Math.abs(ev.clientY - startY) > rect.height * 2.5) {
          if (!removed) {
            removed = true;
            this.blocks.splice(index, 1);
            this.render();
          }
          return;
        }
        if (removed) {
          removed = false;
          this.blocks.splice(index, 0, start);
        }
        this.blocks[index] = {
          ...start,
          center: clamp(start.center + dx / rect.width, 0, 1),
        };
      } else {
        const geo = blockToGeometry(start, rect.width);
        this.blocks[index] = geometryToBlock(
          { left: geo.left, width: Math.max(geo.width + dx, MIN_EXTENT_PX) },
          rect.width,
          start.lab,
        );
      }
      mutated = true;
      this.render();
    };

    const onUp = () => {
      window.removeEventListener('pointermove', onMove);
      window.removeEventListener('pointerup', onUp);
      if (mutated || removed) this.callbacks.onChange(this.getBlocks());
    };
    window.addEventListener('pointermove', onMove);
    window.addEventListener('pointerup', onUp);
  }
}
