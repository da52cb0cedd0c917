/**
 * Session history: every finished design is kept (up to a cap) with enough
 * state to restore its shelf and settings exactly.
 */

import type { ColormapDoc, ShelfBlock } from './types.js';

export interface HistoryEntry {
  doc: ColormapDoc;
  shelf: ShelfBlock[];
  config: Record<string, unknown>;
  timestamp: number;
}

export const HISTORY_CAP = 30;

export class SessionHistory {
  private entries: HistoryEntry[] = [];

  constructor(private cap: number = HISTORY_CAP) {}

  push(doc: ColormapDoc): HistoryEntry {
    const entry: HistoryEntry = {
      doc: structuredClone(doc),
      shelf: structuredClone(doc.shelf),
      config: structuredClone(doc.config),
      timestamp: Date.now(),
    };
    this.entries.unshift(entry);
    if (this.entries.length > this.cap) this.entries.length = this.cap;
    return entry;
  }

  list(): HistoryEntry[] {
    return [...this.entries];
  }

  get length(): number {
    return this.entries.length;
  }

  /** Deep copies, so a restored session cannot be mutated in place. */
  restore(index: number): HistoryEntry {
    const entry = this.entries[index];
    if (!entry) throw new Error(`no history entry ${index}`);
    return structuredClone(entry);
  }
}
