/**
 * Serializes optimization traffic: user edits are debounced, and a new
 * request always cancels the in-flight job first, so at most one job runs
 * at any instant no matter how fast the user drags.
 */

import type { ColormapDoc, GenerateRequest, ProgressEvent, ShelfBlock } from './types.js';

export interface SchedulerApi {
  generate(req: GenerateRequest): Promise<string[]>;
  refine(
    document: ColormapDoc,
    shelf: ShelfBlock[] | null,
    edits: { position: number; lab: number[]; extent?: number }[],
  ): Promise<string>;
  cancel(jobId: string): Promise<unknown>;
  stream(
    jobId: string,
    handlers: {
      onProgress?: (p: ProgressEvent) => void;
      onDone?: (doc: ColormapDoc) => void;
      onCancelled?: (doc: ColormapDoc | null) => void;
      onFailed?: (error: string) => void;
    },
  ): () => void;
}

export interface SchedulerEvents {
  onProgress?: (jobId: string, p: ProgressEvent) => void;
  onResult?: (jobId: string, doc: ColormapDoc) => void;
  onBusy?: (busy: boolean) => void;
  onError?: (message: string) => void;
}

export const DEBOUNCE_MS = 400;

type Submit = () => Promise<string[]>;

export class OptimizationScheduler {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private pending: Submit | null = null;
  private running = new Set<string>();
  private unsubscribes = new Map<string, () => void>();

  constructor(
    private api: SchedulerApi,
    private events: SchedulerEvents = {},
    private debounceMs: number = DEBOUNCE_MS,
  ) {}

  /** Debounced refinement: rapid successive edits collapse into one job. */
  requestRefine(
    document: ColormapDoc,
    shelf: ShelfBlock[] | null,
    edits: { position: number; lab: number[]; extent?: number }[] = [],
  ): void {
    this.schedule(async () => [await this.api.refine(document, shelf, edits)]);
  }

  /** Debounced full generation (e.g. shelf edits with no current design). */
  requestGenerate(req: GenerateRequest): void {
    this.schedule(() => this.api.generate(req));
  }

  /** Immediate generation (explicit button press skips the debounce). */
  generateNow(req: GenerateRequest): void {
    this.pending = () => this.api.generate(req);
    this.flush();
  }

  private schedule(submit: Submit): void {
    this.pending = submit;
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => this.flush(), this.debounceMs);
  }

  private flush(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    const submit = this.pending;
    this.pending = null;
    if (!submit) return;
    void this.launch(submit);
  }

  private async launch(submit: Submit): Promise<void> {
    await this.cancelRunning();
    let ids: string[];
    try {
      ids = await submit();
    } catch (err) {
      this.events.onError?.(err instanceof Error ? err.message : String(err));
      return;
    }
    this.events.onBusy?.(true);
    for (const id of ids) {
      this.running.add(id);
      const unsubscribe = this.api.stream(id, {
        onProgress: (p) => this.events.onProgress?.(id, p),
        onDone: (doc) => {
          this.finish(id);
          this.events.onResult?.(id, doc);
        },
        onCancelled: (doc) => {
          this.finish(id);
          if (doc) this.events.onResult?.(id, doc);
        },
        onFailed: (message) => {
          this.finish(id);
          this.events.onError?.(message);
        },
      });
      this.unsubscribes.set(id, unsubscribe);
    }
  }

  private finish(id: string): void {
    this.running.delete(id);
    this.unsubscribes.get(id)?.();
    this.unsubscribes.delete(id);
    if (this.running.size === 0) this.events.onBusy?.(false);
  }

  private async cancelRunning(): Promise<void> {
    const ids = [...this.running];
    for (const id of ids) {
      try {
        await this.api.cancel(id);
      } catch {
        // job may have finished in the meantime; nothing to do
      }
    }
  }

  get activeJobs(): string[] {
    return [...this.running];
  }

  dispose(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    for (const unsubscribe of this.unsubscribes.values()) unsubscribe();
    this.unsubscribes.clear();
    this.running.clear();
  }
}
