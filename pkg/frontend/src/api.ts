/** Thin typed client over the optimization service. */

import type {
  ColormapDoc,
  EvalResponse,
  GenerateRequest,
  JobSnapshot,
  ProgressEvent,
  ShelfBlock,
  SuggestionPalette,
} from './types.js';

export interface JobStreamHandlers {
  onProgress?: (p: ProgressEvent) => void;
  onDone?: (doc: ColormapDoc) => void;
  onCancelled?: (doc: ColormapDoc | null) => void;
  onFailed?: (error: string) => void;
}

export class ApiClient {
  constructor(private base: string = '') {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const resp = await fetch(this.base + path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    });
    if (!resp.ok) {
      const detail = await resp.text();
      throw new Error(`${path} failed (${resp.status}): ${detail}`);
    }
    return resp.json() as Promise<T>;
  }

  async generate(req: GenerateRequest): Promise<string[]> {
    const data = await this.post<{ jobs: string[] }>('/api/generate', req);
    return data.jobs;
  }

  async refine(
    document: ColormapDoc,
    shelf: ShelfBlock[] | null,
    edits: { position: number; lab: number[]; extent?: number }[] = [],
  ): Promise<string> {
    const data = await this.post<{ jobs: string[] }>('/api/refine', {
      document,
      shelf,
      edits,
    });
    return data.jobs[0];
  }

  async cancel(jobId: string): Promise<JobSnapshot> {
    return this.post<JobSnapshot>(`/api/jobs/${jobId}/cancel`, {});
  }

  async job(jobId: string): Promise<JobSnapshot> {
    const resp = await fetch(`${this.base}/api/jobs/${jobId}`);
    if (!resp.ok) throw new Error(`job ${jobId} not found`);
    return resp.json() as Promise<JobSnapshot>;
  }

  async evaluate(document: ColormapDoc, cvd: string): Promise<EvalResponse> {
    return this.post<EvalResponse>('/api/evaluate', { document, cvd });
  }

  async suggestions(document: ColormapDoc, t: number): Promise<SuggestionPalette> {
    const doc = encodeURIComponent(JSON.stringify(document));
    const resp = await fetch(`${this.base}/api/suggestions?doc=${doc}&t=${t}`);
    if (!resp.ok) throw new Error(`suggestions failed (${resp.status})`);
    return resp.json() as Promise<SuggestionPalette>;
  }

  async benchmarks(): Promise<{ name: string; family: string; hex: string[] }[]> {
    const resp = await fetch(`${this.base}/api/benchmarks`);
    const data = (await resp.json()) as { benchmarks: { name: string; family: string; hex: string[] }[] };
    return data.benchmarks;
  }

  /**
   * Subscribe to a job's server-sent events. Returns an unsubscribe
   * function; the stream closes itself on a terminal event.
   */
  stream(jobId: string, handlers: JobStreamHandlers): () => void {
    const source = new EventSource(`${this.base}/api/jobs/${jobId}/events`);
    source.addEventListener('progress', (e) =>
      handlers.onProgress?.(JSON.parse((e as MessageEvent).data)),
    );
    source.addEventListener('done', (e) => {
      handlers.onDone?.(JSON.parse((e as MessageEvent).data).result);
      source.close();
    });
    source.addEventListener('cancelled', (e) => {
      const data = JSON.parse((e as MessageEvent).data);
      handlers.onCancelled?.(data.result ?? null);
      source.close();
    });
    source.addEventListener('failed', (e) => {
      handlers.onFailed?.(JSON.parse((e as MessageEvent).data).error ?? 'optimization failed');
      source.close();
    });
    return () => source.close();
  }
}
