import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import { DEBOUNCE_MS, OptimizationScheduler, type SchedulerApi } from '../src/scheduler.js';
import type { ColormapDoc } from '../src/types.js';

function makeDoc(): ColormapDoc {
  return {
    format_version: 1,
    profile: { kind: 'linear', inverted: false, l_min: 5, l_max: 95, n: 25 },
    points: [
      [5, 0, 0],
      [95, 0, 0],
    ],
    hex: ['#000000', '#FFFFFF'],
    shelf: [],
    config: {},
    cost: null,
  };
}

interface MockJob {
  id: string;
  handlers: Parameters<SchedulerApi['stream']>[1];
}

class MockApi implements SchedulerApi {
  refineCalls = 0;
  generateCalls = 0;
  cancelled: string[] = [];
  jobs: MockJob[] = [];
  private counter = 0;

  async generate(): Promise<string[]> {
    this.generateCalls += 1;
    return [`job-${this.counter++}`];
  }

  async refine(): Promise<string> {
    this.refineCalls += 1;
    return `job-${this.counter++}`;
  }

  async cancel(jobId: string): Promise<unknown> {
    this.cancelled.push(jobId);
    const job = this.jobs.find((j) => j.id === jobId);
    job?.handlers.onCancelled?.(null);
    return {};
  }

  stream(jobId: string, handlers: MockJob['handlers']): () => void {
    this.jobs.push({ id: jobId, handlers });
    return () => undefined;
  }

  finish(jobId: string, doc: ColormapDoc): void {
    this.jobs.find((j) => j.id === jobId)?.handlers.onDone?.(doc);
  }
}

describe('OptimizationScheduler', () => {
  let api: MockApi;
  let scheduler: OptimizationScheduler;
  let results: string[];

  beforeEach(() => {
    vi.useFakeTimers();
    api = new MockApi();
    results = [];
    scheduler = new OptimizationScheduler(api, {
      onResult: (id) => results.push(id),
    });
  });

  afterEach(() => {
    scheduler.dispose();
    vi.useRealTimers();
  });

  it('issues exactly one refine job after the debounce window', async () => {
    const doc = makeDoc();
    // a drag produces a burst of shelf mutations
    scheduler.requestRefine(doc, [], []);
    scheduler.requestRefine(doc, [], []);
    scheduler.requestRefine(doc, [], []);
    expect(api.refineCalls).toBe(0);

    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS - 1);
    expect(api.refineCalls).toBe(0);

    await vi.advanceTimersByTimeAsync(1);
    expect(api.refineCalls).toBe(1);

    await vi.advanceTimersByTimeAsync(5000);
    expect(api.refineCalls).toBe(1);
  });

  it('later edits within the window supersede earlier ones', async () => {
    const doc = makeDoc();
    scheduler.requestRefine(doc, [{ lab: [50, 1, 1], center: 0.2, extent: 0.1 }], []);
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS / 2);
    scheduler.requestGenerate({ count: 1 });
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    expect(api.refineCalls).toBe(0);
    expect(api.generateCalls).toBe(1);
  });

  it('cancels the in-flight job before submitting the next', async () => {
    const doc = makeDoc();
    scheduler.requestRefine(doc, [], []);
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    expect(scheduler.activeJobs).toHaveLength(1);
    const firstJob = scheduler.activeJobs[0];

    scheduler.requestRefine(doc, [], []);
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    expect(api.cancelled).toContain(firstJob);
    expect(scheduler.activeJobs).toHaveLength(1);
    expect(scheduler.activeJobs[0]).not.toBe(firstJob);
  });

  it('at most one job runs regardless of edit rate', async () => {
    const doc = makeDoc();
    for (let k = 0; k < 12; k++) {
      scheduler.requestRefine(doc, [], []);
      await vi.advanceTimersByTimeAsync(DEBOUNCE_MS + 10);
      expect(scheduler.activeJobs.length).toBeLessThanOrEqual(1);
    }
    expect(api.refineCalls).toBe(12);
    expect(api.cancelled).toHaveLength(11);
  });

  it('delivers results and clears the running set', async () => {
    const doc = makeDoc();
    scheduler.requestRefine(doc, [], []);
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    const id = scheduler.activeJobs[0];
    api.finish(id, doc);
    expect(results).toEqual([id]);
    expect(scheduler.activeJobs).toHaveLength(0);
  });

  it('generateNow skips the debounce', async () => {
    scheduler.generateNow({ count: 1 });
    await vi.advanceTimersByTimeAsync(0);
    expect(api.generateCalls).toBe(1);
  });

  it('surfaces submit failures through onError', async () => {
    const errors: string[] = [];
    const failing = new MockApi();
    failing.refine = async () => {
      throw new Error('boom');
    };
    const s = new OptimizationScheduler(failing, { onError: (m) => errors.push(m) });
    s.requestRefine(makeDoc(), [], []);
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    expect(errors).toEqual(['boom']);
    s.dispose();
  });
});
