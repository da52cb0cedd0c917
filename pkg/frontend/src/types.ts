/** Wire types mirroring the service's JSON schemas. */

export type Lab = [number, number, number];

export interface ShelfBlock {
  lab: Lab;
  center: number; // [0, 1] scale position
  extent: number; // (0, 1] block width, also the 2-sigma influence
}

export interface ProfileSpec {
  kind: 'linear' | 'diverging' | 'wave';
  inverted: boolean;
  l_min: number;
  l_max: number;
  n: number;
}

export interface CostBreakdown {
  uniformity: number;
  smoothness: number;
  cvd: number;
  total: number;
}

export interface ColormapDoc {
  format_version: number;
  profile: ProfileSpec | null;
  points: Lab[];
  hex: string[];
  shelf: ShelfBlock[];
  config: Record<string, unknown>;
  cost: CostBreakdown | null;
}

export interface ProgressEvent {
  temperature: number;
  iterations_done: number;
  rung: number;
  rung_total: number;
  cost: CostBreakdown;
  hex: string[];
}

export interface JobSnapshot {
  id: string;
  state: 'queued' | 'running' | 'done' | 'cancelled' | 'failed';
  seed: number | null;
  progress: ProgressEvent | null;
  result: ColormapDoc | null;
  error: string | null;
}

export interface EvalResponse {
  report: {
    uniformity: number;
    smoothness: number;
    discriminability: number;
    cvd_discriminability: number;
    retention: number;
    n: number;
  };
  hex: string[];
  simulated_hex: string[];
}

export interface SuggestionPalette {
  position: number;
  current: Lab;
  chroma: Lab[];
  hue: Lab[];
}

export interface GenerateRequest {
  profile?: Partial<ProfileSpec>;
  config?: {
    iter_count?: number;
    quality?: number;
    seed?: number | null;
    cvd?: string;
    weights?: { omega_s2?: number };
  };
  shelf?: ShelfBlock[];
  count?: 1 | 3 | 5;
}
