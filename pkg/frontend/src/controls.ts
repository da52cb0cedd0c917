/** Sidebar controls: profile, luminance range, colorfulness, quality, CVD,
 * design count, and horizontal flip. */

export interface ControlState {
  profileKind: 'linear' | 'diverging' | 'wave';
  inverted: boolean;
  lMin: number;
  lMax: number;
  colorfulness: number; // omega_s2: 0.25 colorful .. 0.9 restrained
  quality: number; // iteration multiplier
  cvd: string; // 'off' | 'deutan:1' | ...
  count: 1 | 3 | 5;
}

export const DEFAULT_CONTROLS: ControlState = {
  profileKind: 'linear',
  inverted: false,
  lMin: 5,
  lMax: 95,
  colorfulness: 0.25,
  quality: 1.0,
  cvd: 'off',
  count: 1,
};

export interface ControlCallbacks {
  onGenerate(state: ControlState): void;
  onFlip(): void;
  onChange?(state: ControlState): void;
}

export class ControlsPanel {
  readonly element: HTMLElement;
  state: ControlState = { ...DEFAULT_CONTROLS };

  constructor(private callbacks: ControlCallbacks) {
    this.element = document.createElement('div');
    this.element.className = 'controls';

    this.element.append(
      this.select('profile', ['linear', 'diverging', 'wave'], (v) => {
        this.state.profileKind = v as ControlState['profileKind'];
      }),
      this.checkbox('inverted', (v) => (this.state.inverted = v)),
      this.number('L* min', 5, 0, 40, (v) => (this.state.lMin = v)),
      this.number('L* max', 95, 60, 100, (v) => (this.state.lMax = v)),
      this.slider('colorfulness', 0.25, 0, 1, 0.05, (v) => {
        // the slider reads as "more colorful" left-to-right; the weight is inverse
        this.state.colorfulness = v;
      }),
      this.select('quality', ['0.25', '1', '4'], (v) => (this.state.quality = Number(v)), '1'),
      this.select('CVD', ['off', 'deutan:1', 'deutan:0.7', 'protan:1', 'tritan:1'], (v) => {
        this.state.cvd = v;
      }),
      this.select('designs', ['1', '3', '5'], (v) => {
        this.state.count = Number(v) as ControlState['count'];
      }),
    );

    const generate = document.createElement('button');
    generate.className = 'generate-button';
    generate.textContent = 'Generate';
    generate.addEventListener('click', () => this.callbacks.onGenerate({ ...this.state }));

    const flip = document.createElement('button');
    flip.textContent = 'Flip';
    flip.title = 'Reverse the colormap horizontally';
    flip.addEventListener('click', () => this.callbacks.onFlip());

    this.element.append(generate, flip);
  }

  private row(labelText: string, input: HTMLElement): HTMLElement {
    const row = document.createElement('label');
    row.className = 'control-row';
    const span = document.createElement('span');
    span.textContent = labelText;
    row.append(span, input);
    return row;
  }

  private select(
    label: string,
    options: string[],
    onChange: (v: string) => void,
    initial?: string,
  ): HTMLElement {
    const select = document.createElement('select');
    options.forEach((o) => {
      const opt = document.createElement('option');
      opt.value = o;
      opt.textContent = o;
      select.appendChild(opt);
    });
    if (initial) select.value = initial;
    select.addEventListener('change', () => {
      onChange(select.value);
      this.callbacks.onChange?.({ ...this.state });
    });
    return this.row(label, select);
  }

  private checkbox(label: string, onChange: (v: boolean) => void): HTMLElement {
    const box = document.createElement('input');
    box.type = 'checkbox';
    box.addEventListener('change', () => {
      onChange(box.checked);
      this.callbacks.onChange?.({ ...this.state });
    });
    return this.row(label, box);
  }

  private number(
    label: string,
    value: number,
    min: number,
    max: number,
    onChange: (v: number) => void,
  ): HTMLElement {
    const input = document.createElement('input');
    input.type = 'number';
    input.value = String(value);
    input.min = String(min);
    input.max = String(max);
    input.addEventListener('change', () => {
      onChange(Number(input.value));
      this.callbacks.onChange?.({ ...this.state });
    });
    return this.row(label, input);
  }

  private slider(
    label: string,
    value: number,
    min: number,
    max: number,
    step: number,
    onChange: (v: number) => void,
  ): HTMLElement {
    const input = document.createElement('input');
    input.type = 'range';
    input.min = String(min);
    input.max = String(max);
    input.step = String(step);
    input.value = String(value);
    input.addEventListener('change', () => {
      onChange(Number(input.value));
      this.callbacks.onChange?.({ ...this.state });
    });
    return this.row(label, input);
  }
}

/**
 * Reverse a document horizontally. A reversed linear profile is its
 * inverted twin; a diverging profile is symmetric so its flag stays. Wave
 * reversals have no matching profile shape and are refused.
 */
export function canFlip(kind: string | undefined): boolean {
  return kind === 'linear' || kind === 'diverging';
}

export function flipDocument<
  T extends { points: unknown[]; hex: string[]; profile: { kind: string; inverted: boolean } | null },
>(doc: T): T {
  if (doc.profile && !canFlip(doc.profile.kind)) return doc;
  const flipped = structuredClone(doc);
  flipped.points.reverse();
  flipped.hex.reverse();
  if (flipped.profile && flipped.profile.kind === 'linear') {
    flipped.profile.inverted = !flipped.profile.inverted;
  }
  return flipped;
}
