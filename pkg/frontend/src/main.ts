/**
 * Studio shell: wires the shelf, ribbon, picker, curve editor, history,
 * controls, and preview gallery to the optimization service. All semantic
 * colormap state lives in server documents; the client only displays them
 * and translates interactions into generate/refine calls.
 */

import { ApiClient } from './api.js';
import { labToHex } from './color.js';
import { ControlsPanel, type ControlState, canFlip, flipDocument } from './controls.js';
import { CurveEditor } from './curve.js';
import { PreviewGallery } from './gallery.js';
import { SessionHistory } from './history.js';
import { LchPicker } from './picker.js';
import { drawColumns, ribbonColumns } from './ribbon.js';
import { OptimizationScheduler } from './scheduler.js';
import { ShelfView } from './shelf.js';
import type { ColormapDoc, Lab, ShelfBlock, SuggestionPalette } from './types.js';

class StudioApp {
  private api = new ApiClient();
  private history = new SessionHistory();
  private currentDoc: ColormapDoc | null = null;
  private scheduler: OptimizationScheduler;

  private shelf: ShelfView;
  private picker = new LchPicker();
  private curve = new CurveEditor();
  private gallery = new PreviewGallery();
  private controls: ControlsPanel;

  private ribbonCanvas = canvasEl('ribbon');
  private cvdCanvas = canvasEl('ribbon cvd-strip');
  private statusEl = el('div', 'status');
  private metricsEl = el('div', 'metrics');
  private historyEl = el('div', 'history');
  private suggestionsEl = el('div', 'suggestions hidden');
  private candidatesEl = el('div', 'candidates');

  constructor(private root: HTMLElement) {
    this.shelf = new ShelfView({ onChange: (blocks) => this.onShelfChange(blocks) });
    this.controls = new ControlsPanel({
      onGenerate: (state) => this.generate(state),
      onFlip: () => this.flip(),
    });
    this.scheduler = new OptimizationScheduler(this.api, {
      onProgress: (_id, p) => {
        this.paintRibbon(p.hex);
        this.status(
          `optimizing… rung ${p.rung}/${p.rung_total}, cost ${p.cost.total.toFixed(4)}`,
        );
      },
      onResult: (_id, doc) => this.adoptResult(doc),
      onBusy: (busy) => {
        if (!busy) this.status('idle');
      },
      onError: (message) => this.status(`error: ${message}`),
    });
    this.layout();
    void this.loadBenchmarks();
  }

  private layout(): void {
    const left = el('div', 'pane pane-left');
    left.append(titled('Color picker', this.picker.element), titled('Controls', this.controls.element));

    const center = el('div', 'pane pane-center');
    const shelfWrap = titled('Preference shelf', this.shelf.element);
    const ribbonWrap = titled('Colormap', this.ribbonCanvas);
    this.ribbonCanvas.addEventListener('mousemove', (e) => this.onRibbonHover(e));
    this.ribbonCanvas.addEventListener('mouseleave', () =>
      this.suggestionsEl.classList.add('hidden'),
    );
    const cvdWrap = titled('CVD simulation', this.cvdCanvas);
    center.append(
      shelfWrap,
      ribbonWrap,
      this.suggestionsEl,
      cvdWrap,
      this.metricsEl,
      this.candidatesEl,
      titled('Curve editor', this.curve.element),
      titled('Previews', this.gallery.element),
    );

    const right = el('div', 'pane pane-right');
    right.append(titled('History', this.historyEl));

    this.root.append(this.statusEl, left, center, right);

    this.curve.onEdit((edit) => {
      if (!this.currentDoc) return;
      this.status('refining from curve edit…');
      this.scheduler.requestRefine(this.currentDoc, null, [
        { position: edit.position, lab: edit.lab },
      ]);
    });
  }

  private generate(state: ControlState): void {
    this.status('generating…');
    this.scheduler.generateNow({
      profile: {
        kind: state.profileKind,
        inverted: state.inverted,
        l_min: state.lMin,
        l_max: state.lMax,
      },
      config: {
        cvd: state.cvd,
        quality: state.quality,
        weights: { omega_s2: state.colorfulness },
      },
      shelf: this.shelf.getBlocks(),
      count: state.count,
    });
  }

  private onShelfChange(blocks: ShelfBlock[]): void {
    if (this.currentDoc) {
      this.status('shelf changed — scheduling refinement…');
      this.scheduler.requestRefine(this.currentDoc, blocks, []);
    } else {
      this.status('shelf changed — scheduling generation…');
      const s = this.controls.state;
      this.scheduler.requestGenerate({
        profile: {
          kind: s.profileKind,
          inverted: s.inverted,
          l_min: s.lMin,
          l_max: s.lMax,
        },
        config: { cvd: s.cvd, quality: s.quality, weights: { omega_s2: s.colorfulness } },
        shelf: blocks,
        count: 1,
      });
    }
  }

  private adoptResult(doc: ColormapDoc): void {
    this.currentDoc = doc;
    this.history.push(doc);
    this.renderHistory();
    this.renderDocument(doc);
    this.status(`done — cost ${doc.cost ? doc.cost.total.toFixed(4) : '?'}`);
  }

  private renderDocument(doc: ColormapDoc): void {
    this.paintRibbon(doc.hex);
    this.shelf.setBlocks(doc.shelf);
    this.curve.setPoints(doc.points);
    this.gallery.setPoints(doc.points);
    void this.refreshEvaluation(doc);
  }

  private async refreshEvaluation(doc: ColormapDoc): Promise<void> {
    const cvd = this.controls.state.cvd === 'off' ? 'deutan:1' : this.controls.state.cvd;
    try {
      const evaluation = await this.api.evaluate(doc, cvd);
      drawColumns(this.cvdCanvas, ribbonColumns(evaluation.simulated_hex));
      const r = evaluation.report;
      this.metricsEl.textContent =
        `uniformity ${r.uniformity.toFixed(3)} · smoothness ${r.smoothness.toFixed(3)} · ` +
        `discriminability ${r.discriminability.toFixed(1)} · retention ${(r.retention * 100).toFixed(1)}%`;
    } catch (err) {
      this.metricsEl.textContent = `evaluation failed: ${err}`;
    }
  }

  private paintRibbon(hex: string[]): void {
    drawColumns(this.ribbonCanvas, ribbonColumns(hex));
  }

  private flip(): void {
    if (!this.currentDoc) return;
    if (this.currentDoc.profile && !canFlip(this.currentDoc.profile.kind)) {
      this.status('flip is not defined for wave profiles');
      return;
    }
    const flipped = flipDocument(this.currentDoc);
    this.adoptResult(flipped);
  }

  private async onRibbonHover(e: MouseEvent): Promise<void> {
    if (!this.currentDoc) return;
    const rect = this.ribbonCanvas.getBoundingClientRect();
    const t = Math.min(Math.max((e.clientX - rect.left) / rect.width, 0), 1);
    try {
      const palette = await this.api.suggestions(this.currentDoc, t);
      this.renderSuggestions(palette);
    } catch {
      // transient hover errors are unimportant
    }
  }

  private renderSuggestions(palette: SuggestionPalette): void {
    this.suggestionsEl.textContent = '';
    this.suggestionsEl.classList.remove('hidden');
    const make = (labs: Lab[], label: string) => {
      const row = el('div', 'suggestion-row');
      const caption = el('span', 'suggestion-label');
      caption.textContent = label;
      row.appendChild(caption);
      labs.forEach((lab) => {
        const chip = el('button', 'suggestion-chip');
        chip.style.background = labToHex(lab);
        chip.addEventListener('click', () => {
          if (!this.currentDoc) return;
          this.status('refining from suggestion…');
          this.scheduler.requestRefine(this.currentDoc, null, [
            { position: palette.position, lab },
          ]);
        });
        row.appendChild(chip);
      });
      return row;
    };
    this.suggestionsEl.append(make(palette.chroma, 'chroma'), make(palette.hue, 'hue'));
  }

  private renderHistory(): void {
    this.historyEl.textContent = '';
    this.history.list().forEach((entry, index) => {
      const item = el('button', 'history-item');
      const thumb = document.createElement('canvas');
      thumb.width = 120;
      thumb.height = 16;
      drawColumns(thumb, ribbonColumns(entry.doc.hex, 120));
      const when = el('span', 'history-time');
      when.textContent = new Date(entry.timestamp).toLocaleTimeString();
      item.append(thumb, when);
      item.addEventListener('click', () => {
        const restored = this.history.restore(index);
        this.currentDoc = restored.doc;
        this.renderDocument(restored.doc);
        this.status('restored from history');
      });
      this.historyEl.appendChild(item);
    });
  }

  private async loadBenchmarks(): Promise<void> {
    try {
      const benchmarks = await this.api.benchmarks();
      this.candidatesEl.textContent = '';
      const caption = el('span', 'suggestion-label');
      caption.textContent = 'benchmarks';
      this.candidatesEl.appendChild(caption);
      benchmarks.forEach((bm) => {
        const chip = document.createElement('canvas');
        chip.className = 'benchmark-chip';
        chip.width = 90;
        chip.height = 14;
        chip.title = bm.name;
        drawColumns(chip, ribbonColumns(bm.hex, 90));
        this.candidatesEl.appendChild(chip);
      });
    } catch {
      // service may be starting; benchmarks are cosmetic here
    }
  }

  private status(text: string): void {
    this.statusEl.textContent = text;
  }
}

function el(tag: string, className: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  return node;
}

function canvasEl(className: string): HTMLCanvasElement {
  const canvas = document.createElement('canvas');
  canvas.className = className;
  canvas.width = 720;
  canvas.height = 42;
  return canvas;
}

function titled(title: string, body: HTMLElement): HTMLElement {
  const wrap = el('section', 'titled');
  const h = document.createElement('h2');
  h.textContent = title;
  wrap.append(h, body);
  return wrap;
}

const root = document.getElementById('app');
if (root) new StudioApp(root);
