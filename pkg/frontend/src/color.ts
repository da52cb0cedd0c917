/**
 * Display-side color math (Lab/LCh to sRGB and back) for canvas sampling.
 * All semantic colormap state comes from the server; these conversions only
 * paint pixels and position picker handles.
 */

import type { Lab } from './types.js';

const M_RGB_TO_XYZ = [
  [0.4124564, 0.3575761, 0.1804375],
  [0.2126729, 0.7151522, 0.072175],
  [0.0193339, 0.119192, 0.9503041],
];

// exact inverse of the forward matrix (matches the backend convention)
const M_XYZ_TO_RGB = invert3(M_RGB_TO_XYZ);
const WHITE = M_RGB_TO_XYZ.map((row) => row[0] + row[1] + row[2]);
const EPSILON = 216 / 24389;
const KAPPA = 24389 / 27;

function invert3(m: number[][]): number[][] {
  const [a, b, c] = m[0];
  const [d, e, f] = m[1];
  const [g, h, i] = m[2];
  const A = e * i - f * h;
  const B = f * g - d * i;
  const C = d * h - e * g;
  const det = a * A + b * B + c * C;
  return [
    [A / det, (c * h - b * i) / det, (b * f - c * e) / det],
    [B / det, (a * i - c * g) / det, (c * d - a * f) / det],
    [C / det, (b * g - a * h) / det, (a * e - b * d) / det],
  ];
}

export function labToLinearRgb([L, a, b]: Lab): [number, number, number] {
  const fy = (L + 16) / 116;
  const fx = a / 500 + fy;
  const fz = fy - b / 200;
  const finv = (t: number) => {
    const t3 = t * t * t;
    return t3 > EPSILON ? t3 : (116 * t - 16) / KAPPA;
  };
  const x = finv(fx) * WHITE[0];
  const y = finv(fy) * WHITE[1];
  const z = finv(fz) * WHITE[2];
  return [
    M_XYZ_TO_RGB[0][0] * x + M_XYZ_TO_RGB[0][1] * y + M_XYZ_TO_RGB[0][2] * z,
    M_XYZ_TO_RGB[1][0] * x + M_XYZ_TO_RGB[1][1] * y + M_XYZ_TO_RGB[1][2] * z,
    M_XYZ_TO_RGB[2][0] * x + M_XYZ_TO_RGB[2][1] * y + M_XYZ_TO_RGB[2][2] * z,
  ];
}

const compand = (v: number) =>
  v <= 0.0031308 ? 12.92 * Math.max(v, 0) : 1.055 * Math.pow(v, 1 / 2.4) - 0.055;
const uncompand = (v: number) => (v <= 0.04045 ? v / 12.92 : Math.pow((v + 0.055) / 1.055, 2.4));

export function inGamut(lab: Lab, tol = 1e-7): boolean {
  const rgb = labToLinearRgb(lab);
  return rgb.every((v) => v >= -tol && v <= 1 + tol);
}

export function labToSrgb(lab: Lab): [number, number, number] {
  return labToLinearRgb(lab).map((v) => Math.min(Math.max(compand(Math.max(v, 0)), 0), 1)) as [
    number,
    number,
    number,
  ];
}

export function srgbToLab([r, g, b]: [number, number, number]): Lab {
  const lr = uncompand(r);
  const lg = uncompand(g);
  const lb = uncompand(b);
  const x =
    (M_RGB_TO_XYZ[0][0] * lr + M_RGB_TO_XYZ[0][1] * lg + M_RGB_TO_XYZ[0][2] * lb) / WHITE[0];
  const y =
    (M_RGB_TO_XYZ[1][0] * lr + M_RGB_TO_XYZ[1][1] * lg + M_RGB_TO_XYZ[1][2] * lb) / WHITE[1];
  const z =
    (M_RGB_TO_XYZ[2][0] * lr + M_RGB_TO_XYZ[2][1] * lg + M_RGB_TO_XYZ[2][2] * lb) / WHITE[2];
  const f = (t: number) => (t > EPSILON ? Math.cbrt(t) : (KAPPA * t + 16) / 116);
  const fx = f(x);
  const fy = f(y);
  const fz = f(z);
  return [116 * fy - 16, 500 * (fx - fy), 200 * (fy - fz)];
}

export function labToHex(lab: Lab): string {
  const [r, g, b] = labToSrgb(lab);
  const q = (v: number) =>
    Math.round(v * 255)
      .toString(16)
      .padStart(2, '0')
      .toUpperCase();
  return `#${q(r)}${q(g)}${q(b)}`;
}

export function hexToSrgb(hex: string): [number, number, number] {
  const s = hex.replace('#', '');
  return [
    parseInt(s.slice(0, 2), 16) / 255,
    parseInt(s.slice(2, 4), 16) / 255,
    parseInt(s.slice(4, 6), 16) / 255,
  ];
}

export function hexToLab(hex: string): Lab {
  return srgbToLab(hexToSrgb(hex));
}

export function labToLch([L, a, b]: Lab): [number, number, number] {
  const C = Math.hypot(a, b);
  let h = (Math.atan2(b, a) * 180) / Math.PI;
  if (h < 0) h += 360;
  return [L, C, h];
}

export function lchToLab([L, C, h]: [number, number, number]): Lab {
  const hr = (h * Math.PI) / 180;
  return [L, C * Math.cos(hr), C * Math.sin(hr)];
}

/** Largest displayable chroma at (L, h), for picker slices. */
export function maxChroma(L: number, h: number, upper = 180): number {
  if (!inGamut(lchToLab([L, 0, h]))) return 0;
  let lo = 0;
  let hi = upper;
  for (let k = 0; k < 30; k++) {
    const mid = (lo + hi) / 2;
    if (inGamut(lchToLab([L, mid, h]))) lo = mid;
    else hi = mid;
  }
  return lo;
}

export function lerpLab(a: Lab, b: Lab, t: number): Lab {
  return [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2])];
}
