"""CIE Lab color math: sRGB conversions, gamut test, CIEDE2000, interpolation.

Colors are plain float arrays. A Lab color is ``[L, a, b]`` with L in
[0, 100]; an sRGB color is ``[r, g, b]`` with display-referred channels in
[0, 1]. All functions broadcast over leading dimensions, so a colormap is
simply an ``(n, 3)`` array.

Conversions use the D65 white point and 2-degree observer with sRGB
companding per IEC 61966-2-1. The XYZ->RGB matrix is the exact inverse of
the forward matrix so that round trips are stable to machine precision and
gamut membership does not flicker at the white point.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "lab_to_srgb",
    "srgb_to_lab",
    "lab_to_linear_rgb",
    "linear_rgb_to_lab",
    "in_gamut",
    "delta_e_2000",
    "lerp_lab",
    "resample",
    "lab_to_lch",
    "lch_to_lab",
    "GAMUT_TOL",
]

# sRGB -> XYZ (D65, 2 deg), Bruce Lindbloom / IEC 61966-2-1
_M_RGB_TO_XYZ = np.array(
    [
        [0.4124564, 0.3575761, 0.1804375],
        [0.2126729, 0.7151522, 0.0721750],
        [0.0193339, 0.1191920, 0.9503041],
    ]
)
_M_XYZ_TO_RGB = np.linalg.inv(_M_RGB_TO_XYZ)

# Reference white derived from the forward matrix so that (1,1,1) maps to
# L*=100, a*=b*=0 exactly.
_WHITE = _M_RGB_TO_XYZ.sum(axis=1)

# CIE L* constants as exact rationals
_EPSILON = 216.0 / 24389.0
_KAPPA = 24389.0 / 27.0

#: Tolerance on pre-companding linear RGB channels for gamut membership.
GAMUT_TOL = 1e-7


def _as_color_array(c) -> np.ndarray:
    arr = np.asarray(c, dtype=np.float64)
    if arr.shape[-1] != 3:
        raise ValueError(f"expected trailing dimension 3, got shape {arr.shape}")
    return arr


def lab_to_linear_rgb(lab) -> np.ndarray:
    """Lab -> linear (pre-companding) RGB. Values outside [0, 1] mean the
    color is not displayable."""
    lab = _as_color_array(lab)
    L, a, b = lab[..., 0], lab[..., 1], lab[..., 2]
    fy = (L + 16.0) / 116.0
    fx = a / 500.0 + fy
    fz = fy - b / 200.0

    def f_inv(f):
        f3 = f * f * f
        return np.where(f3 > _EPSILON, f3, (116.0 * f - 16.0) / _KAPPA)

    xyz = np.stack([f_inv(fx), f_inv(fy), f_inv(fz)], axis=-1) * _WHITE
    return xyz @ _M_XYZ_TO_RGB.T


def linear_rgb_to_lab(rgb) -> np.ndarray:
    """Linear RGB -> Lab."""
    rgb = _as_color_array(rgb)
    xyz = (rgb @ _M_RGB_TO_XYZ.T) / _WHITE
    f = np.where(xyz > _EPSILON, np.cbrt(xyz), (_KAPPA * xyz + 16.0) / 116.0)
    L = 116.0 * f[..., 1] - 16.0
    a = 500.0 * (f[..., 0] - f[..., 1])
    b = 200.0 * (f[..., 1] - f[..., 2])
    return np.stack([L, a, b], axis=-1)


def _compand(linear: np.ndarray) -> np.ndarray:
    linear = np.clip(linear, 0.0, None)
    return np.where(
        linear <= 0.0031308,
        12.92 * linear,
        1.055 * np.power(linear, 1.0 / 2.4) - 0.055,
    )


def _uncompand(srgb: np.ndarray) -> np.ndarray:
    return np.where(
        srgb <= 0.04045,
        srgb / 12.92,
        np.power((srgb + 0.055) / 1.055, 2.4),
    )


def lab_to_srgb(lab, clip: bool = True) -> np.ndarray:
    """Lab -> companded sRGB in [0, 1].

    Out-of-gamut colors are clamped channel-wise when ``clip`` is set (the
    default); use :func:`in_gamut` to test displayability. Clamping is a
    display convenience, not a gamut mapping.
    """
    rgb = _compand(lab_to_linear_rgb(lab))
    if clip:
        rgb = np.clip(rgb, 0.0, 1.0)
    return rgb


def srgb_to_lab(rgb) -> np.ndarray:
    """Companded sRGB in [0, 1] -> Lab."""
    rgb = _as_color_array(rgb)
    return linear_rgb_to_lab(_uncompand(rgb))


def in_gamut(lab, tol: float = GAMUT_TOL):
    """True where the Lab color maps into the sRGB display gamut.

    Tested on pre-companding linear channels against [-tol, 1+tol]; the
    tolerance absorbs floating-point noise so membership is stable under
    round trips.
    """
    rgb = lab_to_linear_rgb(lab)
    ok = np.all((rgb >= -tol) & (rgb <= 1.0 + tol), axis=-1)
    return bool(ok) if ok.ndim == 0 else ok


def delta_e_2000(lab1, lab2) -> np.ndarray:
    """CIEDE2000 color difference (kL = kC = kH = 1), broadcasting over
    leading dimensions.

    Follows the formulation of Sharma, Wu & Dalal (2005), including the
    hue-average special cases.
    """
    lab1 = _as_color_array(lab1)
    lab2 = _as_color_array(lab2)
    L1, a1, b1 = lab1[..., 0], lab1[..., 1], lab1[..., 2]
    L2, a2, b2 = lab2[..., 0], lab2[..., 1], lab2[..., 2]

    C1 = np.hypot(a1, b1)
    C2 = np.hypot(a2, b2)
    C_bar = 0.5 * (C1 + C2)
    C_bar7 = C_bar**7
    G = 0.5 * (1.0 - np.sqrt(C_bar7 / (C_bar7 + 25.0**7)))
    a1p = (1.0 + G) * a1
    a2p = (1.0 + G) * a2
    C1p = np.hypot(a1p, b1)
    C2p = np.hypot(a2p, b2)

    h1p = np.degrees(np.arctan2(b1, a1p)) % 360.0
    h2p = np.degrees(np.arctan2(b2, a2p)) % 360.0
    # atan2(0, 0) is defined as hue 0
    h1p = np.where((b1 == 0) & (a1p == 0), 0.0, h1p)
    h2p = np.where((b2 == 0) & (a2p == 0), 0.0, h2p)

    dLp = L2 - L1
    dCp = C2p - C1p

    zero_chroma = (C1p * C2p) == 0.0
    dh = h2p - h1p
    dhp = np.where(dh > 180.0, dh - 360.0, np.where(dh < -180.0, dh + 360.0, dh))
    dhp = np.where(zero_chroma, 0.0, dhp)
    dHp = 2.0 * np.sqrt(C1p * C2p) * np.sin(np.radians(dhp) / 2.0)

    L_bar = 0.5 * (L1 + L2)
    Cp_bar = 0.5 * (C1p + C2p)

    h_sum = h1p + h2p
    h_diff_big = np.abs(h1p - h2p) > 180.0
    h_bar = np.where(
        h_diff_big,
        np.where(h_sum < 360.0, (h_sum + 360.0) / 2.0, (h_sum - 360.0) / 2.0),
        h_sum / 2.0,
    )
    h_bar = np.where(zero_chroma, h_sum, h_bar)

    T = (
        1.0
        - 0.17 * np.cos(np.radians(h_bar - 30.0))
        + 0.24 * np.cos(np.radians(2.0 * h_bar))
        + 0.32 * np.cos(np.radians(3.0 * h_bar + 6.0))
        - 0.20 * np.cos(np.radians(4.0 * h_bar - 63.0))
    )

    L_bar_50 = (L_bar - 50.0) ** 2
    S_L = 1.0 + 0.015 * L_bar_50 / np.sqrt(20.0 + L_bar_50)
    S_C = 1.0 + 0.045 * Cp_bar
    S_H = 1.0 + 0.015 * Cp_bar * T

    d_theta = 30.0 * np.exp(-(((h_bar - 275.0) / 25.0) ** 2))
    Cp_bar7 = Cp_bar**7
    R_C = 2.0 * np.sqrt(Cp_bar7 / (Cp_bar7 + 25.0**7))
    R_T = -np.sin(np.radians(2.0 * d_theta)) * R_C

    tL = dLp / S_L
    tC = dCp / S_C
    tH = dHp / S_H
    de = np.sqrt(tL * tL + tC * tC + tH * tH + R_T * tC * tH)
    return float(de) if de.ndim == 0 else de


def lerp_lab(c1, c2, alpha):
    """Component-wise linear interpolation ``c1 + alpha * (c2 - c1)``."""
    c1 = _as_color_array(c1)
    c2 = _as_color_array(c2)
    alpha = np.asarray(alpha, dtype=np.float64)[..., np.newaxis]
    return c1 + alpha * (c2 - c1)


def resample(points, m: int) -> np.ndarray:
    """Resample an (n, 3) Lab control-point sequence to m points.

    Control points sit at equally spaced parameter positions; output colors
    sit at t_k = k/(m-1) and are linearly interpolated between bracketing
    control points. Endpoints are preserved exactly, and ``m == n`` returns
    the input unchanged.
    """
    points = _as_color_array(points)
    if points.ndim != 2:
        raise ValueError("expected an (n, 3) control-point array")
    n = points.shape[0]
    if n < 2:
        raise ValueError("need at least 2 control points")
    if m < 2:
        raise ValueError("target point count must be >= 2")
    if m == n:
        return points.copy()
    k = np.arange(m)
    # multiply before dividing: positions at integer multiples stay exact
    pos = k * (n - 1) / (m - 1)
    idx = np.minimum(pos.astype(np.int64), n - 2)
    alpha = pos - idx
    out = points[idx] + alpha[:, np.newaxis] * (points[idx + 1] - points[idx])
    # alpha == 0 rows are bitwise-exact copies already; the final row sits at
    # alpha == 1 where p + 1*(q - p) can drift an ulp, so pin it
    out[-1] = points[-1]
    return out


def lab_to_lch(lab) -> np.ndarray:
    """Lab -> LCh (chroma >= 0, hue in degrees [0, 360))."""
    lab = _as_color_array(lab)
    L, a, b = lab[..., 0], lab[..., 1], lab[..., 2]
    C = np.hypot(a, b)
    h = np.degrees(np.arctan2(b, a)) % 360.0
    return np.stack([L, C, h], axis=-1)


def lch_to_lab(lch) -> np.ndarray:
    """LCh -> Lab."""
    lch = _as_color_array(lch)
    L, C, h = lch[..., 0], lch[..., 1], lch[..., 2]
    hr = np.radians(h)
    return np.stack([L, C * np.cos(hr), C * np.sin(hr)], axis=-1)
