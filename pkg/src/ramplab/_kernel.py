"""Compiled inner loop of the annealer.

Scalar re-implementations of the color math plus the per-rung iteration
loop, jitted with numba so a full temperature ladder (hundreds of thousands
of candidate evaluations) runs in seconds. Cost bookkeeping is incremental:
a perturbation of one control point recomputes exactly the adjacent
distances, the simulated color, and the same-luminance pair distances it
touches, so the tracked state always equals a from-scratch evaluation.

The vectorized :mod:`ramplab.colorspace` functions remain the public,
canonical implementations; the test suite pins this module against them.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

from .colorspace import _M_RGB_TO_XYZ, _M_XYZ_TO_RGB, _WHITE

_EPSILON = 216.0 / 24389.0
_KAPPA = 24389.0 / 27.0
_POW25_7 = 25.0**7
_SQRT_2PI = math.sqrt(2.0 * math.pi)

# unpack matrix constants so the jitted scalar code avoids array indexing
(_XR, _XG, _XB), (_YR, _YG, _YB), (_ZR, _ZG, _ZB) = _M_RGB_TO_XYZ
(_RX, _RY, _RZ), (_GX, _GY, _GZ), (_BX, _BY, _BZ) = _M_XYZ_TO_RGB
_WX, _WY, _WZ = _WHITE


@njit(cache=True)
def _lab_to_linear_rgb(L, a, b):
    fy = (L + 16.0) / 116.0
    fx = a / 500.0 + fy
    fz = fy - b / 200.0
    fx3 = fx * fx * fx
    fy3 = fy * fy * fy
    fz3 = fz * fz * fz
    x = (fx3 if fx3 > _EPSILON else (116.0 * fx - 16.0) / _KAPPA) * _WX
    y = (fy3 if fy3 > _EPSILON else (116.0 * fy - 16.0) / _KAPPA) * _WY
    z = (fz3 if fz3 > _EPSILON else (116.0 * fz - 16.0) / _KAPPA) * _WZ
    r = _RX * x + _RY * y + _RZ * z
    g = _GX * x + _GY * y + _GZ * z
    bb = _BX * x + _BY * y + _BZ * z
    return r, g, bb


@njit(cache=True)
def _in_gamut(L, a, b, tol):
    r, g, bb = _lab_to_linear_rgb(L, a, b)
    lo = -tol
    hi = 1.0 + tol
    return lo <= r <= hi and lo <= g <= hi and lo <= bb <= hi


@njit(cache=True)
def _f_fwd(t):
    if t > _EPSILON:
        return t ** (1.0 / 3.0)
    return (_KAPPA * t + 16.0) / 116.0


@njit(cache=True)
def _linear_rgb_to_lab(r, g, b):
    x = (_XR * r + _XG * g + _XB * b) / _WX
    y = (_YR * r + _YG * g + _YB * b) / _WY
    z = (_ZR * r + _ZG * g + _ZB * b) / _WZ
    fx = _f_fwd(x)
    fy = _f_fwd(y)
    fz = _f_fwd(z)
    return 116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)


@njit(cache=True)
def _compand1(v):
    if v < 0.0:
        v = 0.0
    if v <= 0.0031308:
        c = 12.92 * v
    else:
        c = 1.055 * v ** (1.0 / 2.4) - 0.055
    return min(c, 1.0)


@njit(cache=True)
def _uncompand1(c):
    if c <= 0.04045:
        return c / 12.92
    return ((c + 0.055) / 1.055) ** 2.4


@njit(cache=True)
def _simulate(L, a, b, M, use_srgb):
    """Apply a CVD matrix in companded sRGB (or linear RGB) with clamping,
    back to Lab."""
    r, g, bb = _lab_to_linear_rgb(L, a, b)
    if use_srgb:
        r = _compand1(r)
        g = _compand1(g)
        bb = _compand1(bb)
    sr = M[0, 0] * r + M[0, 1] * g + M[0, 2] * bb
    sg = M[1, 0] * r + M[1, 1] * g + M[1, 2] * bb
    sb = M[2, 0] * r + M[2, 1] * g + M[2, 2] * bb
    sr = min(max(sr, 0.0), 1.0)
    sg = min(max(sg, 0.0), 1.0)
    sb = min(max(sb, 0.0), 1.0)
    if use_srgb:
        sr = _uncompand1(sr)
        sg = _uncompand1(sg)
        sb = _uncompand1(sb)
    return _linear_rgb_to_lab(sr, sg, sb)


@njit(cache=True)
def _delta_e_2000(L1, a1, b1, L2, a2, b2):
    C1 = math.hypot(a1, b1)
    C2 = math.hypot(a2, b2)
    C_bar = 0.5 * (C1 + C2)
    C_bar7 = C_bar**7
    G = 0.5 * (1.0 - math.sqrt(C_bar7 / (C_bar7 + _POW25_7)))
    a1p = (1.0 + G) * a1
    a2p = (1.0 + G) * a2
    C1p = math.hypot(a1p, b1)
    C2p = math.hypot(a2p, b2)

    h1p = math.degrees(math.atan2(b1, a1p)) % 360.0
    h2p = math.degrees(math.atan2(b2, a2p)) % 360.0

    dLp = L2 - L1
    dCp = C2p - C1p

    if C1p * C2p == 0.0:
        dhp = 0.0
    else:
        dhp = h2p - h1p
        if dhp > 180.0:
            dhp -= 360.0
        elif dhp < -180.0:
            dhp += 360.0
    dHp = 2.0 * math.sqrt(C1p * C2p) * math.sin(math.radians(dhp) / 2.0)

    L_bar = 0.5 * (L1 + L2)
    Cp_bar = 0.5 * (C1p + C2p)

    h_sum = h1p + h2p
    if C1p * C2p == 0.0:
        h_bar = h_sum
    elif abs(h1p - h2p) <= 180.0:
        h_bar = 0.5 * h_sum
    elif h_sum < 360.0:
        h_bar = 0.5 * (h_sum + 360.0)
    else:
        h_bar = 0.5 * (h_sum - 360.0)

    T = (
        1.0
        - 0.17 * math.cos(math.radians(h_bar - 30.0))
        + 0.24 * math.cos(math.radians(2.0 * h_bar))
        + 0.32 * math.cos(math.radians(3.0 * h_bar + 6.0))
        - 0.20 * math.cos(math.radians(4.0 * h_bar - 63.0))
    )

    L_bar_50 = (L_bar - 50.0) ** 2
    S_L = 1.0 + 0.015 * L_bar_50 / math.sqrt(20.0 + L_bar_50)
    S_C = 1.0 + 0.045 * Cp_bar
    S_H = 1.0 + 0.015 * Cp_bar * T

    d_theta = 30.0 * math.exp(-(((h_bar - 275.0) / 25.0) ** 2))
    Cp_bar7 = Cp_bar**7
    R_C = 2.0 * math.sqrt(Cp_bar7 / (Cp_bar7 + _POW25_7))
    R_T = -math.sin(math.radians(2.0 * d_theta)) * R_C

    tL = dLp / S_L
    tC = dCp / S_C
    tH = dHp / S_H
    return math.sqrt(tL * tL + tC * tC + tH * tH + R_T * tC * tH)


@njit(cache=True)
def _seed(seed):
    np.random.seed(seed)


@njit(cache=True)
def _uniformity_from_adj(adj_de):
    k = adj_de.shape[0]  # n - 1 distances
    mean = 0.0
    for i in range(k):
        mean += adj_de[i]
    mean /= k
    if mean == 0.0:
        return 0.0
    var = 0.0
    for i in range(k):
        d = adj_de[i] - mean
        var += d * d
    var /= k - 1  # the 1/(n-2) divisor over n-1 distances
    return math.sqrt(var) / mean


@njit(cache=True)
def _curvature(points):
    n = points.shape[0]
    acc = 0.0
    for i in range(1, n - 1):
        v1l = points[i, 0] - points[i - 1, 0]
        v1a = points[i, 1] - points[i - 1, 1]
        v1b = points[i, 2] - points[i - 1, 2]
        v2l = points[i + 1, 0] - points[i, 0]
        v2a = points[i + 1, 1] - points[i, 1]
        v2b = points[i + 1, 2] - points[i, 2]
        denom = math.sqrt(v1l * v1l + v1a * v1a + v1b * v1b) * math.sqrt(
            v2l * v2l + v2a * v2a + v2b * v2b
        )
        if denom > 0.0:
            cos_t = (v1l * v2l + v1a * v2a + v1b * v2b) / denom
            acc += 1.0 - cos_t
    return acc / (2.0 * (n - 2))


@njit(cache=True)
def _resampled_curvature(points, rs_idx, rs_alpha, scratch):
    m = rs_idx.shape[0]
    for k in range(m):
        i = rs_idx[k]
        al = rs_alpha[k]
        for c in range(3):
            scratch[k, c] = points[i, c] + al * (points[i + 1, c] - points[i, c])
    return _curvature(scratch)


@njit(cache=True)
def _smoothness(points, rs_idx, rs_alpha, scratch, ws2):
    s = _curvature(points)
    if rs_idx.shape[0] >= 3 and ws2 > 0.0:
        s += ws2 * _resampled_curvature(points, rs_idx, rs_alpha, scratch)
    return s


@njit(cache=True)
def _cvd_from_psi(psi_de, k_ij):
    p = psi_de.shape[0]
    if p == 0:
        return 0.0
    acc = 0.0
    for t in range(p):
        k = k_ij[t]
        if k > 0.0 and psi_de[t] < k:
            acc += 1.0 - psi_de[t] / k
    return acc / p


@njit(cache=True)
def _eval_full(points, adj_de, sim, psi_de, pairs, k_ij, M, use_srgb, rs_idx, rs_alpha, scratch, wu, ws, wc, ws2):
    """From-scratch evaluation; fills the incremental state arrays."""
    n = points.shape[0]
    for i in range(n - 1):
        adj_de[i] = _delta_e_2000(
            points[i, 0], points[i, 1], points[i, 2],
            points[i + 1, 0], points[i + 1, 1], points[i + 1, 2],
        )
    for i in range(n):
        sim[i, 0], sim[i, 1], sim[i, 2] = _simulate(points[i, 0], points[i, 1], points[i, 2], M, use_srgb)
    for t in range(pairs.shape[0]):
        i = pairs[t, 0]
        j = pairs[t, 1]
        psi_de[t] = _delta_e_2000(
            sim[i, 0], sim[i, 1], sim[i, 2], sim[j, 0], sim[j, 1], sim[j, 2]
        )
    u = _uniformity_from_adj(adj_de)
    s = _smoothness(points, rs_idx, rs_alpha, scratch, ws2)
    c = _cvd_from_psi(psi_de, k_ij)
    return u, s, c, wu * u + ws * s + wc * c


@njit(cache=True)
def _random_chroma_in_gamut(L, tol):
    """Uniform rejection sample of (a, b) over [-128, 128]^2 within gamut."""
    while True:
        a = np.random.random() * 256.0 - 128.0
        b = np.random.random() * 256.0 - 128.0
        if _in_gamut(L, a, b, tol):
            return a, b


@njit(cache=True)
def _init_random(points, L_values, tol):
    n = points.shape[0]
    for i in range(n):
        points[i, 0] = L_values[i]
        a, b = _random_chroma_in_gamut(L_values[i], tol)
        points[i, 1] = a
        points[i, 2] = b


@njit(cache=True)
def _anneal_rung(
    points,
    adj_de,
    sim,
    psi_de,
    pairs,
    k_ij,
    pair_ptr,
    pair_lst,
    rs_idx,
    rs_alpha,
    scratch,
    psi_save,
    blk_mu,
    blk_sigma,
    blk_a,
    blk_b,
    M,
    use_srgb,
    wu,
    ws,
    wc,
    ws2,
    T,
    iter_count,
    step_size,
    tol,
    best_points,
    e_cur,
    e_best,
    track_best,
    cancel,
):
    """One temperature rung: ``iter_count`` biased perturbations at T.

    Mutates all state arrays in place; returns the updated current and
    best-ever costs plus the number of iterations actually run (short when
    cancelled).
    """
    n = points.shape[0]
    n_blocks = blk_mu.shape[0]
    done = 0
    for _ in range(iter_count):
        if cancel[0] != 0:
            break
        done += 1

        j = int(np.random.random() * n)
        if j == n:  # random() can return values rounding up at the edge
            j = n - 1

        # preference bias toward shelf colors, Gaussian-weighted by index
        ua = 0.0
        ub = 0.0
        for bidx in range(n_blocks):
            z = (j - blk_mu[bidx]) / blk_sigma[bidx]
            w = math.exp(-0.5 * z * z) / (blk_sigma[bidx] * _SQRT_2PI)
            ua += w * (blk_a[bidx] - points[j, 1])
            ub += w * (blk_b[bidx] - points[j, 2])
        unorm = math.hypot(ua, ub)
        has_bias = unorm >= 1e-12
        if has_bias:
            ua /= unorm
            ub /= unorm

        old_a = points[j, 1]
        old_b = points[j, 2]
        Lj = points[j, 0]

        # blend with a fresh random direction and magnitude until
        # displayable; a boundary point whose bias points out of the gamut
        # can exclude every blended direction, so later attempts drop the
        # bias and shrink the step to let the point slide along the boundary
        new_a = old_a
        new_b = old_b
        scale = 1.0
        for attempt in range(50):
            theta = np.random.random() * 2.0 * math.pi
            ra = math.cos(theta)
            rb = math.sin(theta)
            if has_bias and attempt < 20:
                oa = 0.4 * ra + 0.6 * ua
                ob = 0.4 * rb + 0.6 * ub
                onorm = math.hypot(oa, ob)
                if onorm < 1e-9:
                    oa = ra
                    ob = rb
                else:
                    oa /= onorm
                    ob /= onorm
            else:
                oa = ra
                ob = rb
                scale *= 0.9
            mag = (1.0 - np.random.random()) * step_size * scale
            ca = old_a + mag * oa
            cb = old_b + mag * ob
            if _in_gamut(Lj, ca, cb, tol):
                new_a = ca
                new_b = cb
                break

        points[j, 1] = new_a
        points[j, 2] = new_b

        # refresh exactly the state the move touches, keeping the old values
        old_adj_l = 0.0
        old_adj_r = 0.0
        if j > 0:
            old_adj_l = adj_de[j - 1]
            adj_de[j - 1] = _delta_e_2000(
                points[j - 1, 0], points[j - 1, 1], points[j - 1, 2],
                points[j, 0], points[j, 1], points[j, 2],
            )
        if j < n - 1:
            old_adj_r = adj_de[j]
            adj_de[j] = _delta_e_2000(
                points[j, 0], points[j, 1], points[j, 2],
                points[j + 1, 0], points[j + 1, 1], points[j + 1, 2],
            )
        old_sim_l = sim[j, 0]
        old_sim_a = sim[j, 1]
        old_sim_b = sim[j, 2]
        sim[j, 0], sim[j, 1], sim[j, 2] = _simulate(points[j, 0], points[j, 1], points[j, 2], M, use_srgb)
        for s_local in range(pair_ptr[j], pair_ptr[j + 1]):
            t = pair_lst[s_local]
            psi_save[s_local - pair_ptr[j]] = psi_de[t]
            pi = pairs[t, 0]
            pj = pairs[t, 1]
            psi_de[t] = _delta_e_2000(
                sim[pi, 0], sim[pi, 1], sim[pi, 2], sim[pj, 0], sim[pj, 1], sim[pj, 2]
            )

        u = _uniformity_from_adj(adj_de)
        s = _smoothness(points, rs_idx, rs_alpha, scratch, ws2)
        c = _cvd_from_psi(psi_de, k_ij)
        e_new = wu * u + ws * s + wc * c

        delta = e_new - e_cur
        if delta <= 0.0 or np.random.random() < 1.0 / (1.0 + math.exp(delta / T)):
            e_cur = e_new
            if track_best and e_new < e_best:
                e_best = e_new
                for ii in range(n):
                    best_points[ii, 0] = points[ii, 0]
                    best_points[ii, 1] = points[ii, 1]
                    best_points[ii, 2] = points[ii, 2]
        else:
            points[j, 1] = old_a
            points[j, 2] = old_b
            if j > 0:
                adj_de[j - 1] = old_adj_l
            if j < n - 1:
                adj_de[j] = old_adj_r
            sim[j, 0] = old_sim_l
            sim[j, 1] = old_sim_a
            sim[j, 2] = old_sim_b
            for s_local in range(pair_ptr[j], pair_ptr[j + 1]):
                t = pair_lst[s_local]
                psi_de[t] = psi_save[s_local - pair_ptr[j]]

    return e_cur, e_best, done
