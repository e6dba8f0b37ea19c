"""Reference sampling loops in numpy.

Used when the compiled ``_ckernel`` extension is unavailable (or disabled
with ``INTERVALPOW_PURE_PYTHON=1``).  Both backends produce the same
fractions in the same order; power values agree to within libm rounding.
"""

from __future__ import annotations

import numpy as np

_INT_GUARD = 4.0e18


def odd_fractions(targets: np.ndarray, lo: float, hi: float, max_den: int):
    """Closest even- and odd-numerator fractions with odd denominator to each target.

    For every target ``t`` and every odd ``d <= max_den`` the candidates are
    ``(floor(t*d)+j)/d`` for ``j`` in ``-1..2``, so both numerator parities
    appear on each side of ``t``; candidates outside ``[lo, hi]`` are
    discarded.  Returns reduced ``(num, den)`` arrays holding at most two
    fractions per target: the nearest one with even reduced numerator, then
    the nearest one with odd reduced numerator.
    """
    t = np.ascontiguousarray(targets, dtype=np.float64)
    if t.size == 0:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    dens = np.arange(1, max_den + 1, 2, dtype=np.int64)
    scaled = np.floor(t[:, None] * dens[None, :])
    usable = np.abs(scaled) < _INT_GUARD
    base = np.where(usable, scaled, 0.0).astype(np.int64)
    k = np.stack([base - 1, base, base + 1, base + 2], axis=-1)  # (T, D, 4)
    d = np.broadcast_to(dens[None, :, None], k.shape)
    q = k / d
    ok = usable[:, :, None] & (q >= lo) & (q <= hi)
    g = np.gcd(k, d)
    rn, rd = k // g, d // g
    dist = np.where(ok, np.abs(q - t[:, None, None]), np.inf).reshape(len(t), -1)
    rn, rd = rn.reshape(len(t), -1), rd.reshape(len(t), -1)
    parity = (rn & 1).astype(bool)

    nums, dens_out, hits = [], [], []
    rows = np.arange(len(t))
    for odd in (False, True):
        masked = np.where(parity == odd, dist, np.inf)
        pick = np.argmin(masked, axis=1)
        hit = np.isfinite(masked[rows, pick])
        nums.append(np.where(hit, rn[rows, pick], 0))
        dens_out.append(np.where(hit, rd[rows, pick], 0))
        hits.append(hit)
    # interleave per target: even first, then odd, matching the compiled loop
    num = np.stack(nums, axis=1).reshape(-1)
    den = np.stack(dens_out, axis=1).reshape(-1)
    keep = np.stack(hits, axis=1).reshape(-1)
    return num[keep], den[keep]


def power_samples(bases: np.ndarray, exps: np.ndarray, fnum: np.ndarray, fden: np.ndarray):
    """Point values over the sampled grid.

    Nonnegative bases are paired with every exponent in ``exps`` (skipping
    ``0**b`` for ``b < 0``); negative bases are paired only with the odd-
    denominator fractions, giving ``|a|**q`` for even numerators and
    ``-|a|**q`` for odd ones.
    """
    bases = np.asarray(bases, dtype=np.float64)
    exps = np.asarray(exps, dtype=np.float64)
    out_b, out_e, out_v = [], [], []
    with np.errstate(over="ignore", under="ignore"):
        for a in bases:
            if a >= 0.0:
                e = exps[exps >= 0.0] if a == 0.0 else exps
                v = np.power(a, e)
            else:
                e = fnum / fden
                v = np.power(-a, e)
                v = np.where(fnum & 1, -v, v)
            out_b.append(np.full(e.shape, a))
            out_e.append(e)
            out_v.append(v)
    if not out_b:
        empty = np.empty(0, np.float64)
        return empty, empty.copy(), empty.copy()
    return np.concatenate(out_b), np.concatenate(out_e), np.concatenate(out_v)
