"""Compiled int64 search kernel for large ordering spaces.

The walk is the same incremental enumeration as the pure-Python engine
(permutations by adjacent transpositions, sign patterns by Gray-code
flips, constant-size weighted-sum updates), compiled with numba on int64
coordinates.  Exactness is preserved by a gate that bounds every
intermediate quantity with arbitrary-precision arithmetic before the
kernel runs: the kernel is only used when no int64 operation can
overflow, including the squared differences inside the quadratic-ring
comparison.  Oversized inputs fall back to the Python engine.
"""

from __future__ import annotations

import numpy as np

from .ring import Scalar

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

_INT63 = 2**63


def _bounds_ok(plan) -> bool:
    ens = plan.ensemble
    k = ens.ring.k or 0
    cmax = 1
    for idx in plan.slots:
        for c in ens.vectors[idx]:
            cmax = max(cmax, abs(c.z0), abs(c.z1))
    basemax = max((max(abs(c.z0), abs(c.z1)) for c in plan.base), default=0)
    sumw = sum(abs(w) for w in plan.weights)
    b = basemax + sumw * cmax
    n0max = ens.dim * b * b * (1 + k)
    n1max = ens.dim * 2 * b * b
    nmax = max(n0max, n1max, 1)
    # cross-comparison squares the difference of two norm components
    if (2 * nmax) ** 2 * max(k, 1) >= _INT63:
        return False
    if 8 * b >= 2**62:
        return False
    return True


if njit is not None:

    @njit(cache=True)
    def _norm_pair(wsum, k):
        n0 = np.int64(0)
        n1 = np.int64(0)
        for d in range(wsum.shape[0] // 2):
            a = wsum[2 * d]
            b = wsum[2 * d + 1]
            n0 += a * a + k * b * b
            n1 += 2 * a * b
        return n0, n1

    @njit(cache=True)
    def _greater(n0, n1, b0, b1, k):
        d0 = n0 - b0
        d1 = n1 - b1
        if d0 == 0 and d1 == 0:
            return False
        if d0 >= 0 and d1 >= 0:
            return True
        if d0 <= 0 and d1 <= 0:
            return False
        if d1 < 0:  # d0 > 0: positive iff d0^2 > k d1^2
            return d0 * d0 > k * d1 * d1
        return k * d1 * d1 > d0 * d0

    @njit(cache=True)
    def _walk(vecs, weights, base, mp, signed, k):
        size = vecs.shape[0]
        comps = vecs.shape[1]
        order = np.arange(size, dtype=np.int64)
        signs = np.ones(size, dtype=np.int64)
        wsum = base.copy()
        for t in range(size):
            w = weights[t]
            for c in range(comps):
                wsum[c] += w * vecs[t, c]
        best0, best1 = _norm_pair(wsum, k)
        border = order.copy()
        bsigns = signs.copy()
        states = np.int64(1)
        vals = np.arange(1, mp + 1, dtype=np.int64)
        dirs = np.full(mp, -1, dtype=np.int64)
        gray_end = (np.int64(1) << size) - 1 if signed else np.int64(0)
        while True:
            if signed and size > 0:
                t = np.int64(0)
                while t < gray_end:
                    t += 1
                    tt = t
                    kpos = 0
                    while tt & 1 == 0:
                        tt >>= 1
                        kpos += 1
                    sg = signs[kpos]
                    row = order[kpos]
                    w2 = 2 * weights[kpos] * sg
                    for c in range(comps):
                        wsum[c] -= w2 * vecs[row, c]
                    signs[kpos] = -sg
                    states += 1
                    n0, n1 = _norm_pair(wsum, k)
                    if _greater(n0, n1, best0, best1, k):
                        best0 = n0
                        best1 = n1
                        for q in range(size):
                            border[q] = order[q]
                            bsigns[q] = signs[q]
            largest = np.int64(0)
            at = -1
            for i in range(mp):
                j = i + dirs[i]
                if 0 <= j < mp and vals[j] < vals[i] and vals[i] > largest:
                    largest = vals[i]
                    at = i
            if at < 0:
                break
            j = at + dirs[at]
            a, b = (at, j) if at < j else (j, at)
            dw = weights[b] - weights[a]
            for c in range(comps):
                wsum[c] += dw * (signs[a] * vecs[order[a], c] - signs[b] * vecs[order[b], c])
            order[a], order[b] = order[b], order[a]
            signs[a], signs[b] = signs[b], signs[a]
            vals[at], vals[j] = vals[j], vals[at]
            dirs[at], dirs[j] = dirs[j], dirs[at]
            for i in range(mp):
                if vals[i] > largest:
                    dirs[i] = -dirs[i]
            states += 1
            n0, n1 = _norm_pair(wsum, k)
            if _greater(n0, n1, best0, best1, k):
                best0 = n0
                best1 = n1
                for q in range(size):
                    border[q] = order[q]
                    bsigns[q] = signs[q]
        return best0, best1, border, bsigns, states


def try_run_plan(plan):
    """Run the plan on the compiled kernel, or None when it cannot apply."""
    if njit is None or not _bounds_ok(plan):
        return None
    ens = plan.ensemble
    k = ens.ring.k or 0
    size = len(plan.slots)
    comps = 2 * ens.dim
    vecs = np.zeros((size, comps), dtype=np.int64)
    for t, idx in enumerate(plan.slots):
        for d, c in enumerate(ens.vectors[idx]):
            vecs[t, 2 * d] = c.z0
            vecs[t, 2 * d + 1] = c.z1
    base = np.zeros(comps, dtype=np.int64)
    for d, c in enumerate(plan.base):
        base[2 * d] = c.z0
        base[2 * d + 1] = c.z1
    weights = np.asarray(plan.weights, dtype=np.int64)
    best0, best1, border, bsigns, states = _walk(
        vecs, weights, base, plan.mp, plan.signed, k
    )
    raw = Scalar(ens.ring, int(best0), int(best1) if ens.ring.k is not None else 0)
    order = [plan.slots[int(s)] for s in border]
    signs = [int(s) for s in bsigns]
    witness = plan.full_order(order, signs)
    return raw, witness, int(states)
