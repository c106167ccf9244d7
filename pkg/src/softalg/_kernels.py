"""Bitmask kernels for the brute-force way-below oracle.

The oracle walks every non-empty subset of an enumerated slice, so the work
is 2**n subsets times O(n**2) directedness checks.  Elements of the slice
are numbered 0..n-1 and subsets are int64 bitmasks over those numbers.

Two implementations compute the same thing: a numba ``@njit`` loop and a
vectorized numpy path.  ``SOFTALG_BACKEND=numpy`` forces the numpy path;
the default is numba whenever it imports.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is an optional extra
    numba = None

MAX_BITS = 30


def _order_masks(leq: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """up[i] = {k : i <= k}, down[i] = {a : a <= i} as bitmasks."""
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    if leq.shape != (n, n):
        raise ValueError("order matrix must be square")
    if n > MAX_BITS:
        raise ValueError(f"at most {MAX_BITS} elements supported, got {n}")
    weights = np.left_shift(np.int64(1), np.arange(n, dtype=np.int64))
    up = (leq * weights[None, :]).sum(axis=1).astype(np.int64)
    down = (leq * weights[:, None]).sum(axis=0).astype(np.int64)
    return up, down


def _masks_to_matrix(wb: np.ndarray, n: int) -> np.ndarray:
    # wb[b] holds the set of a with a << b; return M[a, b]
    bits = (wb[None, :] >> np.arange(n, dtype=np.int64)[:, None]) & 1
    return bits.astype(bool)


def way_below_numpy(leq: np.ndarray) -> np.ndarray:
    up, down = _order_masks(leq)
    n = up.shape[0]
    full = np.int64((1 << n) - 1)
    xs = np.arange(1, 1 << n, dtype=np.int64)
    member = [((xs >> i) & 1).astype(bool) for i in range(n)]

    directed = np.ones(xs.shape, dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            both = member[i] & member[j]
            directed &= ~both | ((xs & (up[i] & up[j])) != 0)

    ubs = np.full(xs.shape, full, dtype=np.int64)
    dominated = np.zeros(xs.shape, dtype=np.int64)
    for i in range(n):
        ubs = np.where(member[i], ubs & up[i], ubs)
        dominated = np.where(member[i], dominated | down[i], dominated)

    lub = np.full(xs.shape, -1, dtype=np.int64)
    for k in range(n - 1, -1, -1):
        is_least = (((ubs >> k) & 1) == 1) & ((ubs & ~up[k]) == 0)
        lub = np.where(is_least, k, lub)

    keep = directed & (lub >= 0)
    covered = np.where(keep, down[np.clip(lub, 0, None)], 0)
    wb = np.empty(n, dtype=np.int64)
    for b in range(n):
        sel = ((covered >> b) & 1) == 1
        wb[b] = np.bitwise_and.reduce(dominated[sel], initial=full) if sel.any() else full
    return _masks_to_matrix(wb, n)


def _way_below_loop(up, down, n):
    full = (np.int64(1) << n) - 1
    wb = np.full(n, full, dtype=np.int64)
    one = np.int64(1)
    for x in range(1, 1 << n):
        xm = np.int64(x)
        ok = True
        for i in range(n):
            if not (xm >> i) & one:
                continue
            for j in range(i + 1, n):
                if (xm >> j) & one and (xm & up[i] & up[j]) == 0:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        ubs = full
        dominated = np.int64(0)
        for i in range(n):
            if (xm >> i) & one:
                ubs &= up[i]
                dominated |= down[i]
        lub = -1
        for k in range(n):
            if (ubs >> k) & one and (ubs & ~up[k]) == 0:
                lub = k
                break
        if lub < 0:
            continue
        covered = down[lub]
        for b in range(n):
            if (covered >> b) & one:
                wb[b] &= dominated
    return wb


if numba is not None:
    _way_below_jit = numba.njit(cache=True)(_way_below_loop)
else:  # pragma: no cover
    _way_below_jit = None


def way_below_numba(leq: np.ndarray) -> np.ndarray:
    if _way_below_jit is None:  # pragma: no cover
        raise RuntimeError("numba is not installed")
    up, down = _order_masks(leq)
    n = up.shape[0]
    return _masks_to_matrix(_way_below_jit(up, down, n), n)


def way_below_python(leq: np.ndarray) -> np.ndarray:
    """The numba loop run by the interpreter; slow, kept for cross-checks."""
    up, down = _order_masks(leq)
    n = up.shape[0]
    return _masks_to_matrix(_way_below_loop(up, down, n), n)


def _select_backend() -> str:
    wanted = os.environ.get("SOFTALG_BACKEND", "").strip().lower()
    if wanted == "numpy" or numba is None:
        return "numpy"
    if wanted not in ("", "numba"):
        raise ValueError(f"SOFTALG_BACKEND must be 'numba' or 'numpy', got {wanted!r}")
    return "numba"


BACKEND = _select_backend()


def way_below_matrix(leq: np.ndarray) -> np.ndarray:
    """M[a, b] is True iff a is way-below b in the finite poset given by ``leq``.

    Only non-empty directed subsets are considered.
    """
    if BACKEND == "numba":
        return way_below_numba(leq)
    return way_below_numpy(leq)
