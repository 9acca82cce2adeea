"""Hot numeric kernels with optional numba acceleration.

Each kernel is written once as a plain-Python function over numpy arrays.
When numba is importable and the ``CRRIX_NUMBA`` environment variable is
not set to ``0``/``false``/``off``, the module-level names point at
``@njit``-compiled versions; otherwise the interpreted originals are used.
Both paths execute the same statements in the same order, so results are
bit-identical for identical inputs (relied on by the determinism tests).

All randomness is injected by the caller as precomputed uniform draws, so
the kernels themselves are pure array functions.
"""

from __future__ import annotations

import math
import os

import numpy as np

_FALSEY = {"0", "false", "off", "no"}


def numba_requested() -> bool:
    return os.environ.get("CRRIX_NUMBA", "1").strip().lower() not in _FALSEY


def _gibbs_sweep_py(doc_ids, term_ids, z, n_dk, n_kv, n_k, alpha, beta, uniforms):
    """One collapsed-Gibbs sweep over every token of the corpus.

    Tokens are visited in array order (documents sequentially, terms in
    ascending index order within a document). The new topic for a token is
    drawn by inverse-CDF over ascending topic index using the matching
    entry of ``uniforms``. Count arrays are updated in place.
    """
    n_tokens = doc_ids.shape[0]
    K = n_k.shape[0]
    V = n_kv.shape[1]
    vbeta = V * beta
    for i in range(n_tokens):
        d = doc_ids[i]
        w = term_ids[i]
        k_old = z[i]
        n_dk[d, k_old] -= 1
        n_kv[k_old, w] -= 1
        n_k[k_old] -= 1

        total = 0.0
        for k in range(K):
            total += (n_kv[k, w] + beta) / (n_k[k] + vbeta) * (n_dk[d, k] + alpha)
        u = uniforms[i] * total
        acc = 0.0
        k_new = K - 1
        for k in range(K):
            acc += (n_kv[k, w] + beta) / (n_k[k] + vbeta) * (n_dk[d, k] + alpha)
            if u < acc:
                k_new = k
                break

        z[i] = k_new
        n_dk[d, k_new] += 1
        n_kv[k_new, w] += 1
        n_k[k_new] += 1


def _infer_sweep_py(term_ids, z, n_k_doc, phi, alpha, uniforms):
    """One Gibbs sweep over a single held-out document with phi fixed.

    ``n_k_doc`` holds the document's current topic counts and is updated
    in place; ``phi`` is the trained topic-word matrix.
    """
    n_tokens = term_ids.shape[0]
    K = n_k_doc.shape[0]
    for i in range(n_tokens):
        w = term_ids[i]
        k_old = z[i]
        n_k_doc[k_old] -= 1

        total = 0.0
        for k in range(K):
            total += phi[k, w] * (n_k_doc[k] + alpha)
        u = uniforms[i] * total
        acc = 0.0
        k_new = K - 1
        for k in range(K):
            acc += phi[k, w] * (n_k_doc[k] + alpha)
            if u < acc:
                k_new = k
                break

        z[i] = k_new
        n_k_doc[k_new] += 1


def _kde_gauss_at_loop(samples, points, bandwidth, out):
    """Gaussian kernel density estimate at ``points``, written into ``out``.

    Loop form intended for JIT compilation; see ``_kde_gauss_at_numpy``
    for the vectorized fallback (same math, summation order differs).
    """
    n = samples.shape[0]
    m = points.shape[0]
    norm = 1.0 / (n * bandwidth * math.sqrt(2.0 * math.pi))
    for j in range(m):
        x = points[j]
        acc = 0.0
        for i in range(n):
            zval = (x - samples[i]) / bandwidth
            acc += math.exp(-0.5 * zval * zval)
        out[j] = acc * norm


def _kde_gauss_at_numpy(samples, points, bandwidth, out):
    norm = 1.0 / (samples.shape[0] * bandwidth * math.sqrt(2.0 * math.pi))
    for j in range(points.shape[0]):
        z = (points[j] - samples) / bandwidth
        out[j] = np.exp(-0.5 * z * z).sum() * norm


NUMBA_ENABLED = False
_JIT_KERNELS: dict = {}

if numba_requested():
    try:
        from numba import njit
    except ImportError:
        pass
    else:
        _JIT_KERNELS["gibbs_sweep"] = njit(cache=True)(_gibbs_sweep_py)
        _JIT_KERNELS["infer_sweep"] = njit(cache=True)(_infer_sweep_py)
        _JIT_KERNELS["kde_gauss_at"] = njit(cache=True)(_kde_gauss_at_loop)
        NUMBA_ENABLED = True

if NUMBA_ENABLED:
    gibbs_sweep = _JIT_KERNELS["gibbs_sweep"]
    infer_sweep = _JIT_KERNELS["infer_sweep"]
    kde_gauss_at = _JIT_KERNELS["kde_gauss_at"]
else:
    gibbs_sweep = _gibbs_sweep_py
    infer_sweep = _infer_sweep_py
    kde_gauss_at = _kde_gauss_at_numpy

# Uncompiled implementations stay importable for fallback tests and benchmarks.
gibbs_sweep_py = _gibbs_sweep_py
infer_sweep_py = _infer_sweep_py
kde_gauss_at_py = _kde_gauss_at_numpy


def jit_kernel(name: str):
    """Return the compiled kernel, or None when numba is disabled."""
    return _JIT_KERNELS.get(name)
