"""Pure-numpy reference versions of the hot kernels.

Every function here has a numba twin in ``_kernels_numba`` with the same
signature; the two are cross-checked in the test suite.
"""
import numpy as np


def subset_lcms(gens):
    """Coordinatewise max over every subset of the rows of ``gens``.

    Row ``mask`` of the result is the lcm of the generators whose bits are
    set in ``mask``; row 0 is the zero vector.
    """
    r, n = gens.shape
    out = np.zeros((1 << r, n), dtype=np.int64)
    for k in range(r):
        half = 1 << k
        np.maximum(out[:half], gens[k], out=out[half : 2 * half])
    return out


def subset_label_keys(gens, base):
    labels = subset_lcms(gens)
    weights = base ** np.arange(gens.shape[1], dtype=np.int64)
    return labels @ weights


def rank_mod_p(a, p):
    p = int(p)
    m = np.array(a, dtype=np.int64) % p
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(m[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        inv = pow(int(m[rank, c]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        below = m[rank + 1 :, c].copy()
        hit = np.nonzero(below)[0]
        if hit.size:
            idx = rank + 1 + hit
            m[idx] = (m[idx] - np.outer(below[hit], m[rank])) % p
        rank += 1
    return rank


def divisibility_matrix(a, b):
    """``out[i, j]`` is True iff row ``a[i]`` divides row ``b[j]``."""
    return np.all(a[:, None, :] <= b[None, :, :], axis=2)
