"""numba-compiled kernels. Import only when numba is available."""
import numpy as np
from numba import njit

from ._backend import njit_options

_OPTS = njit_options()


@njit(**_OPTS)
def subset_lcms(gens):
    r, n = gens.shape
    out = np.zeros((1 << r, n), dtype=np.int64)
    for k in range(r):
        half = 1 << k
        for mask in range(half):
            for s in range(n):
                v = out[mask, s]
                g = gens[k, s]
                out[half + mask, s] = v if v > g else g
    return out


@njit(**_OPTS)
def subset_label_keys(gens, base):
    r, n = gens.shape
    labels = subset_lcms(gens)
    keys = np.zeros(1 << r, dtype=np.int64)
    for mask in range(1, 1 << r):
        key = 0
        w = 1
        for s in range(n):
            key += labels[mask, s] * w
            w *= base
        keys[mask] = key
    return keys


@njit(**_OPTS)
def _inv_mod(a, p):
    # extended Euclid; a is nonzero mod p
    t, new_t = 0, 1
    r, new_r = p, a
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    if t < 0:
        t += p
    return t


@njit(**_OPTS)
def rank_mod_p(a, p):
    rows, cols = a.shape
    m = np.empty((rows, cols), dtype=np.int64)
    for i in range(rows):
        for j in range(cols):
            v = a[i, j] % p
            m[i, j] = v + p if v < 0 else v
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        piv = -1
        for i in range(rank, rows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(cols):
                tmp = m[rank, j]
                m[rank, j] = m[piv, j]
                m[piv, j] = tmp
        inv = _inv_mod(m[rank, c], p)
        for j in range(c, cols):
            m[rank, j] = (m[rank, j] * inv) % p
        for i in range(rank + 1, rows):
            f = m[i, c]
            if f != 0:
                for j in range(c, cols):
                    m[i, j] = (m[i, j] - f * m[rank, j]) % p
        rank += 1
    return rank


@njit(**_OPTS)
def divisibility_matrix(a, b):
    na, n = a.shape
    nb = b.shape[0]
    out = np.zeros((na, nb), dtype=np.bool_)
    for i in range(na):
        for j in range(nb):
            ok = True
            for s in range(n):
                if a[i, s] > b[j, s]:
                    ok = False
                    break
            out[i, j] = ok
    return out
