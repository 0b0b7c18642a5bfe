"""Numeric kernels behind the combinatorial code.

The backend (numba or numpy) is chosen once at import time from the
``SCARFKIT_BACKEND`` environment variable. Both implementations are always
importable for testing through :data:`IMPLEMENTATIONS`.
"""
import math

import numpy as np

from . import _kernels_numpy
from ._backend import BACKEND, HAS_NUMBA

IMPLEMENTATIONS = {"numpy": _kernels_numpy}
if HAS_NUMBA:
    from . import _kernels_numba

    IMPLEMENTATIONS["numba"] = _kernels_numba

_impl = IMPLEMENTATIONS[BACKEND]

RATIONALS = 0
MAX_FIELD_PRIME = 32749
# largest key radix product that still fits an int64 label key
_KEY_LIMIT = 2**62


def subset_lcms(gens):
    gens = np.ascontiguousarray(gens, dtype=np.int64)
    return _impl.subset_lcms(gens)


def subset_label_keys(gens):
    """Integer key for the lcm label of every subset of the generator rows.

    Returns ``None`` when the mixed-radix key would overflow int64; callers
    then fall back to :func:`subset_lcms`.
    """
    gens = np.ascontiguousarray(gens, dtype=np.int64)
    r, n = gens.shape
    base = int(gens.max(initial=0)) + 1
    if n and base**n >= _KEY_LIMIT:
        return None
    return _impl.subset_label_keys(gens, base)


def divisibility_matrix(a, b):
    a = np.ascontiguousarray(a, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    return _impl.divisibility_matrix(a, b)


def is_probable_prime(n):
    """Deterministic strong-pseudoprime test for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _large_primes():
    p = 2**31 - 1
    while True:
        if is_probable_prime(p):
            yield p
        p -= 2


def rank_mod_p(a, p):
    a = np.ascontiguousarray(a, dtype=np.int64)
    if a.size == 0:
        return 0
    if p > 2**31:
        raise ValueError("modulus too large for int64 elimination")
    return int(_impl.rank_mod_p(a, p))


def _log2_hadamard(a):
    norms_c = np.sqrt((a.astype(np.float64) ** 2).sum(axis=0))
    norms_r = np.sqrt((a.astype(np.float64) ** 2).sum(axis=1))
    bound_c = np.log2(norms_c[norms_c > 0]).sum()
    bound_r = np.log2(norms_r[norms_r > 0]).sum()
    return min(bound_c, bound_r)


def rank_rational(a):
    """Exact rank over the rationals of an integer matrix.

    rank mod p never exceeds the rational rank, and it is attained at some
    prime once the product of the primes tried exceeds the Hadamard bound on
    the minors, so the maximum over enough primes is exact.
    """
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return 0
    full = min(a.shape)
    need_bits = _log2_hadamard(a) + 1.0
    best = 0
    have_bits = 0.0
    for p in _large_primes():
        best = max(best, rank_mod_p(a, p))
        have_bits += math.log2(p)
        if best == full or have_bits > need_bits:
            return best
    raise AssertionError("unreachable")


def rank(a, field=RATIONALS):
    """Rank of an integer matrix over Q (``field == 0``) or GF(field)."""
    if field == RATIONALS:
        return rank_rational(a)
    return rank_mod_p(a, field)


def check_field(field):
    if field == RATIONALS:
        return field
    if not (2 <= field <= MAX_FIELD_PRIME and is_probable_prime(field)):
        raise ValueError(f"field must be 0 (rationals) or a prime <= {MAX_FIELD_PRIME}")
    return field


def parse_field(text):
    """``'q'`` -> rationals, ``'p:<prime>'`` -> GF(prime)."""
    t = text.strip().lower()
    if t in ("q", "qq", "0"):
        return RATIONALS
    if t.startswith("p:"):
        try:
            return check_field(int(t[2:]))
        except ValueError as exc:
            raise ValueError(f"bad field {text!r}: {exc}") from None
    raise ValueError(f"bad field {text!r}; expected 'q' or 'p:<prime>'")


def field_name(field):
    return "q" if field == RATIONALS else f"p:{field}"
