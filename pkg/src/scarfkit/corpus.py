"""Named ideal families, fixed fixtures and seeded random corpora."""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .alexander import DualContext, alexander_dual, is_cogeneric
from .monomials import (
    IrreducibleComponent,
    default_names,
    intersect,
    irreducible_decomposition_oracle,
    minimalize,
    support,
)
from .scarf import is_generic


def _pure(n, s, e):
    return tuple(e if t == s else 0 for t in range(n))


def tree(n, names=None):
    """Products over nonempty ``I`` of ``(prod_{s in I} x_s)^(n - |I| + 1)``."""
    gens = []
    for k in range(1, n + 1):
        for I in itertools.combinations(range(n), k):
            gens.append(tuple(n - k + 1 if s in I else 0 for s in range(n)))
    return minimalize(gens, names=names or default_names(n))


def permutahedron(n, names=None):
    gens = [tuple(p[s] + 1 for s in range(n)) for p in itertools.permutations(range(n))]
    return minimalize(gens, names=names or default_names(n))


def optimal(c, r):
    """Intersection over ``i = 1..r`` of ``<x_1^i, ..., x_{c-1}^i, x_{c-1+i}>`` in ``c - 1 + r`` variables."""
    n = c - 1 + r
    names = tuple(f"x{s + 1}" for s in range(n))
    comps = []
    for i in range(1, r + 1):
        bound = [0] * n
        for s in range(c - 1):
            bound[s] = i
        bound[c - 2 + i] = 1
        comps.append(IrreducibleComponent(tuple(bound)).as_ideal(names))
    return intersect(comps)


def disjoint_pairs(n):
    """``<x_1, y_1> cap ... cap <x_n, y_n>``: uniform supports, far from generic."""
    names = tuple(v for s in range(1, n + 1) for v in (f"x{s}", f"y{s}"))
    comps = []
    for s in range(n):
        bound = [0] * (2 * n)
        bound[2 * s] = bound[2 * s + 1] = 1
        comps.append(IrreducibleComponent(tuple(bound)).as_ideal(names))
    return intersect(comps)


def _from_components(names, bounds):
    return intersect([IrreducibleComponent(tuple(b)).as_ideal(names) for b in bounds])


@dataclass(frozen=True)
class Fixture:
    key: str
    ideal: object
    note: str


def fixtures():
    """Small ideals with known behaviour, keyed by what they illustrate."""
    xyz = ("x", "y", "z")
    xyzw = ("x", "y", "z", "w")
    abcd = ("a", "b", "c", "d")
    return {
        f.key: f
        for f in (
            Fixture(
                "gap-primes",
                minimalize([(1, 0, 1, 0), (0, 1, 0, 1), (3, 2, 0, 0), (2, 3, 0, 0)], names=abcd),
                "generic; <a,b> and <a,b,c,d> associated with nothing in between",
            ),
            Fixture("disjoint-pairs", disjoint_pairs(2), "uniform supports but only two components"),
            Fixture(
                "lattice-initial",
                minimalize(
                    [(4, 0, 0, 0), (3, 0, 2, 0), (2, 3, 0, 0), (1, 2, 1, 0), (0, 4, 0, 0),
                     (0, 3, 2, 0), (0, 0, 3, 0)],
                    names=abcd,
                ),
                "generic, but two generators share c^2",
            ),
            Fixture(
                "three-components",
                _from_components(xyz, [(1, 1, 0), (2, 2, 2), (1, 0, 1)]),
                "cogeneric, not CM, resolution 1,5,5,1",
            ),
            Fixture(
                "pure-not-s2",
                _from_components(xyzw, [(1, 2, 0, 0), (0, 1, 1, 0), (0, 0, 2, 1)]),
                "cogeneric, pure, connected in codim 1, depth 1",
            ),
            Fixture(
                "pure-cm",
                _from_components(xyzw, [(1, 1, 0, 0), (0, 2, 2, 0), (0, 0, 1, 1)]),
                "cogeneric and CM with the same primes as pure-not-s2",
            ),
            Fixture(
                "borel-chain-failure",
                minimalize([(2, 0, 0), (1, 1, 0), (1, 0, 1)], names=xyz),
                "associated primes of codim 1 and 3 only",
            ),
        )
    }


def random_ideal(rng, n, r, max_exp):
    r = min(r, (max_exp + 1) ** n - 1)
    gens = set()
    while len(gens) < r:
        g = tuple(rng.randint(0, max_exp) for _ in range(n))
        if any(g):
            gens.add(g)
    return minimalize(sorted(gens), names=default_names(n))


def uniform_support_ideal(rng, n, r, c, max_exp):
    """``r`` random generators, each involving exactly ``c`` of the ``n`` variables."""
    r = min(r, math.comb(n, c) * max_exp**c)
    gens = set()
    while len(gens) < r:
        supp = rng.sample(range(n), c)
        gens.add(tuple(rng.randint(1, max_exp) if s in supp else 0 for s in range(n)))
    return minimalize(sorted(gens), names=default_names(n))


KINDS = ("random", "generic", "cogeneric", "uniform", "bivariate")


def generate_corpus(kind, seed, count, n_range=(2, 4), r_range=(1, 6), max_exp=4, max_tries=None):
    """Reproducible list of ideals.

    ``kind`` is ``random``, ``generic`` (rejection sampling), ``cogeneric``
    (duals of generic samples with the default bound), ``uniform`` (generic
    with every generator on the same number of variables) or ``bivariate``
    (the same with two variables per generator).
    """
    if kind not in KINDS:
        raise ValueError(f"unknown corpus kind {kind!r}")
    rng = random.Random(seed)
    out = []
    tries = 0
    limit = max_tries or 200 * count
    while len(out) < count:
        tries += 1
        if tries > limit:
            raise RuntimeError(f"rejection sampling gave {len(out)} of {count} after {limit} tries")
        n = rng.randint(*n_range)
        r = rng.randint(*r_range)
        if kind in ("uniform", "bivariate"):
            if kind == "bivariate" and n < 2:
                continue
            c = 2 if kind == "bivariate" else rng.randint(1, n)
            M = uniform_support_ideal(rng, n, r, c, max_exp)
            if len({len(support(g)) for g in M.gens}) != 1:
                continue
        else:
            M = random_ideal(rng, n, r, max_exp)
        if kind == "random":
            out.append(M)
            continue
        if not is_generic(M).is_generic:
            continue
        if kind != "cogeneric":
            out.append(M)
        else:
            out.append(alexander_dual(M, DualContext.default(M)))
    return out


def pure_cogeneric_corpus(seed, count, c=2, n_range=(3, 4), r_range=(2, 4), max_exp=3, max_tries=None):
    """Cogeneric intersections of ``r`` random irreducible components, each on ``c`` variables."""
    rng = random.Random(seed)
    out = []
    limit = max_tries or 200 * count
    for _ in range(limit):
        if len(out) == count:
            return out
        n = rng.randint(*n_range)
        r = rng.randint(*r_range)
        names = default_names(n)
        bounds = set()
        while len(bounds) < r:
            supp = rng.sample(range(n), c)
            bounds.add(tuple(rng.randint(1, max_exp) if s in supp else 0 for s in range(n)))
        M = _from_components(names, sorted(bounds))
        dec = irreducible_decomposition_oracle(M)
        if len(dec) == r and is_cogeneric(M).is_cogeneric:
            out.append(M)
    raise RuntimeError(f"rejection sampling gave {len(out)} of {count} after {limit} tries")
