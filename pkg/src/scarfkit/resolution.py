"""Multigraded free complexes, exactness checks and Betti numbers.

Betti tables are always for ``S/M``: ``beta[0, 0] = 1`` and the generators
of ``M`` sit in homological degree 1. Module-``M`` numbers are the shift
``beta_i(M) = beta_{i+1}(S/M)`` exposed by :meth:`BettiTable.module`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import config, kernels
from .errors import CutoffExceeded
from .complexes import homology_from_faces
from .monomials import codim, divides, lcm_of, support
from .scarf import scarf_complex

QUOTIENT = "quotient"
MODULE = "module"


@dataclass(frozen=True)
class BasisElement:
    face: tuple
    degree: tuple


@dataclass(frozen=True)
class Entry:
    """Signed monomial ``coef * x^exponent`` at ``(row, col)`` of a differential."""

    row: int
    col: int
    coef: int
    exponent: tuple


@dataclass(frozen=True)
class MultigradedFreeComplex:
    """``strands[h]`` is the basis of ``F_h``; ``differentials[h - 1]`` holds the
    sparse entries of ``d_h: F_h -> F_{h-1}``.

    ``resolves`` records whether ``F_0`` is ``S`` (a candidate resolution of
    ``S/M``) or the generators of ``M`` (a candidate resolution of ``M``).
    """

    n: int
    strands: tuple
    differentials: tuple
    resolves: str = QUOTIENT

    def ranks(self):
        return tuple(len(s) for s in self.strands)

    def length(self):
        return max((h for h, s in enumerate(self.strands) if s), default=0)


def _complex_from_faces(faces, label, n):
    """Boundary-style complex on a face list: ``d(e_sigma) = sum sign * m_sigma/m_{sigma - i} e_{sigma - i}``."""
    faces = sorted(faces, key=lambda f: (len(f), f))
    top = max(len(f) for f in faces)
    strands = [[] for _ in range(top + 1)]
    index = {}
    for f in faces:
        index[f] = len(strands[len(f)])
        strands[len(f)].append(BasisElement(f, label(f)))
    diffs = []
    for h in range(1, top + 1):
        entries = []
        for col, e in enumerate(strands[h]):
            for j in range(h):
                sub = e.face[:j] + e.face[j + 1 :]
                if sub not in index:
                    continue
                target = strands[h - 1][index[sub]]
                exp = tuple(a - b for a, b in zip(e.degree, target.degree))
                entries.append(Entry(index[sub], col, -1 if j % 2 else 1, exp))
        diffs.append(tuple(entries))
    return MultigradedFreeComplex(n, tuple(tuple(s) for s in strands), tuple(diffs))


def algebraic_scarf(M, delta=None):
    """Algebraic Scarf complex; always minimal, exact iff it resolves ``S/M``."""
    if delta is None:
        delta = scarf_complex(M)
    return _complex_from_faces(delta.faces, delta.label, M.n)


def taylor_complex(M):
    M.require_proper()
    if M.r > config.LIMITS.taylor_max_generators:
        raise CutoffExceeded(f"Taylor complex on {M.r} generators exceeds the cap")
    faces = [f for k in range(M.r + 1) for f in itertools.combinations(range(M.r), k)]
    return _complex_from_faces(faces, lambda f: lcm_of((M.gens[i] for i in f), M.n), M.n)


def augmentation_signs(F):
    """Signs ``eps`` on the basis of ``F_0`` making ``e_j -> eps_j x^deg`` kill ``d_1``.

    Propagated along columns of ``d_1`` with two entries (each gives
    ``eps_p c_p = -eps_q c_q``); elements never reached keep ``+1``. An
    inconsistent system is left as is, so exactness checks fail honestly.
    """
    size = len(F.strands[0])
    eps = [0] * size
    cols = {}
    if len(F.differentials):
        for e in F.differentials[0]:
            cols.setdefault(e.col, []).append(e)
    links = {}
    for entries in cols.values():
        if len(entries) == 2:
            p, q = entries
            links.setdefault(p.row, []).append((q.row, -p.coef * q.coef))
            links.setdefault(q.row, []).append((p.row, -p.coef * q.coef))
    for start in range(size):
        if eps[start]:
            continue
        eps[start] = 1
        stack = [start]
        while stack:
            u = stack.pop()
            for v, rel in links.get(u, ()):
                if not eps[v]:
                    eps[v] = eps[u] * rel
                    stack.append(v)
    return eps


def augment(F):
    """Turn a resolution of ``M`` into one of ``S/M`` by prepending ``S``."""
    if F.resolves == QUOTIENT:
        return F
    zero = (0,) * F.n
    eps = augmentation_signs(F)
    d1 = tuple(Entry(0, col, eps[col], e.degree) for col, e in enumerate(F.strands[0]))
    return MultigradedFreeComplex(
        F.n,
        ((BasisElement((), zero),),) + F.strands,
        (d1,) + F.differentials,
        QUOTIENT,
    )


def is_homogeneous(F):
    for h, entries in enumerate(F.differentials, 1):
        for e in entries:
            src = F.strands[h][e.col].degree
            tgt = F.strands[h - 1][e.row].degree
            if any(x < 0 for x in e.exponent):
                return False
            if tuple(t + x for t, x in zip(tgt, e.exponent)) != src:
                return False
    return True


def is_complex(F):
    """Homogeneous, and ``d_{h-1} d_h = 0`` exactly for every ``h``."""
    if not is_homogeneous(F):
        return False
    for h in range(2, len(F.strands)):
        outer = {}
        for e in F.differentials[h - 2]:
            outer.setdefault(e.col, []).append(e)
        acc = {}
        for e in F.differentials[h - 1]:
            for o in outer.get(e.row, ()):
                key = (o.row, e.col)
                acc[key] = acc.get(key, 0) + o.coef * e.coef
        if any(v != 0 for v in acc.values()):
            return False
    return True


def is_minimal(F):
    """No differential entry is a unit (nonzero scalar with trivial monomial)."""
    return not any(
        e.coef != 0 and not any(e.exponent) for entries in F.differentials for e in entries
    )


def lcm_closure(degrees, n):
    closed = {(0,) * n}
    for d in set(degrees):
        closed |= {lcm_of((c, d)) for c in closed}
    return closed


def _degree_matrix(F, h, keep):
    """Scalar matrix of ``d_h`` restricted to the basis elements flagged in ``keep``."""
    rows = [i for i, k in enumerate(keep[h - 1]) if k]
    cols = [i for i, k in enumerate(keep[h]) if k]
    if not rows or not cols:
        return None
    rpos = {i: p for p, i in enumerate(rows)}
    cpos = {i: p for p, i in enumerate(cols)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for e in F.differentials[h - 1]:
        if e.row in rpos and e.col in cpos:
            mat[rpos[e.row], cpos[e.col]] += e.coef
    return mat


@dataclass(frozen=True)
class ExactnessResult:
    exact: bool
    degree: tuple = None
    homology: tuple = ()

    def __bool__(self):
        return self.exact


def is_exact(F, M, field=kernels.RATIONALS):
    """Whether ``F`` (augmented to ``S/M`` if needed) resolves ``S/M``.

    Checked degree by degree on the lcm closure of the basis degrees: in
    degree ``b`` the complex is the span of basis elements of degree
    dividing ``b``, and its homology must be ``k`` in degree 0 exactly when
    ``x^b`` is outside ``M``.
    """
    F = augment(F)
    if not is_complex(F):
        return ExactnessResult(False)
    degrees = [e.degree for s in F.strands for e in s]
    for b in sorted(lcm_closure(degrees + list(M.gens), M.n), key=lambda d: (sum(d), d)):
        keep = [[divides(e.degree, b) for e in s] for s in F.strands]
        dims = [sum(k) for k in keep]
        ranks = [0] * (len(F.strands) + 1)
        for h in range(1, len(F.strands)):
            mat = _degree_matrix(F, h, keep)
            ranks[h] = 0 if mat is None else kernels.rank(mat, field)
        hom = tuple(dims[h] - ranks[h] - ranks[h + 1] for h in range(len(F.strands)))
        expected = (0 if M.contains(b) else 1,) + (0,) * (len(F.strands) - 1)
        if hom != expected:
            return ExactnessResult(False, b, hom)
    return ExactnessResult(True)


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers of ``S/M`` keyed by ``(i, degree)``."""

    n: int
    entries: dict

    def get(self, i, b):
        return self.entries.get((i, tuple(b)), 0)

    def totals(self):
        top = max((i for i, _ in self.entries), default=0)
        out = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return tuple(out)

    @property
    def proj_dim(self):
        return len(self.totals()) - 1

    def module(self):
        """Betti numbers of ``M`` itself: ``(i, b) -> beta_{i+1, b}(S/M)``."""
        return {(i - 1, b): v for (i, b), v in self.entries.items() if i >= 1}

    def records(self):
        return [
            {"i": i, "degree": list(b), "rank": v}
            for (i, b), v in sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1]))
        ]

    def grid(self):
        """Standard-graded Betti table: row ``j`` counts degree ``i + j`` in column ``i``."""
        tot = self.totals()
        cells = {}
        for (i, b), v in self.entries.items():
            key = (sum(b) - i, i)
            cells[key] = cells.get(key, 0) + v
        rows = sorted({j for j, _ in cells})
        cols = range(len(tot))
        width = max(len(str(v)) for v in tuple(cells.values()) + tot + tuple(cols))
        lab = max(len("total:"), max(len(f"{j}:") for j in rows))

        def line(head, vals):
            return head.rjust(lab) + " " + " ".join(v.rjust(width) for v in vals)

        out = [line("", [str(i) for i in cols]), line("total:", [str(v) for v in tot])]
        for j in rows:
            out.append(line(f"{j}:", [str(cells[(j, i)]) if (j, i) in cells else "." for i in cols]))
        return "\n".join(out)


def lcm_lattice(M):
    """Distinct lcms of generator subsets (including the empty lcm)."""
    if M.r <= config.LIMITS.scarf_max_generators:
        arr = kernels.subset_lcms(M.array())
        return {tuple(int(v) for v in row) for row in np.unique(arr, axis=0)}
    return lcm_closure(M.gens, M.n)


def upper_koszul_faces(M, b):
    """Squarefree ``tau`` inside ``supp(b)`` with ``x^(b - tau)`` in ``M``."""
    supp = sorted(support(b))
    faces = []
    for k in range(len(supp) + 1):
        for tau in itertools.combinations(supp, k):
            c = list(b)
            for s in tau:
                c[s] -= 1
            if M.contains(c):
                faces.append(tau)
    return faces


def betti_oracle(M, field=kernels.RATIONALS):
    """Betti numbers of ``S/M`` from upper Koszul simplicial complexes.

    ``beta_{i,b}(S/M)`` is the rank of ``H~_{i-2}`` of
    ``K^b = {tau : x^(b - tau) in M}``; only lcm-lattice degrees can
    contribute.
    """
    M.require_proper()
    field = kernels.check_field(field)
    entries = {(0, (0,) * M.n): 1}
    for b in sorted(lcm_lattice(M), key=lambda d: (sum(d), d)):
        if not any(b):
            continue
        faces = upper_koszul_faces(M, b)
        if not faces:
            continue
        for j, rank in enumerate(homology_from_faces(faces, field), -1):
            if rank:
                entries[(j + 2, b)] = rank
    return BettiTable(M.n, entries)


def betti_from_complex(F, field=kernels.RATIONALS):
    """Betti numbers of the module resolved by ``F`` (``S/M`` after augmenting).

    ``F`` need not be minimal: tensoring with ``k`` keeps only the unit
    entries between basis elements of equal degree.
    """
    F = augment(F)
    by_degree = {}
    for h, s in enumerate(F.strands):
        for idx, e in enumerate(s):
            by_degree.setdefault(e.degree, {}).setdefault(h, []).append(idx)
    entries = {}
    for b, per_h in by_degree.items():
        top = max(per_h)
        ranks = [0] * (top + 2)
        for h in range(1, top + 1):
            rows = per_h.get(h - 1, [])
            cols = per_h.get(h, [])
            if not rows or not cols:
                continue
            rpos = {i: p for p, i in enumerate(rows)}
            cpos = {i: p for p, i in enumerate(cols)}
            mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
            for e in F.differentials[h - 1]:
                if e.row in rpos and e.col in cpos and not any(e.exponent):
                    mat[rpos[e.row], cpos[e.col]] += e.coef
            ranks[h] = kernels.rank(mat, field)
        for h in range(top + 1):
            v = len(per_h.get(h, [])) - ranks[h] - ranks[h + 1]
            if v:
                entries[(h, b)] = v
    return BettiTable(F.n, entries)


def proj_dim(M, field=kernels.RATIONALS, table=None):
    table = table or betti_oracle(M, field)
    return table.proj_dim


def depth(M, field=kernels.RATIONALS, table=None):
    """Auslander-Buchsbaum: ``depth(S/M) = n - pd(S/M)``."""
    return M.n - proj_dim(M, field, table)


def is_CM(M, field=kernels.RATIONALS, table=None):
    return proj_dim(M, field, table) == codim(M)


def cm_type(M, field=kernels.RATIONALS, table=None):
    """Top total Betti number of ``S/M`` (the type when ``S/M`` is Cohen-Macaulay)."""
    table = table or betti_oracle(M, field)
    return table.totals()[-1]


def strand_betti(F):
    """Betti table read directly off a (presumed minimal) complex's basis."""
    F = augment(F)
    entries = {}
    for h, s in enumerate(F.strands):
        for e in s:
            entries[(h, e.degree)] = entries.get((h, e.degree), 0) + 1
    return BettiTable(F.n, entries)
