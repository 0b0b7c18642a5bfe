"""Genericity tests and (extended) Scarf complexes.

Generator numbers in reports and complex vertex labels are 1-based, in
the ideal's canonical generator order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import config, kernels
from .complexes import LabeledComplex, SimplicialComplex
from .errors import ConsistencyError, CutoffExceeded, PreconditionError
from .monomials import (
    IrreducibleComponent,
    IrreducibleDecomposition,
    divides,
    lcm_of,
    minimalize,
    support,
)


@dataclass(frozen=True)
class GenericityReport:
    is_generic: bool
    violations: tuple = ()
    witnesses: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "is_generic": self.is_generic,
            "violations": [list(p) for p in self.violations],
            "witnesses": {f"{i},{j}": l for (i, j), l in sorted(self.witnesses.items())},
        }


def _shares_positive_exponent(a, b):
    return any(x == y and x > 0 for x, y in zip(a, b))


def is_generic(M):
    """Check that every pair sharing a positive exponent has a third-generator witness."""
    M.require_proper()
    gens = M.gens
    violations = []
    witnesses = {}
    for i, j in itertools.combinations(range(M.r), 2):
        if not _shares_positive_exponent(gens[i], gens[j]):
            continue
        m_ij = lcm_of((gens[i], gens[j]))
        supp = support(m_ij)
        for l, g in enumerate(gens):
            if l in (i, j):
                continue
            if divides(g, m_ij) and all(g[s] < m_ij[s] for s in supp):
                witnesses[(i + 1, j + 1)] = l + 1
                break
        else:
            violations.append((i + 1, j + 1))
    return GenericityReport(not violations, tuple(violations), witnesses)


def is_generic_old(M):
    """No two generators share a positive exponent in any variable."""
    M.require_proper()
    return not any(
        _shares_positive_exponent(a, b) for a, b in itertools.combinations(M.gens, 2)
    )


def is_scarf_face(gens, face, n):
    """Label-uniqueness of ``face`` (0-based positions) without enumerating subsets.

    Another subset with the same label exists iff some generator outside
    ``face`` divides the label, or some vertex of ``face`` is redundant.
    """
    face = tuple(face)
    lab = lcm_of((gens[i] for i in face), n)
    members = {j for j, g in enumerate(gens) if divides(g, lab)}
    if members != set(face):
        return False
    for k in range(len(face)):
        rest = face[:k] + face[k + 1 :]
        if lcm_of((gens[i] for i in rest), n) == lab:
            return False
    return True


def _faces_by_bucketing(gens, n):
    arr = np.array(gens, dtype=np.int64).reshape(len(gens), n)
    keys = kernels.subset_label_keys(arr)
    if keys is None:
        labels = kernels.subset_lcms(arr)
        _, inverse, counts = np.unique(labels, axis=0, return_inverse=True, return_counts=True)
    else:
        _, inverse, counts = np.unique(keys, return_inverse=True, return_counts=True)
    masks = np.nonzero(counts[inverse.reshape(-1)] == 1)[0]
    r = len(gens)
    return [tuple(k for k in range(r) if (int(mask) >> k) & 1) for mask in masks]


def _faces_by_extension(gens, n):
    faces = [()]
    frontier = [()]
    while frontier:
        nxt = []
        for f in frontier:
            start = f[-1] + 1 if f else 0
            for j in range(start, len(gens)):
                cand = f + (j,)
                if is_scarf_face(gens, cand, n):
                    nxt.append(cand)
        faces.extend(nxt)
        frontier = nxt
    return faces


def _check_closure(faces):
    present = set(faces)
    for f in faces:
        for k in range(len(f)):
            if f[:k] + f[k + 1 :] not in present:
                raise ConsistencyError(f"Scarf complex not closed under subsets at face {f}")


def scarf_faces(gens, n, generic=None):
    """All faces of the Scarf complex of a generator list, as position tuples.

    Up to ``scarf_max_generators`` generators every subset is bucketed by
    label; beyond that faces are grown one vertex at a time, which is only
    done for generic inputs (``generic`` must then be true).
    """
    gens = [tuple(g) for g in gens]
    if len(gens) <= config.LIMITS.scarf_max_generators:
        faces = _faces_by_bucketing(gens, n)
    else:
        if not generic:
            raise CutoffExceeded(
                f"{len(gens)} generators exceeds the exhaustive cap "
                f"{config.LIMITS.scarf_max_generators}; only generic inputs are supported"
            )
        faces = _faces_by_extension(gens, n)
    faces.sort(key=lambda f: (len(f), f))
    _check_closure(faces)
    return faces


def _labeled(vertices, vertex_labels, faces, n):
    K = SimplicialComplex.from_faces(tuple(vertices), faces)
    return LabeledComplex(K, tuple(vertex_labels), n)


def scarf_complex(M):
    """Scarf complex on vertices ``1..r``."""
    M.require_proper()
    generic = None
    if M.r > config.LIMITS.scarf_max_generators:
        generic = is_generic(M).is_generic
    faces = scarf_faces(M.gens, M.n, generic)
    return _labeled(range(1, M.r + 1), M.gens, faces, M.n)


def extended_ideal(M, D=None):
    """``M + <x_1^D, ..., x_n^D>`` with ``D`` one more than the largest exponent."""
    M.require_proper()
    if D is None:
        D = M.max_exponent() + 1
    elif D <= M.max_exponent():
        raise ValueError(f"D={D} must exceed every generator exponent ({M.max_exponent()})")
    powers = [tuple(D if t == s else 0 for t in range(M.n)) for s in range(M.n)]
    return minimalize(M.gens + tuple(powers), names=M.names), D


def extended_vertices(M, D):
    """Vertex labels and exponent vectors of the extended Scarf complex.

    Generators come first as ``1..r``; a variable marker follows for every
    variable of which ``M`` holds no pure power.
    """
    vertices = list(range(1, M.r + 1))
    labels = list(M.gens)
    for s, name in enumerate(M.names):
        if M.pure_power(s) == 0:
            vertices.append(name)
            labels.append(tuple(D if t == s else 0 for t in range(M.n)))
    return vertices, labels


def extended_scarf_complex(M, D=None):
    M.require_proper()
    _, D = extended_ideal(M, D)
    vertices, labels = extended_vertices(M, D)
    generic = None
    if len(labels) > config.LIMITS.scarf_max_generators:
        generic = is_generic(M).is_generic
    faces = scarf_faces(labels, M.n, generic)
    return _labeled(vertices, labels, faces, M.n)


def stanley_reisner(M):
    """Variable subsets containing the support of no generator."""
    M.require_proper()
    supports = [support(g) for g in M.gens]
    faces = []
    for k in range(M.n + 1):
        for T in itertools.combinations(range(M.n), k):
            Ts = set(T)
            if not any(S <= Ts for S in supports):
                faces.append(T)
    return SimplicialComplex.from_faces(M.names, faces)


def scarf_edge_violations(M, delta=None):
    """Edges of the Scarf complex whose endpoints share a positive exponent."""
    if delta is None:
        delta = scarf_complex(M)
    bad = []
    for f in delta.faces:
        if len(f) == 2 and _shares_positive_exponent(M.gens[f[0]], M.gens[f[1]]):
            bad.append((f[0] + 1, f[1] + 1))
    return bad


def decompose_generic(M):
    """Irreducible components read off the facets of the extended Scarf complex."""
    if not is_generic(M).is_generic:
        raise PreconditionError(
            "decompose_generic needs a generic ideal; use irreducible_decomposition_oracle"
        )
    _, D = extended_ideal(M)
    ext = extended_scarf_complex(M, D)
    bounds = []
    for f in ext.facets:
        a = ext.label(f)
        bounds.append(IrreducibleComponent(tuple(e if e < D else 0 for e in a)))
    dec = IrreducibleDecomposition(tuple(bounds))
    if len(dec) != len(ext.facets):
        raise ConsistencyError("two facets of the extended Scarf complex gave the same component")
    return dec


def nonface_witness(M, sigma):
    """A generator dividing ``m_sigma`` with full-support quotient, for ``sigma`` outside the Scarf complex.

    ``sigma`` holds 1-based generator numbers. The search replays the
    standard argument (grow ``sigma`` to the largest set with the same
    label, drop a redundant vertex, descend to a pair witness) and falls
    back to scanning every generator.
    """
    report = is_generic(M)
    if not report.is_generic:
        raise PreconditionError("the witness lemma needs a generic ideal")
    gens = M.gens
    face = tuple(sorted(i - 1 for i in set(sigma)))
    if any(not 0 <= i < M.r for i in face):
        raise ValueError(f"sigma {sorted(sigma)} names a generator outside 1..{M.r}")
    if is_scarf_face(gens, face, M.n):
        raise PreconditionError(f"sigma {sorted(sigma)} is a face of the Scarf complex")
    lab = lcm_of((gens[i] for i in face), M.n)
    supp = support(lab)

    def good(g):
        return divides(g, lab) and all(g[s] < lab[s] for s in supp)

    big = [j for j, g in enumerate(gens) if divides(g, lab)]
    for i in big:
        rest = [j for j in big if j != i]
        if lcm_of((gens[j] for j in rest), M.n) != lab:
            continue
        if good(gens[i]):
            return gens[i]
        for s in supp:
            if gens[i][s] != lab[s]:
                continue
            for j in rest:
                if gens[j][s] == gens[i][s]:
                    l = report.witnesses.get((min(i, j) + 1, max(i, j) + 1))
                    if l is not None and good(gens[l - 1]):
                        return gens[l - 1]
        break
    for g in gens:
        if good(g):
            return g
    raise ConsistencyError(f"no witness for sigma={sorted(sigma)}; the lemma would be false")
