"""Finite simplicial complexes with labelled vertices.

Faces are stored as sorted tuples of vertex *positions* (indices into
``vertices``); the vertex labels themselves are generator numbers ``1..r``
or variable names. Position order is the global orientation used for every
sign in a boundary or differential.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import config, kernels
from .errors import CutoffExceeded, PreconditionError
from .monomials import lcm_of, support


def _maximal(faces):
    faces = sorted({tuple(sorted(f)) for f in faces}, key=lambda f: (-len(f), f))
    kept = []
    for f in faces:
        fs = set(f)
        if not any(fs <= set(g) for g in kept):
            kept.append(f)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex given by its facets. ``facets == ()`` is the void complex;
    ``facets == ((),)`` is the complex ``{emptyset}``."""

    vertices: tuple
    facets: tuple

    def __post_init__(self):
        nv = len(self.vertices)
        if len(set(self.vertices)) != nv:
            raise ValueError("vertex labels must be distinct")
        for f in self.facets:
            if tuple(sorted(set(f))) != tuple(f) or any(not 0 <= v < nv for v in f):
                raise ValueError(f"bad facet {f}")
        if _maximal(self.facets) != tuple(self.facets) and self.facets != ((),):
            raise ValueError("facets must form an antichain in canonical order")

    @classmethod
    def from_faces(cls, vertices, faces):
        faces = list(faces)
        if not faces:
            return cls(tuple(vertices), ())
        return cls(tuple(vertices), _maximal(faces))

    @classmethod
    def from_label_facets(cls, vertices, facets):
        pos = {v: i for i, v in enumerate(vertices)}
        return cls.from_faces(vertices, [[pos[v] for v in f] for f in facets])

    @cached_property
    def faces(self):
        """All faces, sorted by size then lexicographically."""
        out = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(itertools.combinations(f, k))
        return tuple(sorted(out, key=lambda f: (len(f), f)))

    @property
    def dim(self):
        if not self.facets:
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def f_vector(self):
        """``(f_-1, f_0, ..., f_dim)``."""
        counts = [0] * (self.dim + 2)
        for f in self.faces:
            counts[len(f)] += 1
        return tuple(counts)

    def is_pure(self):
        return len({len(f) for f in self.facets}) <= 1

    def unused_vertices(self):
        used = {v for f in self.facets for v in f}
        return tuple(self.vertices[i] for i in range(len(self.vertices)) if i not in used)

    def label_set(self, face):
        return frozenset(self.vertices[i] for i in face)

    def face_sets(self):
        """Faces as frozensets of vertex labels (for comparing complexes)."""
        return {self.label_set(f) for f in self.faces}

    def facet_sets(self):
        return {self.label_set(f) for f in self.facets}

    def restriction(self, W):
        """Faces contained in the vertex-label set ``W``."""
        W = set(W)
        keep = [i for i, v in enumerate(self.vertices) if v in W]
        remap = {old: new for new, old in enumerate(keep)}
        faces = [tuple(remap[i] for i in f) for f in self.faces if all(i in remap for i in f)]
        return SimplicialComplex.from_faces(tuple(self.vertices[i] for i in keep), faces)

    def contains_face(self, labels):
        return frozenset(labels) in self.face_sets()


def boundary_matrix(faces_k, faces_km1):
    """Simplicial boundary from ``k``-faces to ``(k-1)``-faces with signs ``(-1)^j``."""
    index = {f: i for i, f in enumerate(faces_km1)}
    d = np.zeros((len(faces_km1), len(faces_k)), dtype=np.int64)
    for col, f in enumerate(faces_k):
        for j in range(len(f)):
            d[index[f[:j] + f[j + 1 :]], col] = -1 if j % 2 else 1
    return d


def homology_from_faces(faces, field=kernels.RATIONALS):
    """Reduced homology ranks ``(H~_-1, ..., H~_top)`` of a face list."""
    faces = list(faces)
    if not faces:
        raise ValueError("the void complex has no reduced homology in this convention")
    top = max(len(f) for f in faces)
    by_size = [[] for _ in range(top + 1)]
    for f in faces:
        by_size[len(f)].append(tuple(f))
    for group in by_size:
        group.sort()
    cap = config.LIMITS.homology_max_columns
    ranks = [0] * (top + 2)  # ranks[k] = rank of boundary from size-k faces to size-(k-1)
    for k in range(1, top + 1):
        if len(by_size[k]) > cap:
            raise CutoffExceeded(f"boundary matrix with {len(by_size[k])} columns exceeds cap {cap}")
        if by_size[k] and by_size[k - 1]:
            ranks[k] = kernels.rank(boundary_matrix(by_size[k], by_size[k - 1]), field)
    return tuple(len(by_size[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1))


def reduced_homology_ranks(K, field=kernels.RATIONALS):
    return homology_from_faces(K.faces, field)


@dataclass(frozen=True)
class ShellingResult:
    shellable: bool
    order: tuple = ()


def is_shellable(K, max_facets=None, first=None):
    """Exhaustive pure-shelling search with memoized dead prefixes.

    With ``first`` (a collection of facets) the shelling must list exactly
    those facets before any other. Raises :class:`PreconditionError` for non-pure input and
    :class:`CutoffExceeded` above the facet cap (default from config).
    """
    if not K.facets:
        raise PreconditionError("the void complex is not shellable")
    if not K.is_pure():
        raise PreconditionError("shellability is only decided for pure complexes")
    cap = config.LIMITS.shelling_max_facets if max_facets is None else max_facets
    facets = [frozenset(f) for f in K.facets]
    m = len(facets)
    if m > cap:
        raise CutoffExceeded(f"{m} facets exceeds the shelling cap {cap}")
    d = len(facets[0])
    lead = frozenset(range(m)) if first is None else frozenset(
        i for i, f in enumerate(facets) if f in {frozenset(g) for g in first}
    )
    if first is not None and len(lead) != len(set(map(frozenset, first))):
        raise PreconditionError("every prescribed first facet must be a facet")

    def attachable(F, used):
        meets = [F & facets[j] for j in used]
        ridges = [I for I in meets if len(I) == d - 1]
        return all(any(I <= R for R in ridges) for I in meets)

    dead = set()
    order = []

    def search(used):
        if len(used) == m:
            return True
        if used in dead:
            return False
        pool = range(m) if lead <= used else lead
        for i in pool:
            if i in used:
                continue
            if used and not attachable(facets[i], used):
                continue
            order.append(i)
            if search(used | {i}):
                return True
            order.pop()
        dead.add(used)
        return False

    if search(frozenset()):
        return ShellingResult(True, tuple(K.facets[i] for i in order))
    return ShellingResult(False)


@dataclass(frozen=True)
class LabeledComplex:
    """Simplicial complex whose faces carry lcm exponent vectors.

    Only vertices carry stored labels; the label of a face is the
    coordinatewise max over its vertices, and the empty face gets 0.
    """

    complex: SimplicialComplex
    vertex_labels: tuple
    n: int

    def __post_init__(self):
        if len(self.vertex_labels) != len(self.complex.vertices):
            raise ValueError("one label per vertex required")

    @property
    def vertices(self):
        return self.complex.vertices

    @property
    def faces(self):
        return self.complex.faces

    @property
    def facets(self):
        return self.complex.facets

    def label(self, face):
        return lcm_of((self.vertex_labels[i] for i in face), self.n)

    def carrier(self, face):
        return support(self.label(face))

    def excess(self, face):
        return len(self.carrier(face)) - len(face)

    def restrict_to_carrier(self, W):
        """Subcomplex of faces whose label support lies in ``W`` (variable indices)."""
        W = frozenset(W)
        keep = [i for i, lab in enumerate(self.vertex_labels) if support(lab) <= W]
        remap = {old: new for new, old in enumerate(keep)}
        faces = [
            tuple(remap[i] for i in f)
            for f in self.faces
            if all(i in remap for i in f)
        ]
        sub = SimplicialComplex.from_faces(tuple(self.vertices[i] for i in keep), faces)
        return LabeledComplex(sub, tuple(self.vertex_labels[i] for i in keep), self.n)

    def face_key(self, face):
        return ",".join(str(self.vertices[i]) for i in face)

    def to_dict(self):
        return {
            "vertices": list(self.vertices),
            "facets": [[self.vertices[i] for i in f] for f in self.facets],
            "labels": {self.face_key(f): list(self.label(f)) for f in self.faces},
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data):
        vertices = tuple(data["vertices"])
        K = SimplicialComplex.from_label_facets(vertices, data["facets"])
        labels = data["labels"]
        n = len(next(iter(labels.values()))) if labels else 0
        vlabels = []
        for v in vertices:
            key = str(v)
            if key not in labels:
                raise ValueError(f"missing label for vertex {v!r}")
            vlabels.append(tuple(labels[key]))
        lc = cls(K, tuple(vlabels), n)
        for f in lc.faces:
            key = lc.face_key(f)
            if key in labels and tuple(labels[key]) != lc.label(f):
                raise ValueError(f"label of face {key!r} is not the lcm of its vertex labels")
        return lc

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))
