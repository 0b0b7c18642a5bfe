"""h-polynomials, local h-polynomials and the face-counting statements built on them.

A triangulation of the simplex on the variables is a :class:`LabeledComplex`
whose face carriers are label supports: a face lies in the relative
interior of the simplex face ``supp(label)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .complexes import SimplicialComplex
from .errors import PreconditionError
from .monomials import support
from .reports import CheckReport
from .scarf import extended_scarf_complex, is_generic, scarf_complex


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients low to high, trailing zeros trimmed."""

    coefficients: tuple = ()

    def __post_init__(self):
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(int(v) for v in c))

    def __getitem__(self, i):
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __add__(self, other):
        k = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(k)))

    def __sub__(self, other):
        k = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self[i] - other[i] for i in range(k)))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * v for v in self.coefficients))
        out = [0] * (len(self.coefficients) + len(other.coefficients))
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __call__(self, x):
        return sum(c * x**i for i, c in enumerate(self.coefficients))

    def padded(self, length):
        return tuple(self[i] for i in range(length))

    def to_list(self):
        return list(self.coefficients)

    def __str__(self):
        return str(self.to_list())


ONE = IntPolynomial((1,))


def h_from_f(f, d):
    """``sum_i f_{i-1} x^i (1-x)^(d-i)`` from ``f = (f_-1, f_0, ...)``."""
    if len(f) - 1 > d:
        raise ValueError(f"complex of dimension {len(f) - 2} does not fit a {d}-vertex simplex")
    out = [0] * (d + 1)
    for i, fi in enumerate(f):
        for k in range(d - i + 1):
            out[i + k] += fi * comb(d - i, k) * (-1) ** k
    return IntPolynomial(tuple(out))


def _f_of_faces(faces):
    top = max((len(f) for f in faces), default=-1)
    f = [0] * (top + 1)
    for face in faces:
        f[len(face)] += 1
    return f


def h_polynomial(K, d):
    """h-polynomial of ``K`` relative to a ``d``-vertex ambient simplex."""
    faces = K.faces if isinstance(K, SimplicialComplex) else K
    return h_from_f(_f_of_faces(list(faces)), d)


def _carrier_faces(gamma):
    return [(f, support(gamma.label(f))) for f in gamma.faces]


def restriction_h(gamma, n):
    """``h(Gamma_W)`` for every subset ``W`` of the variables, keyed by frozenset."""
    carried = _carrier_faces(gamma)
    out = {}
    for k in range(n + 1):
        for W in itertools.combinations(range(n), k):
            Ws = frozenset(W)
            out[Ws] = h_from_f(_f_of_faces([f for f, c in carried if c <= Ws]), k)
    return out


def local_h(gamma, W, hs=None):
    """Local h-polynomial of ``Gamma_W`` by inclusion-exclusion over subsets of ``W``."""
    W = frozenset(W)
    n = gamma.n
    if hs is None:
        hs = restriction_h(gamma, n)
    total = IntPolynomial()
    for k in range(len(W) + 1):
        for F in itertools.combinations(sorted(W), k):
            total = total + hs[frozenset(F)] * (-1) ** (len(W) - k)
    return total


def all_local_h(gamma, hs=None):
    n = gamma.n
    hs = hs or restriction_h(gamma, n)
    return {W: local_h(gamma, W, hs) for W in hs}


def check_decomposition(gamma):
    """``h(Gamma) = sum_W l_W(Gamma_W)`` as an exact polynomial identity."""
    n = gamma.n
    hs = restriction_h(gamma, n)
    total = IntPolynomial()
    for ell in all_local_h(gamma, hs).values():
        total = total + ell
    h = hs[frozenset(range(n))]
    return CheckReport.of("local-h-decomposition", total == h, h=h.to_list(), sum=total.to_list())


def interior_faces(gamma):
    full = frozenset(range(gamma.n))
    return [f for f, c in _carrier_faces(gamma) if c == full]


def check_local_h_properties(gamma):
    """Symmetry, nonnegativity, ``l_1`` as interior vertices, ``l_i >= l_1``, facet count, reversal."""
    n = gamma.n
    hs = restriction_h(gamma, n)
    locals_ = all_local_h(gamma, hs)
    carried = _carrier_faces(gamma)
    problems = {k: [] for k in ("symmetric", "nonnegative", "l1_interior", "li_ge_l1")}
    for W, ell in locals_.items():
        w = len(W)
        key = sorted(W)
        if ell.padded(w + 1) != ell.padded(w + 1)[::-1]:
            problems["symmetric"].append(key)
        if any(c < 0 for c in ell.coefficients):
            problems["nonnegative"].append(key)
        if w >= 2:
            inner = sum(1 for f, c in carried if len(f) == 1 and c == W)
            if ell[1] != inner:
                problems["l1_interior"].append(key)
        if any(ell[i] < ell[1] for i in range(1, w)):
            problems["li_ge_l1"].append(key)
    h = hs[frozenset(range(n))]
    facets = len(gamma.facets)
    props = {k: not v for k, v in problems.items()}
    props["h_at_one_is_facets"] = h(1) == facets
    h_int = h_from_f(_f_of_faces(interior_faces(gamma)), n)
    props["interior_reversal"] = h_int.padded(n + 1) == h.padded(n + 1)[::-1]
    return CheckReport.of(
        "local-h-properties", all(props.values()), properties=props, problems=problems
    )


def _uniform_support(M):
    sizes = {len(support(g)) for g in M.gens}
    return sizes.pop() if len(sizes) == 1 else None


def check_component_bound(M):
    """A generic ideal whose generators all have support size ``c`` has at least ``(c-1)r + 1`` components."""
    if not is_generic(M).is_generic:
        raise PreconditionError(f"{M} is not generic")
    c = _uniform_support(M)
    if c is None:
        return CheckReport.not_applicable("component-bound", "generator supports have mixed sizes")
    gamma = extended_scarf_complex(M)
    components = len(gamma.facets)
    bound = (c - 1) * M.r + 1
    hs = restriction_h(gamma, M.n)
    size_c = {
        ",".join(M.names[s] for s in sorted(W)): local_h(gamma, W, hs).to_list()
        for W in hs
        if len(W) == c
    }
    return CheckReport.of(
        "component-bound", components >= bound, components=components, bound=bound,
        local_h_size_c=size_c,
    )


def check_bivariate(M):
    """For bivariate generic generators: ``r + 1`` components iff every Scarf edge has support at most 3."""
    if not is_generic(M).is_generic:
        raise PreconditionError(f"{M} is not generic")
    if _uniform_support(M) != 2:
        raise PreconditionError("every generator must involve exactly two variables")
    components = len(extended_scarf_complex(M).facets)
    delta = scarf_complex(M)
    edges_ok = all(len(support(delta.label(f))) <= 3 for f in delta.faces if len(f) == 2)
    lhs = components == M.r + 1
    return CheckReport.of("bivariate-components", lhs == edges_ok, r_plus_one=lhs, edges_ok=edges_ok)


def check_interior_face_count(gamma, c):
    """No interior face of dimension ``n-c-1`` forces at least ``r`` interior faces of dimension ``n-c``.

    ``r`` counts vertices whose carrier has ``c`` elements. The count
    needs ``c >= 2``: for ``c = 1`` the simplex vertices themselves would
    be counted, and one edge triangulating itself already has ``r = 2``.
    """
    n = gamma.n
    if c < 2:
        return CheckReport.not_applicable("interior-face-count", "needs codimension at least 2")
    carried = _carrier_faces(gamma)
    r = sum(1 for f, s in carried if len(f) == 1 and len(s) == c)
    inner = interior_faces(gamma)
    if any(len(f) == n - c for f in inner):
        return CheckReport.not_applicable("interior-face-count", "an interior face of dimension n-c-1 exists")
    count = sum(1 for f in inner if len(f) == n - c + 1)
    return CheckReport.of("interior-face-count", count >= r, interior=count, r=r, c=c)
