"""Alexander duality, cogenericity and the co-Scarf resolution.

Components of a cogeneric ideal are numbered ``1..r`` in the canonical
order of the dual generators they correspond to, so the co-Scarf vertex
``i`` is both the ``i``-th dual generator and the ``i``-th component.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import kernels
from .complexes import LabeledComplex
from .errors import ConsistencyError, PreconditionError
from .monomials import (
    IrreducibleComponent,
    codim,
    intersect,
    irreducible_decomposition_oracle,
    localize,
    minimal_primes,
    minimalize,
    sort_key,
    support,
)
from .reports import CheckReport
from .resolution import (
    MODULE,
    BasisElement,
    Entry,
    MultigradedFreeComplex,
    betti_oracle,
    is_CM,
)
from .scarf import extended_scarf_complex, is_generic


@dataclass(frozen=True)
class DualContext:
    """Duality bound ``a``; ``D`` is the degree used for the extended ideal."""

    a: tuple
    D: int

    @classmethod
    def default(cls, M):
        D = M.max_exponent() + 1
        return cls((D - 1,) * M.n, D)

    @classmethod
    def from_bound(cls, a):
        a = tuple(int(v) for v in a)
        return cls(a, max(a) + 1)

    def validate(self, M):
        if len(self.a) != M.n:
            raise ValueError(f"bound has {len(self.a)} entries for {M.n} variables")
        for g in M.gens:
            if any(e > b for e, b in zip(g, self.a)):
                raise ValueError(f"bound {self.a} is below generator exponent {g}")
        return self


def _context(M, ctx):
    if ctx is None:
        return DualContext.default(M)
    if not isinstance(ctx, DualContext):
        ctx = DualContext.from_bound(ctx)
    return ctx.validate(M)


def dual_vector(b, a):
    """``a_s + 1 - b_s`` on the support of ``b``, zero elsewhere."""
    if len(b) != len(a):
        raise ValueError("vector and bound have different lengths")
    if any(x > y for x, y in zip(b, a)):
        raise ValueError(f"{tuple(b)} exceeds the bound {tuple(a)}")
    return tuple(y + 1 - x if x >= 1 else 0 for x, y in zip(b, a))


def alexander_dual(M, ctx=None):
    """Dual ideal, computed from the components and from the generators; both must agree."""
    M.require_proper()
    ctx = _context(M, ctx)
    dec = irreducible_decomposition_oracle(M)
    from_components = minimalize([dual_vector(c.bound, ctx.a) for c in dec], names=M.names)
    from_generators = intersect(
        [IrreducibleComponent(dual_vector(g, ctx.a)).as_ideal(M.names) for g in M.gens]
    )
    if from_components != from_generators:
        raise ConsistencyError(
            f"dual of {M}: components give {from_components}, generators give {from_generators}"
        )
    return from_components


def ordered_components(M, ctx=None):
    """Irreducible components sorted like the dual generators they map to."""
    ctx = _context(M, ctx)
    comps = irreducible_decomposition_oracle(M).components
    return tuple(sorted(comps, key=lambda c: sort_key(dual_vector(c.bound, ctx.a))))


@dataclass(frozen=True)
class CogenericityReport:
    is_cogeneric: bool
    violations: tuple = ()
    witnesses: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "is_cogeneric": self.is_cogeneric,
            "violations": [list(p) for p in self.violations],
            "witnesses": {f"{i},{j}": l for (i, j), l in sorted(self.witnesses.items())},
        }


def is_cogeneric(M, ctx=None):
    """Pairwise condition on components sharing a generator, cross-checked on the dual."""
    M.require_proper()
    ctx = _context(M, ctx)
    comps = ordered_components(M, ctx)
    violations, witnesses = [], {}
    for i, j in itertools.combinations(range(len(comps)), 2):
        if not comps[i].shares_generator(comps[j]):
            continue
        total = comps[i] + comps[j]
        for l, comp in enumerate(comps):
            if l in (i, j):
                continue
            if total.contains(comp) and not comp.shares_generator(total):
                witnesses[(i + 1, j + 1)] = l + 1
                break
        else:
            violations.append((i + 1, j + 1))
    report = CogenericityReport(not violations, tuple(violations), witnesses)
    if report.is_cogeneric != is_generic(alexander_dual(M, ctx)).is_generic:
        raise ConsistencyError(f"cogenericity of {M} disagrees with genericity of its dual")
    return report


@dataclass(frozen=True)
class CoScarfComplex:
    """Extended Scarf complex of the dual, with its full-support faces marked interior."""

    complex: LabeledComplex
    interior: tuple
    ctx: DualContext
    components: tuple

    @property
    def n(self):
        return self.complex.n

    def interior_sets(self):
        return {self.complex.complex.label_set(f) for f in self.interior}

    def facet_degrees(self):
        """``D - a_sigma`` for every facet: the minimal generators of the ideal."""
        D = self.ctx.D
        return sorted(
            (tuple(D - x for x in self.complex.label(f)) for f in self.complex.facets),
            key=sort_key,
        )

    def to_dict(self):
        data = self.complex.to_dict()
        data["interior"] = [[self.complex.vertices[i] for i in f] for f in self.interior]
        return data


def co_scarf(M, ctx=None, allow_noncogeneric=False):
    M.require_proper()
    ctx = _context(M, ctx)
    if ctx.D <= max(ctx.a):
        raise ValueError("D must exceed every entry of the bound")
    if not allow_noncogeneric and not is_cogeneric(M, ctx).is_cogeneric:
        raise PreconditionError(f"{M} is not cogeneric")
    dual = alexander_dual(M, ctx)
    comps = ordered_components(M, ctx)
    ext = extended_scarf_complex(dual, ctx.D)
    full = frozenset(range(M.n))
    interior = tuple(f for f in ext.faces if support(ext.label(f)) == full)
    inner = set(interior)
    for f in interior:
        for v in range(len(ext.vertices)):
            g = tuple(sorted(set(f) | {v}))
            if g in ext.complex.faces and g not in inner:
                raise ConsistencyError(f"interior faces are not closed upward at {f}")
    r = len(comps)
    for f in ext.faces:
        if f and all(v < r for v in f):
            total = comps[f[0]]
            for v in f[1:]:
                total = total + comps[v]
            if dual_vector(total.bound, ctx.a) != ext.label(f):
                raise ConsistencyError(f"label of {f} is not dual to the sum of its components")
    return CoScarfComplex(ext, interior, ctx, comps)


def excess(face, complex):
    return complex.excess(face)


def algebraic_co_scarf(M, ctx=None, allow_noncogeneric=False, cs=None):
    """Coboundary complex on the interior faces, in the module convention.

    The face ``sigma`` sits in homological degree ``n - #sigma`` with
    multidegree ``D - a_sigma``.
    """
    cs = cs or co_scarf(M, ctx, allow_noncogeneric)
    lc = cs.complex
    n, D = M.n, cs.ctx.D
    by_degree = {}
    for f in cs.interior:
        by_degree.setdefault(n - len(f), []).append(f)
    top = max(by_degree)
    strands = []
    index = {}
    for h in range(top + 1):
        faces = sorted(by_degree.get(h, []))
        strands.append(tuple(BasisElement(f, tuple(D - x for x in lc.label(f))) for f in faces))
        for k, f in enumerate(faces):
            index[f] = (h, k)
    inner = set(cs.interior)
    diffs = []
    for h in range(1, top + 1):
        entries = []
        for col, e in enumerate(strands[h]):
            sigma = e.face
            for v in range(len(lc.vertices)):
                if v in sigma:
                    continue
                bigger = tuple(sorted(sigma + (v,)))
                if bigger not in inner:
                    continue
                pos = bigger.index(v)
                exp = tuple(x - y for x, y in zip(lc.label(bigger), lc.label(sigma)))
                entries.append(Entry(index[bigger][1], col, -1 if pos % 2 else 1, exp))
        diffs.append(tuple(entries))
    return MultigradedFreeComplex(n, tuple(strands), tuple(diffs), MODULE)


def depth_cogeneric(M, ctx=None, field=kernels.RATIONALS, check=True, cs=None):
    """Smallest dimension of an interior co-Scarf face; checked against ``n - pd``."""
    cs = cs or co_scarf(M, ctx)
    d = min(len(f) for f in cs.interior) - 1
    if check:
        table = betti_oracle(M, field)
        if d != M.n - table.proj_dim:
            raise ConsistencyError(f"co-Scarf depth {d} disagrees with n - pd for {M}")
    return d


def _local_depth_dim(M, P, field):
    local = localize(M, P)
    table = betti_oracle(local, field)
    return local.n - table.proj_dim, local.n - codim(local)


def serre_s2(M, field=kernels.RATIONALS):
    """Depth/dimension implication for ``k = 2`` at every monomial prime over a minimal prime."""
    M.require_proper()
    mins = minimal_primes(M)
    failures = []
    checked = 0
    for size in range(1, M.n + 1):
        for P in itertools.combinations(range(M.n), size):
            Ps = frozenset(P)
            if not any(Q <= Ps for Q in mins):
                continue
            checked += 1
            dep, dim = _local_depth_dim(M, P, field)
            if dep < 2 and dim != dep:
                failures.append({"prime": [M.names[s] for s in P], "depth": dep, "dim": dim})
    return CheckReport.of("serre-s2", not failures, primes_checked=checked, failures=failures)


def _excess(lc, f):
    return len(support(lc.label(f))) - len(f)


def cm_cogeneric(M, ctx=None, field=kernels.RATIONALS, check=True):
    """The five equivalent Cohen-Macaulay conditions for a cogeneric ideal."""
    cs = co_scarf(M, ctx)
    lc = cs.complex
    comps = cs.components
    c = codim(M)
    n, r = M.n, len(comps)
    cond = {}
    cond["a"] = is_CM(M, field)
    cond["b"] = serre_s2(M, field).holds
    pure = all(comp.codim == c for comp in comps)
    edges_ok = all(
        (comps[f[0]] + comps[f[1]]).codim <= c + 1
        for f in lc.faces
        if len(f) == 2 and f[0] < r and f[1] < r
    )
    cond["c"] = pure and edges_ok
    cond["d"] = all(_excess(lc, f) < c for f in lc.faces)
    cond["e"] = not any(len(f) - 1 < n - c for f in cs.interior)
    agree = len(set(cond.values())) == 1
    if check and not agree:
        raise ConsistencyError(f"CM conditions disagree on {M}: {cond}")
    return CheckReport.of("cm-conditions-agree", agree, conditions=cond, codim=c, cm=cond["a"])


def cm_type_bound(M, ctx=None, field=kernels.RATIONALS):
    """Type of ``S/M`` against the component count, for CM cogeneric ``M`` of codim at least 2."""
    cs = co_scarf(M, ctx)
    table = betti_oracle(M, field)
    if table.proj_dim != codim(M):
        raise PreconditionError("the type bound is stated for Cohen-Macaulay quotients")
    if codim(M) < 2:
        raise PreconditionError("the type bound needs codimension at least 2")
    cm_type = table.totals()[-1]
    low = min(len(f) for f in cs.interior)
    from_faces = sum(1 for f in cs.interior if len(f) == low)
    if from_faces != cm_type:
        raise ConsistencyError(f"type {cm_type} but {from_faces} minimal interior faces")
    r = len(cs.components)
    return CheckReport.of("type-at-least-components", cm_type >= r, type=cm_type, components=r)


def gorenstein(M, field=kernels.RATIONALS, cogeneric=None):
    """CM of type 1. For cogeneric ``M`` the principal-or-irreducible characterization is asserted."""
    table = betti_oracle(M, field)
    gor = table.proj_dim == codim(M) and table.totals()[-1] == 1
    if cogeneric is None:
        cogeneric = is_cogeneric(M).is_cogeneric
    if cogeneric:
        expected = M.r == 1 or len(irreducible_decomposition_oracle(M)) == 1
        if gor != expected:
            raise ConsistencyError(f"Gorenstein={gor} but principal-or-irreducible={expected}")
    return gor


def dual_betti_sides(M, i, b, ctx=None, tables=None, field=kernels.RATIONALS):
    """Both sides of the dual Betti inequality, in the module convention.

    ``lhs = beta_{i, b^a}(M^a)`` and ``rhs`` sums ``beta_{#F-i-1, c}(M)``
    over ``c`` agreeing with ``b`` on ``F = supp(b)``.
    """
    ctx = _context(M, ctx)
    b = tuple(b)
    if any(x > y for x, y in zip(b, ctx.a)):
        raise PreconditionError(f"{b} exceeds the bound {ctx.a}")
    if tables is None:
        tables = (betti_oracle(M, field), betti_oracle(alexander_dual(M, ctx), field))
    mine, dual = tables
    F = support(b)
    lhs = dual.get(i + 1, dual_vector(b, ctx.a)) if i >= 0 else 0
    j = len(F) - i - 1
    rhs = 0
    if j >= 0:
        for (h, c), v in mine.entries.items():
            if h == j + 1 and all((c[s] if s in F else 0) == b[s] for s in range(M.n)):
                rhs += v
    return lhs, rhs


def dual_betti_inequality_check(M, i, b, ctx=None, tables=None, field=kernels.RATIONALS):
    lhs, rhs = dual_betti_sides(M, i, b, ctx, tables, field)
    return lhs <= rhs


def dual_betti_sweep(M, ctx=None, field=kernels.RATIONALS):
    """Every ``(i, b)`` with ``b`` in the box below ``a`` and ``0 <= i <= n``."""
    ctx = _context(M, ctx)
    tables = (betti_oracle(M, field), betti_oracle(alexander_dual(M, ctx), field))
    failures = []
    count = 0
    for b in itertools.product(*(range(x + 1) for x in ctx.a)):
        for i in range(M.n + 1):
            lhs, rhs = dual_betti_sides(M, i, b, ctx, tables, field)
            count += 1
            if lhs > rhs:
                failures.append({"i": i, "b": list(b), "lhs": lhs, "rhs": rhs})
    return CheckReport.of("dual-betti-inequality", not failures, cases=count, failures=failures)


def generator_bound_cogeneric(M, ctx=None, field=kernels.RATIONALS):
    """At least ``(c-1)r + 1`` generators; tightness forces CM; for ``c = 2`` CM iff ``r + 1``."""
    if not is_cogeneric(M, ctx).is_cogeneric:
        raise PreconditionError(f"{M} is not cogeneric")
    comps = irreducible_decomposition_oracle(M).components
    codims = {comp.codim for comp in comps}
    if len(codims) != 1:
        return CheckReport.not_applicable(
            "cogeneric-generator-bound", f"components have mixed codimensions {sorted(codims)}"
        )
    c = codims.pop()
    r = len(comps)
    bound = (c - 1) * r + 1
    cm = is_CM(M, field)
    ok = M.r >= bound
    if M.r == bound:
        ok = ok and cm
    if c == 2:
        ok = ok and (cm == (M.r == r + 1))
    return CheckReport.of(
        "cogeneric-generator-bound", ok, generators=M.r, bound=bound, codim=c, components=r, cm=cm
    )
