"""A small Buchberger engine for pure difference binomials ``x^u - x^v``.

Every S-polynomial and reduction of such binomials is again a difference
of two monomials (or zero), and the engine asserts this at each step.
Common monomial factors are stripped, which is sound for lattice ideals
because monomials are nonzerodivisors modulo them.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from . import config, kernels
from .errors import ConsistencyError, CutoffExceeded, ParseError, PreconditionError
from .monomials import (
    _logical_lines,
    codim,
    divides,
    format_monomial,
    lcm_of,
    minimalize,
    parse_header,
    parse_monomial,
)
from .reports import CheckReport
from .resolution import algebraic_scarf, betti_oracle, is_exact, is_minimal
from .scarf import is_generic, is_generic_old, scarf_edge_violations

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TermOrder:
    """Weighted reverse lexicographic order.

    Higher weighted degree wins; ties go to the last variable (in
    ``variable_order``) where exponents differ, the smaller exponent
    winning.
    """

    n: int
    weights: tuple = None
    variable_order: tuple = None

    def __post_init__(self):
        w = tuple(self.weights) if self.weights is not None else (1,) * self.n
        order = tuple(self.variable_order) if self.variable_order is not None else tuple(range(self.n))
        if len(w) != self.n or any(v <= 0 for v in w):
            raise ValueError(f"weights must be {self.n} positive integers")
        if sorted(order) != list(range(self.n)):
            raise ValueError("variable_order must be a permutation of the variables")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "variable_order", order)

    def key(self, m):
        """Sort key; a larger key is a larger monomial."""
        return (
            sum(w * e for w, e in zip(self.weights, m)),
            tuple(-m[s] for s in reversed(self.variable_order)),
        )

    def to_dict(self):
        return {"weights": list(self.weights), "variable_order": list(self.variable_order)}


def _strip(u, v):
    g = tuple(min(a, b) for a, b in zip(u, v))
    return tuple(a - x for a, x in zip(u, g)), tuple(b - x for b, x in zip(v, g))


@dataclass(frozen=True)
class Binomial:
    """``x^plus - x^minus`` with no common factor."""

    plus: tuple
    minus: tuple

    def __post_init__(self):
        if self.plus == self.minus:
            raise ValueError("a binomial needs two different terms")
        if any(min(a, b) for a, b in zip(self.plus, self.minus)):
            raise ValueError("the two terms of a binomial must be coprime")

    @classmethod
    def make(cls, u, v):
        u, v = _strip(tuple(u), tuple(v))
        return cls(u, v)

    def full_support(self):
        return all(a != b for a, b in zip(self.plus, self.minus))

    def oriented(self, order):
        """``(lead, trail)`` under ``order``."""
        if order.key(self.plus) > order.key(self.minus):
            return self.plus, self.minus
        return self.minus, self.plus

    def degree(self):
        return max(sum(self.plus), sum(self.minus))

    def format(self, names):
        return f"{format_monomial(self.plus, names)} - {format_monomial(self.minus, names)}"


def parse_binomials(text):
    """``vars:`` header, then one ``u - v`` per line in the shared monomial syntax."""
    lines = _logical_lines(text)
    names = parse_header(lines)
    out = []
    for lineno, col, content in lines:
        if content.count("-") != 1:
            raise ParseError("expected exactly one '-' between two monomials", lineno, col)
        left, right = content.split("-")
        u = parse_monomial(left, names, lineno, col)
        v = parse_monomial(right, names, lineno, col + len(left) + 1)
        try:
            out.append(Binomial.make(u, v))
        except ValueError as err:
            raise ParseError(str(err), lineno, col) from None
    if not out:
        raise ParseError("no binomials given")
    return names, out


def _reduce_lead(lead, trail, basis, order):
    """Reduce the leading term repeatedly; returns ``(lead, trail)`` or None for zero."""
    while True:
        for u, v in basis:
            if divides(u, lead):
                q = tuple(a - b for a, b in zip(lead, u))
                lead = tuple(a + b for a, b in zip(q, v))
                break
        else:
            return lead, trail
        lead, trail = _strip(lead, trail)
        if lead == trail:
            return None
        if order.key(lead) < order.key(trail):
            lead, trail = trail, lead


def _reduce_full(lead, trail, basis, order):
    """Bring the trailing term to normal form as well."""
    changed = True
    while changed:
        changed = False
        for u, v in basis:
            if divides(u, trail):
                q = tuple(a - b for a, b in zip(trail, u))
                trail = tuple(a + b for a, b in zip(q, v))
                changed = True
                break
        lead, trail = _strip(lead, trail)
        if lead == trail:
            raise ConsistencyError("tail reduction of a reduced leading term produced zero")
        if order.key(lead) < order.key(trail):
            raise ConsistencyError("tail reduction overtook the leading term")
    return lead, trail


def buchberger(gens, order, max_degree=None):
    """Reduced Groebner basis of the binomials ``gens`` as sorted ``Binomial`` values.

    Pairs are processed smallest lcm first; coprime leading terms are
    skipped.
    """
    cap = config.LIMITS.buchberger_max_degree if max_degree is None else max_degree
    basis = []
    for b in gens:
        lead, trail = b.oriented(order)
        red = _reduce_lead(lead, trail, basis, order)
        if red is not None:
            basis.append(red)
    pairs = [(i, j) for i, j in itertools.combinations(range(len(basis)), 2)]
    while pairs:
        pairs.sort(key=lambda p: order.key(lcm_of((basis[p[0]][0], basis[p[1]][0]))))
        i, j = pairs.pop(0)
        (u1, v1), (u2, v2) = basis[i], basis[j]
        if not any(a and b for a, b in zip(u1, u2)):
            continue
        L = lcm_of((u1, u2))
        s1 = tuple(l - a + b for l, a, b in zip(L, u1, v1))
        s2 = tuple(l - a + b for l, a, b in zip(L, u2, v2))
        s1, s2 = _strip(s1, s2)
        if s1 == s2:
            continue
        if order.key(s1) < order.key(s2):
            s1, s2 = s2, s1
        red = _reduce_lead(s1, s2, basis, order)
        if red is None:
            continue
        if max(sum(red[0]), sum(red[1])) > cap:
            raise CutoffExceeded(f"Groebner basis element of degree above {cap}")
        basis.append(red)
        k = len(basis) - 1
        pairs.extend((m, k) for m in range(k))
    minimal = []
    for idx, (u, v) in enumerate(basis):
        if any(divides(w, u) and (w != u or jdx < idx) for jdx, (w, _) in enumerate(basis) if jdx != idx):
            continue
        minimal.append((u, v))
    reduced = []
    for idx, (u, v) in enumerate(minimal):
        others = [p for k, p in enumerate(minimal) if k != idx]
        lead, trail = _reduce_full(u, v, others, order)
        reduced.append(Binomial(lead, trail))
    reduced.sort(key=lambda b: order.key(b.plus), reverse=True)
    return reduced


def initial_ideal(gb, order, names):
    return minimalize([b.oriented(order)[0] for b in gb], names=names)


def _require_full_support(gens):
    bad = [b for b in gens if not b.full_support()]
    if bad:
        raise PreconditionError(f"{len(bad)} binomial(s) without full support")


def check_ingen(gens, order, names, field=kernels.RATIONALS):
    """The reverse lexicographic initial ideal of a generic lattice ideal is generic."""
    _require_full_support(gens)
    M = initial_ideal(buchberger(gens, order), order, names)
    generic = is_generic(M).is_generic
    F = algebraic_scarf(M)
    details = {
        "initial_ideal": M.to_text(),
        "generic": generic,
        "generic_old": is_generic_old(M),
        "scarf_exact": bool(is_exact(F, M, field)),
        "scarf_minimal": is_minimal(F),
        "edge_condition": not scarf_edge_violations(M),
    }
    return CheckReport.of("initial-ideal-generic", generic, **details)


def check_pd_bound(gens, order, names, field=kernels.RATIONALS, M=None):
    """``pd(S/M) <= 2^c - 1`` for an initial ideal ``M`` of codimension ``c``."""
    if M is None:
        M = initial_ideal(buchberger(gens, order), order, names)
    c, pd = codim(M), betti_oracle(M, field).proj_dim
    return CheckReport.of("pd-bound", pd <= 2**c - 1, codim=c, proj_dim=pd, bound=2**c - 1)


def conjecture_report(gens, order, names, field=kernels.RATIONALS, M=None):
    """Whether some associated prime has codimension ``pd(S/M)``; asserted only where known."""
    from .assoc import associated_primes

    if M is None:
        M = initial_ideal(buchberger(gens, order), order, names)
    pd = betti_oracle(M, field).proj_dim
    codims = associated_primes(M).codims()
    holds = pd in codims
    known = (all(b.full_support() for b in gens) and is_generic(M).is_generic) or codim(M) == 2
    log.info("top-codim prime for %s: %s", M, holds)
    if known and not holds:
        raise ConsistencyError(f"{M}: no associated prime of codimension {pd}")
    return CheckReport.of("top-codim-prime", holds, proj_dim=pd, codims=codims, asserted=known)


def _normalized_weights(w):
    """Shift a weight vector to minimum 1; on homogeneous ideals the order is unchanged."""
    low = min(w)
    return tuple(x - low + 1 for x in w)


def _standard_homogeneous(gens):
    return all(sum(b.plus) == sum(b.minus) for b in gens)


def census_initial_ideals(gens, names, box=range(1, 9)):
    """Distinct initial ideals over weight vectors in ``box^n`` (revlex tie-break).

    Returns ``{ideal: first weight vector producing it}`` in canonical
    order. Weight vectors equal up to adding a constant give the same
    order on a standard-graded ideal and are computed once.
    """
    n = len(names)
    shift = _standard_homogeneous(gens)
    seen = {}
    found = {}
    for w in itertools.product(box, repeat=n):
        key = _normalized_weights(w) if shift else w
        if key not in seen:
            order = TermOrder(n, key)
            seen[key] = initial_ideal(buchberger(gens, order), order, names)
        M = seen[key]
        if M not in found:
            found[M] = w
    return dict(sorted(found.items(), key=lambda kv: kv[0].gens))
