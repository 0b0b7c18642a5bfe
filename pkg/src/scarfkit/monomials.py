"""Monomials, monomial ideals and brute-force decomposition oracles.

A monomial is a tuple of nonnegative exponents over a fixed variable list.
A :class:`MonomialIdeal` stores its minimal generators in a canonical order,
so two ideals are equal exactly when their representations are equal.

The canonical order is lexicographic with the *last* variable most
significant, smallest first. For ``k[x, y]`` that lists ``x^2, xy, y^2``.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import ConsistencyError, IdealError, ParseError, UnitIdealError, ZeroIdealError

MAX_EXPONENT = 2**31 - 1
# minimalize switches to the array kernel above this many candidates
_KERNEL_THRESHOLD = 256


def sort_key(m):
    return m[::-1]


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def support(m):
    return frozenset(s for s, e in enumerate(m) if e > 0)


def lcm_of(ms, n=None):
    """Coordinatewise maximum; the lcm of no monomials is ``1``."""
    ms = list(ms)
    if not ms:
        if n is None:
            raise ValueError("lcm of an empty family needs the variable count")
        return (0,) * n
    out = tuple(max(col) for col in zip(*ms))
    if max(out, default=0) > MAX_EXPONENT:
        raise OverflowError("exponent exceeds the supported range")
    return out


def default_names(n):
    if n <= 4:
        return tuple("xyzw"[:n])
    return tuple(f"x{i}" for i in range(1, n + 1))


def format_monomial(m, names):
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _minimal_antichain(gens):
    uniq = sorted(set(gens), key=lambda m: (sum(m), sort_key(m)))
    if len(uniq) > _KERNEL_THRESHOLD:
        arr = np.array(uniq, dtype=np.int64)
        div = kernels.divisibility_matrix(arr, arr)
        keep = div.sum(axis=0) == 1
        kept = [m for m, k in zip(uniq, keep) if k]
    else:
        kept = []
        for m in uniq:
            if not any(divides(g, m) for g in kept):
                kept.append(m)
    return tuple(sorted(kept, key=sort_key))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    Build one with :func:`minimalize` (or :func:`parse_ideal`); the
    constructor only validates.
    """

    names: tuple
    gens: tuple

    def __post_init__(self):
        n = len(self.names)
        if len(set(self.names)) != n:
            raise IdealError("variable names must be distinct")
        for g in self.gens:
            if len(g) != n:
                raise IdealError(f"generator {g} has {len(g)} entries, expected {n}")
            if any((not isinstance(e, (int, np.integer))) or e < 0 or e > MAX_EXPONENT for e in g):
                raise IdealError(f"generator {g} has an invalid exponent")
        if tuple(sorted(self.gens, key=sort_key)) != self.gens:
            raise IdealError("generators are not in canonical order")
        if _minimal_antichain(self.gens) != self.gens:
            raise IdealError("generators are not a minimal antichain")

    @property
    def n(self):
        return len(self.names)

    @property
    def r(self):
        return len(self.gens)

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return self.gens == ((0,) * self.n,)

    def require_proper(self):
        if self.is_zero:
            raise ZeroIdealError("operation needs a nonzero ideal")
        if self.is_unit:
            raise UnitIdealError("operation needs a proper ideal")
        return self

    def array(self):
        return np.array(self.gens, dtype=np.int64).reshape(self.r, self.n)

    def max_exponent(self):
        return max((max(g) for g in self.gens), default=0)

    def contains(self, m):
        return any(divides(g, m) for g in self.gens)

    def pure_power(self, s):
        """Exponent of the pure power of variable ``s`` among the generators, or 0."""
        for g in self.gens:
            if g[s] > 0 and all(e == 0 for t, e in enumerate(g) if t != s):
                return g[s]
        return 0

    def __add__(self, other):
        _check_same_ring([self, other])
        return minimalize(self.gens + other.gens, names=self.names)

    def var_index(self, v):
        if isinstance(v, str):
            try:
                return self.names.index(v)
            except ValueError:
                raise IdealError(f"unknown variable {v!r}") from None
        if not 0 <= v < self.n:
            raise IdealError(f"variable index {v} out of range")
        return v

    def to_text(self):
        lines = ["vars: " + ",".join(self.names)]
        lines += [format_monomial(g, self.names) for g in self.gens]
        return "\n".join(lines) + "\n"

    def __str__(self):
        return "<" + ", ".join(format_monomial(g, self.names) for g in self.gens) + ">"


def minimalize(gens, names=None, n=None):
    """Ideal generated by ``gens``: divisibility antichain in canonical order.

    An empty ``gens`` gives the zero ideal, which every later operation
    rejects with :class:`ZeroIdealError`.
    """
    gens = [tuple(int(e) for e in g) for g in gens]
    if names is None:
        if n is None:
            if not gens:
                raise IdealError("cannot infer the variable count of an empty generator list")
            n = len(gens[0])
        names = default_names(n)
    return MonomialIdeal(tuple(names), _minimal_antichain(gens))


def _check_same_ring(ideals):
    names = ideals[0].names
    for I in ideals[1:]:
        if I.names != names:
            raise IdealError("ideals live in different rings")


def intersect(ideals):
    """Intersection via pairwise lcms of generators."""
    ideals = list(ideals)
    if not ideals:
        raise IdealError("intersect needs at least one ideal")
    _check_same_ring(ideals)
    acc = ideals[0].gens
    for I in ideals[1:]:
        acc = _minimal_antichain([lcm_of((a, b)) for a in acc for b in I.gens])
    return MonomialIdeal(ideals[0].names, acc)


@dataclass(frozen=True, order=True)
class IrreducibleComponent:
    """The irreducible ideal ``<x_s^b_s : b_s >= 1>``."""

    bound: tuple

    def __post_init__(self):
        if any(e < 0 for e in self.bound) or not any(self.bound):
            raise IdealError(f"bound {self.bound} does not define a proper irreducible ideal")

    @property
    def radical(self):
        return support(self.bound)

    @property
    def codim(self):
        return len(self.radical)

    def generators(self):
        n = len(self.bound)
        return [tuple(b if t == s else 0 for t in range(n)) for s, b in enumerate(self.bound) if b]

    def contains(self, other):
        """True iff this ideal contains ``other``."""
        return all(b >= 1 and b <= c for b, c in zip(self.bound, other.bound) if c >= 1)

    def as_ideal(self, names):
        return minimalize(self.generators(), names=names)

    def __add__(self, other):
        return IrreducibleComponent(
            tuple(
                min(b, c) if b and c else max(b, c) for b, c in zip(self.bound, other.bound)
            )
        )

    def shares_generator(self, other):
        return any(b == c and b >= 1 for b, c in zip(self.bound, other.bound))


@dataclass(frozen=True)
class IrreducibleDecomposition:
    components: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(
            self, "components", tuple(sorted(set(self.components), key=lambda c: sort_key(c.bound)))
        )

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def bounds(self):
        return {c.bound for c in self.components}

    def intersection(self, names):
        return intersect([c.as_ideal(names) for c in self.components])

    def is_irredundant(self):
        comps = self.components
        return not any(a.contains(b) for a, b in itertools.permutations(comps, 2))

    def verify(self, M):
        """Check both decomposition invariants against ``M``."""
        if self.intersection(M.names) != M:
            return False
        return self.is_irredundant()


def _prune(bounds):
    comps = [IrreducibleComponent(b) for b in set(bounds)]
    keep = [c for c in comps if not any(c is not d and c.contains(d) for d in comps)]
    return IrreducibleDecomposition(tuple(keep))


def irreducible_decomposition_oracle(M, check=True):
    """Irredundant irreducible decomposition by recursive generator splitting.

    A generator ``m = x_s^e * m'`` with mixed support is split at its first
    support variable into ``M + <x_s^e>`` and ``M + <m'>``; ideals generated
    by pure powers are irreducible.
    """
    M.require_proper()
    n = M.n
    leaves = []
    stack = [M.gens]
    seen = set()
    while stack:
        gens = stack.pop()
        if gens in seen:
            continue
        seen.add(gens)
        mixed = next((g for g in gens if sum(1 for e in g if e) > 1), None)
        if mixed is None:
            bound = [0] * n
            for g in gens:
                s = next(t for t, e in enumerate(g) if e)
                bound[s] = g[s]
            leaves.append(tuple(bound))
            continue
        s = next(t for t, e in enumerate(mixed) if e)
        pure = tuple(mixed[s] if t == s else 0 for t in range(n))
        rest = tuple(0 if t == s else e for t, e in enumerate(mixed))
        stack.append(_minimal_antichain(gens + (rest,)))
        stack.append(_minimal_antichain(gens + (pure,)))
    dec = _prune(leaves)
    if check and not dec.verify(M):
        raise ConsistencyError(f"decomposition oracle failed on {M}")
    return dec


def colength(M):
    """Number of standard monomials, or ``math.inf`` if ``S/M`` is not Artinian."""
    M.require_proper()
    powers = [M.pure_power(s) for s in range(M.n)]
    if any(p == 0 for p in powers):
        return math.inf
    grid = np.stack(
        np.meshgrid(*[np.arange(p, dtype=np.int64) for p in powers], indexing="ij"), axis=-1
    ).reshape(-1, M.n)
    inside = kernels.divisibility_matrix(M.array(), grid).any(axis=0)
    return int((~inside).sum())


def localize(M, P):
    """Set every variable outside ``P`` to 1; the result lives in ``k[P]``."""
    keep = sorted({M.var_index(v) for v in P})
    names = tuple(M.names[s] for s in keep)
    return minimalize([tuple(g[s] for s in keep) for g in M.gens], names=names)


def radical(M):
    M.require_proper()
    return minimalize([tuple(1 if e else 0 for e in g) for g in M.gens], names=M.names)


def minimal_primes(M):
    """Minimal vertex covers of the generator supports, as frozensets of indices."""
    M.require_proper()
    supports = [support(g) for g in M.gens]
    found = []
    for size in range(1, M.n + 1):
        for subset in itertools.combinations(range(M.n), size):
            P = frozenset(subset)
            if any(Q <= P for Q in found):
                continue
            if all(P & S for S in supports):
                found.append(P)
    return found


def codim(M):
    return min(len(P) for P in minimal_primes(M))


def prime_ideal(P, names):
    n = len(names)
    return minimalize([tuple(1 if t == s else 0 for t in range(n)) for s in P], names=names)


def prime_names(P, names):
    return [names[s] for s in sorted(P)]


# -- shared text format ----------------------------------------------------

_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?$")


def parse_monomial(text, names, line=None, column=1):
    """Parse ``x^2*y*z^3`` over ``names``; columns are 1-based."""
    index = {name: i for i, name in enumerate(names)}
    exps = [0] * len(names)
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty monomial", line, column)
    if stripped == "1":
        return tuple(exps)
    offset = column + (len(text) - len(text.lstrip()))
    for part in stripped.split("*"):
        token = part.replace(" ", "").replace("\t", "")
        col = offset + (len(part) - len(part.lstrip()))
        m = _FACTOR.match(token)
        if not m:
            raise ParseError(f"cannot parse factor {part.strip()!r}", line, col)
        name, power = m.group(1), m.group(2)
        if name not in index:
            raise ParseError(f"unknown variable {name!r}", line, col)
        e = int(power) if power is not None else 1
        if e > MAX_EXPONENT:
            raise ParseError("exponent too large", line, col)
        exps[index[name]] += e
        offset += len(part) + 1
    return tuple(exps)


def _logical_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        col = 1
        for piece in raw.split(";"):
            content = piece.split("#", 1)[0]
            if content.strip():
                yield lineno, col, content
            col += len(piece) + 1


def parse_header(lines):
    """Pop the ``vars:`` header off an iterator of logical lines."""
    try:
        lineno, col, content = next(lines)
    except StopIteration:
        raise ParseError("empty input; expected a 'vars:' header", 1, 1) from None
    head, sep, rest = content.partition(":")
    if not sep or head.strip().lower() != "vars":
        raise ParseError("expected header 'vars: x,y,...'", lineno, col)
    names = tuple(v.strip() for v in rest.split(",") if v.strip())
    if not names:
        raise ParseError("header declares no variables", lineno, col)
    for v in names:
        if not _FACTOR.match(v) or "^" in v:
            raise ParseError(f"bad variable name {v!r}", lineno, col)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable names", lineno, col)
    return names


def parse_ideal(text):
    """Parse the shared ideal format; ``;`` may stand in for a newline."""
    lines = _logical_lines(text)
    names = parse_header(lines)
    gens = []
    for lineno, col, content in lines:
        m = parse_monomial(content, names, lineno, col)
        if not any(m):
            raise ParseError("the unit monomial 1 is not allowed as a generator", lineno, col)
        gens.append(m)
    if not gens:
        raise ParseError("no generators given")
    return minimalize(gens, names=names)


def format_ideal(M):
    return M.to_text()
