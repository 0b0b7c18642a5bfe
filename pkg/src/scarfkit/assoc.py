"""Associated primes and the chain and connectivity statements about them.

Primes are frozensets of variable indices; reports print them as sorted
variable-name lists.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import kernels
from .complexes import is_shellable
from .errors import CutoffExceeded, PreconditionError
from .monomials import codim, irreducible_decomposition_oracle, prime_names
from .reports import CheckReport
from .resolution import betti_oracle
from .scarf import extended_scarf_complex, is_generic, scarf_complex, stanley_reisner


def _prime_key(P):
    return (len(P), sorted(P))


@dataclass(frozen=True)
class AssPrimeSet:
    primes: tuple
    minimal: tuple

    @classmethod
    def from_primes(cls, primes):
        primes = sorted(set(primes), key=_prime_key)
        minimal = tuple(not any(Q < P for Q in primes) for P in primes)
        return cls(tuple(primes), minimal)

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)

    def __contains__(self, P):
        return frozenset(P) in self.primes

    def minimal_primes(self):
        return [P for P, m in zip(self.primes, self.minimal) if m]

    def embedded(self):
        return [P for P, m in zip(self.primes, self.minimal) if not m]

    def codims(self):
        return sorted({len(P) for P in self.primes})

    def named(self, names):
        return [prime_names(P, names) for P in self.primes]


def associated_primes(M):
    """Radicals of the irreducible components."""
    M.require_proper()
    return AssPrimeSet.from_primes(c.radical for c in irreducible_decomposition_oracle(M))


def check_embedded_spectrum(M, field=kernels.RATIONALS):
    """Every codimension strictly above ``codim M`` up to ``pd(S/M)`` carries an embedded prime."""
    if not is_generic(M).is_generic:
        raise PreconditionError("the embedded-prime spectrum is stated for generic ideals")
    ass = associated_primes(M)
    c, pd = codim(M), betti_oracle(M, field).proj_dim
    embedded = ass.embedded()
    witnesses, missing = {}, []
    for i in range(c + 1, pd + 1):
        hit = next((P for P in embedded if len(P) == i), None)
        if hit is None:
            missing.append(i)
        else:
            witnesses[i] = prime_names(hit, M.names)
    return CheckReport.of(
        "embedded-spectrum", not missing, codim=c, proj_dim=pd, witnesses=witnesses, missing=missing
    )


def saturated_chain(P, ass):
    """A chain from ``P`` down to a minimal prime dropping codimension by one per step, or None."""
    primes = list(ass.primes)
    memo = {}

    def walk(Q):
        if Q in memo:
            return memo[Q]
        if not any(R < Q for R in primes):
            memo[Q] = [Q]
            return memo[Q]
        memo[Q] = None
        for R in primes:
            if R < Q and len(R) == len(Q) - 1:
                rest = walk(R)
                if rest is not None:
                    memo[Q] = [Q] + rest
                    break
        return memo[Q]

    return walk(frozenset(P))


def check_saturated_chains(M):
    ass = associated_primes(M)
    chains, broken = {}, []
    for P in ass:
        chain = saturated_chain(P, ass)
        key = ",".join(prime_names(P, M.names))
        if chain is None:
            broken.append(prime_names(P, M.names))
        else:
            chains[key] = [prime_names(Q, M.names) for Q in chain]
    return CheckReport.of("saturated-chains", not broken, chains=chains, broken=broken)


def _joins(P, Q):
    return len(P | Q) == min(len(P), len(Q)) + 1


def connectivity_sequence(M, require_generic=True):
    """Connect every pair of associated primes through steps whose sum has codim ``min + 1``."""
    if require_generic and not is_generic(M).is_generic:
        raise PreconditionError("the connectivity statement is for generic ideals")
    ass = associated_primes(M)
    primes = list(ass.primes)
    start = primes[0]
    parent = {start: None}
    queue = deque([start])
    while queue:
        P = queue.popleft()
        for Q in primes:
            if Q not in parent and _joins(P, Q):
                parent[Q] = P
                queue.append(Q)
    unreached = [prime_names(P, M.names) for P in primes if P not in parent]
    paths = {}
    for P in primes:
        if P in parent:
            path, Q = [], P
            while Q is not None:
                path.append(prime_names(Q, M.names))
                Q = parent[Q]
            paths[",".join(prime_names(P, M.names))] = path[::-1]
    pure = len({len(P) for P in primes}) == 1
    return CheckReport.of(
        "connectivity", not unreached, pure=pure, paths_from_first=paths, unreached=unreached
    )


def _require_generic_unmixed(M):
    if not is_generic(M).is_generic:
        raise PreconditionError(f"{M} is not generic")
    ass = associated_primes(M)
    if ass.embedded():
        raise PreconditionError(f"{M} has embedded associated primes")
    return ass


def check_facet_cardinalities(M):
    """Each extended Scarf facet has ``codim M`` generator vertices and ``dim S/M`` variable vertices."""
    _require_generic_unmixed(M)
    ext = extended_scarf_complex(M)
    c = codim(M)
    bad = []
    for f in ext.facets:
        gens = sum(1 for v in f if isinstance(ext.vertices[v], int))
        if gens != c or len(f) - gens != M.n - c:
            bad.append([ext.vertices[v] for v in f])
    return CheckReport.of("facet-cardinalities", not bad, codim=c, dim=M.n - c, bad_facets=bad)


def shellability_consequences(M, field=kernels.RATIONALS):
    """Generic without embedded primes: CM, and both the Scarf and Stanley-Reisner complexes shellable."""
    _require_generic_unmixed(M)
    details = {"cm": betti_oracle(M, field).proj_dim == codim(M)}
    ok = details["cm"]
    for name, K in (("scarf", scarf_complex(M).complex), ("stanley_reisner", stanley_reisner(M))):
        try:
            res = is_shellable(K)
            details[name] = res.shellable
            ok = ok and res.shellable
        except CutoffExceeded:
            details[name] = "indeterminate"
        except PreconditionError as err:
            details[name] = f"not pure: {err}"
            ok = False
    return CheckReport.of("shellability", ok, **details)


def check_shelling_extension(M):
    """For generic CM ``M``, every star of a face of ``V(M)`` starts some shelling of ``V(M)``.

    Exhaustive, so it stops with :class:`CutoffExceeded` at the shelling cap.
    """
    if not is_generic(M).is_generic:
        raise PreconditionError(f"{M} is not generic")
    if betti_oracle(M).proj_dim != codim(M):
        raise PreconditionError(f"{M} is not Cohen-Macaulay")
    K = stanley_reisner(M)
    facets = [frozenset(f) for f in K.facets]
    failures = []
    for face in K.faces:
        if not face:
            continue
        star = [f for f in facets if set(face) <= f]
        if not is_shellable(K, first=star).shellable:
            failures.append([K.vertices[v] for v in face])
    return CheckReport.of("shelling-extension", not failures, facets=len(facets), failures=failures)
