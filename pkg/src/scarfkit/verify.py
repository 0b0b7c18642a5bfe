"""Run every applicable statement check on one ideal and collect a report."""
from __future__ import annotations

from . import kernels
from .alexander import (
    DualContext,
    algebraic_co_scarf,
    alexander_dual,
    cm_cogeneric,
    cm_type_bound,
    co_scarf,
    depth_cogeneric,
    generator_bound_cogeneric,
    gorenstein,
    is_cogeneric,
    dual_betti_sweep,
)
from .assoc import (
    associated_primes,
    check_embedded_spectrum,
    check_facet_cardinalities,
    check_saturated_chains,
    check_shelling_extension,
    connectivity_sequence,
    shellability_consequences,
)
from .errors import CutoffExceeded, PreconditionError
from .hvector import (
    check_interior_face_count,
    check_bivariate,
    check_component_bound,
    check_decomposition,
    check_local_h_properties,
)
from .monomials import codim, colength, irreducible_decomposition_oracle, prime_names
from .reports import CheckReport, RunReport, digest
from .resolution import (
    algebraic_scarf,
    betti_from_complex,
    betti_oracle,
    is_exact,
    is_minimal,
    strand_betti,
    taylor_complex,
)
from .scarf import (
    decompose_generic,
    extended_scarf_complex,
    is_generic,
    is_generic_old,
    scarf_complex,
    scarf_edge_violations,
)

DUAL_BETTI_MAX_VARIABLES = 4
TAYLOR_MAX_GENERATORS = 10


def _guard(report, name, fn):
    try:
        result = fn()
    except PreconditionError as err:
        result = CheckReport.not_applicable(name, str(err))
    except CutoffExceeded as err:
        result = CheckReport.not_applicable(name, f"indeterminate: {err}")
    if isinstance(result, CheckReport):
        report.add(result)
    return result


def _bounds(dec):
    return [list(c.bound) for c in dec]


def verify_all(M, field=kernels.RATIONALS, seed=None):
    """Never asserts anything conjectural; every verdict is a proved statement or a cross-check."""
    M.require_proper()
    report = RunReport("verify-all", digest(M.to_text()), seed)
    res = report.results
    res["ideal"] = M.to_text()
    res["field"] = kernels.field_name(field)
    gen = is_generic(M)
    cogen = is_cogeneric(M)
    res["generic"] = gen.is_generic
    res["generic_old"] = is_generic_old(M)
    res["cogeneric"] = cogen.is_cogeneric
    res["colength"] = colength(M)
    res["codim"] = codim(M)
    dec = irreducible_decomposition_oracle(M)
    res["components"] = _bounds(dec)
    table = betti_oracle(M, field)
    res["betti_totals"] = list(table.totals())
    res["proj_dim"] = table.proj_dim
    res["depth"] = M.n - table.proj_dim
    res["cm"] = table.proj_dim == res["codim"]
    ass = associated_primes(M)
    res["associated_primes"] = ass.named(M.names)

    delta = scarf_complex(M)
    res["scarf_facets"] = len(delta.facets)
    F = algebraic_scarf(M, delta)
    scarf_resolves = bool(is_exact(F, M, field)) and is_minimal(F)
    edge_ok = not scarf_edge_violations(M, delta)
    report.add(
        CheckReport.of(
            "generic-iff-scarf-resolves",
            gen.is_generic == (scarf_resolves and edge_ok),
            generic=gen.is_generic, scarf_resolves=scarf_resolves, edge_condition=edge_ok,
        )
    )
    missing = [
        [delta.vertices[i] for i in f]
        for f in delta.faces
        if table.get(len(f), delta.label(f)) < 1
    ]
    report.add(CheckReport.of("scarf-subcomplex-bound", not missing, missing=missing))
    if M.r <= TAYLOR_MAX_GENERATORS:
        taylor = betti_from_complex(taylor_complex(M), field)
        report.add(CheckReport.of("taylor-matches-koszul", taylor.entries == table.entries))
    if gen.is_generic:
        report.add(
            CheckReport.of(
                "scarf-ranks-match-betti", strand_betti(F).entries == table.entries
            )
        )
        report.add(
            CheckReport.of(
                "facet-decomposition-matches-oracle",
                decompose_generic(M).bounds() == dec.bounds(),
            )
        )
        _guard(report, "embedded-spectrum", lambda: check_embedded_spectrum(M, field))
        _guard(report, "connectivity", lambda: connectivity_sequence(M))
        _guard(report, "facet-cardinalities", lambda: check_facet_cardinalities(M))
        _guard(report, "shellability", lambda: shellability_consequences(M, field))
        if res["cm"]:
            _guard(report, "shelling-extension", lambda: check_shelling_extension(M))
        _guard(report, "component-bound", lambda: check_component_bound(M))
        _guard(report, "bivariate-components", lambda: check_bivariate(M))
        ext = extended_scarf_complex(M)
        report.add(check_decomposition(ext))
        report.add(check_local_h_properties(ext))
        report.add(
            CheckReport.of("h-at-one-is-components", len(ext.facets) == len(dec))
        )
        chains = check_saturated_chains(M)
        report.add(chains)
    else:
        res["saturated_chains"] = check_saturated_chains(M).status

    ctx = DualContext.default(M)
    dual = alexander_dual(M, ctx)
    res["dual"] = dual.to_text()
    report.add(CheckReport.of("dual-involution", alexander_dual(dual, ctx) == M))
    report.add(
        CheckReport.of(
            "generic-iff-dual-cogeneric",
            gen.is_generic == is_cogeneric(dual, ctx).is_cogeneric,
        )
    )
    if cogen.is_cogeneric:
        cs = co_scarf(M, ctx)
        res["co_scarf_interior"] = [
            [cs.complex.vertices[i] for i in f] for f in cs.interior
        ]
        res["facet_degrees"] = [list(d) for d in cs.facet_degrees()]
        G = algebraic_co_scarf(M, cs=cs)
        res["co_scarf_ranks"] = list(G.ranks())
        report.add(
            CheckReport.of(
                "co-scarf-resolves",
                bool(is_exact(G, M, field)) and is_minimal(G),
            )
        )
        report.add(
            CheckReport.of("co-scarf-ranks-match-betti", strand_betti(G).entries == table.entries)
        )
        report.add(
            CheckReport.of(
                "co-scarf-depth", depth_cogeneric(M, ctx, field, check=False, cs=cs) == res["depth"]
            )
        )
        report.add(cm_cogeneric(M, ctx, field, check=False))
        _guard(report, "type-at-least-components", lambda: cm_type_bound(M, ctx, field))
        res["gorenstein"] = gorenstein(M, field, cogeneric=True)
        _guard(report, "cogeneric-generator-bound", lambda: generator_bound_cogeneric(M, ctx, field))
        report.add(check_decomposition(cs.complex))
        report.add(check_local_h_properties(cs.complex))
        if res["cm"]:
            report.add(check_interior_face_count(cs.complex, res["codim"]))
    if M.n <= DUAL_BETTI_MAX_VARIABLES:
        report.add(dual_betti_sweep(M, ctx, field))
    res["minimal_primes"] = [prime_names(P, M.names) for P in ass.minimal_primes()]
    return report
