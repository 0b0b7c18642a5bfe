"""Command-line front end.

Exit status: 0 when every asserted check passes, 1 when a check fails or
two computation paths disagree, 2 for usage, input or size-cap problems.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import config, kernels
from .alexander import (
    DualContext,
    alexander_dual,
    algebraic_co_scarf,
    cm_cogeneric,
    cm_type_bound,
    co_scarf,
    depth_cogeneric,
    gorenstein,
    is_cogeneric,
    dual_betti_sweep,
)
from .assoc import associated_primes, check_saturated_chains, connectivity_sequence
from .binomial import (
    TermOrder,
    buchberger,
    census_initial_ideals,
    initial_ideal,
    parse_binomials,
)
from .corpus import KINDS, generate_corpus
from .errors import ConsistencyError, CutoffExceeded, ParseError, PreconditionError, ScarfkitError
from .hvector import check_decomposition, h_polynomial, local_h
from .monomials import codim, irreducible_decomposition_oracle, parse_ideal
from .reports import CheckReport, RunReport, digest, jsonable
from .resolution import (
    algebraic_scarf,
    betti_from_complex,
    betti_oracle,
    is_exact,
    is_minimal,
    taylor_complex,
)
from .scarf import (
    decompose_generic,
    extended_scarf_complex,
    is_generic,
    scarf_complex,
    stanley_reisner,
)
from .verify import verify_all

log = logging.getLogger("scarfkit")


def _read_input(arg):
    if arg == "-":
        return sys.stdin.read()
    if "vars:" in arg:
        return arg.replace("\\n", "\n")
    path = Path(arg)
    if not path.exists():
        raise ParseError(f"no such file: {arg}")
    return path.read_text()


def _ideal(args):
    return parse_ideal(args.text), args.text


def _ctx(args, M):
    if getattr(args, "bound", None):
        ctx = DualContext.from_bound(int(v) for v in args.bound.split(","))
        ctx.validate(M)
        return ctx
    return DualContext.default(M)


def _complex_output(lc):
    return json.loads(lc.to_json())


def cmd_check_generic(args, report):
    M, _ = _ideal(args)
    rep = is_generic(M)
    report.results["generic"] = rep.to_dict()
    return f"generic: {rep.is_generic}" + (f"\nviolations: {list(rep.violations)}" if rep.violations else "")


def cmd_check_cogeneric(args, report):
    M, _ = _ideal(args)
    rep = is_cogeneric(M, _ctx(args, M))
    report.results["cogeneric"] = rep.to_dict()
    return f"cogeneric: {rep.is_cogeneric}"


def cmd_scarf(args, report):
    M, _ = _ideal(args)
    report.results["complex"] = _complex_output(scarf_complex(M))
    return scarf_complex(M).to_json()


def cmd_extended(args, report):
    M, _ = _ideal(args)
    lc = extended_scarf_complex(M)
    report.results["complex"] = _complex_output(lc)
    return lc.to_json()


def cmd_decompose(args, report):
    M, _ = _ideal(args)
    oracle = irreducible_decomposition_oracle(M)
    if is_generic(M).is_generic:
        report.add(CheckReport.of("facets-match-oracle", decompose_generic(M).bounds() == oracle.bounds()))
    report.results["components"] = [list(c.bound) for c in oracle]
    return "\n".join(c.as_ideal(M.names).__str__() for c in oracle)


def cmd_stanley_reisner(args, report):
    M, _ = _ideal(args)
    K = stanley_reisner(M)
    facets = [[K.vertices[i] for i in f] for f in K.facets]
    report.results["facets"] = facets
    return json.dumps({"vertices": list(K.vertices), "facets": facets}, sort_keys=True, separators=(",", ":"))


def cmd_resolve(args, report):
    M, _ = _ideal(args)
    field = kernels.parse_field(args.field)
    table = betti_oracle(M, field)
    if args.kind == "betti":
        report.results["betti"] = table.records()
        return table.grid()
    F = algebraic_scarf(M) if args.kind == "scarf" else taylor_complex(M)
    exact = is_exact(F, M, field)
    report.results["ranks"] = list(F.ranks())
    report.results["exact"] = bool(exact)
    report.results["minimal"] = is_minimal(F)
    if not exact:
        report.results["failing_degree"] = list(exact.degree) if exact.degree else None
    if args.kind == "taylor":
        report.add(CheckReport.of("taylor-resolves", bool(exact)))
        report.add(CheckReport.of("taylor-matches-koszul", betti_from_complex(F, field).entries == table.entries))
    return f"ranks: {list(F.ranks())}\nexact: {bool(exact)}\nminimal: {is_minimal(F)}"


def cmd_betti(args, report):
    M, _ = _ideal(args)
    table = betti_oracle(M, kernels.parse_field(args.field))
    report.results["betti"] = table.records()
    report.results["totals"] = list(table.totals())
    return table.grid()


def cmd_dual(args, report):
    M, _ = _ideal(args)
    ctx = _ctx(args, M)
    D = alexander_dual(M, ctx)
    report.results["bound"] = list(ctx.a)
    report.results["dual"] = D.to_text()
    return D.to_text().rstrip()


def cmd_coscarf(args, report):
    M, _ = _ideal(args)
    cs = co_scarf(M, _ctx(args, M), allow_noncogeneric=args.allow_noncogeneric)
    report.results["complex"] = cs.to_dict()
    F = algebraic_co_scarf(M, cs=cs)
    report.results["ranks"] = list(F.ranks())
    report.results["facet_degrees"] = [list(d) for d in cs.facet_degrees()]
    if not args.allow_noncogeneric:
        report.add(CheckReport.of("co-scarf-resolves", bool(is_exact(F, M)) and is_minimal(F)))
    return json.dumps(cs.to_dict(), sort_keys=True, separators=(",", ":"))


def cmd_depth(args, report):
    M, _ = _ideal(args)
    field = kernels.parse_field(args.field)
    d = M.n - betti_oracle(M, field).proj_dim
    report.results["depth"] = d
    if is_cogeneric(M).is_cogeneric:
        report.add(CheckReport.of("co-scarf-depth", depth_cogeneric(M, None, field, check=False) == d))
    return f"depth: {d}"


def cmd_cm(args, report):
    M, _ = _ideal(args)
    field = kernels.parse_field(args.field)
    cm = betti_oracle(M, field).proj_dim == codim(M)
    report.results["cm"] = cm
    if is_cogeneric(M).is_cogeneric:
        rep = cm_cogeneric(M, None, field, check=False)
        report.results["conditions"] = rep.details["conditions"]
        report.add(rep)
    return f"cohen-macaulay: {cm}"


def cmd_type(args, report):
    M, _ = _ideal(args)
    field = kernels.parse_field(args.field)
    table = betti_oracle(M, field)
    report.results["type"] = table.totals()[-1]
    report.results["cm"] = table.proj_dim == codim(M)
    cogen = is_cogeneric(M).is_cogeneric
    report.results["gorenstein"] = gorenstein(M, field, cogeneric=cogen)
    if cogen:
        try:
            report.add(cm_type_bound(M, None, field))
        except PreconditionError as err:
            report.add(CheckReport.not_applicable("type-at-least-components", str(err)))
    return f"type: {report.results['type']}\ngorenstein: {report.results['gorenstein']}"


def cmd_ass(args, report):
    M, _ = _ideal(args)
    ass = associated_primes(M)
    report.results["primes"] = ass.named(M.names)
    report.results["minimal"] = list(ass.minimal)
    return "\n".join(
        ("  " if m else "* ") + ",".join(p) for p, m in zip(ass.named(M.names), ass.minimal)
    )


def cmd_chains(args, report):
    M, _ = _ideal(args)
    rep = check_saturated_chains(M)
    report.results["chains"] = rep.to_dict()
    if is_generic(M).is_generic:
        report.add(rep)
    return f"saturated chains: {rep.holds}"


def cmd_connectivity(args, report):
    M, _ = _ideal(args)
    rep = connectivity_sequence(M, require_generic=False)
    report.results["connectivity"] = rep.to_dict()
    if is_generic(M).is_generic:
        report.add(rep)
    return f"connected in codimension one: {rep.holds}"


def cmd_hvector(args, report):
    M, _ = _ideal(args)
    if args.complex == "coscarf":
        gamma = co_scarf(M, _ctx(args, M)).complex
    elif is_generic(M).is_generic:
        gamma = extended_scarf_complex(M)
    else:
        raise PreconditionError("the extended Scarf complex triangulates the simplex only for generic ideals")
    h = h_polynomial(gamma.complex, M.n)
    report.results["h"] = h.to_list()
    out = f"h: {h.to_list()}"
    if args.local is not None:
        W = [M.var_index(v.strip()) for v in args.local.split(",") if v.strip()]
        ell = local_h(gamma, W)
        report.results["local_h"] = ell.to_list()
        out += f"\nlocal h: {ell.to_list()}"
    report.add(check_decomposition(gamma))
    return out


def _binomial_input(args):
    text = args.text
    names, gens = parse_binomials(text)
    weights = tuple(int(v) for v in args.weights.split(",")) if args.weights else None
    order_names = args.order.split(",") if args.order else None
    var_order = tuple(names.index(v) for v in order_names) if order_names else None
    return names, gens, TermOrder(len(names), weights, var_order), text


def cmd_gb(args, report):
    names, gens, order, _ = _binomial_input(args)
    gb = buchberger(gens, order)
    report.results["basis"] = [b.format(names) for b in gb]
    report.results["order"] = order.to_dict()
    return "\n".join(b.format(names) for b in gb)


def cmd_inideal(args, report):
    names, gens, order, _ = _binomial_input(args)
    M = initial_ideal(buchberger(gens, order), order, names)
    report.results["initial_ideal"] = M.to_text()
    return M.to_text().rstrip()


def cmd_census(args, report):
    names, gens, _, _ = _binomial_input(args)
    found = census_initial_ideals(gens, names, range(1, args.box_max + 1))
    rows = []
    for M, w in found.items():
        ass = associated_primes(M)
        rows.append(
            {
                "ideal": M.to_text(),
                "weights": list(w),
                "cm": betti_oracle(M).proj_dim == codim(M),
                "associated_primes": ass.named(names),
            }
        )
        report.add(check_saturated_chains(M))
    report.results["initial_ideals"] = rows
    return "\n".join(f"{r['weights']} cm={r['cm']}: {r['ideal'].splitlines()[1:]}" for r in rows)


def cmd_dual_betti_check(args, report):
    M, _ = _ideal(args)
    rep = dual_betti_sweep(M, _ctx(args, M), kernels.parse_field(args.field))
    report.add(rep)
    return f"inequality: {rep.status} over {rep.details['cases']} cases"


def cmd_verify_all(args, report):
    M, _ = _ideal(args)
    full = verify_all(M, kernels.parse_field(args.field), seed=args.seed)
    report.results.update(full.results)
    report.verdicts.extend(full.verdicts)
    return "\n".join(f"{v.status:4} {v.check}" for v in full.verdicts)


def cmd_corpus(args, report):
    ideals = generate_corpus(args.kind, args.seed, args.count)
    report.results["ideals"] = [M.to_text() for M in ideals]
    return "\n".join(M.to_text().replace("\n", "; ").rstrip("; ") for M in ideals)


COMMANDS = {
    "check-generic": (cmd_check_generic, "test genericity and list witnesses"),
    "check-cogeneric": (cmd_check_cogeneric, "test cogenericity"),
    "scarf": (cmd_scarf, "Scarf complex as JSON"),
    "extended": (cmd_extended, "extended Scarf complex as JSON"),
    "decompose": (cmd_decompose, "irreducible decomposition"),
    "stanley-reisner": (cmd_stanley_reisner, "Stanley-Reisner complex of the radical"),
    "resolve": (cmd_resolve, "build and check a resolution (scarf, taylor) or print Betti numbers"),
    "betti": (cmd_betti, "Betti table of S/M"),
    "dual": (cmd_dual, "Alexander dual"),
    "coscarf": (cmd_coscarf, "co-Scarf complex and its resolution"),
    "depth": (cmd_depth, "depth of S/M"),
    "cm": (cmd_cm, "Cohen-Macaulay test"),
    "type": (cmd_type, "Cohen-Macaulay type and Gorenstein test"),
    "ass": (cmd_ass, "associated primes (embedded ones starred)"),
    "chains": (cmd_chains, "saturated chains of associated primes"),
    "connectivity": (cmd_connectivity, "codimension-one connectivity of associated primes"),
    "hvector": (cmd_hvector, "h-polynomial and local h-polynomials"),
    "gb": (cmd_gb, "reduced Groebner basis of binomials"),
    "inideal": (cmd_inideal, "initial ideal of binomials"),
    "census": (cmd_census, "initial ideals over a box of weight vectors"),
    "dual-betti-check": (cmd_dual_betti_check, "dual Betti inequality over all degrees"),
    "verify-all": (cmd_verify_all, "run every applicable check"),
    "corpus": (cmd_corpus, "print a seeded corpus"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="scarfkit", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON run report")
    common.add_argument("--field", default="q", help="q (rationals) or p:<prime>")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--config", help="key=value file overriding size caps")
    common.add_argument("--timing", action="store_true", help="include wall time in JSON output")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "resolve":
            p.add_argument("kind", choices=("scarf", "taylor", "betti"))
        if name == "corpus":
            p.add_argument("kind", choices=KINDS)
            p.add_argument("--count", type=int, default=10)
            continue
        p.add_argument("input", help="file path, '-' for stdin, or inline text with \\n escapes")
        if name in ("check-cogeneric", "dual", "coscarf", "dual-betti-check", "hvector"):
            p.add_argument("--bound", help="duality bound a1,a2,...")
        if name == "coscarf":
            p.add_argument("--allow-noncogeneric", action="store_true")
        if name == "hvector":
            p.add_argument("--local", help="comma-separated variable names W")
            p.add_argument("--complex", choices=("extended", "coscarf"), default="extended")
        if name in ("gb", "inideal", "census"):
            p.add_argument("--weights", help="positive weights w1,w2,...")
            p.add_argument("--order", help="variable order, largest first")
        if name == "census":
            p.add_argument("--box-max", type=int, default=8)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.command == "corpus" and args.seed is None:
        args.seed = 0
    report = RunReport(args.command, seed=args.seed)
    started = time.perf_counter()
    try:
        if args.config:
            config.set_limits(config.parse_config(Path(args.config).read_text()))
        kernels.parse_field(args.field)
        if getattr(args, "input", None) is not None:
            args.text = _read_input(args.input)
            report.input_digest = digest(args.text)
        text = COMMANDS[args.command][0](args, report)
    except ConsistencyError as err:
        print(f"consistency failure: {err}", file=sys.stderr)
        return 1
    except ParseError as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    except CutoffExceeded as err:
        print(f"indeterminate: {err}", file=sys.stderr)
        return 2
    except (PreconditionError, ScarfkitError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if args.timing:
        report.timing = {"seconds": round(time.perf_counter() - started, 6)}
    if args.json:
        print(report.to_json())
    else:
        print(text)
        for v in report.verdicts:
            if v.status == "fail":
                print(f"FAILED: {v.check} {json.dumps(jsonable(v.details), sort_keys=True)}", file=sys.stderr)
    return 1 if report.failed else 0


if __name__ == "__main__":
    sys.exit(main())
