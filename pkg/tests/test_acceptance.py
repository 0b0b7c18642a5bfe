"""End-to-end acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line. Running this file
directly (``python3 tests/test_acceptance.py``) prints the same lines
without pytest.
"""
import itertools
import json
import math
import os
import subprocess
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import components, ideal  # noqa: E402
from scarfkit.alexander import (  # noqa: E402
    DualContext,
    alexander_dual,
    algebraic_co_scarf,
    cm_cogeneric,
    cm_type_bound,
    co_scarf,
    depth_cogeneric,
    generator_bound_cogeneric,
    gorenstein,
    dual_betti_sweep,
    serre_s2,
)
from scarfkit.assoc import (  # noqa: E402
    associated_primes,
    check_embedded_spectrum,
    check_saturated_chains,
)
from scarfkit.binomial import (  # noqa: E402
    TermOrder,
    buchberger,
    census_initial_ideals,
    check_ingen,
    check_pd_bound,
    initial_ideal,
    parse_binomials,
)
from scarfkit.complexes import is_shellable  # noqa: E402
from scarfkit.corpus import (  # noqa: E402
    disjoint_pairs,
    fixtures,
    generate_corpus,
    optimal,
    permutahedron,
    pure_cogeneric_corpus,
    tree,
)
from scarfkit.errors import PreconditionError  # noqa: E402
from scarfkit.hvector import (  # noqa: E402
    check_interior_face_count,
    check_bivariate,
    check_component_bound,
    check_decomposition,
    check_local_h_properties,
)
from scarfkit.monomials import codim, colength, intersect, irreducible_decomposition_oracle  # noqa: E402
from scarfkit.resolution import (  # noqa: E402
    algebraic_scarf,
    betti_from_complex,
    betti_oracle,
    is_CM,
    is_exact,
    is_minimal,
    strand_betti,
    taylor_complex,
)
from scarfkit.scarf import (  # noqa: E402
    decompose_generic,
    extended_scarf_complex,
    is_generic,
    is_generic_old,
    scarf_complex,
    scarf_edge_violations,
    stanley_reisner,
)

SEED = 20240601
RANDOM_COUNT = 500
COGENERIC_COUNT = 200


def _random_corpus():
    return generate_corpus("random", SEED, RANDOM_COUNT, n_range=(1, 4), r_range=(1, 6), max_exp=4)


def _generic_corpus():
    return [M for M in _random_corpus() if is_generic(M).is_generic] + generate_corpus(
        "generic", SEED + 1, 200
    )


def _cogeneric_corpus():
    return generate_corpus("cogeneric", SEED + 2, COGENERIC_COUNT)


def report(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}" + (f" ({detail})" if detail else "")
    return ok, line


# -- the criteria -----------------------------------------------------------


def criterion_1():
    names = "x,y,z"
    M = intersect([ideal(names, "x", "y"), ideal(names, "x^2", "y^2", "z^2"), ideal(names, "x", "z")])
    checks = {}
    checks["intersection"] = M == ideal(names, "y*z^2", "x*z^2", "y^2*z", "x*y^2", "x^2")
    ctx = DualContext.from_bound((2, 2, 2))
    dual = alexander_dual(M, ctx)
    checks["dual"] = dual == ideal(names, "x^2*y^2", "x*y*z", "x^2*z^2")
    printed = {(0, 2, 1), (2, 0, 1), (0, 1, 2), (2, 1, 0), (1, 0, 0)}
    checks["dual components"] = (
        irreducible_decomposition_oracle(dual).bounds() == printed == decompose_generic(dual).bounds()
    )
    cs = co_scarf(M, ctx)
    interior = [
        {2}, {1, 2}, {2, 3}, {2, "x"}, {2, "y"}, {2, "z"},
        {1, 2, "x"}, {1, 2, "y"}, {2, 3, "x"}, {2, 3, "z"}, {2, "y", "z"},
    ]
    got = [frozenset(s) for s in cs.interior_sets()]
    checks["interior faces"] = len(got) == 11 and set(got) == {frozenset(s) for s in interior}
    checks["shape"] = betti_oracle(M).totals() == (1, 5, 5, 1)
    F = algebraic_co_scarf(M, cs=cs)
    checks["co-Scarf resolution"] = F.ranks() == (5, 5, 1) and bool(is_exact(F, M)) and is_minimal(F)
    checks["facet degrees"] = set(cs.facet_degrees()) == {
        (0, 1, 2), (1, 0, 2), (0, 2, 1), (1, 2, 0), (2, 0, 0)
    }
    bad = [k for k, v in checks.items() if not v]
    return report(1, "three-component example pipeline", not bad, f"failed: {bad}" if bad else "exact match")


def criterion_2():
    bad = []
    for n in (2, 3, 4):
        M = tree(n)
        gen = is_generic(M).is_generic
        old = is_generic_old(M)
        col = colength(M)
        facets = len(scarf_complex(M).facets)
        F = algebraic_scarf(M)
        exact = bool(is_exact(F, M)) and is_minimal(F)
        ass = associated_primes(M)
        cm = is_CM(M) and not ass.embedded()
        row = [gen, (not old) if n >= 3 else True, col == (n + 1) ** (n - 1), facets == math.factorial(n), exact, cm]
        if n <= 3:
            row.append(is_shellable(scarf_complex(M).complex).shellable)
            row.append(is_shellable(stanley_reisner(M)).shellable)
        if not all(row):
            bad.append((n, row))
    return report(2, "tree ideals n=2,3,4", not bad, f"failures {bad}" if bad else "colengths 3,16,125; facets 2,6,24")


def criterion_3():
    bad = []
    for n in (2, 3, 4):
        ctx = DualContext.from_bound((n,) * n)
        P = alexander_dual(tree(n), ctx)
        if not (P == permutahedron(n) and P.r == math.factorial(n) and alexander_dual(P, ctx) == tree(n)):
            bad.append(n)
    return report(3, "tree and permutahedron duality", not bad, f"failed n={bad}" if bad else "n=2,3,4")


def criterion_4():
    corpus = _random_corpus()
    discrepancies = []
    generic_count = 0
    for M in corpus:
        gen = is_generic(M).is_generic
        generic_count += gen
        delta = scarf_complex(M)
        F = algebraic_scarf(M, delta)
        resolves = bool(is_exact(F, M)) and is_minimal(F) and not scarf_edge_violations(M, delta)
        if gen != resolves:
            discrepancies.append(M.to_text())
    ok = len(corpus) >= 500 and not discrepancies
    return report(
        4, "genericity iff Scarf resolution plus edge condition", ok,
        f"{len(corpus)} ideals, {generic_count} generic, {len(discrepancies)} discrepancies",
    )


def criterion_5():
    bad_concord, bad_bound = [], []
    generic = _generic_corpus()
    for M in generic:
        table = betti_oracle(M).entries
        taylor = betti_from_complex(taylor_complex(M)).entries
        scarf = strand_betti(algebraic_scarf(M)).entries
        if not (table == taylor == scarf):
            bad_concord.append(M.to_text())
    everything = _random_corpus()
    for M in everything:
        table = betti_oracle(M)
        delta = scarf_complex(M)
        if any(table.get(len(f), delta.label(f)) < 1 for f in delta.faces):
            bad_bound.append(M.to_text())
    ok = not bad_concord and not bad_bound
    return report(
        5, "Koszul, Taylor and Scarf Betti numbers agree; Scarf subcomplex bound", ok,
        f"{len(generic)} generic, {len(everything)} total; {len(bad_concord)}+{len(bad_bound)} failures",
    )


def criterion_6():
    generic = _generic_corpus()
    bad = [M.to_text() for M in generic if not (check_embedded_spectrum(M).holds and check_saturated_chains(M).holds)]
    fixture = fixtures()["gap-primes"].ideal
    ass = associated_primes(fixture)
    ab, full = frozenset({0, 1}), frozenset({0, 1, 2, 3})
    gap = ab in ass and full in ass and not any(ab < P < full for P in ass)
    ok = not bad and gap and is_generic(fixture).is_generic
    return report(
        6, "embedded-prime spectrum and saturated chains", ok,
        f"{len(generic)} generic ideals, {len(bad)} failures; gap fixture {'ok' if gap else 'WRONG'}",
    )


LATTICE = """vars: a,b,c,d
a^4 - b*c*d
a^3*c^2 - b^2*d^2
a^2*b^3 - c^2*d^2
a*b^2*c - d^3
b^4 - a^2*c*d
b^3*c^2 - a^3*d^2
c^3 - a*b*d
"""
TWISTED = "vars: a,b,c,d\na*c - b^2\na*d - b*c\nb*d - c^2\n"


def criterion_7():
    checks = {}
    names, gens = parse_binomials(LATTICE)
    order = TermOrder(4)
    M = initial_ideal(buchberger(gens, order), order, names)
    expected = ideal("a,b,c,d", "a^4", "a^3*c^2", "a^2*b^3", "a*b^2*c", "b^4", "b^3*c^2", "c^3")
    checks["lattice initial ideal"] = M == expected and M.r == 7
    ingen = check_ingen(gens, order, names)
    checks["initial ideal generic, not old-generic"] = (
        ingen.holds and ingen.details["generic"] and not ingen.details["generic_old"]
    )
    checks["pd bound"] = check_pd_bound(gens, order, names).holds
    checks["Borel chains fail"] = not check_saturated_chains(fixtures()["borel-chain-failure"].ideal).holds
    names, gens = parse_binomials(TWISTED)
    found = census_initial_ideals(gens, names, range(1, 9))
    non_cm = [N for N in found if not is_CM(N)]
    checks["8 initial ideals"] = len(found) == 8
    checks["4 non-CM with codim-3 embedded prime"] = len(non_cm) == 4 and all(
        any(len(P) == 3 for P in associated_primes(N).embedded()) for N in non_cm
    )
    checks["pd bound on census"] = all(
        check_pd_bound(gens, TermOrder(4, w), names, M=N).holds for N, w in found.items()
    )
    bad = [k for k, v in checks.items() if not v]
    return report(7, "binomial initial ideals and census", not bad, f"failed: {bad}" if bad else "all sub-checks")


PURE_NOT_S2 = components("x,y,z,w", (1, 2, 0, 0), (0, 1, 1, 0), (0, 0, 2, 1))
PURE_CM = components("x,y,z,w", (1, 1, 0, 0), (0, 2, 2, 0), (0, 0, 1, 1))


def criterion_8():
    corpus = _cogeneric_corpus()
    disagree = [M.to_text() for M in corpus if not cm_cogeneric(M, check=False).holds]
    fixtures_ok = (
        depth_cogeneric(PURE_NOT_S2) == 1
        and not serre_s2(PURE_NOT_S2).holds
        and is_CM(PURE_CM)
        and associated_primes(PURE_NOT_S2).primes == associated_primes(PURE_CM).primes
    )
    ok = len(corpus) >= 200 and not disagree and fixtures_ok
    return report(
        8, "five Cohen-Macaulay conditions agree on cogeneric ideals", ok,
        f"{len(corpus)} ideals, {len(disagree)} disagreements; fixtures {'ok' if fixtures_ok else 'WRONG'}",
    )


def criterion_9():
    corpus = _cogeneric_corpus()
    checked, bad_type, bad_gor = 0, [], []
    for M in corpus:
        if is_CM(M) and codim(M) >= 2:
            checked += 1
            if not cm_type_bound(M).holds:
                bad_type.append(M.to_text())
        gor = gorenstein(M, cogeneric=True)
        if gor != (M.r == 1 or len(irreducible_decomposition_oracle(M)) == 1):
            bad_gor.append(M.to_text())
    ok = checked > 0 and not bad_type and not bad_gor
    return report(
        9, "type bound and Gorenstein characterization", ok,
        f"{checked} CM codim>=2 ideals; {len(bad_type)}+{len(bad_gor)} failures over {len(corpus)}",
    )


def criterion_10():
    corpus = [M for M in _random_corpus() + _cogeneric_corpus() if M.n <= 4]
    cases, bad = 0, []
    for M in corpus:
        rep = dual_betti_sweep(M)
        cases += rep.details["cases"]
        if not rep.holds:
            bad.append(M.to_text())
    return report(10, "dual Betti inequality", not bad, f"{len(corpus)} ideals, {cases} (i, b) cases, {len(bad)} failures")


def criterion_11():
    checks = {}
    uniform = generate_corpus("uniform", SEED + 3, 200)
    reps = [check_component_bound(M) for M in uniform]
    checks["component bound"] = all(r.holds for r in reps)
    tight = []
    for c, r in itertools.product((2, 3), range(1, 5)):
        M = optimal(c, r)
        tight.append(M.r == (c - 1) * r + 1 and is_CM(M) and generator_bound_cogeneric(M).holds)
    checks["optimal family"] = all(tight)
    bivariate = generate_corpus("bivariate", SEED + 4, 200)
    outcomes = [check_bivariate(M) for M in bivariate]
    sides = {r.details["r_plus_one"] for r in outcomes}
    checks["bivariate iff"] = all(r.holds for r in outcomes) and sides == {True, False}
    pure = pure_cogeneric_corpus(SEED + 5, 100, c=2)
    outcomes = [generator_bound_cogeneric(M) for M in pure]
    sides = {r.details["cm"] for r in outcomes}
    checks["codim-2 iff"] = all(r.holds for r in outcomes) and sides == {True, False}
    try:
        check_component_bound(disjoint_pairs(2))
        checks["disjoint pairs rejected"] = False
    except PreconditionError:
        checks["disjoint pairs rejected"] = not is_generic(disjoint_pairs(2)).is_generic
    bad = [k for k, v in checks.items() if not v]
    return report(
        11, "component and generator bounds", not bad,
        f"failed: {bad}" if bad else f"{len(uniform)} uniform, {len(bivariate)} bivariate, {len(pure)} codim-2",
    )


def criterion_12():
    triangulations = [extended_scarf_complex(M) for M in _generic_corpus()]
    triangulations += [co_scarf(M).complex for M in _cogeneric_corpus()]
    bad = []
    for gamma in triangulations:
        if not (check_decomposition(gamma).holds and check_local_h_properties(gamma).holds):
            bad.append(gamma.to_json())
    counted, count_bad, codim_one = 0, [], 0
    for M in _cogeneric_corpus():
        c = codim(M)
        if is_CM(M) and c < 2:
            codim_one += 1
        elif is_CM(M):
            counted += 1
            if not check_interior_face_count(co_scarf(M).complex, c).holds:
                count_bad.append(M.to_text())
    ok = not bad and not count_bad and counted > 0
    return report(
        12, "local h-polynomial identities and interior face count", ok,
        f"{len(triangulations)} triangulations, {counted} CM cogeneric complexes of codim >= 2 "
        f"({codim_one} of codim 1 skipped); {len(bad)}+{len(count_bad)} failures",
    )


_RUN_SCRIPT = """
import json, sys
from scarfkit.corpus import generate_corpus
from scarfkit.verify import verify_all
seed = int(sys.argv[1])
ideals = generate_corpus("random", seed, 25) + generate_corpus("cogeneric", seed, 10)
print(json.dumps([verify_all(M, seed=seed).to_dict() for M in ideals], sort_keys=True, indent=2))
"""


def criterion_13():
    env = dict(os.environ, PYTHONHASHSEED="random")
    outs = []
    for hashseed in ("1", "2"):
        env["PYTHONHASHSEED"] = hashseed
        proc = subprocess.run(
            [sys.executable, "-c", _RUN_SCRIPT, str(SEED)], env=env, capture_output=True, check=True
        )
        outs.append(proc.stdout)
    cli = []
    for _ in range(2):
        proc = subprocess.run(
            [sys.executable, "-m", "scarfkit.cli", "verify-all", "--json", "--seed", "5",
             "vars: x,y,z\\ny*z^2\\nx*z^2\\ny^2*z\\nx*y^2\\nx^2"],
            capture_output=True, check=True,
        )
        cli.append(proc.stdout)
    ok = outs[0] == outs[1] and cli[0] == cli[1] and len(outs[0]) > 0
    return report(13, "byte-identical JSON for a fixed seed", ok, f"{len(outs[0])} and {len(cli[0])} bytes")


CRITERIA = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
    criterion_8, criterion_9, criterion_10, criterion_11, criterion_12, criterion_13,
]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 14)])
def test_acceptance(criterion, capsys):
    ok, line = criterion()
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    passed = True
    for criterion in CRITERIA:
        ok, line = criterion()
        print(line, flush=True)
        passed = passed and ok
    sys.exit(0 if passed else 1)
