import itertools

import pytest
from hypothesis import given

from conftest import ideal, monomial_ideals
from oracles import brute_scarf
from scarfkit.corpus import tree
from scarfkit.errors import PreconditionError
from scarfkit.monomials import (
    divides,
    irreducible_decomposition_oracle,
    lcm_of,
    localize,
    minimalize,
    support,
)
from scarfkit.scarf import (
    decompose_generic,
    extended_ideal,
    extended_scarf_complex,
    is_generic,
    is_generic_old,
    nonface_witness,
    scarf_complex,
    stanley_reisner,
)

GEN_LAT = ("a,b,c,d", "a^4", "a^3*c^2", "a^2*b^3", "a*b^2*c", "b^4", "b^3*c^2", "c^3")


def face_sets(lc):
    return {frozenset(lc.vertices[i] for i in f) for f in lc.faces}


def test_tree_generic_new_not_old():
    for n in (2, 3, 4):
        assert is_generic(tree(n)).is_generic
    assert not is_generic_old(tree(3))


def test_lattice_initial_generic_with_witness():
    M = ideal(*GEN_LAT)
    rep = is_generic(M)
    assert rep.is_generic
    i, j = M.gens.index((3, 0, 2, 0)) + 1, M.gens.index((0, 3, 2, 0)) + 1
    assert M.gens[rep.witnesses[(min(i, j), max(i, j))] - 1] == (1, 2, 1, 0)
    assert not is_generic_old(M)


def test_two_generators_sharing_exponent():
    rep = is_generic(ideal("x,y,z", "x^2*y", "x^2*z"))
    assert not rep.is_generic
    assert rep.violations == ((1, 2),)


def test_old_sense_pure_powers():
    assert is_generic_old(ideal("x,y", "x^2", "y^3"))


def test_witness_on_dual(three_dual):
    assert nonface_witness(three_dual, {1, 3}) == (1, 1, 1)


def test_witness_precondition_on_scarf_face():
    with pytest.raises(PreconditionError):
        nonface_witness(tree(2), {1, 2})


def test_outer_generators_of_tree_two_are_not_a_face():
    # x^2 and y^2 have the same lcm as all three generators
    assert nonface_witness(tree(2), {1, 3}) == (1, 1)


def test_witness_all_generators_tree_three():
    M = tree(3)
    w = nonface_witness(M, set(range(1, M.r + 1)))
    lab = lcm_of(M.gens)
    assert divides(w, lab) and all(w[s] < lab[s] for s in support(lab))


def test_scarf_tree_two():
    assert face_sets(scarf_complex(tree(2))) == {
        frozenset(f) for f in [(), (1,), (2,), (3,), (1, 2), (2, 3)]
    }


def test_scarf_dual(three_dual):
    assert face_sets(scarf_complex(three_dual)) == {
        frozenset(f) for f in [(), (1,), (2,), (3,), (1, 2), (2, 3)]
    }


def test_scarf_single_generator():
    assert face_sets(scarf_complex(ideal("x,y", "x*y"))) == {frozenset(), frozenset({1})}


def test_extended_ideal_examples(three_dual):
    star, D = extended_ideal(three_dual)
    assert D == 3
    assert star == ideal("x,y,z", "x^2*y^2", "x*y*z", "x^2*z^2", "x^3", "y^3", "z^3")
    star, D = extended_ideal(tree(2))
    assert (star, D) == (tree(2), 3)
    assert extended_ideal(ideal("x", "x")) == (ideal("x", "x"), 2)


def test_extended_scarf_dual_facet(three_dual):
    ext = extended_scarf_complex(three_dual)
    face = tuple(ext.vertices.index(v) for v in (2, "y", "z"))
    assert face in ext.facets
    assert ext.label(face) == (1, 3, 3)


def test_extended_scarf_tree_has_no_markers():
    assert extended_scarf_complex(tree(2)).vertices == (1, 2, 3)


def test_extended_scarf_principal():
    ext = extended_scarf_complex(ideal("x,y", "x*y"))
    assert {frozenset(ext.vertices[i] for i in f) for f in ext.facets} == {
        frozenset({1, "x"}), frozenset({1, "y"})
    }


def test_stanley_reisner_examples(three):
    assert stanley_reisner(ideal("x,y", "x*y")).facet_sets() == {frozenset("x"), frozenset("y")}
    assert stanley_reisner(three).facet_sets() == {frozenset("y"), frozenset("z")}


def test_decompose_generic_dual(three_dual):
    dec = decompose_generic(three_dual)
    assert dec.bounds() == {(0, 2, 1), (2, 0, 1), (0, 1, 2), (2, 1, 0), (1, 0, 0)}


def test_decompose_generic_tree():
    assert decompose_generic(tree(2)).bounds() == {(2, 1), (1, 2)}
    M = tree(3)
    assert len(decompose_generic(M)) == len(extended_scarf_complex(M).facets)
    assert decompose_generic(M).bounds() == irreducible_decomposition_oracle(M).bounds()


def test_decompose_generic_refuses_nongeneric():
    with pytest.raises(PreconditionError):
        decompose_generic(ideal("x,y,z", "x*y", "x*z", "y*z"))


@given(monomial_ideals(r_max=6))
def test_scarf_matches_brute_force(M):
    lc = scarf_complex(M)
    assert set(lc.faces) == brute_scarf(M.gens, M.n)


@given(monomial_ideals(r_max=6))
def test_scarf_closed_under_subsets_and_labels_distinct(M):
    lc = scarf_complex(M)
    faces = set(lc.faces)
    for f in faces:
        for k in range(len(f)):
            assert f[:k] + f[k + 1 :] in faces
    assert len({lc.label(f) for f in faces}) == len(faces)


@given(monomial_ideals())
def test_witnesses_are_valid(M):
    rep = is_generic(M)
    assert rep.is_generic == (not rep.violations)
    for (i, j), l in rep.witnesses.items():
        m_ij = lcm_of((M.gens[i - 1], M.gens[j - 1]))
        g = M.gens[l - 1]
        assert divides(g, m_ij)
        assert all(g[s] < m_ij[s] for s in support(m_ij))


@given(monomial_ideals(n_max=4, r_max=6))
def test_generic_decomposition_and_triangulation(M):
    if not is_generic(M).is_generic:
        return
    assert decompose_generic(M).bounds() == irreducible_decomposition_oracle(M).bounds()
    ext = extended_scarf_complex(M)
    assert ext.complex.is_pure() and ext.complex.dim == M.n - 1
    full = set(range(M.n))
    counts = {}
    for f in ext.facets:
        for k in range(len(f)):
            ridge = f[:k] + f[k + 1 :]
            counts[ridge] = counts.get(ridge, 0) + 1
    for ridge, c in counts.items():
        assert c <= 2
        assert (c == 1) == (support(ext.label(ridge)) != full)


@given(monomial_ideals(n_max=4, r_max=6))
def test_generic_localizes(M):
    if not is_generic(M).is_generic:
        return
    for k in range(1, M.n + 1):
        for P in itertools.combinations(M.names, k):
            L = localize(M, P)
            if L.gens and any(L.gens[0]):
                assert is_generic(L).is_generic


@given(monomial_ideals(n_max=3, r_max=5))
def test_generic_decomposition_independent_of_degree(M):
    if not is_generic(M).is_generic:
        return
    D = M.max_exponent() + 1
    a = extended_scarf_complex(M, D)
    b = extended_scarf_complex(M, D + 1)
    assert a.facets == b.facets
    trim = lambda lc, d: {tuple(e if e < d else 0 for e in lc.label(f)) for f in lc.facets}
    assert trim(a, D) == trim(b, D + 1)


@given(monomial_ideals(n_max=4, r_max=6))
def test_stanley_reisner_is_restriction_for_generic(M):
    if not is_generic(M).is_generic:
        return
    ext = extended_scarf_complex(M)
    markers = [v for v in ext.vertices if isinstance(v, str)]
    assert stanley_reisner(M).face_sets() == ext.complex.restriction(markers).face_sets()


def test_minimalize_witness_example_is_generic_after_prune():
    M = minimalize([(2, 0), (1, 1), (0, 2), (2, 1)])
    assert is_generic(M).is_generic
