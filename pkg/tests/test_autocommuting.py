from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from autocomm.automorphism import aut_stabilizer, orbits
from autocomm.autocommuting import (
    absolute_center,
    analyze,
    autocommutator,
    autocommutator_set,
    autocommutator_subgroup,
    check_product_rule,
    distribution,
    pr_acentralizer_sum,
    pr_g_bruteforce,
    pr_g_orbit_formula,
    pr_trivial_stabilizer_formula,
    transporter,
)
from autocomm.catalog import cyclic, dicyclic, standard_corpus, symmetric
from autocomm.errors import NotCoprime
from autocomm.group import derived_subgroup

from conftest import aut_of, corpus_params
from oracles import pr_by_pairs


def test_autocommutator_examples():
    Z4, Z3 = cyclic(4), cyclic(3)
    assert autocommutator(Z4, 1, aut_of(Z4)[1]) == 2
    assert autocommutator(Z3, 1, aut_of(Z3)[1]) == 1


def test_absolute_center_examples():
    Z2 = cyclic(2)
    assert absolute_center(Z2, aut_of(Z2)).order == 2
    assert absolute_center(cyclic(4), aut_of(cyclic(4))).members == (0, 2)
    assert absolute_center(symmetric(3), aut_of(symmetric(3))).members == (0,)


def test_autocommutator_set_examples():
    Z4, S3 = cyclic(4), symmetric(3)
    assert autocommutator_set(Z4, aut_of(Z4)) == (0, 2)
    a3 = tuple(x for x in range(6) if S3.element_order(x) in (1, 3))
    assert autocommutator_set(S3, aut_of(S3)) == a3
    assert autocommutator_subgroup(S3, aut_of(S3)).members == a3


def test_pr_examples():
    Z3, Z4, S3, Q8 = cyclic(3), cyclic(4), symmetric(3), dicyclic(2)
    assert pr_g_bruteforce(Z3, aut_of(Z3), 0) == Fraction(2, 3)
    assert pr_g_bruteforce(Z4, aut_of(Z4), 2) == Fraction(1, 4)
    assert pr_g_orbit_formula(Z4, aut_of(Z4), 2) == Fraction(1, 4)
    assert pr_g_orbit_formula(S3, aut_of(S3), 0) == Fraction(1, 2)
    assert analyze(Q8).pr == Fraction(3, 8)
    assert pr_acentralizer_sum(Z4, aut_of(Z4)) == Fraction(3, 4)
    assert pr_acentralizer_sum(Z3, aut_of(Z3)) == Fraction(2, 3)
    assert pr_acentralizer_sum(cyclic(2), aut_of(cyclic(2))) == 1


def test_distribution_examples():
    Z3, Z4 = cyclic(3), cyclic(4)
    assert distribution(Z3, aut_of(Z3)) == {0: Fraction(2, 3), 1: Fraction(1, 6), 2: Fraction(1, 6)}
    assert distribution(Z4, aut_of(Z4)) == {0: Fraction(3, 4), 1: 0, 2: Fraction(1, 4), 3: 0}


def test_trivial_stabilizer_formula():
    Z3 = cyclic(3)
    assert pr_trivial_stabilizer_formula(Z3, aut_of(Z3)) == Fraction(2, 3)
    assert pr_trivial_stabilizer_formula(cyclic(4), aut_of(cyclic(4))) is None
    assert pr_trivial_stabilizer_formula(cyclic(1), aut_of(cyclic(1))) == 1


@pytest.mark.parametrize("G", corpus_params(24))
def test_trivial_stabilizer_formula_agrees_when_applicable(G):
    A = aut_of(G)
    value = pr_trivial_stabilizer_formula(G, A)
    if value is not None:
        assert value == analyze(G, A).pr


@pytest.mark.parametrize("G", corpus_params(10))
def test_distribution_matches_list_oracle(G):
    A = aut_of(G)
    auts = [tuple(r) for r in A.maps.tolist()]
    dist = distribution(G, A)
    for g in range(G.order):
        assert dist[g] == pr_by_pairs(G.table.tolist(), auts, g)


@pytest.mark.parametrize("G", corpus_params(24))
def test_formula_equivalence(G):
    A = aut_of(G)
    orb = orbits(G, A)
    for g in range(G.order):
        assert pr_g_bruteforce(G, A, g) == pr_g_orbit_formula(G, A, g, orb)
    assert pr_acentralizer_sum(G, A) == pr_g_bruteforce(G, A, 0) == Fraction(len(orb), G.order)


@pytest.mark.parametrize("G", corpus_params(24))
def test_distribution_properties(G):
    A = aut_of(G)
    dist = distribution(G, A)
    assert sum(dist.values()) == 1
    S = set(autocommutator_set(G, A))
    for g, v in dist.items():
        assert v == dist[G.inv(g)]
        assert (v == 0) == (g not in S)


@pytest.mark.parametrize("G", corpus_params(12))
def test_transporter_is_a_stabilizer_coset(G):
    A = aut_of(G)
    orb = orbits(G, A)
    for x in range(G.order):
        stab = aut_stabilizer(G, A, x)
        for g in range(G.order):
            T = transporter(G, A, x, g)
            assert bool(T) == (orb.orbit_id[G.mul(x, g)] == orb.orbit_id[x])
            if T:
                sigma = T[0]
                assert sorted(A.compose(sigma, s) for s in stab) == list(T)


@pytest.mark.parametrize("G", corpus_params(24))
def test_k_contains_derived_and_l_in_center(G):
    rep = analyze(G, aut_of(G))
    assert derived_subgroup(G).issubset(rep.autocommutator_subgroup)
    assert (rep.autocommutator_subgroup.order == 1) == (rep.absolute_center.order == G.order)
    assert rep.absolute_center.is_normal()
    assert set(rep.autocommutator_set) <= set(rep.autocommutator_subgroup.members)


def test_product_rule_z3_z4():
    v = check_product_rule(cyclic(3), cyclic(4))
    assert v.aut_orders == (4, 2, 2)
    assert len(v.pairs) == 12
    assert v.ok


@pytest.mark.parametrize(
    "G, H",
    [(cyclic(2), cyclic(3)), (cyclic(1), symmetric(3)), (cyclic(5), dicyclic(2)), (cyclic(3), cyclic(8))],
    ids=["Z2xZ3", "Z1xS3", "Z5xQ8", "Z3xZ8"],
)
def test_product_rule_coprime(G, H):
    assert check_product_rule(G, H).ok


def test_product_rule_rejects_non_coprime():
    with pytest.raises(NotCoprime):
        check_product_rule(cyclic(2), cyclic(4))


def test_trivial_group_report():
    rep = analyze(cyclic(1))
    assert rep.pr == 1 and rep.orbit_count == 1 and rep.aut_order == 1


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 62), st.data())
def test_random_corpus_member(i, data):
    groups = standard_corpus(24)
    G = groups[i % len(groups)]
    A = aut_of(G)
    g = data.draw(st.integers(0, G.order - 1))
    assert pr_g_bruteforce(G, A, g) == pr_g_orbit_formula(G, A, g)
    assert pr_g_bruteforce(G, A, g) == pr_g_bruteforce(G, A, G.inv(g))
