import pytest

from autocomm.automorphism import (
    acentralizer,
    aut_stabilizer,
    enumerate_automorphisms,
    inner_automorphisms,
    orbits,
    pointwise_stabilizer,
)
from autocomm.catalog import cyclic, dicyclic, elementary_abelian, symmetric
from autocomm.errors import GroupError, SearchBudgetExceeded
from autocomm.group import center

from conftest import aut_of, corpus_params
from oracles import automorphisms_by_bijections


@pytest.mark.parametrize(
    "G, size",
    [(cyclic(1), 1), (cyclic(8), 4), (dicyclic(2), 24), (symmetric(3), 6), (elementary_abelian(2, 3), 168)],
    ids=["Z1", "Z8", "Q8", "S3", "Z2^3"],
)
def test_automorphism_counts(G, size):
    A = enumerate_automorphisms(G)
    assert A.order == size
    assert A.maps[0].tolist() == list(range(G.order))


def test_z8_automorphisms_are_unit_multiplications():
    A = enumerate_automorphisms(cyclic(8))
    assert sorted(row[1] for row in A.maps.tolist()) == [1, 3, 5, 7]


def test_order_cap_and_budget():
    with pytest.raises(GroupError):
        enumerate_automorphisms(cyclic(70))
    with pytest.raises(SearchBudgetExceeded):
        enumerate_automorphisms(elementary_abelian(2, 4), budget=50)


def test_inner_automorphisms():
    assert len(inner_automorphisms(cyclic(5), aut_of(cyclic(5)))) == 1
    S3 = symmetric(3)
    assert len(inner_automorphisms(S3, aut_of(S3))) == 6
    Q8 = dicyclic(2)
    assert len(inner_automorphisms(Q8, aut_of(Q8))) == 4


def test_orbit_examples():
    assert orbits(cyclic(4), aut_of(cyclic(4))).orbits == ((0,), (1, 3), (2,))
    S3 = symmetric(3)
    orb = orbits(S3, aut_of(S3))
    assert sorted(len(o) for o in orb.orbits) == [1, 2, 3]
    assert orbits(cyclic(1), aut_of(cyclic(1))).orbits == ((0,),)


def test_stabilizer_examples():
    Z4 = cyclic(4)
    A = aut_of(Z4)
    assert aut_stabilizer(Z4, A, 0) == (0, 1)
    assert aut_stabilizer(Z4, A, 1) == (0,)
    assert aut_stabilizer(Z4, A, 2) == (0, 1)


def test_acentralizer_examples():
    Z4, Z3 = cyclic(4), cyclic(3)
    assert acentralizer(Z4, aut_of(Z4)[0]).order == 4
    assert acentralizer(Z4, aut_of(Z4)[1]).members == (0, 2)
    assert acentralizer(Z3, aut_of(Z3)[1]).members == (0,)


def test_pointwise_stabilizer_examples():
    for G in (cyclic(4), symmetric(3), dicyclic(2)):
        assert pointwise_stabilizer(G, aut_of(G)) == (0,)


def test_composition_order():
    Z5 = cyclic(5)
    A = aut_of(Z5)
    # maps[s] o maps[a] applies a first
    for s in range(A.order):
        for a in range(A.order):
            c = A.maps[A.compose(s, a)]
            assert [int(c[x]) for x in range(5)] == [int(A.maps[s][A.maps[a][x]]) for x in range(5)]


@pytest.mark.parametrize("G", corpus_params(10))
def test_matches_bijection_oracle(G):
    expected = sorted(automorphisms_by_bijections(G.table.tolist()))
    got = sorted(tuple(r) for r in aut_of(G).maps.tolist())
    assert got == expected


@pytest.mark.parametrize("G", corpus_params(24))
def test_orbit_stabilizer_law(G):
    A = aut_of(G)
    orb = orbits(G, A)
    for x in range(G.order):
        assert orb.size(x) * len(aut_stabilizer(G, A, x)) == A.order


@pytest.mark.parametrize("G", corpus_params(24))
def test_automorphisms_are_valid(G):
    assert aut_of(G).is_valid()


@pytest.mark.parametrize("G", corpus_params(24))
def test_inner_count(G):
    assert len(inner_automorphisms(G, aut_of(G))) == G.order // center(G).order


@pytest.mark.parametrize("G", corpus_params(24))
def test_orbits_preserve_element_order(G):
    for orb in orbits(G, aut_of(G)).orbits:
        assert len({G.element_order(x) for x in orb}) == 1


@pytest.mark.parametrize("G", corpus_params(12))
def test_closure_fixpoint(G):
    A = aut_of(G)
    assert A.is_closed()
    assert A.as_group().order == A.order
