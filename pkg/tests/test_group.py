import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from autocomm.catalog import cyclic, dicyclic, dihedral, elementary_abelian, standard_corpus, symmetric
from autocomm.errors import GroupError, NoIdentity, NoInverse, NotAssociative, NotClosed, NotNormal
from autocomm.group import (
    GroupMap,
    Subgroup,
    center,
    derived_subgroup,
    direct_product,
    is_isomorphic,
    make_group,
    minimal_generating_set,
    quotient,
    subgroup_generated_by,
)

from conftest import corpus_params
from oracles import element_order, is_hom, s3_table_by_hand


def test_trivial_group():
    G = make_group([[0]])
    assert G.order == 1
    assert G.inverses.tolist() == [0]


def test_z2():
    G = make_group([[0, 1], [1, 0]])
    assert G.order == 2 and G.inv(1) == 1


def test_s3_from_hand_composition():
    table, perms = s3_table_by_hand()
    G = make_group(table, ["".join(map(str, p)) for p in perms])
    orders = [element_order(table, x) for x in range(6)]
    assert orders.count(3) == 2
    assert G.element_orders.tolist() == orders
    assert not G.is_abelian


def test_identity_is_moved_to_front():
    # Z3 with the identity stored at index 2
    t = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    G = make_group(t, ["a", "b", "e"])
    assert G.labels[0] == "e"
    assert G.table[0].tolist() == [0, 1, 2]


@pytest.mark.parametrize(
    "table, err",
    [
        ([[0, 1], [1, 2]], NotClosed),
        ([[1, 0], [1, 0]], NoIdentity),
        ([[0, 1, 2], [1, 1, 1], [2, 1, 0]], NoInverse),
        # Latin square loop of order 5, every element self-inverse
        ([[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]], NotAssociative),
    ],
)
def test_rejects_bad_tables(table, err):
    with pytest.raises(err):
        make_group(table)


def test_large_table_needs_trust():
    n = 600
    ar = np.arange(n)
    with pytest.raises(GroupError):
        make_group((ar[:, None] + ar[None, :]) % n)
    assert make_group((ar[:, None] + ar[None, :]) % n, trusted=True).order == n


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(["Z6", "S3", "D4", "Q8", "Z2^3", "Z3^2", "A4"]),
    st.integers(0, 10**6),
    st.integers(0, 10**6),
    st.integers(1, 10**6),
)
def test_single_entry_mutation_is_rejected(name, i, j, shift):
    G = {H.name: H for H in standard_corpus(12)}[name]
    t = G.table.copy()
    n = G.order
    i, j = i % n, j % n
    t[i, j] = (t[i, j] + shift % (n - 1) + 1) % n
    with pytest.raises(GroupError):
        make_group(t)


def test_generated_subgroups():
    Z4 = cyclic(4)
    assert subgroup_generated_by(Z4, []).members == (0,)
    assert subgroup_generated_by(Z4, [2]).members == (0, 2)
    S3 = symmetric(3)
    three_cycles = [x for x in range(6) if S3.element_order(x) == 3]
    for c in three_cycles:
        assert subgroup_generated_by(S3, [c]).members == tuple(sorted([0] + three_cycles))


def test_center():
    assert center(cyclic(5)).order == 5
    assert center(symmetric(3)).members == (0,)
    Q8 = dicyclic(2)
    Z = center(Q8)
    assert Z.order == 2
    assert [Q8.labels[x] for x in Z] == ["a^0", "a^2"]  # 1 and -1


def test_derived_subgroup():
    assert derived_subgroup(cyclic(6)).members == (0,)
    S3 = symmetric(3)
    assert derived_subgroup(S3).members == tuple(x for x in range(6) if S3.element_order(x) in (1, 3))
    D4 = dihedral(4)
    assert [D4.labels[x] for x in derived_subgroup(D4)] == ["r^0", "r^2"]


def test_quotients():
    G = symmetric(3)
    Q, proj = quotient(G, Subgroup(G, tuple(range(6))))
    assert Q.order == 1
    Z4 = cyclic(4)
    Q, proj = quotient(Z4, Subgroup(Z4, (0, 2)))
    assert Q.order == 2 and proj.images == (0, 1, 0, 1)
    Q, _ = quotient(G, derived_subgroup(G))
    assert Q.order == 2


def test_quotient_rejects_non_normal():
    G = symmetric(3)
    transposition = next(x for x in range(6) if G.element_order(x) == 2)
    with pytest.raises(NotNormal):
        quotient(G, subgroup_generated_by(G, [transposition]))


def test_direct_products():
    Z1, Z2 = cyclic(1), cyclic(2)
    assert is_isomorphic(direct_product(Z1, Z2), Z2) is not None
    V = direct_product(Z2, Z2)
    assert V.element_orders.max() == 2 and V.order == 4
    Z12 = direct_product(cyclic(3), cyclic(4))
    assert Z12.element_order(1 * 4 + 1) == 12


def test_isomorphism_examples():
    assert is_isomorphic(cyclic(4), elementary_abelian(2, 2)) is None
    iso = is_isomorphic(cyclic(6), direct_product(cyclic(2), cyclic(3)))
    assert iso is not None and iso.is_bijective()
    assert is_hom(iso.source.table.tolist(), iso.target.table.tolist(), iso.images)
    G = dihedral(5)
    assert is_isomorphic(G, G).images == tuple(range(10))


def test_minimal_generating_set_generates():
    for G in standard_corpus(16):
        gens = minimal_generating_set(G)
        assert subgroup_generated_by(G, gens).order == G.order


def test_group_map_rejects_non_homomorphism():
    Z4 = cyclic(4)
    with pytest.raises(GroupError):
        GroupMap(Z4, Z4, (0, 2, 1, 3))


@pytest.mark.parametrize("G", corpus_params(24))
def test_center_and_derived_are_normal(G):
    assert center(G).is_normal()
    assert derived_subgroup(G).is_normal()


@pytest.mark.parametrize("G", corpus_params(16))
def test_lagrange_on_cyclic_subgroups(G):
    for x in range(G.order):
        assert G.order % subgroup_generated_by(G, [x]).order == 0


@pytest.mark.parametrize("G", corpus_params(16))
def test_projection_is_surjective_homomorphism(G):
    for N in (center(G), derived_subgroup(G)):
        Q, proj = quotient(G, N)
        assert proj.is_surjective()
        assert is_hom(G.table.tolist(), Q.table.tolist(), proj.images)


def test_isomorphism_symmetric_and_reflexive():
    Z6, P = cyclic(6), direct_product(cyclic(2), cyclic(3))
    assert is_isomorphic(Z6, P) is not None and is_isomorphic(P, Z6) is not None
    groups = standard_corpus(24)
    for G in groups:
        assert is_isomorphic(G, G) is not None
    for i, G in enumerate(groups):
        for H in groups[i + 1:]:
            # corpus is duplicate-free, so both directions must say no
            assert is_isomorphic(G, H) is None
            assert is_isomorphic(H, G) is None
