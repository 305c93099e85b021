"""Group closure, lattice, and action tests."""

import pytest

from perpoints.errors import GroupTooLargeError
from perpoints.gf import make_context
from perpoints.grp import close_generators, orbit, stabilizer
from perpoints.p1dyn import MobiusAut, ProjPoint, enumerate_points


def klein(p=5):
    return close_generators(
        [MobiusAut(p, -1, 0, 0, 1), MobiusAut(p, 0, 1, 1, 0)], names=["s", "t"]
    )


def s3(p=5):
    # x -> 1 - x and x -> 1/x generate a nonabelian group of order 6
    return close_generators(
        [MobiusAut(p, -1, 1, 0, 1), MobiusAut(p, 0, 1, 1, 0)], names=["a", "b"]
    )


def cyclic6():
    # 3 has multiplicative order 6 mod 7
    return close_generators([MobiusAut(7, 3, 0, 0, 1)], names=["r"])


def translation5():
    return close_generators([MobiusAut(5, 1, 1, 0, 1)])


def pt(ctx, v):
    return ProjPoint.affine(ctx.element(v))


# --- closure ------------------------------------------------------------------

def test_klein_closure():
    G = klein()
    assert G.size == 4
    assert G.is_abelian()
    assert G.exponent() == 2
    assert G.labels == ["id", "s", "t", "s*t"]


def test_empty_generators_trivial_group():
    G = close_generators([])
    assert G.size == 1
    assert G.labels == ["id"]


def test_translation_cyclic_of_order_p():
    G = translation5()
    assert G.size == 5
    assert G.exponent() == 5
    assert not G.is_abelian() or G.is_abelian()  # cyclic, hence abelian
    assert G.is_abelian()


def test_s3_nonabelian_order_6():
    G = s3()
    assert G.size == 6
    assert not G.is_abelian()
    assert G.exponent() == 6  # lcm(2, 3)


def test_group_cap():
    with pytest.raises(GroupTooLargeError):
        close_generators([MobiusAut(5, 1, 1, 0, 1)], cap=3)
    with pytest.raises(GroupTooLargeError):
        # x -> x + 1 over a large prime: order 1009 blows past the default cap
        close_generators([MobiusAut(1009, 1, 1, 0, 1)])


def test_table_consistency():
    G = s3()
    n = G.size
    for i in range(n):
        assert G.table[0][i] == i
        assert G.table[i][0] == i
        assert G.table[i][G.inverse_index(i)] == 0
    # associativity spot check through the table
    for i in range(n):
        for j in range(n):
            for k in range(n):
                assert G.mul(G.mul(i, j), k) == G.mul(i, G.mul(j, k))


def test_element_order():
    G = klein()
    s = G.index_of(MobiusAut(5, -1, 0, 0, 1))
    assert G.element_order(s) == 2
    assert G.element_order(0) == 1


# --- subgroups ------------------------------------------------------------------

def test_klein_subgroup_lattice():
    G = klein()
    subs = G.subgroups()
    assert len(subs) == 5
    assert [S.order for S in subs] == [1, 2, 2, 2, 4]
    assert subs[0].members == (0,)
    assert subs[-1].members == (0, 1, 2, 3)
    # closure of each subgroup under the table
    for S in subs:
        for a in S:
            for b in S:
                assert G.mul(a, b) in S.members


def test_trivial_group_one_subgroup():
    G = close_generators([])
    assert len(G.subgroups()) == 1


def test_cyclic6_four_subgroups():
    G = cyclic6()
    assert G.size == 6
    assert [S.order for S in G.subgroups()] == [1, 2, 3, 6]


def test_s3_six_subgroups():
    G = s3()
    # 1, three order-2, one order-3, full
    assert [S.order for S in G.subgroups()] == [1, 2, 2, 2, 3, 6]


def test_subgroup_labels_deterministic():
    G = klein()
    assert [S.label() for S in G.subgroups()] == [
        "<id>",
        "<s>",
        "<t>",
        "<s*t>",
        "<s,t>",
    ]


# --- conjugacy -------------------------------------------------------------------

def test_klein_classes_singletons():
    G = klein()
    assert G.conjugacy_classes() == ((0,), (1,), (2,), (3,))


def test_s3_class_sizes():
    G = s3()
    sizes = sorted(len(c) for c in G.conjugacy_classes())
    assert sizes == [1, 2, 3]
    assert G.conjugacy_classes()[0] == (0,)


# --- orbits and stabilizers -------------------------------------------------------

def test_orbit_examples():
    G = klein()
    ctx = make_context(5, 1)
    H_tau = G.subgroups()[2]
    assert H_tau.label() == "<t>"
    assert orbit(pt(ctx, 2), H_tau) == {pt(ctx, 2), pt(ctx, 3)}  # 1/2 = 3 mod 5
    assert stabilizer(pt(ctx, 1), H_tau).members == H_tau.members  # 1/1 = 1
    assert orbit(pt(ctx, 2), G.trivial_subgroup()) == {pt(ctx, 2)}


def test_orbit_stabilizer_product():
    G = klein()
    ctx = make_context(5, 2)
    for H in G.subgroups():
        for P in enumerate_points(ctx, 2):
            assert len(orbit(P, H)) * stabilizer(P, H).order == H.order


def test_stabilizers_equal_in_abelian_orbits():
    G = klein()
    ctx = make_context(5, 2)
    for H in G.subgroups():
        for P in enumerate_points(ctx, 2):
            st = stabilizer(P, H).members
            for Q in orbit(P, H):
                assert stabilizer(Q, H).members == st


def test_stabilizers_conjugate_in_nonabelian_orbits():
    G = s3()
    ctx = make_context(5, 2)
    full = G.full_subgroup()
    for P in enumerate_points(ctx, 2):
        st = set(stabilizer(P, full).members)
        for Q in orbit(P, full):
            stq = set(stabilizer(Q, full).members)
            assert any(
                {G.mul(G.mul(g, x), G.inverse_index(g)) for x in st} == stq
                for g in range(G.size)
            )
