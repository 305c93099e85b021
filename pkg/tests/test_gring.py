"""Group ring, induced characters, and relation lattice tests.

The relation-lattice oracle is hand-solvable for the Klein four-group: with
subgroups ordered (trivial, <s>, <t>, <s*t>, full) the character matrix is

        [4 0 0 0; 2 2 0 0; 2 0 2 0; 2 0 0 2; 1 1 1 1]

whose integer left kernel is spanned by (1, -1, -1, -1, 2).
"""

from fractions import Fraction

from perpoints.grp import close_generators
from perpoints.gring import (
    ClassFunction,
    GroupRingElt,
    RelationVector,
    character_matrix,
    frobenius_pairing_check,
    idempotent,
    in_relation_lattice,
    induced_trivial_character,
    is_sim_zero,
    partition_relations,
    relation_lattice_basis,
)
from perpoints.p1dyn import MobiusAut


def klein():
    return close_generators(
        [MobiusAut(5, -1, 0, 0, 1), MobiusAut(5, 0, 1, 1, 0)], names=["s", "t"]
    )


def s3():
    return close_generators(
        [MobiusAut(5, -1, 1, 0, 1), MobiusAut(5, 0, 1, 1, 0)], names=["a", "b"]
    )


def cyclic5():
    return close_generators([MobiusAut(5, 1, 1, 0, 1)])


def dihedral8():
    # 2 has order 4 mod 5: x -> 2x and x -> 1/x
    return close_generators([MobiusAut(5, 2, 0, 0, 1), MobiusAut(5, 0, 1, 1, 0)])


def dihedral16():
    # 2 has order 8 mod 17
    return close_generators([MobiusAut(17, 2, 0, 0, 1), MobiusAut(17, 0, 1, 1, 0)])


ALL_GROUPS = [klein, cyclic5, s3, dihedral8, dihedral16, lambda: close_generators([])]


# --- idempotents ---------------------------------------------------------------

def test_idempotent_coefficients():
    G = klein()
    triv, hs = G.subgroups()[0], G.subgroups()[1]
    assert idempotent(triv).coeffs == (Fraction(1), 0, 0, 0)
    e = idempotent(hs)
    assert e.coeffs == (Fraction(1, 2), Fraction(1, 2), 0, 0)


def test_idempotency_all_groups_up_to_16():
    for make in ALL_GROUPS:
        G = make()
        assert G.size <= 16
        for S in G.subgroups():
            e = idempotent(S)
            assert e * e == e


def test_group_ring_multiplication():
    G = klein()
    # s * t = s*t in the ring
    s = GroupRingElt(G, (0, Fraction(1), 0, 0))
    t = GroupRingElt(G, (0, 0, Fraction(1), 0))
    st = s * t
    assert st.coeffs == (0, 0, 0, Fraction(1))


# --- induced characters ----------------------------------------------------------

def test_full_subgroup_gives_trivial_character():
    G = klein()
    chi = induced_trivial_character(G.full_subgroup())
    assert chi.values == (1, 1, 1, 1)


def test_trivial_subgroup_gives_regular_character():
    G = klein()
    chi = induced_trivial_character(G.trivial_subgroup())
    assert chi.values == (4, 0, 0, 0)


def test_klein_hs_character():
    G = klein()
    hs = G.subgroups()[1]
    assert hs.label() == "<s>"
    # two cosets {id, s} and {t, s*t}; both fixed by id and s, neither by t
    assert induced_trivial_character(hs).values == (2, 2, 0, 0)


def test_character_values_bounds():
    for make in ALL_GROUPS:
        G = make()
        for S in G.subgroups():
            chi = induced_trivial_character(S)
            index = G.size // S.order
            assert chi.values[0] == index
            assert all(0 <= v <= index for v in chi.values)


def test_conjugate_subgroups_same_character():
    G = s3()
    order2 = [S for S in G.subgroups() if S.order == 2]
    assert len(order2) == 3
    chars = {induced_trivial_character(S).values for S in order2}
    assert len(chars) == 1


# --- sim-zero test ----------------------------------------------------------------

def test_klein_fixture_relation_sim_zero():
    G = klein()
    # order of subgroups: trivial, <s>, <t>, <s*t>, G
    rel = RelationVector(G, (1, -1, -1, -1, 2))
    assert is_sim_zero(rel)


def test_zero_vector_sim_zero():
    G = klein()
    assert is_sim_zero(RelationVector(G, (0, 0, 0, 0, 0)))


def test_single_idempotent_not_sim_zero():
    G = klein()
    assert not is_sim_zero(RelationVector(G, (0, 0, 0, 0, 1)))
    assert not is_sim_zero(RelationVector(G, (1, 0, 0, 0, 0)))


# --- relation lattice --------------------------------------------------------------

def test_klein_character_matrix():
    assert character_matrix(klein()) == [
        [4, 0, 0, 0],
        [2, 2, 0, 0],
        [2, 0, 2, 0],
        [2, 0, 0, 2],
        [1, 1, 1, 1],
    ]


def test_klein_lattice_rank_one():
    basis = relation_lattice_basis(klein())
    assert len(basis) == 1
    assert basis[0].coeffs == (1, -1, -1, -1, 2)


def test_cyclic_prime_lattice_empty():
    assert relation_lattice_basis(cyclic5()) == []


def test_trivial_group_lattice_empty():
    assert relation_lattice_basis(close_generators([])) == []


def test_basis_vectors_all_sim_zero():
    for make in ALL_GROUPS:
        for rel in relation_lattice_basis(make()):
            assert is_sim_zero(rel)


def test_conjugate_subgroup_differences_in_lattice():
    G = s3()
    subs = G.subgroups()
    order2 = [i for i, S in enumerate(subs) if S.order == 2]
    for i in order2[1:]:
        coeffs = [0] * len(subs)
        coeffs[order2[0]] = 1
        coeffs[i] = -1
        rel = RelationVector(G, tuple(coeffs))
        assert is_sim_zero(rel)
        assert in_relation_lattice(G, rel)


def test_lattice_membership_rejects_non_members():
    G = klein()
    assert not in_relation_lattice(G, RelationVector(G, (1, 0, 0, 0, 0)))
    # a multiple of the basis vector stays inside
    assert in_relation_lattice(G, RelationVector(G, (3, -3, -3, -3, 6)))


# --- partitions ----------------------------------------------------------------------

def test_klein_partition():
    G = klein()
    rels = partition_relations(G)
    assert len(rels) == 1
    parts, rel = rels[0]
    assert sorted(S.order for S in parts) == [2, 2, 2]
    assert rel.coeffs == (1, -1, -1, -1, 2)


def test_cyclic_groups_have_no_partition():
    assert partition_relations(cyclic5()) == []
    assert partition_relations(close_generators([])) == []


def test_s3_partition():
    G = s3()
    rels = partition_relations(G)
    assert len(rels) == 1
    parts, rel = rels[0]
    assert sorted(S.order for S in parts) == [2, 2, 2, 3]
    assert is_sim_zero(rel)
    assert in_relation_lattice(G, rel)


def test_partition_relations_lie_in_lattice():
    for make in ALL_GROUPS:
        G = make()
        for _, rel in partition_relations(G):
            assert in_relation_lattice(G, rel)


# --- frobenius pairing -----------------------------------------------------------------

def test_pairing_full_subgroup_trivial_character():
    G = klein()
    full = G.full_subgroup()
    psi = induced_trivial_character(full)
    assert frobenius_pairing_check(full, psi)


def test_pairing_klein_cross():
    G = klein()
    hs, ht = G.subgroups()[1], G.subgroups()[2]
    psi_t = induced_trivial_character(ht)
    # both sides equal 1 here:
    # left = (psi_t(id) + psi_t(s)) / 2 = (2 + 0)/2, right = (2*2)/4
    assert frobenius_pairing_check(hs, psi_t)


def test_pairing_all_pairs_all_groups():
    for make in ALL_GROUPS:
        G = make()
        chars = [induced_trivial_character(S) for S in G.subgroups()]
        for H in G.subgroups():
            for psi in chars:
                assert frobenius_pairing_check(H, psi)


def test_pairing_trivial_subgroup():
    G = klein()
    triv = G.trivial_subgroup()
    for S in G.subgroups():
        psi = induced_trivial_character(S)
        assert frobenius_pairing_check(triv, psi)


# --- class function arithmetic -----------------------------------------------------------

def test_class_function_addition():
    G = klein()
    a = induced_trivial_character(G.subgroups()[1])
    b = induced_trivial_character(G.subgroups()[2])
    s = a + b
    assert s.values == (4, 2, 2, 0)
    assert ClassFunction.zero(G).is_zero()
    assert (2 * a).values == (4, 4, 0, 0)
