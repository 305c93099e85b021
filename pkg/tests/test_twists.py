"""Twist enumeration, per-twist counts, averaging, and incidence tests.

Frozen per-twist periodic counts for the worked example over F_5, in group
element order (id, s, t, s*t): (6, 2, 2, 6), hand-derived as rational fixed
points of each automorphism plus the periodic order-12 field elements for
s*t; the sum 16 averages to the quotient count 4.  Over F_7 each twist
counts 4 and the sum is again 16.
"""

import pytest

from perpoints.errors import NotAbelianError
from perpoints.gf import make_context
from perpoints.p1dyn import MobiusAut, ProjPoint, RationalMap
from perpoints.quotcount import quotient_points
from perpoints.system import DynSystem
from perpoints.twists import (
    Twist,
    enumerate_twists,
    incidence_check,
    twist_average_check,
    twisted_count,
    twisted_periodic_count,
)


def fixture_system(p):
    return DynSystem.from_affine(
        p,
        [0, 2, 0, 1],
        [1, 0, 2],
        [MobiusAut(p, -1, 0, 0, 1), MobiusAut(p, 0, 1, 1, 0)],
        generator_names=["s", "t"],
    )


SYS5 = fixture_system(5)
SYS7 = fixture_system(7)


# --- enumeration ---------------------------------------------------------------

def test_enumerate_twists_klein():
    twists = enumerate_twists(SYS5.group)
    assert len(twists) == 4
    assert [t.chi_image for t in twists] == [0, 1, 2, 3]
    assert [t.label() for t in twists] == ["id", "s", "t", "s*t"]


def test_enumerate_twists_trivial_group():
    sys = DynSystem.from_affine(5, [0, 2, 0, 1], [1, 0, 2], [])
    assert len(enumerate_twists(sys.group)) == 1


def test_enumerate_twists_cyclic5():
    sys = DynSystem(5, RationalMap.identity(5), [MobiusAut(5, 1, 1, 0, 1)])
    assert len(enumerate_twists(sys.group)) == 5


def test_enumerate_twists_rejects_nonabelian():
    sys = DynSystem(
        5,
        RationalMap.identity(5),
        [MobiusAut(5, -1, 1, 0, 1), MobiusAut(5, 0, 1, 1, 0)],
    )
    with pytest.raises(NotAbelianError):
        enumerate_twists(sys.group)


# --- per-twist counts -------------------------------------------------------------

def test_trivial_twist_counts_rational_periodic_points():
    t0 = enumerate_twists(SYS5.group)[0]
    assert twisted_periodic_count(SYS5, t0) == 6
    t0 = enumerate_twists(SYS7.group)[0]
    assert twisted_periodic_count(SYS7, t0) == 4


def test_per_twist_counts_f5():
    counts = [twisted_periodic_count(SYS5, t) for t in enumerate_twists(SYS5.group)]
    assert counts == [6, 2, 2, 6]
    assert sum(counts) == 16


def test_per_twist_counts_f7():
    counts = [twisted_periodic_count(SYS7, t) for t in enumerate_twists(SYS7.group)]
    assert counts == [4, 4, 4, 4]
    assert sum(counts) == 16


def test_twisted_count_matches_perfix_at_higher_n():
    for sys in (SYS5, SYS7):
        for t in enumerate_twists(sys.group):
            for n in (1, 2):
                assert twisted_periodic_count(sys, t, n) == sys.per_fix(t.chi_image, n)


# --- averaging identity --------------------------------------------------------------

@pytest.mark.parametrize("sys,lhs", [(SYS5, 4), (SYS7, 4)], ids=["F5", "F7"])
def test_twist_average_periodic(sys, lhs):
    report = twist_average_check(sys)
    assert report.equal
    assert report.quotient_count == lhs
    assert report.twist_sum == 16
    assert report.average == lhs


def test_twist_average_trivial_group():
    sys = DynSystem.from_affine(5, [0, 2, 0, 1], [1, 0, 2], [])
    report = twist_average_check(sys)
    assert report.equal
    assert report.quotient_count == 6  # |Per(P^1(F_5))|


def test_twist_average_all_points_mode():
    # the all-points analogue: |(P^1/G)(F_q)| = average of twisted point counts
    for sys, q in ((SYS5, 5), (SYS7, 7)):
        report = twist_average_check(sys, periodic_only=False)
        assert report.equal
        assert report.quotient_count == q + 1  # quotient of P^1 is P^1


def test_twist_average_over_extension_bases():
    # replacing q by q^n: the identity holds with n-fold Frobenius throughout
    for sys, ns in ((SYS5, (2, 3)), (SYS7, (2,))):
        for n in ns:
            report = twist_average_check(sys, n=n)
            assert report.equal
            report = twist_average_check(sys, n=n, periodic_only=False)
            assert report.equal


# --- incidence structure ----------------------------------------------------------------

def test_incidence_totals_are_group_order():
    for sys in (SYS5, SYS7):
        reports = incidence_check(sys)
        assert len(reports) == quotient_points(sys, sys.group.full_subgroup(), 1)
        for rec in reports:
            assert rec.ok
            assert rec.total == 4
            assert rec.orbit_size * rec.stabilizer_order == 4


def test_incidence_orbit_of_zero():
    # the orbit {0, inf} has stabilizer <s> of order 2: two members, two
    # twists each
    reports = incidence_check(SYS5)
    ctx = make_context(5, 2)
    zero = ProjPoint.affine(ctx.zero())
    rec = next(r for r in reports if r.representative == zero)
    assert rec.orbit_size == 2
    assert rec.stabilizer_order == 2
    assert rec.member_twist_counts == [2, 2]


def test_incidence_free_orbit():
    # any orbit of size 4 has trivial stabilizer: one twist per member
    reports = incidence_check(SYS5)
    free = [r for r in reports if r.orbit_size == 4]
    assert free, "the worked example has free stable orbits"
    for rec in free:
        assert rec.stabilizer_order == 1
        assert rec.member_twist_counts == [1, 1, 1, 1]


def test_incidence_periodic_only_subset():
    all_orbits = incidence_check(SYS5)
    per_orbits = incidence_check(SYS5, periodic_only=True)
    assert len(per_orbits) == 4  # |Per((P^1/G)(F_5))|
    assert len(per_orbits) <= len(all_orbits)
    for rec in per_orbits:
        assert rec.periodic and rec.ok
