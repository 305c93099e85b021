"""Twists of P^1 by an abelian automorphism group, and the averaging
identity tying quotient periodic counts to per-twist counts.

For abelian G acting trivially under Galois, a twist is a homomorphism from
the procyclic absolute Galois group into G, i.e. a choice of image c for the
Frobenius generator.  The twisted variety is never materialized: its
rational points correspond to points Q of P^1 with Q = c(Q^q), checked on
the Frobenius generator alone, and its periodic points are the periodic Q
satisfying the same condition.

twisted_count below scans point sets directly (field elements, map
evaluation, point Frobenius); the per_fix counter in the system module
arrives at the same number through precomputed index permutations.  The two
routes are asserted equal wherever both run.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAbelianError
from .grp import AutGroup, orbit, stabilizer
from .p1dyn import enumerate_points, frobenius_point, periodic_set
from .quotcount import quotient_periodic, quotient_points
from .system import DynSystem


@dataclass(frozen=True)
class Twist:
    """A twist class: the image of the Frobenius generator in G."""

    group: AutGroup
    chi_image: int

    def label(self) -> str:
        return self.group.labels[self.chi_image]


def enumerate_twists(G: AutGroup):
    """One twist per group element; requires G abelian (so twist classes are
    plain homomorphisms from the procyclic Galois group)."""
    if not G.is_abelian():
        raise NotAbelianError("twists are enumerated only for abelian groups")
    return [Twist(G, i) for i in range(G.size)]


def _point_pool(sys: DynSystem, m: int, periodic_only: bool):
    """Point list of P^1(F_{q^m}) and, when asked, its periodic subset; the
    object-level scan is cached per degree since every twist shares it."""
    cache = getattr(sys, "_twist_pool", None)
    if cache is None:
        cache = sys._twist_pool = {}
    key = (m, periodic_only)
    if key not in cache:
        pts = enumerate_points(sys.field(m), m)
        cache[key] = periodic_set(sys.map, pts) if periodic_only else pts
    return cache[key]


def twisted_count(sys: DynSystem, twist: Twist, n: int = 1, periodic_only: bool = True) -> int:
    """Rational points of the twisted line over F_{q^n}, counted upstairs as
    points Q with Q = c(Q^(q^n)); with periodic_only, just the periodic ones.

    Direct scan: the search space P^1(F_{q^(n*ord(c))}) is complete because
    iterating the twisted condition ord(c) times traps Q in that field.
    """
    G = sys.group
    c = twist.chi_image
    aut = G.elements[c]
    m = n * G.element_order(c)
    pool = _point_pool(sys, m, periodic_only)
    return sum(1 for P in pool if aut(frobenius_point(P, n)) == P)


def twisted_periodic_count(sys: DynSystem, twist: Twist, n: int = 1) -> int:
    """Periodic F_{q^n}-points of the twisted system; asserted against the
    permutation-table counter, which scans the same condition."""
    count = twisted_count(sys, twist, n, periodic_only=True)
    assert count == sys.per_fix(twist.chi_image, n)
    return count


@dataclass
class TwistAverageReport:
    n: int
    periodic_only: bool
    quotient_count: int
    twist_counts: list
    twist_sum: int
    average: int
    equal: bool


def twist_average_check(sys: DynSystem, n: int = 1, periodic_only: bool = True) -> TwistAverageReport:
    """The averaging identity: the quotient count over F_{q^n} equals the
    average over all twists of the twisted counts.  Divisibility of the twist
    sum by |G| is asserted before dividing."""
    G = sys.group
    twists = enumerate_twists(G)
    full = G.full_subgroup()
    if periodic_only:
        lhs = quotient_periodic(sys, full, n)
    else:
        lhs = quotient_points(sys, full, n)
    counts = [twisted_count(sys, t, n, periodic_only) for t in twists]
    total = sum(counts)
    assert total % G.size == 0, "twist sum must be divisible by the group order"
    rhs = total // G.size
    return TwistAverageReport(n, periodic_only, lhs, counts, total, rhs, lhs == rhs)


@dataclass
class OrbitIncidence:
    """Per-orbit twist incidence data for one rational quotient point."""

    representative: object  # ProjPoint
    orbit_size: int
    stabilizer_order: int
    member_twist_counts: list
    total: int
    periodic: bool

    @property
    def ok(self) -> bool:
        return (
            all(c == self.stabilizer_order for c in self.member_twist_counts)
            and self.total == self.orbit_size * self.stabilizer_order
        )


def incidence_check(sys: DynSystem, n: int = 1, periodic_only: bool = False):
    """Per rational quotient point (Galois-stable G-orbit): every orbit
    member satisfies the twisted condition for exactly |stabilizer| twists,
    and the incidences over the orbit total |G|."""
    G = sys.group
    if not G.is_abelian():
        raise NotAbelianError("incidence counting assumes an abelian group")
    m = n * G.exponent()
    A = sys.arena(m)
    fr = A.frob_power(n)
    perms = [A.gperm(i) for i in range(G.size)]
    per = A.periodic
    visited = bytearray(A.size)
    reports = []
    for i in range(A.size):
        if visited[i]:
            continue
        orb = sorted({pm[i] for pm in perms})
        for j in orb:
            visited[j] = 1
        if fr[i] not in orb:
            continue  # not a rational quotient point
        if periodic_only and not per[i]:
            continue
        stab_order = G.size // len(orb)
        member_counts = [
            sum(1 for c in range(G.size) if perms[c][fr[j]] == j) for j in orb
        ]
        reports.append(
            OrbitIncidence(
                representative=A.point(orb[0]),
                orbit_size=len(orb),
                stabilizer_order=stab_order,
                member_twist_counts=member_counts,
                total=sum(member_counts),
                periodic=bool(per[i]),
            )
        )
    return reports


def stabilizer_order_of_orbit(sys: DynSystem, P) -> int:
    """Order of the stabilizer of a point under the full group (abelian case:
    shared by the whole orbit).  Convenience for spot checks."""
    G = sys.group
    full = G.full_subgroup()
    st = stabilizer(P, full)
    assert len(orbit(P, full)) * st.order == G.size
    return st.order
