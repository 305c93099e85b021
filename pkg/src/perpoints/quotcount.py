"""Point and periodic-point counts on quotients of P^1 by subgroups of the
automorphism group, computed through Galois-stable orbits.

Quotient varieties are never constructed: for P^1 and a finite subgroup H
the geometric points of the quotient are the H-orbits, and the F_{q^n}
points are the orbits carried to themselves by the n-fold Frobenius.  Any
point of such an orbit satisfies Q^(q^n) = h(Q) for a single h in H, hence
lies in F_{q^(n*ord(h))}, so scanning P^1(F_{q^(n*exponent(H))}) sees every
stable orbit; that keeps the working fields minimal.

An orbit downstairs is periodic exactly when its members are periodic
upstairs (the map commutes with H), and members agree on periodicity; that
agreement is asserted during every scan.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MismatchError
from .grp import Subgroup
from .p1dyn import RationalMap, enumerate_points, periodic_set
from .system import DynSystem


@dataclass
class OrbitScan:
    """Stable-orbit census of one (subgroup, extension) pair."""

    subgroup: Subgroup
    n: int
    total: int
    periodic: int
    representatives: list = field(repr=False)
    periodic_representatives: list = field(repr=False)


def _scan(sys: DynSystem, H: Subgroup, n: int) -> OrbitScan:
    key = (H.members, n)
    cached = sys.orbit_cache.get(key)
    if cached is not None:
        return cached
    m = n * H.exponent()
    A = sys.arena(m)
    fr = A.frob_power(n)
    perms = [A.gperm(i) for i in H.members]
    per = A.periodic
    visited = bytearray(A.size)
    total = periodic_cnt = 0
    reps = []
    per_reps = []
    for i in range(A.size):
        if visited[i]:
            continue
        orb = {pm[i] for pm in perms}
        flag = per[i]
        for j in orb:
            visited[j] = 1
            assert per[j] == flag, "orbit mixes periodic and non-periodic points"
        if fr[i] in orb:
            total += 1
            reps.append(i)
            if flag:
                periodic_cnt += 1
                per_reps.append(i)
    result = OrbitScan(H, n, total, periodic_cnt, reps, per_reps)
    sys.orbit_cache[key] = result
    return result


def quotient_points(sys: DynSystem, H: Subgroup, n: int) -> int:
    """|(P^1/H)(F_{q^n})|: Galois-stable H-orbits."""
    return _scan(sys, H, n).total


def quotient_periodic(sys: DynSystem, H: Subgroup, n: int) -> int:
    """Periodic points of the induced map on the quotient, over F_{q^n}:
    Galois-stable H-orbits consisting of periodic points."""
    return _scan(sys, H, n).periodic


def stable_orbit_representatives(sys, H, n, periodic_only=False):
    """One point per Galois-stable orbit (debugging/verbose output)."""
    scan = _scan(sys, H, n)
    A = sys.arena(n * H.exponent())
    idxs = scan.periodic_representatives if periodic_only else scan.representatives
    return [A.point(i) for i in idxs]


@dataclass
class CountTable:
    """Counts per (subgroup position, extension degree n)."""

    mode: str  # "periodic" or "points"
    entries: dict

    def get(self, subgroup_pos: int, n: int) -> int:
        return self.entries[(subgroup_pos, n)]


def count_table(sys: DynSystem, ns, mode: str = "periodic") -> CountTable:
    if mode not in ("periodic", "points"):
        raise ValueError("mode must be 'periodic' or 'points'")
    counter = quotient_periodic if mode == "periodic" else quotient_points
    entries = {}
    for pos, H in enumerate(sys.group.subgroups()):
        for n in ns:
            entries[(pos, n)] = counter(sys, H, n)
    return CountTable(mode, entries)


def verify_relation(sys: DynSystem, rel, ns, mode: str = "periodic"):
    """Residual sum n_H * count(H, n) for each n; zero residuals are what the
    idempotent relation predicts when it passes the sim-zero test."""
    counter = quotient_periodic if mode == "periodic" else quotient_points
    subs = sys.group.subgroups()
    if len(rel.coeffs) != len(subs):
        raise ValueError("relation vector length does not match subgroup lattice")
    residuals = []
    for n in ns:
        residuals.append(
            sum(c * counter(sys, H, n) for c, H in zip(rel.coeffs, subs) if c)
        )
    return residuals


def cross_check_explicit(
    sys: DynSystem, explicit_map: RationalMap, H: Subgroup, n: int
) -> int:
    """Check an explicitly supplied induced quotient map against orbit
    counting: its periodic-point count over F_{q^n} must equal the stable
    periodic orbit count for H.  Returns the common count."""
    ctx = sys.field(n)
    pts = enumerate_points(ctx, n)
    explicit = len(periodic_set(explicit_map, pts))
    orbit_count = quotient_periodic(sys, H, n)
    if explicit != orbit_count:
        raise MismatchError(
            f"explicit quotient map counts {explicit} periodic points over "
            f"F_{ctx.order} but orbit counting for {H.label()} gives {orbit_count}",
            left=explicit,
            right=orbit_count,
        )
    return explicit
