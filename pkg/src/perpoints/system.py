"""A rational self-map bundled with its commuting automorphism group and
the per-degree working fields every counting routine draws on.

Each computation that needs the points of P^1(F_{q^m}) gets a field of
degree exactly m, built on demand and cached.  Counts are intrinsic to one
field at a time, so no embeddings between fields are ever needed; the
trade-off against one big common field is that the largest field touched is
q^(nmax * exponent(G)) instead of a least common multiple of degrees, which
is what keeps desk-scale runs inside the size cap.

The cached per-degree "arena" stores index tables over the full point list:
the successor under the map, a periodicity flag from in-degree peeling, the
q-power Frobenius permutation, and one permutation per group element
(generators are evaluated directly; everything else is composed along the
group's BFS provenance).  All hot loops work on coefficient tuples and
integer indices.
"""

from __future__ import annotations

from .errors import MapDoesNotCommuteError
from .gf import DEFAULT_FIELD_CAP, make_context
from .grp import DEFAULT_GROUP_CAP, close_generators
from .p1dyn import MobiusAut, ProjPoint, RationalMap, commutes
from .p1dyn import _peel  # shared peeling core


class _Arena:
    """Index tables for P^1(F_{q^m}); element index i < q^m is the i-th field
    element in enumeration order, and the last index is the point at
    infinity."""

    def __init__(self, sys: "DynSystem", m: int):
        ctx = sys.field(m)
        self.ctx = ctx
        self.m = m
        elems = [a.coeffs for a in ctx.enumerate_subfield(m)]
        size = len(elems) + 1
        self.size = size
        self.inf = size - 1
        self.elems = elems
        index = {t: i for i, t in enumerate(elems)}
        self.elem_index = index

        # inverse table for every nonzero element (extended gcd once per pair)
        inv_table = {}
        tinv = ctx.tinv
        for t in elems:
            if t in inv_table or not any(t):
                continue
            u = tinv(t)
            inv_table[t] = u
            inv_table[u] = t
        self._inv = inv_table

        self.succ = self._map_permutation(sys.map)
        self.periodic = _peel(self.succ)
        self.frob = [index[ctx.tfrob(t, 1)] for t in elems] + [self.inf]
        self._frob_pow = {0: list(range(size)), 1: self.frob}

        # group element permutations: generators by evaluation, the rest by
        # composition along BFS provenance
        G = sys.group
        perms = [None] * G.size
        perms[0] = list(range(size))
        gen_perm = [self._mobius_permutation(g) for g in (G.elements[i] for i in G.gen_positions)]
        for i in range(1, G.size):
            parent, pos = G.provenance[i]
            pp = perms[parent]
            gp = gen_perm[pos]
            # (parent * gen)(P) = parent(gen(P))
            perms[i] = [pp[gp[k]] for k in range(size)]
        self._gperm = perms

    def gperm(self, i: int):
        return self._gperm[i]

    def frob_power(self, n: int):
        base = self._frob_pow
        if n not in base:
            prev = self.frob_power(n - 1)
            f1 = self.frob
            base[n] = [f1[prev[k]] for k in range(self.size)]
        return base[n]

    def point(self, i: int) -> ProjPoint:
        if i == self.inf:
            return ProjPoint.infinity(self.ctx)
        ctx = self.ctx
        from .gf import FieldElement

        return ProjPoint.affine(FieldElement(ctx, self.elems[i]))

    def points(self):
        return [self.point(i) for i in range(self.size)]

    def _map_permutation(self, map_: RationalMap):
        """Successor index of every point under the map."""
        ctx = self.ctx
        if map_.is_identity:
            return list(range(self.size))
        index = self.elem_index
        inv = self._inv
        zero = ctx.tzero()
        tmul, tadd, tsmul, tscalar = ctx.tmul, ctx.tadd, ctx.tsmul, ctx.tscalar
        num, den = map_.num, map_.den
        d = len(num) - 1
        out = []
        for t in self.elems:
            # shared powers 1, t, t^2, ..., t^d
            powers = [ctx.tone()]
            for _ in range(d):
                powers.append(tmul(powers[-1], t))
            fv = zero
            gv = zero
            for i in range(d + 1):
                if num[i]:
                    fv = tadd(fv, tsmul(num[i], powers[i]))
                if den[i]:
                    gv = tadd(gv, tsmul(den[i], powers[i]))
            if gv == zero:
                out.append(self.inf)
            else:
                out.append(index[tmul(fv, inv[gv])])
        # image of infinity: leading coefficients
        fd, gd = num[-1], den[-1]
        if gd == 0:
            out.append(self.inf)
        else:
            p = ctx.p
            out.append(index[tscalar(fd * pow(gd, p - 2, p))])
        return out

    def _mobius_permutation(self, g: MobiusAut):
        ctx = self.ctx
        index = self.elem_index
        inv = self._inv
        zero = ctx.tzero()
        taddscalar, tsmul, tmul, tscalar = (
            ctx.taddscalar,
            ctx.tsmul,
            ctx.tmul,
            ctx.tscalar,
        )
        a, b, c, d = g.a, g.b, g.c, g.d
        p = ctx.p
        out = []
        for t in self.elems:
            dv = taddscalar(tsmul(c, t), d) if c else tscalar(d)
            if dv == zero:
                out.append(self.inf)
                continue
            nv = taddscalar(tsmul(a, t), b) if a else tscalar(b)
            out.append(index[tmul(nv, inv[dv])])
        if c == 0:
            out.append(self.inf)
        else:
            out.append(index[tscalar(a * pow(c, p - 2, p))])
        return out


class DynSystem:
    """The data of the counting theorems: a self-map of P^1 defined over F_p
    together with a finite commuting group of Mobius automorphisms."""

    def __init__(
        self,
        p: int,
        map_: RationalMap,
        generators,
        *,
        generator_names=None,
        field_cap: int = DEFAULT_FIELD_CAP,
        group_cap: int = DEFAULT_GROUP_CAP,
    ):
        if map_.p != p:
            raise ValueError("map defined over a different prime")
        self.p = p
        self.map = map_
        self.generators = list(generators)
        self.field_cap = field_cap
        self.group = close_generators(self.generators, names=generator_names, cap=group_cap)
        for pos, g in enumerate(self.generators):
            if not commutes(map_, g):
                label = self.group.labels[self.group.gen_positions[pos]]
                raise MapDoesNotCommuteError(
                    f"map does not commute with generator {label}"
                )
        self._fields = {}
        self._arenas = {}
        self.orbit_cache = {}

    @classmethod
    def from_affine(
        cls, p, num, den, generators, **kwargs
    ) -> "DynSystem":
        return cls(p, RationalMap.from_affine(p, num, den), generators, **kwargs)

    @property
    def context(self):
        """The base field F_p."""
        return self.field(1)

    def field(self, m: int):
        if m not in self._fields:
            self._fields[m] = make_context(self.p, m, cap=self.field_cap)
        return self._fields[m]

    def arena(self, m: int) -> _Arena:
        if m not in self._arenas:
            self._arenas[m] = _Arena(self, m)
        return self._arenas[m]

    def points(self, m: int):
        """All points of P^1(F_{q^m})."""
        return self.arena(m).points()

    def periodic_points(self, m: int):
        """Periodic points of the map among the points of P^1(F_{q^m})."""
        A = self.arena(m)
        return {A.point(i) for i in range(A.size) if A.periodic[i]}

    def periodic_count(self, m: int) -> int:
        return sum(self.arena(m).periodic)

    def element_index(self, g) -> int:
        if isinstance(g, int):
            if not 0 <= g < self.group.size:
                raise ValueError("group element index out of range")
            return g
        return self.group.index_of(g)

    def per_fix(self, g, n: int) -> int:
        """Number of periodic points fixed by (g o Frobenius^n): points Q,
        periodic for the map, with g(Q^(q^n)) = Q.

        The search space P^1(F_{q^(n*ord(g))}) is complete: iterating the
        fixing relation ord(g) times forces Q into that field.
        """
        gi = self.element_index(g)
        m = n * self.group.element_order(gi)
        A = self.arena(m)
        fr = A.frob_power(n)
        gp = A.gperm(gi)
        per = A.periodic
        return sum(1 for i in range(A.size) if per[i] and gp[fr[i]] == i)
