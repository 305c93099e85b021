"""The rational group ring of an automorphism group: averaged subgroup
idempotents, induced trivial characters, and the integer lattice of
idempotent relations.

Rational character tables are never computed.  The vanishing test for a
combination of idempotents reduces to the vanishing of the matching integer
combination of induced characters, which is an exact class-function check;
that equivalence is itself exercised by the Frobenius-reciprocity pairing
check below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .grp import AutGroup, Subgroup


@dataclass(frozen=True)
class GroupRingElt:
    """An element of Q[G]: one exact rational coefficient per group element."""

    group: AutGroup
    coeffs: tuple

    def __add__(self, other):
        self._check(other)
        return GroupRingElt(
            self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        return GroupRingElt(
            self.group, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GroupRingElt(self.group, tuple(a * other for a in self.coeffs))
        self._check(other)
        table = self.group.table
        out = [Fraction(0)] * len(self.coeffs)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[table[i][j]] += a * b
        return GroupRingElt(self.group, tuple(out))

    __rmul__ = __mul__

    def _check(self, other):
        if self.group is not other.group:
            raise ValueError("group ring elements over different groups")

    def __repr__(self):
        terms = [
            f"{c}*{self.group.labels[i]}" for i, c in enumerate(self.coeffs) if c
        ]
        return "GroupRingElt(" + (" + ".join(terms) if terms else "0") + ")"


def idempotent(H: Subgroup) -> GroupRingElt:
    """The averaged idempotent of a subgroup: 1/|H| on each member."""
    G = H.group
    w = Fraction(1, H.order)
    coeffs = [Fraction(0)] * G.size
    for i in H.members:
        coeffs[i] = w
    return GroupRingElt(G, tuple(coeffs))


# ---------------------------------------------------------------------------
# class functions / induced characters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassFunction:
    """An integer class function, stored per conjugacy class."""

    group: AutGroup
    values: tuple

    def value_on_element(self, i: int) -> int:
        return self.values[self.group.class_index()[i]]

    def __add__(self, other):
        if self.group is not other.group:
            raise ValueError("class functions over different groups")
        return ClassFunction(
            self.group, tuple(a + b for a, b in zip(self.values, other.values))
        )

    def __mul__(self, k: int):
        return ClassFunction(self.group, tuple(k * v for v in self.values))

    __rmul__ = __mul__

    @classmethod
    def zero(cls, group: AutGroup) -> "ClassFunction":
        return cls(group, (0,) * len(group.conjugacy_classes()))

    def is_zero(self) -> bool:
        return not any(self.values)


@dataclass(frozen=True)
class InducedCharacter(ClassFunction):
    """The character of G acting on left cosets of a subgroup: its value on g
    counts the cosets g fixes.  Value at the identity class is the index."""

    subgroup: Subgroup


def _left_cosets(H: Subgroup):
    G = H.group
    seen = set()
    cosets = []
    for x in range(G.size):
        if x in seen:
            continue
        coset = frozenset(G.table[x][h] for h in H.members)
        seen.update(coset)
        cosets.append(coset)
    return cosets


def induced_trivial_character(H: Subgroup) -> InducedCharacter:
    """Character induced from the trivial character of H (coset-fixing counts)."""
    G = H.group
    cached = G._char_cache.get(H.members)
    if cached is not None:
        return cached
    cosets = _left_cosets(H)
    per_element = []
    for g in range(G.size):
        fixed = 0
        for coset in cosets:
            rep = next(iter(coset))
            if G.table[g][rep] in coset:
                fixed += 1
        per_element.append(fixed)
    classes = G.conjugacy_classes()
    values = []
    for cls in classes:
        vals = {per_element[i] for i in cls}
        assert len(vals) == 1, "induced character must be constant on classes"
        values.append(vals.pop())
    chi = InducedCharacter(G, tuple(values), H)
    assert chi.values[0] == G.size // H.order
    G._char_cache[H.members] = chi
    return chi


# ---------------------------------------------------------------------------
# relation vectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RelationVector:
    """Integer coefficients, one per subgroup in the group's lattice order."""

    group: AutGroup
    coeffs: tuple

    def canonical(self) -> "RelationVector":
        """Primitive form with the first nonzero coefficient positive."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        if g == 0:
            return self
        lead = next(c for c in self.coeffs if c)
        if lead < 0:
            g = -g
        return RelationVector(self.group, tuple(c // g for c in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def describe(self) -> str:
        subs = self.group.subgroups()
        terms = []
        for c, S in zip(self.coeffs, subs):
            if c:
                sign = "+" if c > 0 else "-"
                mag = abs(c)
                coef = "" if mag == 1 else f"{mag}*"
                terms.append(f"{sign} {coef}e{S.label()}")
        text = " ".join(terms) if terms else "0"
        return text[2:] if text.startswith("+ ") else text

    def __repr__(self):
        return f"RelationVector{self.coeffs}"


def character_combination(rel: RelationVector) -> ClassFunction:
    """The class function sum of n_H * psi_H over the subgroup lattice."""
    G = rel.group
    acc = ClassFunction.zero(G)
    for c, S in zip(rel.coeffs, G.subgroups()):
        if c:
            acc = acc + c * induced_trivial_character(S)
    return acc


def is_sim_zero(rel: RelationVector) -> bool:
    """Does the idempotent combination vanish under every rational character?

    Equivalent, via Frobenius reciprocity, to the integer class function
    sum n_H * psi_H being identically zero; that is what gets checked.
    """
    return character_combination(rel).is_zero()


# ---------------------------------------------------------------------------
# integer kernel of the character matrix
# ---------------------------------------------------------------------------

def _hnf_transform(rows):
    """Row Hermite reduction with transform: returns (H, U) with U unimodular
    and U * rows = H; H has positive pivots, zero rows last, and entries above
    each pivot reduced into [0, pivot)."""
    mat = [list(r) for r in rows]
    m = len(mat)
    ncols = len(mat[0]) if mat else 0
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def addmul(dst, src, q):
        mat[dst] = [a - q * b for a, b in zip(mat[dst], mat[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def swap(i, j):
        mat[i], mat[j] = mat[j], mat[i]
        U[i], U[j] = U[j], U[i]

    def negate(i):
        mat[i] = [-a for a in mat[i]]
        U[i] = [-a for a in U[i]]

    r = 0
    for col in range(ncols):
        nz = [i for i in range(r, m) if mat[i][col]]
        if not nz:
            continue
        i0 = min(nz, key=lambda i: (abs(mat[i][col]), i))
        swap(r, i0)
        if mat[r][col] < 0:
            negate(r)
        for i in range(r + 1, m):
            while mat[i][col]:
                q = mat[i][col] // mat[r][col]
                addmul(i, r, q)
                if mat[i][col]:
                    swap(i, r)
                    if mat[r][col] < 0:
                        negate(r)
        for j in range(r):
            q = mat[j][col] // mat[r][col]
            if q:
                addmul(j, r, q)
        r += 1
    return mat, U


def character_matrix(G: AutGroup):
    """Rows indexed by the subgroup lattice, columns by conjugacy classes;
    entry = induced-character value."""
    return [list(induced_trivial_character(S).values) for S in G.subgroups()]


def relation_lattice_basis(G: AutGroup):
    """Hermite-reduced basis of the full integer lattice of idempotent
    relations: all integer vectors n with sum n_H psi_H = 0."""
    M = character_matrix(G)
    H, U = _hnf_transform(M)
    rank = sum(1 for row in H if any(row))
    kernel_rows = U[rank:]
    if not kernel_rows:
        return []
    canon, _ = _hnf_transform(kernel_rows)
    out = []
    for row in canon:
        if any(row):
            rel = RelationVector(G, tuple(row))
            assert is_sim_zero(rel)
            out.append(rel)
    return out


def in_relation_lattice(G: AutGroup, rel: RelationVector) -> bool:
    """Is the integer vector in the lattice spanned by the computed basis?"""
    basis = relation_lattice_basis(G)
    if not basis:
        return rel.is_zero()
    rows = [list(b.coeffs) for b in basis] + [list(rel.coeffs)]
    H, _ = _hnf_transform(rows)
    rank_with = sum(1 for row in H if any(row))
    return rank_with == len(basis) and is_sim_zero(rel)


# ---------------------------------------------------------------------------
# partition-induced relations
# ---------------------------------------------------------------------------

def partition_relations(G: AutGroup):
    """Decompositions of G into k >= 2 proper nontrivial subgroups meeting
    pairwise only in the identity and covering G, each with its canonical
    induced relation: |G| e_G + (k-1) e_id - sum |H_i| e_{H_i} = 0."""
    subs = G.subgroups()
    candidates = [S for S in subs if 1 < S.order < G.size]
    bodies = [frozenset(S.members) - {0} for S in candidates]
    results = []

    def extend(remaining, chosen_idx):
        if not remaining:
            if len(chosen_idx) >= 2:
                results.append(tuple(sorted(chosen_idx)))
            return
        # the part covering the smallest uncovered element is unique within a
        # partition, so branching on it finds each partition exactly once
        pivot = min(remaining)
        for k in range(len(candidates)):
            if pivot in bodies[k] and bodies[k] <= remaining:
                extend(remaining - bodies[k], chosen_idx + (k,))

    extend(frozenset(range(1, G.size)), ())
    out = []
    for combo in results:
        parts = tuple(candidates[k] for k in combo)
        coeffs = [0] * len(subs)
        pos = {S.members: i for i, S in enumerate(subs)}
        coeffs[pos[G.full_subgroup().members]] += G.size
        coeffs[pos[(0,)]] += len(parts) - 1
        for S in parts:
            coeffs[pos[S.members]] -= S.order
        rel = RelationVector(G, tuple(coeffs)).canonical()
        assert is_sim_zero(rel)
        out.append((parts, rel))
    out.sort(key=lambda pr: tuple(S.members for S in pr[0]))
    return out


# ---------------------------------------------------------------------------
# Frobenius reciprocity pairing
# ---------------------------------------------------------------------------

def frobenius_pairing_check(H: Subgroup, psi: ClassFunction) -> bool:
    """Exact check of the reciprocity identity
    psi(e_H) = (1/|H|) sum_{h in H} psi(h) = (psi, psi_H)_G,
    the bridge between idempotent evaluation and the induced character."""
    G = H.group
    left = Fraction(sum(psi.value_on_element(h) for h in H.members), H.order)
    chi_H = induced_trivial_character(H)
    right = Fraction(
        sum(
            psi.value_on_element(g) * chi_H.value_on_element(g)
            for g in range(G.size)
        ),
        G.size,
    )
    return left == right
