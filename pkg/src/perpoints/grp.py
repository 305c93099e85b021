"""Finite Mobius automorphism groups: generator closure, multiplication
table, subgroup lattice, conjugacy classes, and orbit/stabilizer actions.

Groups are kept concrete (canonical Mobius classes plus an index table)
because orbit computations need the point action, and the table makes the
character work elsewhere quadratic in the group order.  Conjugate subgroups
stay distinct entries of the lattice; collapsing them would lose testable
structure (they induce identical characters).

Everything is immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import lcm

from .errors import GroupTooLargeError
from .p1dyn import MobiusAut, ProjPoint

DEFAULT_GROUP_CAP = 64


class AutGroup:
    """Closure of Mobius generators, with composition table and labels.

    elements[0] is the identity; the rest follow in BFS order from the
    generators, which makes every downstream enumeration reproducible.
    provenance[i] = (parent index, generator position) expresses each
    non-identity element as parent * generator; callers use it to extend
    per-generator point permutations to the whole group cheaply.
    """

    def __init__(self, elements, table, labels, gen_positions, provenance):
        self.elements = elements
        self.table = table
        self.labels = labels
        self.gen_positions = gen_positions  # element index of each generator
        self.provenance = provenance
        self._index = {g: i for i, g in enumerate(elements)}
        self._inverse = None
        self._classes = None
        self._subgroups = None
        self._char_cache = {}

    def __len__(self):
        return len(self.elements)

    @property
    def size(self):
        return len(self.elements)

    def index_of(self, aut: MobiusAut) -> int:
        try:
            return self._index[aut]
        except KeyError:
            raise ValueError(f"{aut!r} is not an element of this group") from None

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse_index(self, i: int) -> int:
        if self._inverse is None:
            inv = [None] * self.size
            for a in range(self.size):
                for b in range(self.size):
                    if self.table[a][b] == 0:
                        inv[a] = b
                        break
            self._inverse = inv
        return self._inverse[i]

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != 0:
            cur = self.table[cur][i]
            k += 1
        return k

    def is_abelian(self) -> bool:
        t = self.table
        n = self.size
        return all(t[i][j] == t[j][i] for i in range(n) for j in range(i + 1, n))

    def exponent(self) -> int:
        return reduce(lcm, (self.element_order(i) for i in range(self.size)), 1)

    def conjugacy_classes(self):
        """Partition of element indices into conjugacy classes, each sorted,
        ordered by smallest member; the identity class comes first."""
        if self._classes is None:
            seen = set()
            classes = []
            for i in range(self.size):
                if i in seen:
                    continue
                cls = sorted(
                    {
                        self.table[self.table[g][i]][self.inverse_index(g)]
                        for g in range(self.size)
                    }
                )
                seen.update(cls)
                classes.append(tuple(cls))
            classes.sort(key=lambda c: c[0])
            self._classes = tuple(classes)
        return self._classes

    def class_index(self):
        """element index -> conjugacy class position."""
        out = [None] * self.size
        for k, cls in enumerate(self.conjugacy_classes()):
            for i in cls:
                out[i] = k
        return out

    # -- subgroups -----------------------------------------------------------

    def subgroup(self, members, verify=True) -> "Subgroup":
        members = tuple(sorted(set(members)))
        if verify:
            ms = set(members)
            if 0 not in ms:
                raise ValueError("a subgroup must contain the identity")
            for a in members:
                if self.inverse_index(a) not in ms:
                    raise ValueError("member set not closed under inversion")
                for b in members:
                    if self.table[a][b] not in ms:
                        raise ValueError("member set not closed under composition")
        return Subgroup(self, members)

    def cyclic_subgroup(self, i: int) -> "Subgroup":
        members = {0}
        cur = i
        while cur != 0:
            members.add(cur)
            cur = self.table[cur][i]
        return Subgroup(self, tuple(sorted(members)))

    def generated_subgroup(self, gens) -> "Subgroup":
        members = {0}
        frontier = [0]
        gens = sorted(set(gens))
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = self.table[cur][g]
                if nxt not in members:
                    members.add(nxt)
                    frontier.append(nxt)
        return Subgroup(self, tuple(sorted(members)))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (0,))

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.size)))

    def subgroups(self):
        """Every subgroup exactly once, ordered by size then member indices.

        Built from the cyclic subgroups, closing under pairwise join."""
        if self._subgroups is None:
            found = {(0,)}
            for i in range(self.size):
                found.add(self.cyclic_subgroup(i).members)
            changed = True
            while changed:
                changed = False
                pairs = list(combinations(sorted(found), 2))
                for a, b in pairs:
                    j = self.generated_subgroup(set(a) | set(b)).members
                    if j not in found:
                        found.add(j)
                        changed = True
            self._subgroups = tuple(
                Subgroup(self, m) for m in sorted(found, key=lambda m: (len(m), m))
            )
        return self._subgroups

    def __repr__(self):
        return f"AutGroup(order={self.size}, labels={self.labels})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as a sorted index set into its parent group's elements."""

    group: AutGroup
    members: tuple

    @property
    def order(self) -> int:
        return len(self.members)

    def exponent(self) -> int:
        return reduce(lcm, (self.group.element_order(i) for i in self.members), 1)

    def contains(self, i: int) -> bool:
        return i in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def label(self) -> str:
        """Deterministic label from a greedy generating set, e.g. '<s>'."""
        if self.order == 1:
            return "<id>"
        gens = []
        have = self.group.trivial_subgroup().members
        for i in self.members:
            if i in have:
                continue
            gens.append(i)
            have = self.group.generated_subgroup(gens).members
            if have == self.members:
                break
        return "<" + ",".join(self.group.labels[g] for g in gens) + ">"

    def __repr__(self):
        return f"Subgroup{self.members}"


def close_generators(gens, names=None, cap: int = DEFAULT_GROUP_CAP) -> AutGroup:
    """BFS closure of Mobius generators into a finite group.

    Raises GroupTooLargeError past `cap`, the signal that the generators span
    an infinite or oversized subgroup of PGL2.
    """
    gens = list(gens)
    if names is None:
        names = [f"g{k+1}" for k in range(len(gens))]
    if len(names) != len(gens):
        raise ValueError("one name per generator")
    if gens:
        p = gens[0].p
        if any(g.p != p for g in gens):
            raise ValueError("generators over different primes")
        ident = MobiusAut.identity(p)
    else:
        ident = MobiusAut.identity(2)  # trivial group; prime is irrelevant
    elements = [ident]
    labels = ["id"]
    provenance = [None]
    index = {ident: 0}
    queue = [0]
    while queue:
        cur = queue.pop(0)
        for pos, g in enumerate(gens):
            nxt = elements[cur].compose(g)
            if nxt not in index:
                if len(elements) >= cap:
                    raise GroupTooLargeError(f"closure exceeds cap {cap}")
                index[nxt] = len(elements)
                word = names[pos] if cur == 0 else labels[cur] + "*" + names[pos]
                elements.append(nxt)
                labels.append(word)
                provenance.append((cur, pos))
                queue.append(len(elements) - 1)
    n = len(elements)
    table = [[index[elements[i].compose(elements[j])] for j in range(n)] for i in range(n)]
    gen_positions = [index[g] for g in gens]
    return AutGroup(elements, table, labels, gen_positions, provenance)


def orbit(P: ProjPoint, H: Subgroup) -> set:
    """The H-orbit of a point under the Mobius action."""
    G = H.group
    return {G.elements[i](P) for i in H.members}


def stabilizer(P: ProjPoint, H: Subgroup) -> Subgroup:
    """Members of H fixing the point, as a subgroup."""
    G = H.group
    members = tuple(i for i in H.members if G.elements[i](P) == P)
    return G.subgroup(members)
