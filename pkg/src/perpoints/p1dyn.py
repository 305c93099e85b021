"""Points and self-maps of the projective line over a working field.

A rational self-map is a pair of homogeneous forms (F, G) of common degree d
with coefficients in the prime field; coefficient i of a form multiplies
X^i Y^(d-i).  Keeping coefficients in F_p makes every map automatically
Frobenius-equivariant, which is what all the counting downstream relies on.
Maps with a common projective root of F and G are rejected at construction
via the Sylvester resultant.

Points are stored in canonical normalized form, Y = 1 or (X, Y) = (1, 0),
so equality and hashing are plain coordinate comparisons and evaluating a
form at a point never needs a general homogeneous routine: F(x, 1) is a
univariate Horner pass and F(1, 0) is the leading coefficient.

The periodic set of a map on a closed finite point set is extracted from the
functional graph by in-degree peeling: repeatedly discard nodes with no
remaining preimage; what survives is exactly the union of cycles.
"""

from __future__ import annotations

from .errors import NotAMorphismError, NotClosedError
from .gf import FieldContext, FieldElement, poly_gcd, poly_str

# ---------------------------------------------------------------------------
# form helpers (coefficient lists over F_p, index i <-> X^i Y^(d-i))
# ---------------------------------------------------------------------------

def _conv(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _resultant(f, g, p):
    """Sylvester determinant of two degree-d binary forms over F_p.

    Both forms are treated as x-polynomials of nominal degree d (leading
    coefficients may vanish); the full-size determinant is zero exactly when
    the forms share a projective root over the algebraic closure.
    """
    d = len(f) - 1
    size = 2 * d
    if size == 0:
        return 1
    rows = []
    fr = list(reversed(f))
    gr = list(reversed(g))
    for k in range(d):
        rows.append([0] * k + fr + [0] * (d - 1 - k))
    for k in range(d):
        rows.append([0] * k + gr + [0] * (d - 1 - k))
    det = 1
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = (-det) % p
        inv = pow(rows[col][col], p - 2, p)
        det = (det * rows[col][col]) % p
        for r in range(col + 1, size):
            if rows[r][col]:
                factor = (rows[r][col] * inv) % p
                rows[r] = [(rows[r][j] - factor * rows[col][j]) % p for j in range(size)]
    return det


def _remove_content(f, g, p):
    """Divide out the common polynomial factor (including Y powers) of two
    equal-degree binary forms."""
    d = len(f) - 1
    fp = list(f)
    gp = list(g)
    while fp and fp[-1] == 0:
        fp.pop()
    while gp and gp[-1] == 0:
        gp.pop()
    if not fp or not gp:
        raise NotAMorphismError("a coordinate form is identically zero")
    common = poly_gcd(fp, gp, p)
    ymin = min(d - (len(fp) - 1), d - (len(gp) - 1))
    if len(common) > 1:
        fp = _exact_div(fp, common, p)
        gp = _exact_div(gp, common, p)
    dnew = d - (len(common) - 1) - ymin
    fnew = fp + [0] * (dnew + 1 - len(fp))
    gnew = gp + [0] * (dnew + 1 - len(gp))
    return fnew, gnew


def _exact_div(a, b, p):
    from .gf import poly_divmod

    q, r = poly_divmod(a, b, p)
    assert not r, "content division must be exact"
    return q


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------

class ProjPoint:
    """A point of P^1 in canonical coordinates: (x, 1) or the point (1, 0)."""

    __slots__ = ("x", "y")

    def __init__(self, x: FieldElement, y: FieldElement):
        self.x = x
        self.y = y

    @classmethod
    def affine(cls, x: FieldElement) -> "ProjPoint":
        return cls(x, x.ctx.one())

    @classmethod
    def infinity(cls, ctx: FieldContext) -> "ProjPoint":
        return cls(ctx.one(), ctx.zero())

    @classmethod
    def from_coords(cls, x: FieldElement, y: FieldElement) -> "ProjPoint":
        if y.is_zero():
            if x.is_zero():
                raise ValueError("(0 : 0) is not a projective point")
            return cls.infinity(x.ctx)
        return cls.affine(x / y)

    @property
    def is_infinity(self) -> bool:
        return self.y.is_zero()

    def frobenius(self, e=1) -> "ProjPoint":
        if self.is_infinity:
            return self
        return ProjPoint.affine(self.x.frobenius(e))

    def __eq__(self, other):
        return (
            isinstance(other, ProjPoint)
            and self.x.coeffs == other.x.coeffs
            and self.y.coeffs == other.y.coeffs
            and self.x.ctx == other.x.ctx
        )

    def __hash__(self):
        return hash((self.x.coeffs, self.y.coeffs))

    def __repr__(self):
        return f"ProjPoint({self})"

    def __str__(self):
        return "inf" if self.is_infinity else poly_str(self.x.coeffs)


def frobenius_point(P: ProjPoint, e: int = 1) -> ProjPoint:
    """Coordinate-wise q^e-power Frobenius, renormalized."""
    return P.frobenius(e)


def enumerate_points(ctx: FieldContext, m: int):
    """All q^m + 1 points of P^1(F_{q^m}): the subfield affinely, then inf."""
    pts = [ProjPoint.affine(a) for a in ctx.enumerate_subfield(m)]
    pts.append(ProjPoint.infinity(ctx))
    return pts


# ---------------------------------------------------------------------------
# maps
# ---------------------------------------------------------------------------

class RationalMap:
    """A morphism of P^1 given by equal-degree forms with F_p coefficients."""

    __slots__ = ("p", "num", "den")

    def __init__(self, p, num, den):
        num = [int(c) % p for c in num]
        den = [int(c) % p for c in den]
        if len(num) != len(den) or len(num) < 2:
            raise NotAMorphismError("coordinate forms must share a degree >= 1")
        if _resultant(num, den, p) == 0:
            raise NotAMorphismError("coordinate forms share a projective root")
        self.p = p
        self.num = tuple(num)
        self.den = tuple(den)

    @classmethod
    def from_affine(cls, p, num, den) -> "RationalMap":
        """Build from numerator/denominator coefficients (ascending powers)
        of an affine rational function; homogenizes to the max degree so the
        point at infinity needs no special-casing later."""
        num = [int(c) % p for c in num]
        den = [int(c) % p for c in den]
        while num and num[-1] == 0:
            num.pop()
        while den and den[-1] == 0:
            den.pop()
        if not num and not den:
            raise NotAMorphismError("zero map")
        d = max(len(num), len(den)) - 1
        d = max(d, 1)
        return cls(p, num + [0] * (d + 1 - len(num)), den + [0] * (d + 1 - len(den)))

    @classmethod
    def identity(cls, p) -> "RationalMap":
        return cls(p, [0, 1], [1, 0])

    @property
    def degree(self) -> int:
        return len(self.num) - 1

    @property
    def is_identity(self) -> bool:
        return self.num == (0, 1) and self.den == (1, 0)

    def __call__(self, P: ProjPoint) -> ProjPoint:
        ctx = P.x.ctx
        if P.is_infinity:
            fv = ctx.element(self.num[-1])
            gv = ctx.element(self.den[-1])
        else:
            fv = _horner(self.num, P.x)
            gv = _horner(self.den, P.x)
        return ProjPoint.from_coords(fv, gv)

    def __eq__(self, other):
        return (
            isinstance(other, RationalMap)
            and self.p == other.p
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.p, self.num, self.den))

    def __repr__(self):
        return f"RationalMap(p={self.p}, num={list(self.num)}, den={list(self.den)})"


def _horner(coeffs, x: FieldElement) -> FieldElement:
    ctx = x.ctx
    acc = ctx.element(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * x
        if c:
            acc = acc + c
    return acc


class MobiusAut:
    """An automorphism x -> (a x + b)/(c x + d) of P^1, ad - bc != 0, kept in
    canonical form: the first nonzero entry of (a, b, c, d) scaled to 1."""

    __slots__ = ("p", "a", "b", "c", "d")

    def __init__(self, p, a, b, c, d):
        a, b, c, d = a % p, b % p, c % p, d % p
        if (a * d - b * c) % p == 0:
            raise NotAMorphismError("matrix is singular mod p")
        lead = next(v for v in (a, b, c, d) if v)
        if lead != 1:
            inv = pow(lead, p - 2, p)
            a, b, c, d = (a * inv) % p, (b * inv) % p, (c * inv) % p, (d * inv) % p
        self.p, self.a, self.b, self.c, self.d = p, a, b, c, d

    @classmethod
    def identity(cls, p) -> "MobiusAut":
        return cls(p, 1, 0, 0, 1)

    def compose(self, other: "MobiusAut") -> "MobiusAut":
        """self after other (matrix product)."""
        p = self.p
        return MobiusAut(
            p,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MobiusAut":
        return MobiusAut(self.p, self.d, -self.b, -self.c, self.a)

    def as_map(self) -> RationalMap:
        return RationalMap(self.p, [self.b, self.a], [self.d, self.c])

    @property
    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def order(self, cap: int = 1 << 16) -> int:
        g = self
        k = 1
        while not g.is_identity:
            g = g.compose(self)
            k += 1
            if k > cap:
                raise ValueError("element order exceeds cap")
        return k

    def __call__(self, P: ProjPoint) -> ProjPoint:
        ctx = P.x.ctx
        if P.is_infinity:
            if self.c == 0:
                return P
            return ProjPoint.affine(ctx.element(self.a * pow(self.c, self.p - 2, self.p)))
        nx = self.a * P.x + self.b
        dx = self.c * P.x + self.d
        return ProjPoint.from_coords(nx, dx)

    def __eq__(self, other):
        return (
            isinstance(other, MobiusAut)
            and (self.p, self.a, self.b, self.c, self.d)
            == (other.p, other.a, other.b, other.c, other.d)
        )

    def __hash__(self):
        return hash((self.p, self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"MobiusAut(p={self.p}, [[{self.a},{self.b}],[{self.c},{self.d}]])"


def _as_map(f) -> RationalMap:
    return f.as_map() if isinstance(f, MobiusAut) else f


def compose(outer, inner) -> RationalMap:
    """outer after inner, with common polynomial content divided out so the
    degree is the product of the reduced degrees."""
    fo = _as_map(outer)
    fi = _as_map(inner)
    if fo.p != fi.p:
        raise ValueError("maps over different primes")
    p = fo.p
    e = fo.degree
    # powers of the inner coordinate forms up to e
    powf = [[1]]
    powg = [[1]]
    for _ in range(e):
        powf.append(_conv(powf[-1], list(fi.num), p))
        powg.append(_conv(powg[-1], list(fi.den), p))
    d = e * fi.degree
    newf = [0] * (d + 1)
    newg = [0] * (d + 1)
    for i in range(e + 1):
        cf, cg = fo.num[i], fo.den[i]
        if cf == 0 and cg == 0:
            continue
        term = _conv(powf[i], powg[e - i], p)
        for k, t in enumerate(term):
            if t:
                newf[k] = (newf[k] + cf * t) % p
                newg[k] = (newg[k] + cg * t) % p
    newf, newg = _remove_content(newf, newg, p)
    return RationalMap(p, newf, newg)


def equal_up_to_scalar(f, g) -> bool:
    """True iff the maps agree as morphisms: cross products of coordinate
    forms coincide as polynomials."""
    f = _as_map(f)
    g = _as_map(g)
    if f.p != g.p:
        return False
    p = f.p
    lhs = _conv(list(f.num), list(g.den), p)
    rhs = _conv(list(g.num), list(f.den), p)
    pad = max(len(lhs), len(rhs))
    lhs += [0] * (pad - len(lhs))
    rhs += [0] * (pad - len(rhs))
    return lhs == rhs


def commutes(map_, g) -> bool:
    """Does the map commute with the automorphism (as morphisms of P^1)?"""
    return equal_up_to_scalar(compose(map_, g), compose(g, map_))


# ---------------------------------------------------------------------------
# periodic sets
# ---------------------------------------------------------------------------

def periodic_set(map_, points) -> set:
    """Points of `points` lying on cycles of the functional graph of `map_`.

    `points` must be closed under the map (full subfield point sets are,
    because the map is defined over the prime field).  Kahn-style in-degree
    peeling: iteratively discard nodes with no surviving preimage.
    """
    pts = list(points)
    index = {P: i for i, P in enumerate(pts)}
    succ = []
    for P in pts:
        Q = map_(P)
        j = index.get(Q)
        if j is None:
            raise NotClosedError(f"image {Q} of {P} escapes the point set")
        succ.append(j)
    alive = _peel(succ)
    return {pts[i] for i in range(len(pts)) if alive[i]}


def _peel(succ):
    """In-degree peeling of a functional graph given as a successor table;
    returns a boolean list marking the nodes on cycles."""
    n = len(succ)
    indeg = [0] * n
    for s in succ:
        indeg[s] += 1
    stack = [i for i in range(n) if indeg[i] == 0]
    alive = [True] * n
    while stack:
        i = stack.pop()
        alive[i] = False
        s = succ[i]
        indeg[s] -= 1
        if indeg[s] == 0:
            stack.append(s)
    return alive
