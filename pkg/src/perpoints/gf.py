"""Exact arithmetic in a prime field F_p and one extension F_{p^N}.

The extension is F_p[x]/(f) for a deterministic modulus f: the first monic
irreducible polynomial of degree N when monic polynomials are enumerated by
ascending base-p value with the constant coefficient least significant
(x^2, x^2+1, x^2+2, ..., x^2+x, ...).  That makes element enumerations and
everything built on them reproducible run to run.

Subfields F_{p^m} for m | N are cut out as fixed sets of the m-fold
Frobenius instead of being built as separate towers, so there is never any
embedding bookkeeping.

Contexts and elements are immutable; all operations are pure, so everything
here can be shared freely across threads.  Elements store their coefficient
tuple (ascending powers of the generator); the context also exposes a
tuple-level API (tadd, tmul, tinv, ...) used by performance-sensitive
callers that want to skip element-object overhead.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import (
    DivisionByZeroError,
    FieldTooLargeError,
    NotADivisorError,
    NotPrimeError,
)

DEFAULT_FIELD_CAP = 10**7


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test; fields are capped small
    enough that nothing fancier is warranted."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (dense ascending coefficient lists, trimmed)
# ---------------------------------------------------------------------------

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim([v % p for v in out])


def poly_divmod(a, b, p):
    """Quotient and remainder of a by b over F_p; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [v % p for v in a]
    _trim(r)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - db - 1, -1, -1):
        coef = (r[db + k] * inv_lead) % p
        if coef:
            q[k] = coef
            for i, ci in enumerate(b):
                r[i + k] = (r[i + k] - coef * ci) % p
    return _trim(q), _trim(r)


def poly_gcd(a, b, p):
    """Monic gcd over F_p."""
    r0 = _trim([v % p for v in a])
    r1 = _trim([v % p for v in b])
    while r1:
        _, rem = poly_divmod(r0, r1, p)
        r0, r1 = r1, rem
    if not r0:
        return []
    inv_lead = pow(r0[-1], p - 2, p)
    return [(v * inv_lead) % p for v in r0]


def poly_pow_mod(base, e, mod, p):
    """base^e reduced mod the polynomial `mod` (positive degree), over F_p."""
    if len(mod) - 1 <= 0:
        raise ZeroDivisionError("modulus must have positive degree")
    _, b = poly_divmod(base, mod, p)
    result = [1]
    while e > 0:
        if e & 1:
            _, result = poly_divmod(poly_mul(result, b, p), mod, p)
        e >>= 1
        if e:
            _, b = poly_divmod(poly_mul(b, b, p), mod, p)
    return result


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f, p) -> bool:
    """Rabin irreducibility test for a monic polynomial f over F_p.

    f of degree n is irreducible iff x^(p^n) = x mod f and, for every prime
    divisor l of n, gcd(x^(p^(n/l)) - x, f) = 1.
    """
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    for ell in _prime_factors(n):
        h = poly_pow_mod(x, p ** (n // ell), f, p)
        diff = _trim([(hi - xi) % p for hi, xi in itertools.zip_longest(h, x, fillvalue=0)])
        if len(poly_gcd(diff, f, p)) != 1:  # gcd not a nonzero constant
            return False
    h = poly_pow_mod(x, p**n, f, p)
    diff = _trim([(hi - xi) % p for hi, xi in itertools.zip_longest(h, x, fillvalue=0)])
    return not diff


def smallest_irreducible(p, n):
    """First monic irreducible of degree n over F_p in the deterministic
    enumeration (ascending base-p value, constant coefficient least
    significant)."""
    if n == 1:
        return (0, 1)  # the polynomial x
    for value in range(p**n):
        coeffs = []
        v = value
        for _ in range(n):
            coeffs.append(v % p)
            v //= p
        f = coeffs + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found; unreachable")


# ---------------------------------------------------------------------------
# field context and elements
# ---------------------------------------------------------------------------

class FieldContext:
    """Arithmetic context for F_{p^N} = F_p[x]/(modulus).

    Immutable.  Use make_context() rather than constructing directly, so the
    modulus is the deterministic one and contexts are cached.
    """

    def __init__(self, p, degree, modulus, cap=DEFAULT_FIELD_CAP):
        self.p = p
        self.degree = degree
        self.modulus = tuple(modulus)
        self.cap = cap
        self.order = p**degree
        n = degree
        self._zero = (0,) * n
        self._one = (1,) + (0,) * (n - 1) if n else ()
        # X^k mod modulus for k in [n, 2n-2]; reduction rows for tmul
        rows = []
        if n >= 1:
            cur = [(-c) % p for c in self.modulus[:n]]
            for k in range(n, 2 * n - 1):
                if k > n:
                    top = cur[n - 1]
                    cur = [0] + cur[: n - 1]
                    if top:
                        cur = [(cur[i] - top * self.modulus[i]) % p for i in range(n)]
                rows.append(tuple(cur))
        self._xpow = rows
        # images of the basis 1, x, ..., x^(n-1) under y -> y^p; Frobenius is
        # F_p-linear so one application is a matrix-vector product
        self._frob_basis = None

    def __eq__(self, other):
        return (
            isinstance(other, FieldContext)
            and self.p == other.p
            and self.degree == other.degree
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.degree, self.modulus))

    def __repr__(self):
        return f"FieldContext(p={self.p}, degree={self.degree})"

    # -- tuple-level arithmetic (hot path; no element objects) --------------

    def tzero(self):
        return self._zero

    def tone(self):
        return self._one

    def tscalar(self, c):
        return (c % self.p,) + self._zero[1:]

    def tadd(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def tsub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def tneg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def taddscalar(self, a, c):
        return ((a[0] + c) % self.p,) + a[1:]

    def tsmul(self, c, a):
        p = self.p
        c %= p
        if c == 0:
            return self._zero
        if c == 1:
            return a
        return tuple((c * x) % p for x in a)

    def tmul(self, a, b):
        p = self.p
        n = self.degree
        prod = [0] * (2 * n - 1) if n > 1 else [0]
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        if n > 1:
            xpow = self._xpow
            for k in range(2 * n - 2, n - 1, -1):
                c = prod[k] % p
                if c:
                    row = xpow[k - n]
                    for i in range(n):
                        prod[i] += c * row[i]
        return tuple(v % p for v in prod[:n])

    def tinv(self, a):
        if not any(a):
            raise DivisionByZeroError("inverse of zero")
        p = self.p
        n = self.degree
        if n == 1:
            return (pow(a[0], p - 2, p),)
        # extended euclid: s*a + t*modulus = gcd; gcd is a nonzero constant
        r0, s0 = list(self.modulus), []
        r1, s1 = _trim(list(a)), [1]
        while r1:
            q, r = poly_divmod(r0, r1, p)
            qs = poly_mul(q, s1, p)
            new_s = _trim(
                [
                    ((s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0)) % p
                    for i in range(max(len(s0), len(qs), 1))
                ]
            )
            r0, s0, r1, s1 = r1, s1, r, new_s
        cinv = pow(r0[0], p - 2, p)
        out = [(v * cinv) % p for v in s0]
        out += [0] * (n - len(out))
        return tuple(out[:n])

    def tpow(self, a, e):
        if e < 0:
            return self.tpow(self.tinv(a), -e)
        result = self._one
        base = a
        while e > 0:
            if e & 1:
                result = self.tmul(result, base)
            e >>= 1
            if e:
                base = self.tmul(base, base)
        return result

    def tfrob(self, a, e=1):
        """a^(p^e), via the precomputed F_p-linear basis images."""
        if self._frob_basis is None:
            basis = []
            for i in range(self.degree):
                xi = tuple(1 if j == i else 0 for j in range(self.degree))
                basis.append(self.tpow(xi, self.p))
            self._frob_basis = basis
        e %= self.degree  # Frobenius has order N on F_{p^N}
        for _ in range(e):
            p = self.p
            acc = [0] * self.degree
            for i, ci in enumerate(a):
                if ci:
                    row = self._frob_basis[i]
                    for j in range(self.degree):
                        acc[j] += ci * row[j]
            a = tuple(v % p for v in acc)
        return a

    # -- element-level API ---------------------------------------------------

    def element(self, value) -> "FieldElement":
        """Coerce an integer (embedded scalar) or coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ValueError("element belongs to a different context")
            return value
        if isinstance(value, int):
            return FieldElement(self, self.tscalar(value))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.degree:
            raise ValueError("too many coefficients for this context")
        coeffs += (0,) * (self.degree - len(coeffs))
        return FieldElement(self, coeffs)

    def zero(self):
        return FieldElement(self, self._zero)

    def one(self):
        return FieldElement(self, self._one)

    def gen(self):
        """The residue of x, a generator of the extension over F_p."""
        if self.degree == 1:
            return self.zero()  # x = 0 in F_p[x]/(x)
        return FieldElement(self, tuple(1 if i == 1 else 0 for i in range(self.degree)))

    def frobenius(self, a, e=1) -> "FieldElement":
        """a ^ (q^e) with q = p; e = 0 is the identity."""
        a = self.element(a)
        return FieldElement(self, self.tfrob(a.coeffs, e))

    def in_subfield(self, a, m) -> bool:
        """True iff a lies in F_{q^m}; requires m | degree."""
        if m <= 0 or self.degree % m != 0:
            raise NotADivisorError(f"{m} does not divide extension degree {self.degree}")
        a = self.element(a)
        return self.tfrob(a.coeffs, m) == a.coeffs

    def enumerate_subfield(self, m):
        """All q^m elements of the subfield F_{q^m}, in lexicographic order
        of coefficient tuples."""
        if m <= 0 or self.degree % m != 0:
            raise NotADivisorError(f"{m} does not divide extension degree {self.degree}")
        if self.p**m > self.cap:
            raise FieldTooLargeError(
                f"subfield with {self.p}^{m} elements exceeds cap {self.cap}"
            )
        if m == self.degree:
            tuples = list(itertools.product(range(self.p), repeat=self.degree))
        else:
            basis = self._subfield_basis(m)
            span = [self._zero]
            for b in basis:
                span = [self.tadd(v, self.tsmul(c, b)) for v in span for c in range(self.p)]
            tuples = sorted(span)
        return [FieldElement(self, t) for t in tuples]

    def _subfield_basis(self, m):
        """F_p-basis of the fixed space of the m-fold Frobenius."""
        n, p = self.degree, self.p
        # columns: tfrob(e_i, m) - e_i; solve A v = 0 by Gaussian elimination
        cols = []
        for i in range(n):
            ei = tuple(1 if j == i else 0 for j in range(n))
            fi = self.tfrob(ei, m)
            cols.append([(fi[j] - ei[j]) % p for j in range(n)])
        # row-reduce the n x n matrix whose (r, c) entry is cols[c][r]
        mat = [[cols[c][r] for c in range(n)] for r in range(n)]
        pivots = []
        row = 0
        for col in range(n):
            pr = next((r for r in range(row, n) if mat[r][col]), None)
            if pr is None:
                continue
            mat[row], mat[pr] = mat[pr], mat[row]
            inv = pow(mat[row][col], p - 2, p)
            mat[row] = [(v * inv) % p for v in mat[row]]
            for r in range(n):
                if r != row and mat[r][col]:
                    f = mat[r][col]
                    mat[r] = [(mat[r][j] - f * mat[row][j]) % p for j in range(n)]
            pivots.append(col)
            row += 1
        free = [c for c in range(n) if c not in pivots]
        basis = []
        for fc in free:
            v = [0] * n
            v[fc] = 1
            for r, pc in enumerate(pivots):
                v[pc] = (-mat[r][fc]) % p
            basis.append(tuple(v))
        assert len(basis) == m, "fixed space of Frobenius^m must have dimension m"
        return basis


class FieldElement:
    """An element of F_{p^N}, stored as N residues (ascending powers of the
    generator).  Immutable and hashable."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldContext, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ValueError("mixed field contexts")
            return other.coeffs
        if isinstance(other, int):
            return self.ctx.tscalar(other)
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.tadd(self.coeffs, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.tsub(self.coeffs, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.tsub(c, self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement(self.ctx, self.ctx.tsmul(other, self.coeffs))
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.tmul(self.coeffs, c))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.tneg(self.coeffs))

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.tmul(self.coeffs, self.ctx.tinv(c)))

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.tmul(c, self.ctx.tinv(self.coeffs)))

    def __pow__(self, e):
        return FieldElement(self.ctx, self.ctx.tpow(self.coeffs, e))

    def inverse(self):
        return FieldElement(self.ctx, self.ctx.tinv(self.coeffs))

    def frobenius(self, e=1):
        return FieldElement(self.ctx, self.ctx.tfrob(self.coeffs, e))

    def in_subfield(self, m):
        return self.ctx.in_subfield(self, m)

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"<{poly_str(self.coeffs)} in F_{self.ctx.order}>"

    def __str__(self):
        return poly_str(self.coeffs)


def poly_str(coeffs) -> str:
    """Human form of a coefficient tuple, e.g. (2, 0, 1) -> 'x^2+2'."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("x" if c == 1 else f"{c}*x")
        else:
            terms.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
    return "+".join(terms) if terms else "0"


@lru_cache(maxsize=None)
def make_context(p: int, degree: int, cap: int = DEFAULT_FIELD_CAP) -> FieldContext:
    """Build the working field F_{p^degree} with the deterministic modulus.

    Raises NotPrimeError for composite p and FieldTooLargeError when p^degree
    exceeds the cap.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if degree < 1:
        raise ValueError("extension degree must be positive")
    if p**degree > cap:
        raise FieldTooLargeError(f"{p}^{degree} = {p**degree} exceeds cap {cap}")
    modulus = smallest_irreducible(p, degree)
    return FieldContext(p, degree, modulus, cap)
