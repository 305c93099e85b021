"""Truncated periodic zeta and L functions with exact rational coefficients.

Everything lives in the variable u (the substituted q^(-s)); a series is a
coefficient tuple c_0..c_N over Fraction, fixed truncation order N, and all
operations are correct modulo u^(N+1).  Exact arithmetic is not a luxury
here: the equality checks below ARE the theorems being verified, and exp
introduces factorial denominators that floating point would destroy.

The zeta series of a quotient is exp of the logarithmic generating series of
its periodic counts; the L series of a class function is exp of the
generating series of the averaged twisted-fixed-point counts nu_n.  The
product form of an idempotent relation and its coefficient (log) form are
both computed and cross-asserted in product_relation_check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ConstantTermNotOneError,
    ConstantTermNotZeroError,
    ConstantTermZeroError,
)
from .gring import ClassFunction
from .quotcount import quotient_periodic
from .system import DynSystem


@dataclass(frozen=True)
class TruncatedSeries:
    """A formal power series in u, exact rationals, truncated at `order`."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order+1 coefficients")
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
        )

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, (Fraction(0),) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, (Fraction(1),) + (Fraction(0),) * order)

    def _check(self, other):
        if self.order != other.order:
            raise ValueError("mixed truncation orders")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.order, tuple(c * other for c in self.coeffs))
        self._check(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return TruncatedSeries(n, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        if self.coeffs[0] == 0:
            raise ConstantTermZeroError("cannot invert a series with zero constant term")
        n = self.order
        a = self.coeffs
        b = [Fraction(0)] * (n + 1)
        b[0] = Fraction(1) / a[0]
        for k in range(1, n + 1):
            s = sum(a[i] * b[k - i] for i in range(1, k + 1))
            b[k] = -s / a[0]
        return TruncatedSeries(n, tuple(b))

    def exp(self) -> "TruncatedSeries":
        if self.coeffs[0] != 0:
            raise ConstantTermNotZeroError("exp needs zero constant term")
        n = self.order
        a = self.coeffs
        b = [Fraction(0)] * (n + 1)
        b[0] = Fraction(1)
        # b' = a' b termwise: k b_k = sum_{j=1..k} j a_j b_{k-j}
        for k in range(1, n + 1):
            s = sum(j * a[j] * b[k - j] for j in range(1, k + 1))
            b[k] = s / k
        return TruncatedSeries(n, tuple(b))

    def log(self) -> "TruncatedSeries":
        if self.coeffs[0] == 0:
            raise ConstantTermZeroError("log needs nonzero constant term")
        if self.coeffs[0] != 1:
            raise ConstantTermNotOneError(
                "log with constant term != 1 has no rational expansion"
            )
        n = self.order
        a = self.coeffs
        b = [Fraction(0)] * (n + 1)
        # k a_k = sum_{j=1..k} j b_j a_{k-j}  (from f' = (log f)' f)
        for k in range(1, n + 1):
            s = sum(j * b[j] * a[k - j] for j in range(1, k))
            b[k] = (k * a[k] - s) / Fraction(k)
        return TruncatedSeries(n, tuple(b))

    def pow_int(self, e: int) -> "TruncatedSeries":
        if e < 0:
            return self.inverse().pow_int(-e)
        result = TruncatedSeries.one(self.order)
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def is_one(self) -> bool:
        return self == TruncatedSeries.one(self.order)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*u")
            else:
                terms.append(f"{c}*u^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(u^{self.order + 1})"


def log_generating_series(counts, order: int) -> TruncatedSeries:
    """sum_n counts[n-1] * u^n / n, truncated."""
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        coeffs[n] = Fraction(counts[n - 1], n)
    return TruncatedSeries(order, tuple(coeffs))


def periodic_zeta(sys: DynSystem, H, order: int) -> TruncatedSeries:
    """Truncated zeta series of the quotient by H: exp of the logarithmic
    generating series of periodic counts over F_{q^n}, n <= order."""
    counts = [quotient_periodic(sys, H, n) for n in range(1, order + 1)]
    return log_generating_series(counts, order).exp()


def nu_n(sys: DynSystem, psi: ClassFunction, n: int) -> Fraction:
    """(1/|G|) sum_g psi(g^{-1}) |PerFix(g o Frobenius^n)|, exact."""
    G = sys.group
    total = Fraction(0)
    for g in range(G.size):
        v = psi.value_on_element(G.inverse_index(g))
        if v:
            total += v * sys.per_fix(g, n)
    return total / G.size


def periodic_L(sys: DynSystem, psi: ClassFunction, order: int) -> TruncatedSeries:
    """Truncated L series of a class function: exp of sum nu_n(psi) u^n / n."""
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        coeffs[n] = nu_n(sys, psi, n) / n
    return TruncatedSeries(order, tuple(coeffs)).exp()


@dataclass
class ProductCheck:
    """Result of checking a relation in zeta-product form."""

    ok: bool
    product: TruncatedSeries
    residual: TruncatedSeries  # product minus the constant series 1
    log_residuals: list  # sum_H n_H * count(H, n) per n = 1..order


def product_relation_check(sys: DynSystem, rel, order: int) -> ProductCheck:
    """Is the product of quotient zeta series to the relation's powers the
    constant series 1?  Computed both as the literal truncated product and,
    equivalently, as per-coefficient count sums; the two verdicts must agree
    (cross-asserted)."""
    subs = sys.group.subgroups()
    product = TruncatedSeries.one(order)
    for c, H in zip(rel.coeffs, subs):
        if c:
            product = product * periodic_zeta(sys, H, order).pow_int(c)
    log_residuals = []
    for n in range(1, order + 1):
        log_residuals.append(
            sum(c * quotient_periodic(sys, H, n) for c, H in zip(rel.coeffs, subs) if c)
        )
    ok_product = product.is_one()
    ok_log = not any(log_residuals)
    assert ok_product == ok_log, "product and coefficient forms must agree"
    return ProductCheck(
        ok=ok_product,
        product=product,
        residual=product - TruncatedSeries.one(order),
        log_residuals=log_residuals,
    )
