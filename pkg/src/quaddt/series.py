"""Truncated formal power series in one variable with exact rational coefficients.

Every series carries its truncation order explicitly. Arithmetic between
series of different orders is refused; callers truncate first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]

SUBSTITUTIONS = ("q^2", "-q", "-q^2")


class OrderMismatch(ValueError):
    """Two series with different truncation orders were combined."""


class PowerSeries:
    """Coefficients ``c[0..order]`` of a series truncated after ``q**order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs.extend(Fraction(0) for _ in range(order + 1 - len(cs)))
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([1], order)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return "PowerSeries([%s], order=%d)" % (
            ", ".join(str(c) for c in self.coeffs), self.order)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if n == 0:
                terms.append(str(c))
            elif n == 1:
                terms.append("(%s)*q" % c)
            else:
                terms.append("(%s)*q^%d" % (c, n))
        return " + ".join(terms or ["0"]) + " + O(q^%d)" % (self.order + 1)

    def _check(self, other: "PowerSeries") -> None:
        if self.order != other.order:
            raise OrderMismatch(
                "series orders differ: %d vs %d" % (self.order, other.order))

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries([a + b for a, b in zip(self, other)], self.order)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries([a - b for a, b in zip(self, other)], self.order)

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-a for a in self], self.order)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        other = Fraction(other)
        return PowerSeries([other * a for a in self], self.order)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(
                "cannot extend a series of order %d to %d" % (self.order, order))
        return PowerSeries(self.coeffs[: order + 1], order)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_strings(self) -> list[str]:
        """Canonical rendering: ``"num/den"``, or ``"n"`` for integers."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "PowerSeries":
        return cls([Fraction(s) for s in items])


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the common order."""
    a._check(b)
    N = a.order
    A, B = a.coeffs, b.coeffs
    nz_a = [(i, x) for i, x in enumerate(A) if x]
    out = [Fraction(0)] * (N + 1)
    for i, x in nz_a:
        for j in range(N + 1 - i):
            y = B[j]
            if y:
                out[i + j] += x * y
    return PowerSeries(out, N)


def series_log(a: PowerSeries) -> PowerSeries:
    """Formal logarithm of a series with constant term 1."""
    if a[0] != 1:
        raise ValueError("log needs constant term 1, got %s" % a[0])
    N = a.order
    A = a.coeffs
    c = [Fraction(0)] * (N + 1)
    # n c_n = n a_n - sum_{k<n} k c_k a_{n-k}, from c' * a = a'
    for n in range(1, N + 1):
        acc = n * A[n]
        for k in range(1, n):
            if c[k] and A[n - k]:
                acc -= k * c[k] * A[n - k]
        c[n] = acc / n
    return PowerSeries(c, N)


def series_exp(a: PowerSeries) -> PowerSeries:
    """Formal exponential of a series with constant term 0."""
    if a[0] != 0:
        raise ValueError("exp needs constant term 0, got %s" % a[0])
    N = a.order
    A = a.coeffs
    b = [Fraction(0)] * (N + 1)
    b[0] = Fraction(1)
    # n b_n = sum_{k=1..n} k a_k b_{n-k}, from b' = a' b
    for n in range(1, N + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if A[k] and b[n - k]:
                acc += k * A[k] * b[n - k]
        b[n] = acc / n
    return PowerSeries(b, N)


def series_pow(a: PowerSeries, e: Number) -> PowerSeries:
    """``a**e`` for rational ``e``, computed as ``exp(e * log(a))``."""
    if a[0] != 1:
        raise ValueError("pow needs constant term 1, got %s" % a[0])
    e = Fraction(e)
    if e == 0:
        return PowerSeries.one(a.order)
    return series_exp(series_log(a) * e)


def macmahon(order: int) -> PowerSeries:
    """``prod_{n>=1} (1 - q^n)^(-n)`` truncated after ``q**order``."""
    if order < 0:
        raise ValueError("order must be >= 0")
    c = [0] * (order + 1)
    c[0] = 1
    for n in range(1, order + 1):
        for _ in range(n):
            # multiply in place by 1/(1 - q^n)
            for i in range(n, order + 1):
                c[i] += c[i - n]
    return PowerSeries(c, order)


def substitute(a: PowerSeries, mode: str, order: int | None = None) -> PowerSeries:
    """Apply ``q -> q^2``, ``q -> -q`` or ``q -> -q^2`` to ``a``.

    For the squaring modes the default output order is ``2 * a.order``; a
    larger request is allowed only up to ``2 * a.order + 1`` since beyond
    that the coefficients are not determined by ``a``.
    """
    if mode not in SUBSTITUTIONS:
        raise ValueError("unknown substitution %r; expected one of %s"
                         % (mode, ", ".join(SUBSTITUTIONS)))
    if mode == "-q":
        out = PowerSeries([c if n % 2 == 0 else -c for n, c in enumerate(a)],
                          a.order)
        return out if order is None else out.truncate(order)
    limit = 2 * a.order + 1
    if order is None:
        order = 2 * a.order
    if order > limit:
        raise ValueError("q^2 substitution of an order-%d series is known only "
                         "through q^%d" % (a.order, limit))
    sign = -1 if mode == "-q^2" else 1
    out = [Fraction(0)] * (order + 1)
    for n, c in enumerate(a):
        if 2 * n > order:
            break
        out[2 * n] = c * sign ** n
    return PowerSeries(out, order)
