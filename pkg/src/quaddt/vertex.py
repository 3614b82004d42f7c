"""Partition and trace characters of monomial ideals, and vertex measures.

Characters are kept in lattice form as Laurent polynomials in t1, t2, t3,
where the box (k1, k2, k3) stands for t1^k1 t2^k2 t3^k3. Specialising at an
integer weight triple s sends that monomial to the single weight s.k.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import DegenerateWeights, InadmissibleWeights
from .partitions import Partition3D, enumerate_partitions
from .series import PowerSeries
from .witt import euler_ratio, plain_ratio

Exponent = Tuple[int, int, int]
WeightTriple = Tuple[int, int, int]


class LaurentZ3:
    """Sparse Laurent polynomial in three variables with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: Dict[Exponent, int] = {}
        for k, c in items:
            k = tuple(k)
            d[k] = d.get(k, 0) + c
        self.terms = {k: c for k, c in d.items() if c}

    @classmethod
    def monomial(cls, exp: Exponent, coeff: int = 1) -> "LaurentZ3":
        return cls({tuple(exp): coeff})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentZ3):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return "LaurentZ3(%r)" % dict(sorted(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "LaurentZ3") -> "LaurentZ3":
        d = dict(self.terms)
        for k, c in other.terms.items():
            d[k] = d.get(k, 0) + c
        return LaurentZ3(d)

    def __neg__(self) -> "LaurentZ3":
        return LaurentZ3({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LaurentZ3") -> "LaurentZ3":
        return self + (-other)

    def __mul__(self, other) -> "LaurentZ3":
        if isinstance(other, int):
            return LaurentZ3({k: other * c for k, c in self.terms.items()})
        d: Dict[Exponent, int] = {}
        for (a1, a2, a3), c in self.terms.items():
            for (b1, b2, b3), e in other.terms.items():
                k = (a1 + b1, a2 + b2, a3 + b3)
                d[k] = d.get(k, 0) + c * e
        return LaurentZ3(d)

    __rmul__ = __mul__

    def shift(self, exp: Exponent) -> "LaurentZ3":
        """Multiply by the monomial t^exp."""
        e1, e2, e3 = exp
        return LaurentZ3({(k1 + e1, k2 + e2, k3 + e3): c
                          for (k1, k2, k3), c in self.terms.items()})

    def bar(self) -> "LaurentZ3":
        """Negate every exponent (t -> t^-1)."""
        return LaurentZ3({(-a, -b, -c): v for (a, b, c), v in self.terms.items()})

    def coefficient(self, exp: Exponent) -> int:
        return self.terms.get(tuple(exp), 0)

    def rank(self) -> int:
        """Sum of coefficients (virtual rank of the character)."""
        return sum(self.terms.values())


class WeightChar:
    """A character specialised at integer weights: ``{w: v_w}`` without zeros."""

    __slots__ = ("weights",)

    def __init__(self, weights: Mapping[int, int] = ()):
        self.weights = {w: v for w, v in dict(weights).items() if v}

    @property
    def rank(self) -> int:
        return sum(self.weights.values())

    @property
    def has_zero_weight(self) -> bool:
        return 0 in self.weights

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeightChar):
            return self.weights == other.weights
        if isinstance(other, Mapping):
            return self.weights == {w: v for w, v in other.items() if v}
        return NotImplemented

    def __repr__(self) -> str:
        return "WeightChar(%r)" % dict(sorted(self.weights.items()))

    def __add__(self, other: "WeightChar") -> "WeightChar":
        d = dict(self.weights)
        for w, v in other.weights.items():
            d[w] = d.get(w, 0) + v
        return WeightChar(d)


_ONE = LaurentZ3.monomial((0, 0, 0))
_INV_T123 = (-1, -1, -1)
# (1 - t1)(1 - t2)(1 - t3) and (1 - t1)(1 - t2)
_CUBE = (LaurentZ3({(0, 0, 0): 1, (1, 0, 0): -1})
         * LaurentZ3({(0, 0, 0): 1, (0, 1, 0): -1})
         * LaurentZ3({(0, 0, 0): 1, (0, 0, 1): -1}))
_SQUARE = (LaurentZ3({(0, 0, 0): 1, (1, 0, 0): -1})
           * LaurentZ3({(0, 0, 0): 1, (0, 1, 0): -1}))


@lru_cache(maxsize=None)
def q_lattice(P: Partition3D) -> LaurentZ3:
    """Partition function: one monomial per box."""
    return LaurentZ3({b: 1 for b in P.boxes})


@lru_cache(maxsize=None)
def _qqbar(P: Partition3D) -> LaurentZ3:
    Q = q_lattice(P)
    return Q * Q.bar()


@lru_cache(maxsize=None)
def trace_lattice(P: Partition3D) -> LaurentZ3:
    """Trace of Ext^1 - Ext^2 at the monomial ideal of ``P``.

    V = Q - Qbar/(t1 t2 t3) + Q Qbar (1-t1)(1-t2)(1-t3)/(t1 t2 t3).
    """
    Q = q_lattice(P)
    return Q - Q.bar().shift(_INV_T123) + (_qqbar(P) * _CUBE).shift(_INV_T123)


@lru_cache(maxsize=None)
def split_plus(P: Partition3D) -> LaurentZ3:
    """V+ = Q - Q Qbar (1-t1)(1-t2)/(t1 t2)."""
    return q_lattice(P) - (_qqbar(P) * _SQUARE).shift((-1, -1, 0))


@lru_cache(maxsize=None)
def split_minus(P: Partition3D) -> LaurentZ3:
    """V- = -Qbar/(t1 t2 t3) + Q Qbar (1-t1)(1-t2)/(t1 t2 t3)."""
    Q = q_lattice(P)
    return (-Q.bar()).shift(_INV_T123) + (_qqbar(P) * _SQUARE).shift(_INV_T123)


def specialize(L: LaurentZ3, s: Sequence[int]) -> WeightChar:
    """Collapse lattice exponents to integer weights ``s . k``; net zeros drop out."""
    s1, s2, s3 = s
    d: Dict[int, int] = {}
    for (k1, k2, k3), c in L.terms.items():
        w = s1 * k1 + s2 * k2 + s3 * k3
        d[w] = d.get(w, 0) + c
    return WeightChar(d)


def is_admissible(s: Sequence[int]) -> bool:
    """Every entry even and the total congruent to 2 mod 4."""
    return all(x % 2 == 0 for x in s) and sum(s) % 4 == 2


def gamma(s: Sequence[int]) -> Fraction:
    """(s1+s2)(s1+s3)(s2+s3) / (s1 s2 s3)."""
    s1, s2, s3 = s
    if s1 * s2 * s3 == 0:
        raise ZeroDivisionError("gamma needs nonzero weights, got %s" % (tuple(s),))
    return Fraction((s1 + s2) * (s1 + s3) * (s2 + s3), s1 * s2 * s3)


def specialized_trace(P: Partition3D, s: Sequence[int]) -> WeightChar:
    """Specialised trace of ``P`` at ``s``; raises if a weight-0 term survives."""
    c = specialize(trace_lattice(P), s)
    if c.has_zero_weight:
        raise DegenerateWeights(P, P.size, s)
    return c


def _coefficient(s, ell, ratio) -> Fraction:
    total = Fraction(0)
    for P in enumerate_partitions(ell):
        total += ratio(specialized_trace(P, s))
    return total


def vertex_measure_quadratic(s: Sequence[int], max_order: int,
                             method: str = "signed") -> PowerSeries:
    """W(s, q) = 1 + sum_l q^(2l) sum_{|P| = l} prod_w (eps(w) w)^(-v_w).

    ``method="extracted"`` evaluates the same coefficients as
    ``(-1)^l sum prod_w w^(-v_w)``, pulling the epsilon signs out first.
    """
    s = tuple(int(x) for x in s)
    if not is_admissible(s):
        raise InadmissibleWeights(
            "quadratic vertex measure needs even weights with sum = 2 mod 4, "
            "got %s" % (s,))
    if max_order < 0 or max_order % 2:
        raise ValueError("max_order must be a non-negative even integer")
    if method not in ("signed", "extracted"):
        raise ValueError("method must be 'signed' or 'extracted'")
    coeffs = [Fraction(0)] * (max_order + 1)
    coeffs[0] = Fraction(1)
    for ell in range(1, max_order // 2 + 1):
        if method == "signed":
            coeffs[2 * ell] = _coefficient(s, ell, euler_ratio)
        else:
            coeffs[2 * ell] = (-1) ** ell * _coefficient(s, ell, plain_ratio)
    return PowerSeries(coeffs, max_order)


def vertex_measure_classical(s: Sequence[int], max_order: int) -> PowerSeries:
    """W'(s, q) = 1 + sum_l q^l sum_{|P| = l} prod_w w^(-v_w)."""
    s = tuple(int(x) for x in s)
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    coeffs = [Fraction(1)] + [_coefficient(s, ell, plain_ratio)
                              for ell in range(1, max_order + 1)]
    return PowerSeries(coeffs, max_order)
