"""Sign function and localized Euler-class ratios of weight characters.

Values live in the Witt ring of the reals after localization, which the
signature identifies with Z (and Q after inverting integers), so every
ratio here is an exact ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import NonzeroRank, ZeroWeight


def epsilon(m: int) -> int:
    """+1 for m = 1, 2 (mod 4); -1 for m = 0, 3 (mod 4)."""
    if m == 0:
        raise ZeroWeight("epsilon is undefined at 0")
    return 1 if m % 4 in (1, 2) else -1


def _weights(c) -> Mapping[int, int]:
    return c.weights if hasattr(c, "weights") else c


def _check(weights: Mapping[int, int]) -> None:
    if weights.get(0, 0):
        raise ZeroWeight("character has multiplicity %d at weight 0" % weights[0])
    rank = sum(weights.values())
    if rank:
        raise NonzeroRank("character has virtual rank %d, expected 0" % rank)


def _ratio(weights: Mapping[int, int], signed: bool) -> Fraction:
    # accumulate numerator and denominator separately, reduce once
    num = den = 1
    for w, v in weights.items():
        if not v:
            continue
        f = epsilon(w) * w if signed else w
        if v < 0:
            num *= f ** (-v)
        else:
            den *= f ** v
    return Fraction(num, den)


def euler_ratio(c) -> Fraction:
    """prod_w (epsilon(w) * w) ** (-v_w) for a rank-0 character without weight 0.

    ``c`` is a ``WeightChar`` or a plain ``{weight: multiplicity}`` mapping.
    """
    weights = _weights(c)
    _check(weights)
    return _ratio(weights, signed=True)


def plain_ratio(c) -> Fraction:
    """prod_w w ** (-v_w): the Euler ratio without the epsilon signs."""
    weights = _weights(c)
    _check(weights)
    return _ratio(weights, signed=False)


def sign_product(c) -> int:
    """prod_w epsilon(w) ** v_w."""
    weights = _weights(c)
    if weights.get(0, 0):
        raise ZeroWeight("character has multiplicity %d at weight 0" % weights[0])
    sign = 1
    for w, v in weights.items():
        if v % 2 and epsilon(w) < 0:
            sign = -sign
    return sign
