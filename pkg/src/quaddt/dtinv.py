"""Localized equivariant DT series of oriented toric threefolds.

The series is the product, over one cone from each pair {c, -c}, of the
quadratic vertex measure at that cone's weights. Weights come from the
odd embedding parameters (a, b, c) contracted with the cone weight matrix.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DegenerateWeights, FanError, WeightSearchExhausted
from .fan import Fan, orientation_check, sigma_orbit_representatives, weight_matrices
from .partitions import enumerate_partitions
from .series import PowerSeries, macmahon, series_mul, series_pow, substitute
from .vertex import gamma, specialized_trace, vertex_measure_quadratic
from .witt import euler_ratio

log = logging.getLogger(__name__)

# (Z/4)^x cubed modulo a global sign, normalised so the first residue is 1
TAU_CLASSES: Tuple[Tuple[int, int, int], ...] = ((1, 1, 1), (1, 1, 3), (1, 3, 1), (1, 3, 3))


def tau_class(a: int, b: int, c: int) -> Tuple[int, int, int]:
    r = (a % 4, b % 4, c % 4)
    if r[0] == 3:
        r = tuple(4 - x for x in r)
    return r


@dataclass(frozen=True)
class EmbeddingParams:
    """Odd, positive, coprime (a, b, c) defining the one-parameter subgroup."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        for x in self.triple:
            if x <= 0 or x % 2 == 0:
                raise ValueError("embedding parameters must be odd and positive, got %s"
                                 % (self.triple,))
        if gcd(gcd(self.a, self.b), self.c) != 1:
            raise ValueError("embedding parameters must be coprime, got %s" % (self.triple,))

    @property
    def triple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def tau(self) -> Tuple[int, int, int]:
        return tau_class(*self.triple)


def cone_weights(f: Fan, p: EmbeddingParams) -> List[Tuple[int, int, int]]:
    """``(a, b, c) . S`` for each cone's weight matrix ``S``."""
    out = []
    for S in weight_matrices(f):
        out.append(tuple(sum(p.triple[i] * S[i][j] for i in range(3)) for j in range(3)))
    return out


def _check_cone(s, cone) -> None:
    s1, s2, s3 = s
    if 0 in s:
        raise DegenerateWeights(weights=s, cone=cone, reason="a cone weight is zero")
    if 0 in (s1 + s2, s1 + s3, s2 + s3):
        raise DegenerateWeights(weights=s, cone=cone, reason="a pairwise weight sum is zero")


def check_generic(f: Fan, p: EmbeddingParams, max_colength: int) -> None:
    """Raise ``DegenerateWeights`` unless every trace up to ``max_colength`` is clean.

    Only orbit representatives are checked: the partner cone has negated
    weights, which vanish on exactly the same lattice terms.
    """
    weights = cone_weights(f, p)
    for cone in sigma_orbit_representatives(f):
        s = weights[cone]
        _check_cone(s, cone)
        for n in range(1, max_colength + 1):
            for P in enumerate_partitions(n):
                try:
                    specialized_trace(P, s)
                except DegenerateWeights as exc:
                    raise exc.with_cone(cone) from None


def _candidates(max_value: int):
    for m in range(1, max_value + 1, 2):
        for t in itertools.product(range(1, m + 1, 2), repeat=3):
            if max(t) == m:
                yield t


def select_weights(f: Fan, max_colength: int, tau: Optional[Sequence[int]] = None,
                   max_value: int = 199) -> EmbeddingParams:
    """Smallest odd coprime (a, b, c), certified generic through ``max_colength``.

    Candidates are scanned by increasing ``max(a, b, c)``, then
    lexicographically; the search is deterministic.
    """
    if max_colength < 1:
        raise ValueError("max_colength must be >= 1")
    rep = orientation_check(f)
    if not rep.ok:
        raise FanError("orientation check failed: " + "; ".join(rep.failures))
    if tau is not None:
        tau = tau_class(*tau)
    for t in _candidates(max_value):
        if gcd(gcd(t[0], t[1]), t[2]) != 1:
            continue
        if tau is not None and tau_class(*t) != tau:
            continue
        p = EmbeddingParams(*t)
        try:
            check_generic(f, p, max_colength)
        except DegenerateWeights:
            continue
        return p
    raise WeightSearchExhausted(
        "no generic (a, b, c) with entries <= %d for colength %d%s"
        % (max_value, max_colength, "" if tau is None else " in class %s" % (tau,)))


@dataclass
class DTReport:
    series: PowerSeries
    exponent: Fraction
    bott_c3: Fraction
    weights_used: EmbeddingParams
    cone_weights: List[Tuple[int, int, int]]
    representatives: List[int]
    macmahon_shape: bool

    def to_dict(self) -> dict:
        return {
            "series": self.series.to_strings(),
            "exponent": str(self.exponent),
            "bott_c3": str(self.bott_c3),
            "macmahon_shape": self.macmahon_shape,
            "weights": {"abc": list(self.weights_used.triple),
                        "tau": list(self.weights_used.tau),
                        "representatives": list(self.representatives),
                        "cones": [list(s) for s in self.cone_weights]},
        }


def _measure(args):
    s, order, cone = args
    try:
        return vertex_measure_quadratic(s, order)
    except DegenerateWeights as exc:
        raise exc.with_cone(cone) from None


def _map(fn, items, jobs: int):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def quadratic_dt_series(f: Fan, p: EmbeddingParams, max_order: int,
                        jobs: int = 1) -> DTReport:
    """Product of quadratic vertex measures over orbit representatives."""
    if max_order < 2 or max_order % 2:
        raise ValueError("max_order must be an even integer >= 2")
    weights = cone_weights(f, p)
    reps = sigma_orbit_representatives(f)
    measures = _map(_measure, [(weights[c], max_order, c) for c in reps], jobs)
    series = PowerSeries.one(max_order)
    for W in measures:
        series = series_mul(series, W)
    assert all(series[n] == 0 for n in range(1, max_order + 1, 2))
    exponent = series[2]
    shape = substitute(series_pow(macmahon(max_order // 2), exponent), "q^2",
                       max_order) == series
    if not shape:
        log.warning("series for %s does not have MacMahon-power shape", p.triple)
    bott = bott_residue_c3(f, p)
    return DTReport(series, exponent, bott, p, weights, reps, shape)


def bott_residue_c3(f: Fan, p: EmbeddingParams) -> Fraction:
    """deg c3(T_X (x) K_X) = -sum over all cones of gamma(s)."""
    total = Fraction(0)
    for cone, s in enumerate(cone_weights(f, p)):
        _check_cone(s, cone)
        total -= gamma(s)
    return total


def classical_dt_series(f: Fan, p: EmbeddingParams, max_order: int) -> PowerSeries:
    """M(-q) raised to the Bott residue of c3(T_X (x) K_X)."""
    c3 = bott_residue_c3(f, p)
    return substitute(series_pow(macmahon(max_order), c3), "-q")


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _oracle_branch(args) -> Fraction:
    first_ratio, sizes, tables = args
    acc = Fraction(0)
    for choice in itertools.product(*(tables[i][n] for i, n in enumerate(sizes))):
        prod = first_ratio
        for r in choice:
            prod *= r
        acc += prod
    return acc


def localization_oracle(f: Fan, p: EmbeddingParams, n: int, jobs: int = 1) -> Fraction:
    """Sum over fixed ideal sheaves of total colength ``n`` of their Euler ratios.

    Fixed points are tuples of 3D partitions, one per orbit representative
    (mirrored on the partner cone), with box counts summing to ``n / 2``.
    Each tuple contributes the product of its per-cone Euler ratios.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2:
        return Fraction(0)
    m = n // 2
    weights = cone_weights(f, p)
    reps = sigma_orbit_representatives(f)
    # tables[i][k]: Euler ratios of all size-k partitions at representative i
    tables = []
    for cone in reps:
        s = weights[cone]
        per_size = []
        for k in range(m + 1):
            ratios = []
            for P in enumerate_partitions(k):
                try:
                    ratios.append(euler_ratio(specialized_trace(P, s)))
                except DegenerateWeights as exc:
                    raise exc.with_cone(cone) from None
            per_size.append(ratios)
        tables.append(per_size)
    branches = []
    for sizes in _compositions(m, len(reps)):
        for r in tables[0][sizes[0]]:
            branches.append((r, sizes[1:], tables[1:]))
    return sum(_map(_oracle_branch, branches, jobs), Fraction(0))


@dataclass
class TauReport:
    agree: bool
    runs: Dict[Tuple[int, int, int], DTReport] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"agree": self.agree,
                "classes": {"".join(map(str, t)): {"abc": list(r.weights_used.triple),
                                                   "series": r.series.to_strings()}
                            for t, r in self.runs.items()}}


def tau_independence_check(f: Fan, max_order: int, jobs: int = 1) -> TauReport:
    """Series for one certified generic triple in each of the four tau classes."""
    runs = {}
    for tau in TAU_CLASSES:
        p = select_weights(f, max_order // 2, tau=tau)
        runs[tau] = quadratic_dt_series(f, p, max_order, jobs=jobs)
    first = next(iter(runs.values())).series
    return TauReport(all(r.series == first for r in runs.values()), runs)
