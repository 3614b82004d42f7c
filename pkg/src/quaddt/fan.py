"""Complete regular simplicial fans in Z^3.

Covers validation, per-cone coordinate frames, the orientation criterion on
inverse generator matrices, involution orbits and star subdivision.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

from .errors import FanError

Vec = Tuple[int, int, int]
Mat = Tuple[Vec, Vec, Vec]


class FanFormatError(FanError):
    """A fan file could not be parsed; the message names the offending field."""


def det3(m: Sequence[Sequence[int]]) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def inverse_unimodular(m: Sequence[Sequence[int]]) -> Mat:
    """Exact integer inverse of a 3x3 matrix with determinant +-1."""
    d = det3(m)
    if d not in (1, -1):
        raise FanError("matrix %s is not unimodular (det %d)" % (m, d))
    (a, b, c), (dd, e, f), (g, h, i) = m
    adj = ((e * i - f * h, c * h - b * i, b * f - c * e),
           (f * g - dd * i, a * i - c * g, c * dd - a * f),
           (dd * h - e * g, b * g - a * h, a * e - b * dd))
    return tuple(tuple(x * d for x in row) for row in adj)


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Mat:
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
                 for i in range(3))


def _neg(v: Vec) -> Vec:
    return (-v[0], -v[1], -v[2])


@dataclass(frozen=True)
class Fan:
    """Rays (integer 3-vectors) and maximal cones (triples of ray indices)."""

    rays: Tuple[Vec, ...]
    cones: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in r) for r in self.rays)
        cones = tuple(tuple(int(x) for x in c) for c in self.cones)
        for i, r in enumerate(rays):
            if len(r) != 3:
                raise FanError("ray %d has %d entries, expected 3" % (i, len(r)))
        for i, c in enumerate(cones):
            if len(c) != 3 or len(set(c)) != 3:
                raise FanError("cone %d must list 3 distinct rays, got %s" % (i, c))
            for j in c:
                if not 0 <= j < len(rays):
                    raise FanError("cone %d refers to missing ray %d" % (i, j))
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "cones", cones)

    def generators(self, cone: int) -> Tuple[Vec, Vec, Vec]:
        return tuple(self.rays[j] for j in self.cones[cone])

    def cone_key(self, cone: int) -> Tuple[Vec, ...]:
        """Lexicographically sorted generator matrix; identifies the cone."""
        return tuple(sorted(self.generators(cone)))

    def find_cone(self, generators: Sequence[Vec]) -> int | None:
        key = tuple(sorted(tuple(g) for g in generators))
        for i in range(len(self.cones)):
            if self.cone_key(i) == key:
                return i
        return None

    def negated_cone(self, cone: int) -> int | None:
        return self.find_cone([_neg(g) for g in self.generators(cone)])

    def edges(self) -> Dict[Tuple[int, int], List[int]]:
        out: Dict[Tuple[int, int], List[int]] = {}
        for idx, c in enumerate(self.cones):
            for e in combinations(sorted(c), 2):
                out.setdefault(e, []).append(idx)
        return out

    def to_dict(self) -> dict:
        return {"rays": [list(r) for r in self.rays],
                "cones": [list(c) for c in self.cones]}

    @classmethod
    def from_dict(cls, data) -> "Fan":
        if not isinstance(data, dict):
            raise FanFormatError("top level: expected an object with 'rays' and 'cones'")
        for key in ("rays", "cones"):
            if key not in data:
                raise FanFormatError("missing field %r" % key)
            if not isinstance(data[key], list):
                raise FanFormatError("field %r: expected a list" % key)
        for name, width in (("rays", 3), ("cones", 3)):
            for i, item in enumerate(data[name]):
                if not isinstance(item, list) or len(item) != width:
                    raise FanFormatError("%s[%d]: expected a list of %d integers"
                                         % (name, i, width))
                for j, x in enumerate(item):
                    if isinstance(x, bool) or not isinstance(x, int):
                        raise FanFormatError("%s[%d][%d]: expected an integer, got %r"
                                             % (name, i, j, x))
        try:
            return cls(tuple(map(tuple, data["rays"])), tuple(map(tuple, data["cones"])))
        except FanError as exc:
            raise FanFormatError(str(exc)) from None


def loads_fan(text: str) -> Fan:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FanFormatError("line %d, column %d: %s" % (exc.lineno, exc.colno, exc.msg)) from None
    return Fan.from_dict(data)


def load_fan(path) -> Fan:
    return loads_fan(Path(path).read_text())


def dumps_fan(f: Fan) -> str:
    lines = ["{", '  "rays": [']
    lines += ["    %s%s" % (json.dumps(list(r)), "," if i < len(f.rays) - 1 else "")
              for i, r in enumerate(f.rays)]
    lines += ["  ],", '  "cones": [']
    lines += ["    %s%s" % (json.dumps(list(c)), "," if i < len(f.cones) - 1 else "")
              for i, c in enumerate(f.cones)]
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def save_fan(f: Fan, path) -> None:
    Path(path).write_text(dumps_fan(f))


def octant_fan() -> Fan:
    """The eight coordinate octants: the fan of P^1 x P^1 x P^1.

    Ray ``i`` is ``e_i`` and ray ``i + 3`` is ``-e_i``; cone ``(k, l, m)``
    (listed in lexicographic order) uses ``(-1)^k e_1, (-1)^l e_2, (-1)^m e_3``.
    """
    rays = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1))
    cones = tuple((3 * k, 1 + 3 * l, 2 + 3 * m)
                  for k in (0, 1) for l in (0, 1) for m in (0, 1))
    return Fan(rays, cones)


def projective_space_fan() -> Fan:
    """Fan of P^3; complete and regular but not centrally symmetric."""
    rays = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1))
    return Fan(rays, tuple(combinations(range(4), 3)))


# --- validation ----------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {c.name: {"passed": c.passed, "detail": c.detail} for c in self.checks}


def validate_fan(f: Fan) -> ValidationReport:
    """Run the structural checks and report each one.

    Checks: primitive distinct rays, unimodular cones, every edge in exactly
    two cones, Euler count 2, neighbouring cones on opposite sides of their
    shared edge, and invariance under negation.
    """
    rep = ValidationReport()

    bad = [i for i, r in enumerate(f.rays) if gcd(*r) != 1]
    dup = len(set(f.rays)) != len(f.rays)
    detail = []
    if bad:
        detail.append("non-primitive rays %s" % bad)
    if dup:
        detail.append("repeated rays")
    rep.checks.append(CheckResult("primitive", not bad and not dup, "; ".join(detail)))

    singular = [i for i in range(len(f.cones)) if abs(det3(f.generators(i))) != 1]
    rep.checks.append(CheckResult(
        "regular", not singular,
        "cones with |det| != 1: %s" % singular if singular else ""))

    edges = f.edges()
    unpaired = sorted(e for e, cs in edges.items() if len(cs) != 2)
    rep.checks.append(CheckResult(
        "face_pairing", not unpaired,
        "edges not in exactly two cones: %s" % unpaired[:8] if unpaired else ""))

    chi = len(f.rays) - len(edges) + len(f.cones)
    rep.checks.append(CheckResult(
        "euler", chi == 2, "" if chi == 2 else "rays - edges + cones = %d" % chi))

    folded = []
    for (i, j), cs in edges.items():
        if len(cs) != 2:
            continue
        sides = []
        for c in cs:
            (k,) = set(f.cones[c]) - {i, j}
            sides.append(det3((f.rays[i], f.rays[j], f.rays[k])))
        if sides[0] * sides[1] >= 0:
            folded.append((i, j))
    rep.checks.append(CheckResult(
        "separation", not folded,
        "cones on the same side of edges %s" % sorted(folded)[:8] if folded else ""))

    ray_set = set(f.rays)
    missing_rays = [i for i, r in enumerate(f.rays) if _neg(r) not in ray_set]
    missing_cones = [i for i in range(len(f.cones)) if f.negated_cone(i) is None]
    detail = []
    if missing_rays:
        detail.append("rays without negative: %s" % missing_rays)
    if missing_cones:
        detail.append("cones without negative: %s" % missing_cones)
    rep.checks.append(CheckResult(
        "central_symmetry", not missing_rays and not missing_cones, "; ".join(detail)))
    return rep


# --- frames and orientation ------------------------------------------------

@dataclass(frozen=True)
class ConeFrame:
    """Generator matrix ``V`` (rows are generators), ``R = V^-1`` and ``det V``."""

    cone: int
    V: Mat
    R: Mat
    det_sign: int

    @property
    def row_sums(self) -> Vec:
        return tuple(sum(row) for row in self.R)

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.R)


def _pairs(f: Fan) -> Dict[int, int | None]:
    return {i: f.negated_cone(i) for i in range(len(f.cones))}


def _is_representative(f: Fan, cone: int, partner: int | None) -> bool:
    return partner is None or f.cone_key(cone) <= f.cone_key(partner)


def cone_frames(f: Fan) -> List[ConeFrame]:
    """Frames for every cone, in cone order.

    The orbit representative keeps its generators in the order the fan lists
    them; its negated partner lists the negated generators in the same order,
    so that ``R(-cone) == -R(cone)`` entrywise.
    """
    pairs = _pairs(f)
    frames = []
    for i in range(len(f.cones)):
        partner = pairs[i]
        if _is_representative(f, i, partner):
            V = f.generators(i)
        else:
            V = tuple(_neg(g) for g in f.generators(partner))
        d = det3(V)
        if d not in (1, -1):
            raise FanError("cone %d is not unimodular (det %d)" % (i, d))
        frames.append(ConeFrame(i, V, inverse_unimodular(V), d))
    return frames


@dataclass
class OrientationReport:
    ok: bool
    failures: List[str] = field(default_factory=list)
    cones: List[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"passed": self.ok, "failures": list(self.failures),
                "cones": list(self.cones)}


def orientation_check(f: Fan) -> OrientationReport:
    """Parity criterion on ``R = V^-1`` for every cone.

    (a) the entry sum of ``R`` is odd for every cone; (b) for each row ``i``
    the row sums of ``R`` agree mod 2 across all cones.
    """
    val = validate_fan(f)
    if not val.ok:
        names = ", ".join(c.name for c in val.failures())
        return OrientationReport(False, ["fan validation failed: %s" % names])
    frames = cone_frames(f)
    failures, cones = [], []
    for fr in frames:
        if fr.total % 2 == 0:
            failures.append("cone %d %s: sum of inverse entries %d is even"
                            % (fr.cone, [list(v) for v in fr.V], fr.total))
            cones.append(fr.cone)
    base = frames[0]
    for fr in frames[1:]:
        for i in range(3):
            if (fr.row_sums[i] - base.row_sums[i]) % 2:
                failures.append("cones %d and %d: row %d sums %d and %d differ in parity"
                                % (base.cone, fr.cone, i + 1, base.row_sums[i],
                                   fr.row_sums[i]))
                if fr.cone not in cones:
                    cones.append(fr.cone)
    return OrientationReport(not failures, failures, cones)


def weight_matrices(f: Fan) -> List[Mat]:
    """Coordinate weight matrix ``-2 R`` for every cone."""
    rep = orientation_check(f)
    if not rep.ok:
        raise FanError("orientation check failed: " + "; ".join(rep.failures))
    out = []
    for fr in cone_frames(f):
        S = tuple(tuple(-2 * x for x in row) for row in fr.R)
        assert all(sum(S[i][j] for i in range(3)) % 2 == 0 for j in range(3))
        assert all(sum(row) % 2 == 0 for row in S)
        assert sum(map(sum, S)) % 4 == 2
        out.append(S)
    return out


def sigma_orbit_representatives(f: Fan) -> List[int]:
    """One cone from each pair ``{c, -c}``: the one with the smaller sorted generators."""
    reps = []
    for i, partner in _pairs(f).items():
        if partner is None:
            raise FanError("cone %d has no negated partner" % i)
        if _is_representative(f, i, partner):
            reps.append(i)
    return reps


def star_subdivide(f: Fan, cone: int) -> Fan:
    """Blow up the orbit of ``cone``: subdivide it and its negation at the generator sums.

    Each of the two cones is replaced in place by its three subcones; the two
    new rays ``v`` and ``-v`` are appended.
    """
    if not 0 <= cone < len(f.cones):
        raise FanError("cone %d is not in the fan (%d cones)" % (cone, len(f.cones)))
    partner = f.negated_cone(cone)
    if partner is None:
        raise FanError("cone %d has no negated partner" % cone)
    v = tuple(sum(g[k] for g in f.generators(cone)) for k in range(3))
    if v in f.rays or _neg(v) in f.rays:
        raise FanError("ray %s is already present" % (v,))
    rays = f.rays + (v, _neg(v))
    new_for = {cone: len(f.rays), partner: len(f.rays) + 1}
    cones = []
    for i, c in enumerate(f.cones):
        if i in new_for:
            n = new_for[i]
            cones.extend(tuple(n if j == k else c[j] for j in range(3)) for k in range(3))
        else:
            cones.append(c)
    return Fan(rays, tuple(cones))
