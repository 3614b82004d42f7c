"""3D partitions: finite downward-closed box sets in Z>=0^3.

A 3D partition is the staircase of a monomial ideal of finite colength in
k[x, y, z]; the number of boxes is the colength.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Tuple

Box = Tuple[int, int, int]


def is_downward_closed(boxes: Iterable[Box]) -> bool:
    """True iff every box's lower neighbours (in each axis) are present."""
    bs = set(map(tuple, boxes))
    for b in bs:
        if len(b) != 3 or min(b) < 0:
            return False
        for i in range(3):
            if b[i] > 0:
                lower = list(b)
                lower[i] -= 1
                if tuple(lower) not in bs:
                    return False
    return True


class Partition3D:
    """Immutable 3D partition; equality and hashing use the sorted box tuple."""

    __slots__ = ("boxes", "_hash")

    def __init__(self, boxes: Iterable[Box] = (), *, check: bool = True):
        bs = tuple(sorted(set(tuple(int(x) for x in b) for b in boxes)))
        if check and not is_downward_closed(bs):
            raise ValueError("box set is not a 3D partition: %r" % (bs,))
        object.__setattr__(self, "boxes", bs)
        object.__setattr__(self, "_hash", hash(bs))

    def __setattr__(self, name, value):
        raise AttributeError("Partition3D is immutable")

    @property
    def size(self) -> int:
        return len(self.boxes)

    def __len__(self) -> int:
        return len(self.boxes)

    def __iter__(self):
        return iter(self.boxes)

    def __contains__(self, box) -> bool:
        return tuple(box) in set(self.boxes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition3D):
            return NotImplemented
        return self.boxes == other.boxes

    def __lt__(self, other: "Partition3D") -> bool:
        return self.boxes < other.boxes

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return "Partition3D(%r)" % (list(self.boxes),)

    def permuted(self, perm: Tuple[int, int, int]) -> "Partition3D":
        """Coordinates reordered so that new axis ``i`` is old axis ``perm[i]``."""
        return Partition3D(
            (tuple(b[p] for p in perm) for b in self.boxes), check=False)

    def to_list(self) -> list[list[int]]:
        return [list(b) for b in self.boxes]


def _removable(boxes: frozenset, b: Box) -> bool:
    # b is a corner iff none of its upper neighbours is present
    x, y, z = b
    return ((x + 1, y, z) not in boxes and (x, y + 1, z) not in boxes
            and (x, y, z + 1) not in boxes)


def _addable(boxes: frozenset) -> list[Box]:
    if not boxes:
        return [(0, 0, 0)]
    cands = set()
    for (x, y, z) in boxes:
        cands.update(((x + 1, y, z), (x, y + 1, z), (x, y, z + 1)))
    out = []
    for c in cands:
        if c in boxes:
            continue
        ok = True
        for i in range(3):
            if c[i] > 0:
                lower = list(c)
                lower[i] -= 1
                if tuple(lower) not in boxes:
                    ok = False
                    break
        if ok:
            out.append(c)
    return out


@lru_cache(maxsize=None)
def _level(n: int) -> Tuple[frozenset, ...]:
    # Canonical parent of a partition: remove its lexicographically largest
    # corner. A child is kept only if the added box is that corner, so every
    # partition of size n is produced exactly once.
    if n == 0:
        return (frozenset(),)
    out = []
    for parent in _level(n - 1):
        for b in _addable(parent):
            child = parent | {b}
            corners = [c for c in child if _removable(child, c)]
            if max(corners) == b:
                out.append(child)
    return tuple(out)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> Tuple[Partition3D, ...]:
    parts = [Partition3D(p, check=False) for p in _level(n)]
    parts.sort()
    return tuple(parts)


def enumerate_partitions(n: int) -> list[Partition3D]:
    """All 3D partitions with exactly ``n`` boxes, sorted by box list."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return list(_enumerate(n))
