"""Example fan files shipped with the package.

``p1cubed`` is the octant fan of P^1 x P^1 x P^1; ``p1cubed_blowup{1,2,3}``
are its iterated equivariant blowups at orbits of octant pairs. ``p3`` and
``sheared_octants`` are negative controls: the first is not centrally
symmetric, the second is a linear image of the octant fan whose inverse
generator matrices all have even entry sums.
"""

from importlib import resources

from ..fan import Fan, loads_fan

ORIENTED = ("p1cubed", "p1cubed_blowup1", "p1cubed_blowup2", "p1cubed_blowup3")
NEGATIVE = ("p3", "sheared_octants")
NAMES = ORIENTED + NEGATIVE


def path(name: str):
    return resources.files(__name__).joinpath(name + ".json")


def load(name: str) -> Fan:
    if name not in NAMES:
        raise KeyError("unknown corpus fan %r; known: %s" % (name, ", ".join(NAMES)))
    return loads_fan(path(name).read_text())
