"""Exception types shared across the package."""


class ZeroWeight(ValueError):
    """A character carries a nonzero multiplicity at weight 0."""


class NonzeroRank(ValueError):
    """A character fed to an Euler ratio does not have virtual rank 0."""


class InadmissibleWeights(ValueError):
    """Weights violate the parity condition (even entries, sum = 2 mod 4)."""


class DegenerateWeights(ValueError):
    """The chosen weights are not generic enough for the requested colength.

    Either a specialised trace kept a weight-0 term (``partition`` is set),
    or a cone weight or pairwise weight sum vanished. Pick new weights.
    """

    def __init__(self, partition=None, ell=None, weights=(), cone=None, reason=None):
        self.partition = partition
        self.ell = ell
        self.weights = tuple(weights)
        self.cone = cone
        self.reason = reason
        where = "" if cone is None else " at cone %d" % cone
        if partition is not None:
            why = ("partition %s (colength %d) has a weight-0 term in its "
                   "specialised trace" % (partition.to_list(), ell))
        else:
            why = reason or "a weight vanishes"
        super().__init__("weights %s are degenerate%s: %s" % (self.weights, where, why))

    def __reduce__(self):
        # keep structured fields when crossing process boundaries
        return (DegenerateWeights,
                (self.partition, self.ell, self.weights, self.cone, self.reason))

    def with_cone(self, cone: int) -> "DegenerateWeights":
        return DegenerateWeights(self.partition, self.ell, self.weights, cone, self.reason)

    def to_dict(self) -> dict:
        return {"error": "degenerate_weights",
                "cone": self.cone,
                "weights": list(self.weights),
                "partition": None if self.partition is None else self.partition.to_list(),
                "colength": self.ell,
                "message": str(self)}


class FanError(ValueError):
    """A fan is malformed or fails a precondition of the requested operation."""


class WeightSearchExhausted(RuntimeError):
    """No generic weight triple was found within the search bound."""
