"""Set-valued maximal monotone operators represented through their resolvents.

Only the resolvent J_lam = (I + lam*T)^-1 is ever evaluated: it is
single-valued and everywhere defined for maximal monotone T, and it is all
the Newton subproblem and the natural-residual stopping rule need. The three
supported operators have exact closed-form resolvents.
"""

import numpy as np

from .errors import DimensionMismatch
from .linalg import as_vector


class MonotoneOperator:
    """Base class; concrete operators implement :meth:`resolvent`."""

    kind = "abstract"

    def __init__(self, dimension):
        if dimension < 1:
            raise DimensionMismatch("operator dimension must be >= 1")
        self.dimension = int(dimension)

    def resolvent(self, lam, z):
        """The unique y with z - y in lam*T(y), for lam > 0."""
        raise NotImplementedError

    def _check(self, lam, z):
        if lam <= 0:
            raise ValueError(f"resolvent parameter must be positive, got {lam}")
        return as_vector(z, dim=self.dimension)

    def to_config(self):
        raise NotImplementedError


class ZeroOperator(MonotoneOperator):
    """T = {0}: the resolvent is the identity for every lam."""

    kind = "zero"

    def resolvent(self, lam, z):
        return self._check(lam, z).copy()

    def to_config(self):
        return {"kind": "zero"}


class BoxNormalCone(MonotoneOperator):
    """Normal cone of a box [lower, upper]; resolvent is the projection.

    Infinite bounds are allowed per component (use -inf/+inf), which covers
    the nonnegative orthant of complementarity problems. The projection does
    not depend on lam.
    """

    kind = "box"

    def __init__(self, lower, upper):
        lower = np.asarray(lower, dtype=float)
        upper = np.asarray(upper, dtype=float)
        if lower.shape != upper.shape or lower.ndim != 1:
            raise DimensionMismatch("box bounds must be 1-D and of equal length")
        if np.any(np.isnan(lower)) or np.any(np.isnan(upper)):
            raise ValueError("box bounds must not be NaN")
        if np.any(lower > upper):
            raise ValueError("box requires lower <= upper componentwise")
        super().__init__(lower.shape[0])
        self.lower = lower
        self.upper = upper

    @classmethod
    def nonnegative(cls, dimension):
        """Normal cone of the nonnegative orthant."""
        return cls(np.zeros(dimension), np.full(dimension, np.inf))

    def resolvent(self, lam, z):
        z = self._check(lam, z)
        return np.clip(z, self.lower, self.upper)

    def to_config(self):
        low = [None if not np.isfinite(v) else v for v in self.lower]
        up = [None if not np.isfinite(v) else v for v in self.upper]
        return {"kind": "box", "lower": low, "upper": up}


class L1Subdifferential(MonotoneOperator):
    """Subdifferential of weight * ||.||_1; resolvent is soft-thresholding."""

    kind = "l1"

    def __init__(self, dimension, weight):
        if weight < 0:
            raise ValueError(f"l1 weight must be >= 0, got {weight}")
        super().__init__(dimension)
        self.weight = float(weight)

    def resolvent(self, lam, z):
        z = self._check(lam, z)
        shift = lam * self.weight
        return np.sign(z) * np.maximum(np.abs(z) - shift, 0.0)

    def to_config(self):
        return {"kind": "l1", "weight": self.weight}


def operator_from_config(config, dimension):
    """Build an operator from its JSON-style description."""
    kind = config.get("kind")
    if kind == "zero":
        return ZeroOperator(dimension)
    if kind == "box":
        lower = [-np.inf if v is None else v for v in config["lower"]]
        upper = [np.inf if v is None else v for v in config["upper"]]
        return BoxNormalCone(lower, upper)
    if kind == "l1":
        return L1Subdifferential(dimension, config["weight"])
    raise ValueError(f"unknown operator kind {kind!r}")


def graph_sample(op, lam, z):
    """A point (y, v) on the graph of the operator, i.e. v in T(y).

    y is the resolvent of z and v = (z - y)/lam recovers the operator value
    selected by the resolvent.
    """
    y = op.resolvent(lam, z)
    return y, (np.asarray(z, dtype=float) - y) / lam


def check_monotone(op, samples, seed=0):
    """Sample graph points and test the monotonicity inequality pairwise.

    Draws ``samples`` seeded pseudorandom inputs, maps them onto the graph,
    and checks <u - v, x - y> >= -1e-12 for every pair. Returns True iff all
    pairs pass; False indicates an implementation bug for the supported
    operators, which are all maximal monotone.
    """
    if samples < 2:
        raise ValueError("need at least 2 samples")
    rng = np.random.default_rng(seed)
    lams = (0.5, 1.0, 2.0)
    points = []
    for i in range(samples):
        z = 3.0 * rng.standard_normal(op.dimension)
        points.append(graph_sample(op, lams[i % len(lams)], z))
    for i in range(len(points)):
        xi, ui = points[i]
        for j in range(i + 1, len(points)):
            xj, uj = points[j]
            if float((ui - uj) @ (xi - xj)) < -1e-12:
                return False
    return True
