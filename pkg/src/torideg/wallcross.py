"""Wall-crossing maps between Newton-Okounkov polytopes.

Two valuation profiles that share a Groebner chamber and all weighting
rows except the last produce polytopes sitting over a common projection.
Over each point of that shadow both polytopes are vertical intervals, and
their lengths differ by one global constant kappa.  The shift map matches
the intervals bottom-to-bottom, the flip map reverses them, and the
algebraic wall-crossing transports values through the shared
standard-monomial basis instead.
"""

from fractions import Fraction

from .groebner import standard_monomials
from .linalg import dot
from .polyhedra import Polytope
from .valuation import newton_okounkov_polytope


def _fiber_bounds(polytope, v):
    """Interval of last coordinates of polytope points projecting onto v.

    Evaluates the facet and affine-hull descriptions along the vertical
    line over v; returns (lo, hi) or None when the line misses the
    polytope.
    """
    v = tuple(Fraction(x) for x in v)
    lo, hi = None, None
    for a, c in polytope.facets():
        slack = c - dot(a[:-1], v)
        if a[-1] == 0:
            if slack > 0:
                return None
        elif a[-1] > 0:
            z = Fraction(slack, a[-1])
            if lo is None or z > lo:
                lo = z
        else:
            z = Fraction(slack, a[-1])
            if hi is None or z < hi:
                hi = z
    for a, c in polytope.affine_hull():
        slack = c - dot(a[:-1], v)
        if a[-1] == 0:
            if slack != 0:
                return None
        else:
            z = Fraction(slack, a[-1])
            if lo is None or z > lo:
                lo = z
            if hi is None or z < hi:
                hi = z
    if lo is None or hi is None or lo > hi:
        return None
    return lo, hi


class WallData:
    """A matched pair of polytopes over one shadow, with the constant kappa.

    phi/psi evaluate the lower and upper envelopes of either polytope at a
    point of the common projection; kappa relates the fiber lengths by
    kappa*(psi1 - phi1) = psi2 - phi2 everywhere on the shadow.
    """

    def __init__(self, profile1, profile2, delta1, delta2, delta12, kappa):
        self.profile1 = profile1
        self.profile2 = profile2
        self.delta1 = delta1
        self.delta2 = delta2
        self.delta12 = delta12
        self.kappa = kappa

    def _bounds(self, polytope, v):
        got = _fiber_bounds(polytope, v)
        if got is None:
            raise ValueError("point outside the common projection")
        return got

    def phi1(self, v):
        return self._bounds(self.delta1, v)[0]

    def psi1(self, v):
        return self._bounds(self.delta1, v)[1]

    def phi2(self, v):
        return self._bounds(self.delta2, v)[0]

    def psi2(self, v):
        return self._bounds(self.delta2, v)[1]

    def __repr__(self):
        return f"WallData(kappa={self.kappa})"


def build_wall(profile1, profile2):
    """Assemble the wall data for two profiles differing in the last row.

    Both profiles must present the same quotient, share a chamber, and
    carry monomial-free initial ideals.  kappa is measured at the shadow's
    centroid and then verified on every shadow vertex; disagreement is
    reported with the witnessing vertices.
    """
    r1, r2 = profile1.ring, profile2.ring
    if r1.variables != r2.variables or r1.grading != r2.grading:
        raise ValueError("profiles live in different rings")
    if len(profile1.rows) != len(profile2.rows) or profile1.rows[:-1] != profile2.rows[:-1]:
        raise ValueError("profiles must agree in all weighting rows but the last")
    if profile1.lead_exps != profile2.lead_exps:
        raise ValueError("profiles do not share a Groebner chamber")
    delta1 = newton_okounkov_polytope(profile1)
    delta2 = newton_okounkov_polytope(profile2)
    delta12 = Polytope([u[:-1] for u in delta1.vertices])
    other = Polytope([u[:-1] for u in delta2.vertices])
    if set(delta12.vertices) != set(other.vertices):
        raise ValueError("the polytopes have different shadows")
    k = len(delta12.vertices)
    centroid = [sum(u[i] for u in delta12.vertices) / Fraction(k) for i in range(delta12.ambient_dim)]
    lo1, hi1 = _fiber_bounds(delta1, centroid)
    lo2, hi2 = _fiber_bounds(delta2, centroid)
    if hi1 == lo1:
        if hi2 != lo2:
            raise ValueError("kappa is not constant: degenerate fiber on one side only")
        kappa = Fraction(1)
    else:
        kappa = Fraction(hi2 - lo2, hi1 - lo1)
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    bad = []
    for u in delta12.vertices:
        a1, b1 = _fiber_bounds(delta1, u)
        a2, b2 = _fiber_bounds(delta2, u)
        if kappa * (b1 - a1) != b2 - a2:
            bad.append(u)
    if bad:
        raise ValueError(f"kappa is not constant across the shadow, witnessed at {bad}")
    return WallData(profile1, profile2, delta1, delta2, delta12, kappa)


def shift(wall, point):
    """Send a point of the first polytope to the second, bottom-to-bottom."""
    point = tuple(Fraction(x) for x in point)
    if not wall.delta1.contains(point):
        raise ValueError("point outside the source polytope")
    v, z = point[:-1], point[-1]
    return v + (wall.kappa * (z - wall.phi1(v)) + wall.phi2(v),)


def flip(wall, point):
    """Send a point of the first polytope to the second, reversing fibers."""
    point = tuple(Fraction(x) for x in point)
    if not wall.delta1.contains(point):
        raise ValueError("point outside the source polytope")
    v, z = point[:-1], point[-1]
    return v + (wall.kappa * (wall.phi1(v) - z) + wall.psi2(v),)


def algebraic_wallcross(wall, value):
    """Transport a semigroup value through the shared monomial basis.

    Every standard monomial of the value's degree whose first-profile
    value matches is reweighted by the second profile; the images must
    agree, which certified prime first profiles guarantee.
    """
    value = tuple(value)
    ring = wall.profile1.ring
    degree = tuple(int(x) for x in value[: len(ring.grading)])
    mons = standard_monomials(ring, wall.profile1.lead_exps, degree)
    matches = [e for e in mons if wall.profile1.exponent_value(e) == value]
    if not matches:
        raise ValueError("value not attained by a basis monomial of its degree")
    images = {wall.profile2.exponent_value(e) for e in matches}
    if len(images) != 1:
        raise ValueError("value crosses the wall ambiguously")
    return images.pop()
