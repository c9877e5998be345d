"""Multi-parameter flat families from chamber ray matrices.

Each ray of a Groebner chamber contributes one parameter; a polynomial is
lifted by padding every term with the parameter powers that record its
weight drop below the maximum.  Setting the parameters to the indicator of
a face recovers that face's initial ideal, setting them all to one
recovers the ideal itself, and composing the ray matrix with an
order-preserving projection collapses the family to a classical
one-parameter Rees-style degeneration.
"""

import math
from fractions import Fraction

from .groebner import reduced_gb
from .linalg import dot, lp_feasible, primitive
from .orders import GREVLEX
from .polycore import Poly, Ring
from .valuation import LEXVALUES, ValuationProfile


class LiftOrder:
    """Term order on the extended ring: base order on the x-part first,
    then the parameter exponents lexicographically."""

    def __init__(self, base, n):
        self.base = base
        self.n = n

    def key(self, e):
        return (self.base.key(e[: self.n]), tuple(e[self.n :]))

    def leading_exponent(self, poly):
        if poly.is_zero:
            raise ValueError("zero polynomial has no leading term")
        return max(poly.terms, key=self.key)


class LiftedIdeal:
    """Lifts of a chamber basis, one parameter per ray row."""

    def __init__(self, ring, chamber_gb, rays, ext_ring, gens, order):
        self.ring = ring
        self.chamber_gb = chamber_gb
        self.rays = [tuple(r) for r in rays]
        self.ext_ring = ext_ring
        self.gens = gens
        self.order = order

    def __repr__(self):
        return f"LiftedIdeal({len(self.gens)} generators, {len(self.rays)} parameters)"


def extend_ring(ring, k, prefix="t"):
    """The ring with k degree-zero parameters appended."""
    names = [f"{prefix}{j + 1}" for j in range(k)]
    for nm in names:
        if nm in ring.variables:
            raise ValueError(f"parameter name {nm} collides with a ring variable")
    grading = [list(row) + [0] * k for row in ring.grading]
    return Ring(list(ring.variables) + names, grading)


def _int_rows(rays, n):
    rows = []
    for r in rays:
        row = tuple(int(x) for x in r)
        if len(row) != n or any(x != y for x, y in zip(row, r)):
            raise ValueError("ray rows must be integer vectors of the ring dimension")
        rows.append(row)
    return rows


def lift_poly(ring, f, rays):
    """Pad each term of f with parameter powers recording its weight drop.

    The result lives in the ring extended by one parameter per ray row;
    term exponents are mu - M*a with mu the rowwise maximum over the
    support, so they are never negative.
    """
    if f.is_zero:
        raise ValueError("cannot lift the zero polynomial")
    rows = _int_rows(rays, ring.n)
    support = list(f.terms)
    mu = [max(dot(r, a) for a in support) for r in rows]
    out = {}
    for a, c in f.terms.items():
        pad = tuple(m - dot(r, a) for m, r in zip(mu, rows))
        out[tuple(a) + pad] = c
    return Poly(out)


def lift_ideal(ring, gens, rays, order=GREVLEX):
    """Lift the reduced basis of the chamber picked by `order`.

    The lifts form a basis of the lifted ideal under the order that
    compares x-parts first and parameter exponents lexicographically.
    """
    rows = _int_rows(rays, ring.n)
    live = [g for g in gens if not g.is_zero]
    chamber_gb = reduced_gb(live, order)
    for g in chamber_gb:
        le = order.leading_exponent(g)
        for a in g.terms:
            if any(dot(r, le) < dot(r, a) for r in rows):
                raise ValueError("ray lies outside the chamber of the order")
    ext = extend_ring(ring, len(rows))
    lifted = [lift_poly(ring, g, rows) for g in chamber_gb]
    return LiftedIdeal(ring, chamber_gb, rows, ext, lifted, LiftOrder(order, ring.n))


def face_point(rays, face):
    """Parameter coordinates that cut out a face's initial ideal.

    The face is named by the rays spanning it: entries of `face` are ray
    indices or ray vectors (matched up to positive scaling).  Those
    parameters are set to zero and the rest to one.
    """
    rows = [tuple(r) for r in rays]
    prims = [primitive(r) for r in rows]
    zero = set()
    for item in face:
        if isinstance(item, int):
            if not 0 <= item < len(rows):
                raise ValueError("face index out of range")
            zero.add(item)
            continue
        target = primitive([Fraction(x) for x in item])
        hits = [i for i, p in enumerate(prims) if p == target]
        if not hits:
            raise ValueError("face vector is not a ray of the chamber")
        zero.add(hits[0])
    return tuple(Fraction(0) if i in zero else Fraction(1) for i in range(len(rows)))


def fiber(lifted, point):
    """Substitute the parameters and return the fiber's generators."""
    point = [Fraction(x) for x in point]
    if len(point) != len(lifted.rays):
        raise ValueError("one coordinate per parameter")
    n = lifted.ring.n
    out = []
    for g in lifted.gens:
        terms = {}
        for e, c in g.terms.items():
            scale = c
            for a, k in zip(point, e[n:]):
                scale *= a**k
            if scale:
                terms[e[:n]] = terms.get(e[:n], Fraction(0)) + scale
        p = Poly({e: c for e, c in terms.items() if c})
        if not p.is_zero:
            out.append(p)
    return out


def order_preserving_projection(values, order=LEXVALUES):
    """A positive integer vector whose dot product sorts like the order.

    Solves the feasibility problem e.(n - m) >= 1 over consecutive sorted
    value pairs with e >= 1, then clears denominators.
    """
    pts = sorted({tuple(int(x) for x in v) for v in values}, key=order.key)
    if not pts:
        raise ValueError("no values to separate")
    d = len(pts[0])
    diffs = [tuple(b - a for a, b in zip(m, n)) for m, n in zip(pts, pts[1:])]
    if not diffs:
        return (1,) * d
    j = len(diffs)
    rows = []
    rhs = []
    for idx, diff in enumerate(diffs):
        slack = [0] * j
        slack[idx] = -1
        rows.append(list(diff) + slack)
        rhs.append(1 - sum(diff))
    sol = lp_feasible(rows, rhs)
    if sol is None:
        raise ValueError("no order preserving projection separates the values")
    e = [1 + Fraction(s) for s in sol[:d]]
    scale = 1
    for x in e:
        scale = scale * x.denominator // math.gcd(scale, x.denominator)
    e = tuple(int(x * scale) for x in e)
    for m, n_ in zip(pts, pts[1:]):
        assert dot(e, m) < dot(e, n_)
    return e


def rees_one_parameter(ring, gens, rows, e=None, order=GREVLEX):
    """One-parameter family along the composite weight of a ray matrix.

    The finite value set of the chamber basis is projected to integers by
    e (computed if not given, validated otherwise); homogenizing along the
    composed weight gives a family whose zero fiber is the matrix initial
    ideal and whose one fiber is the ideal itself.
    """
    profile = ValuationProfile(ring, gens, rows, order=order)
    values = sorted(
        {profile.exponent_value(a) for g in profile.chamber_gb for a in g.terms},
        key=profile.zorder.key,
    )
    if e is None:
        e = order_preserving_projection(values, profile.zorder)
    else:
        e = tuple(int(x) for x in e)
        if len(e) != len(profile.rows):
            raise ValueError("one projection entry per weighting row")
        for m, n_ in zip(values, values[1:]):
            if dot(e, m) >= dot(e, n_):
                raise ValueError("projection does not preserve the value order")
    w = tuple(sum(ei * r[j] for ei, r in zip(e, profile.rows)) for j in range(ring.n))
    ext = extend_ring(ring, 1)
    lifted = [lift_poly(ring, g, [w]) for g in profile.chamber_gb]
    out = LiftedIdeal(
        ring, profile.chamber_gb, [w], ext, lifted, LiftOrder(profile.chamber_order, ring.n)
    )
    out.projection = tuple(e)
    return out
