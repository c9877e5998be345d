"""Rational polyhedral cones and polytopes, exactly.

Cones are stored by their inequalities/equalities; the V-representation
(lineality basis plus extreme rays) comes from an incremental double
description pass.  Polytopes are stored by vertices; facets come from the
polar cone.  Everything is small enough here that the textbook algorithms
with exact arithmetic are the right tool.
"""

from fractions import Fraction

from .linalg import (
    det,
    dot,
    echelon_basis,
    is_zero,
    lp_feasible,
    nullspace,
    primitive,
    rank,
    reduce_mod_rowspace,
    saturation_basis,
    solve,
)


def _dd(n, ineqs):
    """Double description: V-rep of {w : a.w >= 0 for a in ineqs}.

    Returns (lineality_basis, rays, tight) where tight[i] is the set of
    inequality indices active at rays[i].  Rays are primitive and extreme.
    """
    L = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    R = []

    for idx, a in enumerate(ineqs):
        i0 = next((i for i, l in enumerate(L) if dot(a, l) != 0), None)
        if i0 is not None:
            # split the lineality: l0 leaves it and becomes a ray
            l0 = L[i0]
            if dot(a, l0) < 0:
                l0 = tuple(-x for x in l0)
            v0 = dot(a, l0)
            newL = []
            for i, l in enumerate(L):
                if i == i0:
                    continue
                c = Fraction(dot(a, l), v0)
                newL.append(primitive(tuple(x - c * y for x, y in zip(l, l0))))
            L = [l for l in newL if not is_zero(l)]
            newR = []
            for r in R:
                c = Fraction(dot(a, r), v0)
                rr = primitive(tuple(x - c * y for x, y in zip(r, l0)))
                if not is_zero(rr):
                    newR.append(rr)
            R = newR
            R.append(primitive(l0))
            continue
        # lineality already inside the hyperplane; split rays
        vals = [dot(a, r) for r in R]
        pos = [i for i, v in enumerate(vals) if v > 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        if not neg:
            continue
        tight = [frozenset(k for k, aa in enumerate(ineqs[:idx]) if dot(aa, r) == 0) for r in R]
        newR = [R[i] for i in pos + zero]
        for ip in pos:
            for im in neg:
                T = tight[ip] & tight[im]
                adjacent = True
                for k in range(len(R)):
                    if k == ip or k == im:
                        continue
                    if T <= tight[k]:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                rp, rm = R[ip], R[im]
                comb = tuple(vals[ip] * x - vals[im] * y for x, y in zip(rm, rp))
                newR.append(primitive(comb))
        # dedupe (combinatorial collisions are possible)
        seen = set()
        R = []
        for r in newR:
            if r not in seen:
                seen.add(r)
                R.append(r)

    tight = [frozenset(k for k, aa in enumerate(ineqs) if dot(aa, r) == 0) for r in R]
    return L, R, tight


class Cone:
    """Rational polyhedral cone {w : A.w >= 0, E.w = 0}."""

    def __init__(self, n, inequalities=(), equalities=()):
        self.n = n
        self.inequalities = []
        seen = set()
        for a in inequalities:
            p = primitive(a)
            if is_zero(p) or p in seen:
                continue
            seen.add(p)
            self.inequalities.append(p)
        self.equalities = []
        seen = set()
        for a in equalities:
            p = primitive(a)
            if is_zero(p) or p in seen or tuple(-x for x in p) in seen:
                continue
            seen.add(p)
            self.equalities.append(p)
        self._vrep = None

    def _compute_vrep(self):
        if self._vrep is None:
            ineqs = []
            for a in self.equalities:
                ineqs.append(a)
                ineqs.append(tuple(-x for x in a))
            split = len(ineqs)
            ineqs.extend(self.inequalities)
            L, R, tight = _dd(self.n, ineqs)
            # re-index tight sets to inequality positions only
            tt = [frozenset(k - split for k in t if k >= split) for t in tight]
            self._vrep = (L, R, tt)
        return self._vrep

    @property
    def lineality(self):
        return echelon_basis(self._compute_vrep()[0])

    @property
    def rays(self):
        return list(self._compute_vrep()[1])

    def dim(self):
        L, R, _ = self._compute_vrep()
        return len(echelon_basis(L)) + rank(R) if R else len(echelon_basis(L))

    def contains(self, w):
        return all(dot(a, w) == 0 for a in self.equalities) and all(
            dot(a, w) >= 0 for a in self.inequalities
        )

    def interior_point(self):
        """A point in the relative interior: the sum of all extreme rays."""
        L, R, _ = self._compute_vrep()
        if not R:
            return (0,) * self.n
        return tuple(sum(r[i] for r in R) for i in range(self.n))

    def facets(self):
        """Irredundant facet list: (inner normal, relint point of the facet).

        An inequality is facet-defining when its tight rays together with the
        lineality span a space of dimension dim(C) - 1.
        """
        L, R, tight = self._compute_vrep()
        d = self.dim()
        out = []
        seen_keys = set()
        for k, a in enumerate(self.inequalities):
            rows = list(L) + [R[i] for i in range(len(R)) if k in tight[i]]
            if rank(rows) != d - 1:
                continue
            tr = frozenset(i for i in range(len(R)) if k in tight[i])
            key = tr
            if key in seen_keys:
                continue
            seen_keys.add(key)
            u = tuple(sum(R[i][j] for i in tr) for j in range(self.n)) if tr else (0,) * self.n
            out.append((a, u))
        return out

    def rays_mod_lineality(self):
        """Primitive ray classes modulo the lineality space (echelon reduced)."""
        L = self.lineality
        out = []
        seen = set()
        for r in self.rays:
            red = primitive(reduce_mod_rowspace(r, L))
            if is_zero(red) or red in seen:
                continue
            seen.add(red)
            out.append(red)
        return out

    def key_mod_lineality(self):
        """Canonical hashable identity of the cone."""
        return (tuple(self.lineality), tuple(sorted(self.rays_mod_lineality())))

    def __repr__(self):
        return f"Cone(n={self.n}, ineqs={len(self.inequalities)}, eqs={len(self.equalities)})"


def groebner_cone(marked, n):
    """Cone of weights agreeing with a marking of polynomials.

    `marked` is a list of (lead_exponent, all_exponents).  The cone is cut
    out by (lead - other).w >= 0 over every tail exponent.
    """
    ineqs = []
    for lead, exps in marked:
        for e in exps:
            if tuple(e) != tuple(lead):
                ineqs.append(tuple(a - b for a, b in zip(lead, e)))
    return Cone(n, inequalities=ineqs)


# ---------------------------------------------------------------------------
# polytopes

def _affine_basis_coords(points):
    """Lattice coordinates for points: translate by p0, express in the
    saturated lattice basis of the direction span.  Returns (coords, basis)."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    p0 = pts[0]
    dirs = [tuple(x - y for x, y in zip(p, p0)) for p in pts[1:]]
    dirs = [d for d in dirs if not is_zero(d)]
    if not dirs:
        return [()] * len(pts), []
    basis = saturation_basis([primitive(d) for d in dirs])
    bT = list(zip(*basis))
    coords = []
    for p in pts:
        d = tuple(x - y for x, y in zip(p, p0))
        c = solve(bT, d)
        if c is None:
            raise ValueError("point outside the affine lattice span")
        coords.append(tuple(c))
    return coords, basis


def hull_vertices(points):
    """Extreme points of a finite point set, by exact LP membership tests."""
    pts = []
    seen = set()
    for p in points:
        t = tuple(Fraction(x) for x in p)
        if t not in seen:
            seen.add(t)
            pts.append(t)
    if len(pts) <= 1:
        return pts
    out = []
    for i, p in enumerate(pts):
        others = [q for j, q in enumerate(pts) if j != i]
        A = [[q[k] for q in others] for k in range(len(p))]
        A.append([1] * len(others))
        b = list(p) + [1]
        if lp_feasible(A, b) is None:
            out.append(p)
    out.sort()
    return out


class Polytope:
    """Convex hull of finitely many rational points."""

    def __init__(self, points):
        if not points:
            raise ValueError("empty point set")
        self.vertices = tuple(hull_vertices(points))
        self._facets = None

    @property
    def ambient_dim(self):
        return len(self.vertices[0])

    def dim(self):
        v0 = self.vertices[0]
        return rank([tuple(x - y for x, y in zip(v, v0)) for v in self.vertices[1:]])

    def affine_hull(self):
        """Equalities a.x = c holding on the polytope: list of (a, c)."""
        n = self.ambient_dim
        v0 = self.vertices[0]
        dirs = [tuple(x - y for x, y in zip(v, v0)) for v in self.vertices[1:]]
        out = []
        for a in nullspace(dirs) if dirs else [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]:
            a = primitive(a)
            out.append((a, dot(a, v0)))
        return out

    def facets(self):
        """Irredundant facet inequalities (a, c) with a.x >= c on the polytope.

        Computed from the polar: rays of {y=(c,a): c + a.v >= 0 for vertices v}
        are exactly the facet normals; its lineality gives the affine hull.
        """
        if self._facets is not None:
            return self._facets
        n = self.ambient_dim
        ineqs = [(Fraction(1),) + v for v in self.vertices]
        L, R, _ = _dd(n + 1, ineqs)
        facets = []
        for r in R:
            a = r[1:]
            if is_zero(a):
                continue  # the trivial 1 >= 0 ray
            facets.append((a, -r[0]))
        self._facets = facets
        return facets

    def contains(self, p):
        for a, c in self.facets():
            if dot(a, p) < c:
                return False
        for a, c in self.affine_hull():
            if dot(a, p) != c:
                return False
        return True

    def extreme(self, direction):
        """(max value, maximizing vertex) of direction over the polytope."""
        best = None
        arg = None
        for v in self.vertices:
            val = dot(direction, v)
            if best is None or val > best:
                best, arg = val, v
        return best, arg

    def __repr__(self):
        return f"Polytope({len(self.vertices)} vertices in R^{self.ambient_dim})"


def _triangulate(coords):
    """Simplices covering conv(coords); coords are exact, any affine dim.

    Returns lists of points (r+1 each, r = affine dimension), by recursive
    cone-over-facet splitting from the first vertex.
    """
    P = Polytope(coords)
    verts = list(P.vertices)
    r = P.dim()
    if r == 0:
        return []
    if len(verts) == r + 1:
        return [verts]
    v0 = verts[0]
    out = []
    for a, c in P.facets():
        if dot(a, v0) == c:
            continue  # v0 lies on this facet; it contributes no cone
        fpts = [v for v in verts if dot(a, v) == c]
        for s in _triangulate(fpts):
            out.append(s + [v0])
    return out


def normalized_volume(points):
    """Lattice-normalized volume: q! times the Euclidean volume measured in
    the saturated lattice of the polytope's direction space."""
    coords, _ = _affine_basis_coords(points)
    if not coords or not coords[0]:
        return 0
    total = Fraction(0)
    for s in _triangulate(coords):
        m = [tuple(x - y for x, y in zip(p, s[0])) for p in s[1:]]
        total += abs(det(m))
    return int(total) if total.denominator == 1 else total


def degree_from_polytope(points):
    """Degree of the projective toric degeneration attached to the polytope:
    its normalized lattice volume."""
    return normalized_volume(points)
