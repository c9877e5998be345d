import random
from fractions import Fraction
from itertools import combinations

from torideg.linalg import dot, lp_feasible
from torideg.polyhedra import (
    Cone,
    Polytope,
    degree_from_polytope,
    groebner_cone,
    hull_vertices,
    normalized_volume,
)


def cone_member_lp(cone, w):
    """Oracle: w in cone iff w = lineality combo + nonneg ray combo."""
    L = cone.lineality
    R = cone.rays
    cols = [list(l) for l in L] + [list(-x for x in l) for l in L] + [list(r) for r in R]
    if not cols:
        return all(x == 0 for x in w)
    A = [[c[i] for c in cols] for i in range(cone.n)]
    return lp_feasible(A, list(w)) is not None


def test_halfspace():
    c = Cone(2, inequalities=[(0, 1)])
    assert c.lineality == [(1, 0)]
    assert c.rays == [(0, 1)]
    assert c.dim() == 2
    assert c.contains((5, 0)) and c.contains((-5, 3)) and not c.contains((0, -1))


def test_quadrant_and_facets():
    c = Cone(2, inequalities=[(1, 0), (0, 1)])
    assert c.lineality == []
    assert sorted(c.rays) == [(0, 1), (1, 0)]
    fac = c.facets()
    assert len(fac) == 2
    normals = sorted(a for a, _ in fac)
    assert normals == [(0, 1), (1, 0)]


def test_redundant_inequality_is_not_facet():
    c = Cone(2, inequalities=[(1, 0), (0, 1), (1, 1)])
    assert len(c.facets()) == 2
    assert sorted(c.rays) == [(0, 1), (1, 0)]


def test_equalities():
    c = Cone(3, inequalities=[(1, 0, 0)], equalities=[(0, 0, 1)])
    assert c.lineality == [(0, 1, 0)]
    assert c.rays == [(1, 0, 0)]
    assert c.dim() == 2


def test_curve_chamber_cone():
    # weights marking x^3 in y^2 z - x^3 + z^3: inequalities
    # 3w1 - 2w2 - w3 >= 0 and 3w1 - 3w3 >= 0
    marked = [((3, 0, 0), [(3, 0, 0), (0, 2, 1), (0, 0, 3)])]
    c = groebner_cone(marked, 3)
    assert c.contains((1, 1, 1)) and c.contains((2, 3, 0)) and c.contains((1, 0, 1))
    assert not c.contains((1, 2, 1))
    assert c.lineality == [(1, 1, 1)]
    rays = sorted(c.rays_mod_lineality())
    # the two wall directions modulo (1,1,1)
    reps = {tuple(r) for r in rays}
    assert len(reps) == 2
    assert c.dim() == 3


def test_interior_point_is_interior():
    c = Cone(3, inequalities=[(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    p = c.interior_point()
    assert all(dot(a, p) > 0 for a in c.inequalities)


def test_cone_random_vrep_matches_hrep():
    rng = random.Random(31)
    for _ in range(20):
        n = rng.choice([2, 3, 4])
        m = rng.randint(1, 5)
        ineqs = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(m)]
        c = Cone(n, inequalities=ineqs)
        for _ in range(12):
            w = tuple(rng.randint(-3, 3) for _ in range(n))
            assert c.contains(w) == cone_member_lp(c, w)


def test_cone_facets_random_irredundant():
    rng = random.Random(47)
    for _ in range(12):
        n = rng.choice([2, 3])
        ineqs = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(rng.randint(2, 5))]
        c = Cone(n, inequalities=ineqs)
        if c.dim() == 0:
            continue
        fac = c.facets()
        # each facet inequality is non-redundant: dropping it enlarges the cone
        for a, _u in fac:
            rest = [b for b, _ in fac if b != a]
            sub = Cone(n, inequalities=rest + [tuple(-x for x in a)])
            # there must be a point with a.w < 0 satisfying the others
            got = sub.rays or sub.lineality
            ok = any(dot(a, r) < 0 for r in sub.rays) or any(
                dot(a, l) != 0 for l in sub.lineality
            )
            assert ok or not got


def brute_hull_vertices(points):
    """Oracle by Caratheodory over all small subsets (2d points only)."""
    pts = sorted(set(tuple(map(Fraction, p)) for p in points))
    verts = []
    for p in pts:
        others = [q for q in pts if q != p]
        inside = False
        for k in (1, 2, 3):
            for sub in combinations(others, k):
                A = [[q[i] for q in sub] for i in range(2)]
                A.append([1] * k)
                if lp_feasible(A, list(p) + [1]) is not None:
                    inside = True
                    break
            if inside:
                break
        if not inside:
            verts.append(p)
    return verts


def test_hull_vertices_against_bruteforce():
    rng = random.Random(13)
    for _ in range(20):
        pts = [(rng.randint(0, 5), rng.randint(0, 5)) for _ in range(rng.randint(3, 9))]
        assert hull_vertices(pts) == brute_hull_vertices(pts)


def test_polytope_square():
    P = Polytope([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)])
    assert len(P.vertices) == 4
    assert P.dim() == 2
    assert P.contains((1, 1)) and not P.contains((3, 0))
    assert len(P.facets()) == 4
    assert normalized_volume(P.vertices) == 8  # 2! * area 4


def test_polytope_lower_dimensional():
    P = Polytope([(1, 0, 2), (1, 3, 2), (1, 1, 2)])
    assert P.vertices == ((1, 0, 2), (1, 3, 2))
    assert P.dim() == 1
    eqs = P.affine_hull()
    for a, c in eqs:
        for v in P.vertices:
            assert dot(a, v) == c
    assert P.contains((1, 2, 2)) and not P.contains((1, 4, 2))
    assert normalized_volume(P.vertices) == 3


def test_volume_simplices_and_triangles():
    assert normalized_volume([(0, 0), (1, 0), (0, 1)]) == 1
    assert normalized_volume([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 1
    # unit cube: 3! * 1
    cube = [(i, j, k) for i in (0, 1) for j in (0, 1) for k in (0, 1)]
    assert normalized_volume(cube) == 6
    # segment on a sublattice direction: (0,0)-(2,4) has three lattice steps of (1,2)
    assert normalized_volume([(0, 0), (2, 4)]) == 2


def test_volume_2d_random_matches_shoelace():
    rng = random.Random(77)
    for _ in range(15):
        pts = [(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(rng.randint(3, 8))]
        P = Polytope(pts)
        if P.dim() != 2:
            continue
        # shoelace on the ordered boundary
        vs = sorted(P.vertices)
        import math

        cx = Fraction(sum(v[0] for v in P.vertices), len(P.vertices))
        cy = Fraction(sum(v[1] for v in P.vertices), len(P.vertices))

        def angle(v):
            return math.atan2(float(v[1] - cy), float(v[0] - cx))

        ring = sorted(P.vertices, key=angle)
        area2 = Fraction(0)
        for i in range(len(ring)):
            x1, y1 = ring[i]
            x2, y2 = ring[(i + 1) % len(ring)]
            area2 += x1 * y2 - x2 * y1
        assert normalized_volume(pts) == abs(area2)


def test_degree_from_polytope_segment():
    assert degree_from_polytope([(1, 0), (1, 3)]) == 3
    assert degree_from_polytope([(1, 0), (1, 1)]) == 1


def test_extreme():
    P = Polytope([(0, 0), (2, 0), (0, 2)])
    val, arg = P.extreme((1, 0))
    assert val == 2 and arg == (2, 0)
