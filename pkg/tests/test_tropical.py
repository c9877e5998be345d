import random
from fractions import Fraction

import pytest

from torideg.groebner import ideals_equal, normal_form, reduced_gb
from torideg.linalg import dot
from torideg.orders import GREVLEX, TermOrder
from torideg.polycore import InhomogeneousError, Poly, Ring
from torideg.tropical import (
    certify_prime_cone,
    gfan_traverse,
    in_lineality,
    initial_at,
    is_monomial_free,
    lineality_space,
    positive_grading_vector,
    saturate_at_variables,
    shift_nonnegative,
    toric_ideal,
    tropicalize,
)


@pytest.fixture
def curve():
    ring = Ring(["x", "y", "z"])
    return ring, [ring.parse("y^2*z - x^3 + z^3")]


def test_positive_grading_vector():
    ring = Ring(["x", "y", "z"], grading=[[1, 2, 3]])
    v = positive_grading_vector(ring)
    assert all(x > 0 for x in v)
    ring2 = Ring(["a", "b"], grading=[[1, -1], [1, 1]])
    v2 = positive_grading_vector(ring2)
    assert all(x > 0 for x in v2)


def test_shift_nonnegative_preserves_initial(curve):
    ring, gens = curve
    w = [-2, 1, 0]
    ws = shift_nonnegative(w, ring)
    assert all(x >= 0 for x in ws)
    assert ideals_equal(initial_at(ring, gens, w), initial_at(ring, gens, ws), GREVLEX)


def test_initial_at_curve_rays(curve):
    ring, gens = curve
    cases = {
        (2, 3, 0): "y^2*z - x^3",
        (1, 0, 1): "z^3 - x^3",
        (0, 1, 1): "y^2*z + z^3",
        (1, 1, 1): "y^2*z - x^3 + z^3",
    }
    for w, txt in cases.items():
        assert ideals_equal(initial_at(ring, gens, list(w)), [ring.parse(txt)], GREVLEX)
    mono = initial_at(ring, gens, [1, 2, 1])
    assert ideals_equal(mono, [ring.parse("y^2*z")], GREVLEX)


def test_initial_at_rejects_inhomogeneous_shift():
    ring = Ring(["x", "y"])
    bad = [ring.parse("x^2 + y")]
    with pytest.raises(InhomogeneousError):
        initial_at(ring, bad, [-1, 0])


def test_lineality_space_curve(curve):
    ring, gens = curve
    lin = lineality_space(ring, gens)
    assert lin == [(1, 1, 1)]
    assert in_lineality(ring, gens, [2, 2, 2])
    assert not in_lineality(ring, gens, [1, 0, 1])


def test_lineality_space_zero_ideal():
    ring = Ring(["x", "y"])
    assert lineality_space(ring, []) == [(1, 0), (0, 1)]


def test_saturate_at_variables():
    ring = Ring(["x", "y"])
    out = saturate_at_variables(ring, [ring.parse("x^2 - x*y")])
    assert ideals_equal(out, [ring.parse("x - y")], GREVLEX)
    unit = saturate_at_variables(ring, [ring.parse("x - y"), ring.parse("x + y")])
    assert ideals_equal(unit, [Poly.constant(Fraction(1), 2)], GREVLEX)


def test_saturate_inhomogeneous_fallback():
    ring = Ring(["x", "y"])
    out = saturate_at_variables(ring, [ring.parse("x*y - x")])
    assert ideals_equal(out, [ring.parse("y - 1")], GREVLEX)


def test_is_monomial_free():
    ring = Ring(["x", "y"])
    assert is_monomial_free(ring, [])
    assert is_monomial_free(ring, [ring.parse("x^2 - x*y")])
    assert not is_monomial_free(ring, [ring.parse("x^2")])
    assert not is_monomial_free(ring, [ring.parse("x - y"), ring.parse("x + y")])


def test_toric_ideal_curve_matrix():
    ring = Ring(["x", "y", "z"])
    tor = toric_ideal([[1, 1, 1], [2, 3, 0]], ring)
    assert ideals_equal(tor, [ring.parse("y^2*z - x^3")], GREVLEX)


def test_toric_ideal_identity_and_row():
    ring = Ring(["x", "y"])
    assert toric_ideal([[1, 0], [0, 1]], ring) == []
    tor = toric_ideal([[1, 1]], ring)
    assert ideals_equal(tor, [ring.parse("x - y")], GREVLEX)


def test_toric_ideal_negative_column():
    ring = Ring(["x", "y"])
    for method in ("elimination", "saturation"):
        tor = toric_ideal([[1, -1]], ring, method=method)
        assert ideals_equal(tor, [ring.parse("x*y - 1")], GREVLEX)


def test_toric_ideal_methods_agree():
    ring = Ring(["x", "y", "z", "w"])
    m = [[1, 1, 1, 1], [0, 1, 2, 3]]
    a = toric_ideal(m, ring, method="elimination")
    b = toric_ideal(m, ring, method="saturation")
    assert ideals_equal(a, b, GREVLEX)


def test_toric_ideal_validates_input():
    ring = Ring(["x", "y"])
    with pytest.raises(ValueError):
        toric_ideal([[1, 2, 3]], ring)
    with pytest.raises(ValueError):
        toric_ideal([[Fraction(1, 2), 1]], ring)


def test_toric_kernel_and_saturation_stability():
    rng = random.Random(7)
    ring = Ring(["x", "y", "z"])
    for _ in range(20):
        m = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(2)]
        tor = toric_ideal(m, ring)
        for g in tor:
            assert len(g) <= 2
            exps = sorted(g.terms)
            if len(exps) == 2:
                diff = [a - b for a, b in zip(exps[1], exps[0])]
                assert all(dot(row, diff) == 0 for row in m)
        again = saturate_at_variables(ring, tor)
        if tor:
            assert ideals_equal(tor, again, GREVLEX)


def test_gfan_curve(curve):
    ring, gens = curve
    fan = gfan_traverse(ring, gens)
    assert len(fan) == 3
    exps = {tuple(e) for e in fan.initial_exponents()}
    assert exps == {((3, 0, 0),), ((0, 2, 1),), ((0, 0, 3),)}
    for i, nbrs in fan.adjacency.items():
        assert len(nbrs) == 2
        for j in nbrs:
            assert i in fan.adjacency[j]


def test_gfan_two_chambers():
    ring = Ring(["x", "y"])
    fan = gfan_traverse(ring, [ring.parse("x^2 - x*y")])
    assert len(fan) == 2
    exps = {tuple(e) for e in fan.initial_exponents()}
    assert exps == {((2, 0),), ((1, 1),)}


def test_gfan_zero_ideal():
    ring = Ring(["x", "y"])
    fan = gfan_traverse(ring, [])
    assert len(fan) == 1


def test_gfan_interior_points_recover_initials(curve):
    ring, gens = curve
    fan = gfan_traverse(ring, gens)
    for marked, cone in fan.maximal_cones:
        w = cone.interior_point()
        init = initial_at(ring, gens, list(w))
        leads = {GREVLEX.leading_exponent(g) for g in reduced_gb(init, GREVLEX)}
        assert leads == {l for l, _ in marked}


def test_gfan_dim_cap(curve):
    ring, gens = curve
    with pytest.raises(ValueError):
        gfan_traverse(ring, gens, dim_cap=1)


def test_gfan_flip_symmetry_random():
    rng = random.Random(11)
    ring = Ring(["x", "y", "z"])
    mons = ["x^2", "y^2", "z^2", "x*y", "x*z", "y*z"]
    for _ in range(6):
        parts = rng.sample(mons, 3)
        coefs = [rng.choice([1, -1, 2]) for _ in parts]
        g = ring.parse(" + ".join(f"{c}*{m}" for c, m in zip(coefs, parts)))
        fan = gfan_traverse(ring, [g])
        assert len(fan) >= 1
        for i, nbrs in fan.adjacency.items():
            for j in nbrs:
                assert i in fan.adjacency[j]


def test_tropicalize_curve(curve):
    ring, gens = curve
    cones = tropicalize(ring, gens)
    assert [t.dim() for t in cones] == [2, 2, 2, 1]
    inits = [
        ring.parse("y^2*z - x^3"),
        ring.parse("z^3 - x^3"),
        ring.parse("y^2*z + z^3"),
    ]
    for expected in inits:
        assert any(ideals_equal(t.initial_ideal, [expected], GREVLEX) for t in cones)
    line = cones[-1]
    assert ideals_equal(line.initial_ideal, gens, GREVLEX)
    for t in cones:
        assert t.ray_matrix[0] == [1, 1, 1]
        assert t.prime is None
        w = t.cone.interior_point()
        assert ideals_equal(initial_at(ring, gens, list(w)), t.initial_ideal, GREVLEX)


def test_tropicalize_candidate_rays(curve):
    ring, gens = curve
    cones = tropicalize(ring, gens, rays=[[2, 3, 0], [1, 2, 1]])
    assert len(cones) == 1
    t = cones[0]
    assert t.cone.contains([2, 3, 0])
    assert t.cone.contains([1, 1, 1])
    assert not t.cone.contains([1, 0, 1])
    assert ideals_equal(t.initial_ideal, [ring.parse("y^2*z - x^3")], GREVLEX)


def test_certify_curve_prime_ray(curve):
    ring, gens = curve
    tc = certify_prime_cone(ring, gens, [[1, 1, 1]], [[2, 3, 0]])
    assert tc.prime is True
    assert tc.verdicts == {"monomial_free": True, "binomial": True, "matches_toric": True}
    assert tc.ray_matrix == [[1, 1, 1], [2, 3, 0]]


def test_certify_curve_reducible_ray(curve):
    ring, gens = curve
    tc = certify_prime_cone(ring, gens, [[1, 1, 1]], [[1, 0, 1]])
    assert tc.prime is False
    assert tc.verdicts == {"monomial_free": True, "binomial": True, "matches_toric": False}
    assert ideals_equal(tc.initial_ideal, [ring.parse("z^3 - x^3")], GREVLEX)


def test_certify_zero_ideal_trivial():
    ring = Ring(["x", "y"])
    tc = certify_prime_cone(ring, [], [[1, 0], [0, 1]], [])
    assert tc.prime is True


def test_certify_twisted_sign_still_prime():
    ring = Ring(["x", "y", "z"])
    gens = [ring.parse("x^2 + y*z")]
    lin = lineality_space(ring, gens)
    tc = certify_prime_cone(ring, gens, lin, [])
    assert tc.prime is True
    assert tc.verdicts["matches_toric"] is True


def test_certify_monomial_cone_not_prime(curve):
    ring, gens = curve
    tc = certify_prime_cone(ring, gens, [[1, 1, 1]], [[2, 3, 0], [1, 0, 1]])
    assert tc.prime is False
    assert tc.verdicts["monomial_free"] is False


def test_certify_containment_errors(curve):
    ring, gens = curve
    with pytest.raises(ValueError, match="not contained"):
        certify_prime_cone(ring, gens, [[1, 1, 1]], [[2, 3, 0], [-2, -3, 0]])
    with pytest.raises(ValueError, match="lineality"):
        certify_prime_cone(ring, gens, [[2, 3, 0]], [[1, 0, 1]])
