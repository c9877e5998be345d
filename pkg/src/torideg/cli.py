"""Command line interface tying the library into reproducible pipelines.

Every command works on a bundled dataset (--dataset) or an ideal file
(--ideal), writes deterministic text or json (--format), and exits 0 on
success, 1 when a checked mathematical expectation fails, and 2 on input
errors.
"""

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from . import catalog
from .degeneration import fiber, lift_ideal
from .groebner import hilbert_slice, initial_ideal, reduced_gb
from .orders import GREVLEX, LEX, TermOrder
from .polycore import Poly, read_ideal_file
from .tropical import (
    certify_prime_cone,
    gfan_traverse,
    lineality_space,
    shift_nonnegative,
    tropicalize,
)
from .valuation import (
    ValuationProfile,
    degree_from_polytope,
    delta_B,
    newton_okounkov_polytope,
    project_onto_face,
    quasival_eval,
    value_semigroup_slice,
)
from .wallcross import algebraic_wallcross, build_wall, flip, shift


def _load_source(args):
    if args.dataset:
        return catalog.load_dataset(args.dataset)
    if args.ideal:
        return read_ideal_file(args.ideal)
    raise ValueError("need --dataset NAME or --ideal FILE")


def _parse_order(spec):
    if spec is None or spec == "grevlex":
        return GREVLEX
    if spec == "lex":
        return LEX
    if spec.startswith("weight:"):
        w = [int(x) for x in spec[len("weight:") :].split(",")]
        return TermOrder("weight", weight=w, tie=GREVLEX)
    if spec.startswith("matrix:"):
        rows = [
            [int(x) for x in chunk.split(",")]
            for chunk in spec[len("matrix:") :].split(";")
        ]
        return TermOrder("matrix", rows=rows, tie=GREVLEX)
    raise ValueError(f"cannot parse order {spec!r}")


def _parse_point(spec):
    return tuple(Fraction(x.strip()) for x in spec.split(","))


def _plain(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in sorted(x.items())}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def _emit(args, text_lines, payload):
    if args.format == "json":
        body = json.dumps(_plain(payload), sort_keys=True, indent=1) + "\n"
    else:
        body = "".join(line + "\n" for line in text_lines)
    if args.out:
        d = os.path.dirname(os.path.abspath(args.out))
        fd, tmp = tempfile.mkstemp(dir=d, prefix=".torideg-")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(body)
            os.replace(tmp, args.out)
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)
    else:
        sys.stdout.write(body)


def _sorted_polys(ring, polys, order):
    return sorted(polys, key=lambda g: order.key(order.leading_exponent(g)))


def _point_str(p):
    return "(" + ", ".join(str(Fraction(c)) for c in p) + ")"


def _vertex_lines(polytope):
    return [_point_str(v) for v in sorted(polytope.vertices)]


def _parse_matrix(spec, n):
    try:
        rows = catalog.load_matrix(spec)
    except ValueError:
        return catalog.parse_rays(spec, n)
    if len(rows[0]) != n:
        raise ValueError(f"matrix {spec!r} has {len(rows[0])} columns, need {n}")
    return [list(r) for r in rows]


def _profile_from_args(args, ring, gens):
    rows = _parse_matrix(args.matrix, ring.n)
    weight = None
    if getattr(args, "chamber_weight", None):
        weight = [int(x) for x in args.chamber_weight.split(",")]
    return ValuationProfile(ring, gens, rows, chamber_weight=weight, order=_parse_order(args.order))


def cmd_datasets(args):
    listing = catalog.dataset_catalog()
    lines = []
    for entry in listing:
        size = entry.get("generators", entry.get("rows"))
        lines.append(
            f"{entry['name']}: {entry['kind']}, {size} "
            f"{'generators' if entry['kind'] == 'ideal' else 'rows'}, "
            f"sha256 {entry['sha256'][:16]}, {entry['note']}"
        )
    _emit(args, lines, listing)
    return 0


def cmd_gb(args):
    ring, gens = _load_source(args)
    order = _parse_order(args.order)
    basis = _sorted_polys(ring, reduced_gb(gens, order), order)
    _emit(args, [ring.format(g) for g in basis], {"basis": [ring.format(g) for g in basis]})
    return 0


def cmd_initial(args):
    ring, gens = _load_source(args)
    order = _parse_order(args.order)
    rows = catalog.parse_rays(args.rays, ring.n)
    if len(rows) == 1:
        forms = initial_ideal(gens, rows[0], order)
    else:
        forms = initial_ideal(gens, rows, order, rows=True)
    forms = _sorted_polys(ring, forms, order)
    _emit(args, [ring.format(g) for g in forms], {"initial": [ring.format(g) for g in forms]})
    return 0


def cmd_gfan(args):
    ring, gens = _load_source(args)
    fan = gfan_traverse(ring, gens, _parse_order(args.order))
    cones = []
    for i, exps in enumerate(fan.initial_exponents()):
        monomials = [ring.format(Poly.monomial(e)) for e in exps]
        cones.append(
            {
                "cone": i,
                "initial_monomials": monomials,
                "neighbors": sorted(fan.adjacency[i]),
            }
        )
    lines = [
        f"cone {c['cone']}: {' '.join(c['initial_monomials'])} | "
        f"neighbors {','.join(str(j) for j in c['neighbors'])}"
        for c in cones
    ]
    _emit(args, lines, {"maximal_cones": cones})
    return 0


def cmd_trop(args):
    ring, gens = _load_source(args)
    order = _parse_order(args.order)
    rays = catalog.parse_rays(args.rays, ring.n) if args.rays else None
    min_dim = None
    if rays is None:
        min_dim = len(lineality_space(ring, gens, order)) + 1
    cones = tropicalize(ring, gens, rays=rays, min_dim=min_dim, order=order)
    items = []
    for tc in cones:
        items.append(
            {
                "ray_matrix": [list(r) for r in tc.ray_matrix],
                "initial": sorted(ring.format(g) for g in tc.initial_ideal),
                "dim": tc.dim(),
            }
        )
    items.sort(key=lambda it: (it["dim"], it["ray_matrix"]))
    lines = []
    for it in items:
        lines.append(
            f"dim {it['dim']} rays {'; '.join(','.join(str(x) for x in r) for r in it['ray_matrix'])}"
        )
        for g in it["initial"]:
            lines.append(f"  {g}")
    _emit(args, lines, {"cones": items})
    return 0


def cmd_certify(args):
    ring, gens = _load_source(args)
    rays = catalog.parse_rays(args.rays, ring.n)
    if args.lineality:
        lin = catalog.parse_rays(args.lineality, ring.n)
    elif args.dataset:
        lin = catalog.dataset_lineality(args.dataset, ring)
    else:
        lin = [list(row) for row in ring.grading]
    tc = certify_prime_cone(ring, gens, lin, rays, order=_parse_order(args.order))
    payload = {"prime": tc.prime, "verdicts": dict(tc.verdicts)}
    lines = [f"prime: {str(tc.prime).lower()}"] + [
        f"{k}: {str(v).lower()}" for k, v in sorted(tc.verdicts.items())
    ]
    _emit(args, lines, payload)
    if args.expect == "prime" and not tc.prime:
        return 1
    if args.expect == "monomial-free" and not tc.verdicts.get("monomial_free", False):
        return 1
    return 0


def cmd_valuation(args):
    ring, gens = _load_source(args)
    profile = _profile_from_args(args, ring, gens)
    if args.poly:
        value = quasival_eval(profile, ring.parse(args.poly))
        _emit(args, [f"value: {_point_str(value)}"], {"value": list(value)})
        return 0
    if args.degree_bound is None:
        raise ValueError("need --poly EXPR or --degree-bound K")
    if len(ring.grading) != 1:
        raise ValueError("degree bound listing needs a single grading row")
    lines = []
    slices = []
    for k in range(1, args.degree_bound + 1):
        sl = value_semigroup_slice(profile, (k,))
        vals = sorted(sl.values)
        slices.append({"degree": k, "values": [list(v) for v, _ in vals], "multiplicities": [m for _, m in vals]})
        body = ", ".join(f"{_point_str(v)}x{m}" if m != 1 else _point_str(v) for v, m in vals)
        lines.append(f"degree {k}: {body}")
    _emit(args, lines, {"slices": slices})
    return 0


def cmd_nobody(args):
    ring, gens = _load_source(args)
    profile = _profile_from_args(args, ring, gens)
    polytope = newton_okounkov_polytope(profile)
    _emit(
        args,
        _vertex_lines(polytope),
        {"vertices": [list(v) for v in sorted(polytope.vertices)]},
    )
    return 0


def cmd_bnewton(args):
    ring, gens = _load_source(args)
    profile = _profile_from_args(args, ring, gens)
    polytope = delta_B(profile)
    if args.keep is not None:
        keep = [int(x) for x in args.keep.split(",")] if args.keep else []
        polytope = project_onto_face(polytope, keep, profile)
    _emit(
        args,
        _vertex_lines(polytope),
        {"vertices": [list(v) for v in sorted(polytope.vertices)]},
    )
    return 0


def cmd_wallcross(args):
    ring, gens = _load_source(args)
    grading = [list(row) for row in ring.grading]
    ray1 = catalog.parse_rays(args.ray1, ring.n)
    ray2 = catalog.parse_rays(args.ray2, ring.n)
    p1 = ValuationProfile(ring, gens, grading + ray1, order=_parse_order(args.order))
    p2 = ValuationProfile(ring, gens, grading + ray2, order=_parse_order(args.order))
    wall = build_wall(p1, p2)
    point = _parse_point(args.point)
    if args.map == "shift":
        image = shift(wall, point)
    elif args.map == "flip":
        image = flip(wall, point)
    else:
        image = algebraic_wallcross(wall, tuple(int(x) for x in point))
    _emit(
        args,
        [f"kappa: {wall.kappa}", f"image: {_point_str(image)}"],
        {"kappa": wall.kappa, "image": list(image)},
    )
    return 0


def _family_from_args(args, ring, gens):
    rays = catalog.parse_rays(args.rays, ring.n)
    if args.order is None:
        shifted = [shift_nonnegative(r, ring) for r in rays]
        order = TermOrder("matrix", rows=shifted, tie=GREVLEX)
    else:
        order = _parse_order(args.order)
    return lift_ideal(ring, gens, rays, order=order)


def cmd_lift(args):
    ring, gens = _load_source(args)
    lifted = _family_from_args(args, ring, gens)
    ext = lifted.ext_ring
    polys = _sorted_polys(ext, lifted.gens, lifted.order)
    lines = [f"variables: {' '.join(ext.variables)}"] + [ext.format(g) for g in polys]
    _emit(
        args,
        lines,
        {"variables": list(ext.variables), "generators": [ext.format(g) for g in polys]},
    )
    return 0


def cmd_fiber(args):
    ring, gens = _load_source(args)
    lifted = _family_from_args(args, ring, gens)
    at = _parse_point(args.at)
    polys = _sorted_polys(ring, fiber(lifted, at), GREVLEX)
    _emit(args, [ring.format(g) for g in polys], {"generators": [ring.format(g) for g in polys]})
    return 0


def cmd_hilbert(args):
    ring, gens = _load_source(args)
    degree = tuple(int(x) for x in args.degree.split(","))
    if args.rays and args.at:
        lifted = _family_from_args(args, ring, gens)
        gens = fiber(lifted, _parse_point(args.at))
    dim = hilbert_slice(ring, gens, degree, _parse_order(args.order))
    _emit(args, [f"dimension: {dim}"], {"degree": list(degree), "dimension": dim})
    return 0


def cmd_degree(args):
    ring, gens = _load_source(args)
    profile = _profile_from_args(args, ring, gens)
    polytope = newton_okounkov_polytope(profile)
    deg = degree_from_polytope(polytope)
    _emit(args, [f"degree: {deg}"], {"degree": deg})
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="torideg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("--dataset", help="bundled dataset name")
    src.add_argument("--ideal", help="ideal file")
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--out", help="write output to this file atomically")
    out.add_argument("--format", choices=["text", "json"], default="text")
    ordp = argparse.ArgumentParser(add_help=False)
    ordp.add_argument("--order", help="grevlex | lex | weight:1,2,3 | matrix:rows")

    p = sub.add_parser("datasets", parents=[out], help="list bundled data")
    p.set_defaults(func=cmd_datasets)

    p = sub.add_parser("gb", parents=[src, out, ordp], help="reduced basis")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("initial", parents=[src, out, ordp], help="initial forms at a weight")
    p.add_argument("--rays", required=True)
    p.set_defaults(func=cmd_initial)

    p = sub.add_parser("gfan", parents=[src, out, ordp], help="all maximal cones")
    p.set_defaults(func=cmd_gfan)

    p = sub.add_parser("trop", parents=[src, out, ordp], help="monomial-free cones")
    p.add_argument("--rays", help="candidate rays to test instead of traversing")
    p.set_defaults(func=cmd_trop)

    p = sub.add_parser("certify", parents=[src, out, ordp], help="prime cone certificate")
    p.add_argument("--rays", required=True)
    p.add_argument("--lineality", help="override the two-sided rows")
    p.add_argument("--expect", choices=["prime", "monomial-free"])
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("valuation", parents=[src, out, ordp], help="quasivaluation values")
    p.add_argument("--matrix", required=True, help="weighting rows (name, file, or inline)")
    p.add_argument("--chamber-weight", help="tie-break weight when rows sit in a wall")
    p.add_argument("--poly", help="polynomial to evaluate")
    p.add_argument("--degree-bound", type=int, help="list value slices up to this degree")
    p.set_defaults(func=cmd_valuation)

    p = sub.add_parser("nobody", parents=[src, out, ordp], help="value polytope vertices")
    p.add_argument("--matrix", required=True)
    p.add_argument("--chamber-weight")
    p.set_defaults(func=cmd_nobody)

    p = sub.add_parser("bnewton", parents=[src, out, ordp], help="basis support polytope")
    p.add_argument("--matrix", required=True)
    p.add_argument("--chamber-weight")
    p.add_argument("--keep", help="project onto these row indices")
    p.set_defaults(func=cmd_bnewton)

    p = sub.add_parser("wallcross", parents=[src, out, ordp], help="maps between adjacent value polytopes")
    p.add_argument("--ray1", required=True)
    p.add_argument("--ray2", required=True)
    p.add_argument("--map", choices=["shift", "flip", "algebraic"], required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_wallcross)

    p = sub.add_parser("lift", parents=[src, out, ordp], help="multi-parameter family")
    p.add_argument("--rays", required=True)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("fiber", parents=[src, out, ordp], help="family fiber at a point")
    p.add_argument("--rays", required=True)
    p.add_argument("--at", required=True)
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("hilbert", parents=[src, out, ordp], help="graded slice dimension")
    p.add_argument("--degree", required=True)
    p.add_argument("--rays")
    p.add_argument("--at")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("degree", parents=[src, out, ordp], help="degree from the value polytope")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_degree)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
