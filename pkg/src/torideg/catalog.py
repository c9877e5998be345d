"""Bundled datasets, the symbolic ray dictionary, and matrix file parsing.

Every named ray vector follows the package-wide convention that initial
forms collect the terms of maximal weight, so the catalog hands out the
negatives of the minimal-term vectors that are usual in the tropical
literature.  Ray names compose with "+", as in "f23+ex".
"""

import hashlib
import itertools
import os
import re
from importlib import resources

from .polycore import read_ideal_file

_IDEALS = {
    "curve": {
        "file": "curve.ideal",
        "note": "plane cubic curve, one generator in three variables",
    },
    "gr36": {
        "file": "gr36.ideal",
        "note": "quadratic relations among the 3x3 minors of a 3x6 matrix",
    },
    "gr36-cluster": {
        "file": "gr36_cluster.ideal",
        "note": "same relations rewritten with two extra variables X and Y",
    },
}

_MATRICES = {
    "plabic": {
        "file": "plabic.matrix",
        "note": "nine value rows over the twenty bracket variables",
        "prepend_grading": True,
    },
}

TRIPLES = tuple(itertools.combinations(range(1, 7), 3))
_TRIPLE_INDEX = {t: i for i, t in enumerate(TRIPLES)}


def data_dir():
    """Dataset directory, overridable through TORIDEG_DATA."""
    override = os.environ.get("TORIDEG_DATA")
    if override:
        return override
    return str(resources.files("torideg").joinpath("datasets"))


def dataset_path(name):
    if name in _IDEALS:
        return os.path.join(data_dir(), _IDEALS[name]["file"])
    if name in _MATRICES:
        return os.path.join(data_dir(), _MATRICES[name]["file"])
    raise ValueError(f"unknown dataset {name!r}")


def load_dataset(name):
    """Ring and generators of a bundled ideal."""
    if name not in _IDEALS:
        raise ValueError(f"unknown dataset {name!r}")
    return read_ideal_file(dataset_path(name))


def read_matrix_file(path):
    """Integer rows from a text file; '#' comments and a 'columns' line are skipped."""
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or line.startswith("columns"):
                continue
            rows.append(tuple(int(x) for x in line.split()))
    if not rows or len({len(r) for r in rows}) != 1:
        raise ValueError(f"malformed matrix file {path}")
    return rows


def load_matrix(name):
    """A bundled auxiliary matrix, with the grading row prepended when the
    matrix is a table of values for a graded ring."""
    if name not in _MATRICES:
        raise ValueError(f"unknown matrix {name!r}")
    rows = read_matrix_file(dataset_path(name))
    if _MATRICES[name]["prepend_grading"]:
        rows = [(1,) * len(rows[0])] + rows
    return rows


def dataset_catalog():
    """Names, sizes, notes, and checksums of everything bundled."""
    out = []
    for name in sorted(_IDEALS):
        ring, gens = load_dataset(name)
        out.append(
            {
                "name": name,
                "kind": "ideal",
                "variables": ring.n,
                "generators": len(gens),
                "note": _IDEALS[name]["note"],
                "sha256": _digest(dataset_path(name)),
            }
        )
    for name in sorted(_MATRICES):
        rows = read_matrix_file(dataset_path(name))
        out.append(
            {
                "name": name,
                "kind": "matrix",
                "rows": len(rows),
                "columns": len(rows[0]),
                "note": _MATRICES[name]["note"],
                "sha256": _digest(dataset_path(name)),
            }
        )
    return out


def _digest(path):
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


def _basis_vector(n, i):
    return [1 if j == i else 0 for j in range(n)]


def _e_vector(digits, n):
    t = tuple(sorted(digits))
    if len(t) != 3 or t not in _TRIPLE_INDEX:
        raise ValueError(f"no bracket variable for indices {digits}")
    return _basis_vector(n, _TRIPLE_INDEX[t])


def _f_vector(digits, n):
    i, j = sorted(digits)
    if i == j or not 1 <= i < j <= 6:
        raise ValueError(f"no pair vector for indices {digits}")
    v = [0] * n
    for t in TRIPLES:
        if i in t and j in t:
            v[_TRIPLE_INDEX[t]] = 1
    return v


def _g_vector(digits, n):
    if sorted(digits) != [1, 2, 3, 4, 5, 6]:
        raise ValueError(f"tripartition name needs all six indices once: {digits}")
    p2 = digits[2:4]
    p3 = digits[4:6]
    v = _f_vector(p3, n)
    for k in p3:
        w = _e_vector(tuple(p2) + (k,), n)
        v = [a + b for a, b in zip(v, w)]
    return v


def _incidence_vector(i, n):
    if not 1 <= i <= 6:
        raise ValueError(f"index {i} out of range")
    v = [0] * n
    for t in TRIPLES:
        if i in t:
            v[_TRIPLE_INDEX[t]] = 1
    return v


_ATOM = re.compile(r"^([efgEB])(\d+)$|^(ex|ey)$")


def ray_vector(name, n):
    """Resolve one symbolic ray name to a length-n integer vector.

    Knows e + three digits, f + two digits, g + six digits, the incidence
    rows B + digit, the extended incidence rows E + digit (22 columns
    only), ex and ey (22 columns only), and "+"-joined sums of these.
    The result is the negative of the named combination, matching the
    maximal-term convention.
    """
    if n not in (20, 22):
        raise ValueError("symbolic ray names resolve in 20 or 22 columns only")
    total = [0] * n
    for atom in name.split("+"):
        m = _ATOM.match(atom.strip())
        if not m:
            raise ValueError(f"cannot parse ray name {atom!r}")
        if m.group(3):
            if n != 22:
                raise ValueError(f"{atom!r} needs the 22-column presentation")
            v = _basis_vector(n, 20 if m.group(3) == "ex" else 21)
        else:
            kind, digits = m.group(1), tuple(int(c) for c in m.group(2))
            if kind == "e":
                v = _e_vector(digits, n)
            elif kind == "f":
                v = _f_vector(digits, n)
            elif kind == "g":
                v = _g_vector(digits, n)
            elif kind == "B":
                (i,) = digits
                v = _incidence_vector(i, n)
            else:
                (i,) = digits
                if n != 22:
                    raise ValueError(f"{atom!r} needs the 22-column presentation")
                v = _incidence_vector(i, n)
                v[20] += 1
                v[21] += 1
        total = [a + b for a, b in zip(total, v)]
    return [-x for x in total]


_NUMERIC = re.compile(r"^[\s\d,;+-]+$")


def parse_rays(spec, n):
    """Ray rows from a file path, inline numeric rows, or symbolic names.

    Inline rows separate entries with commas and rows with semicolons;
    symbolic names separate rays with commas and summands with "+".
    """
    if os.path.exists(spec):
        rows = read_matrix_file(spec)
        if any(len(r) != n for r in rows):
            raise ValueError(f"matrix in {spec} does not have {n} columns")
        return [list(r) for r in rows]
    if _NUMERIC.match(spec) and any(c.isdigit() for c in spec):
        rows = []
        for chunk in spec.split(";"):
            row = [int(x) for x in chunk.split(",")]
            if len(row) != n:
                raise ValueError(f"ray row {chunk!r} does not have {n} entries")
            rows.append(row)
        return rows
    return [ray_vector(item.strip(), n) for item in spec.split(",")]


def tripartitions():
    """The 15 splittings of 1..6 into three pairs, each sorted."""
    out = []
    for x in range(2, 7):
        p1 = (1, x)
        rest = [i for i in range(2, 7) if i != x]
        a = rest[0]
        for y in rest[1:]:
            p2 = (a, y)
            p3 = tuple(i for i in rest if i not in p2)
            out.append((p1, p2, p3))
    return out


def standard_ray_names():
    """The 65 tropical ray names of the 20-column presentation."""
    names = ["e" + "".join(str(d) for d in t) for t in TRIPLES]
    names += [f"f{i}{j}" for i, j in itertools.combinations(range(1, 7), 2)]
    for p1, p2, p3 in tripartitions():
        names.append("g" + "".join(str(d) for d in p1 + p2 + p3))
        names.append("g" + "".join(str(d) for d in p1 + p3 + p2))
    return names


def dataset_lineality(name, ring):
    """Canonical two-sided rows for a bundled ideal's cones.

    Lineality rows are sign-symmetric, so these stay positive.
    """
    if name == "gr36":
        return [_incidence_vector(i, 20) for i in range(1, 7)]
    if name == "gr36-cluster":
        rows = []
        for i in range(1, 7):
            v = _incidence_vector(i, 22)
            v[20] += 1
            v[21] += 1
            rows.append(v)
        return rows
    return [list(row) for row in ring.grading]
