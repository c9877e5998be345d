"""Graded polynomial rings over Q and sparse polynomials.

A polynomial is a dict from exponent tuples to nonzero Fractions.  The ring
object carries variable names and an integer multigrading (one row per
grading component, one column per variable) and owns parsing and printing.
"""

import ast
import re
from fractions import Fraction

from .linalg import dot, positive_separator


class InhomogeneousError(ValueError):
    """Raised when a polynomial mixes multidegrees.

    `witnesses` holds two exponent tuples with different degrees.
    """

    def __init__(self, message, witnesses):
        super().__init__(message)
        self.witnesses = witnesses


def _gkey(e):
    # degree-first, then reversed exponents negated: graded reverse lex
    return (sum(e), tuple(-x for x in reversed(e)))


class Poly:
    """Sparse polynomial; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    t[tuple(int(a) for a in e)] = c
        self.terms = t

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c})

    @classmethod
    def variable(cls, i, nvars):
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1})

    @classmethod
    def monomial(cls, e, c=1):
        return cls({tuple(e): c})

    @property
    def is_zero(self):
        return not self.terms

    def support(self):
        return list(self.terms)

    def coeff(self, e):
        return self.terms.get(tuple(e), Fraction(0))

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        p = Poly()
        p.terms = t
        return p

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) - c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        p = Poly()
        p.terms = t
        return p

    def __mul__(self, other):
        if isinstance(other, Poly):
            t = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    s = t.get(e, 0) + c1 * c2
                    if s:
                        t[e] = s
                    else:
                        t.pop(e, None)
            p = Poly()
            p.terms = t
            return p
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly({e: c * other for e, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        nv = len(next(iter(self.terms))) if self.terms else 0
        result = Poly.constant(1, nv)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def term_mul(self, e0, c0):
        """Multiply by the single term c0 * x^e0."""
        e0 = tuple(e0)
        return Poly({tuple(a + b for a, b in zip(e, e0)): c * c0 for e, c in self.terms.items()})

    def __repr__(self):
        items = ", ".join(f"{e}: {c}" for e, c in sorted(self.terms.items(), key=lambda t: _gkey(t[0]), reverse=True))
        return "Poly({%s})" % items


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()/]))")


def _tokenize(s):
    pos = 0
    out = []
    while pos < len(s):
        m = _TOKEN_RE.match(s, pos)
        if not m or m.end() == pos:
            rest = s[pos:].strip()
            if not rest:
                break
            raise ValueError(f"cannot read polynomial near {rest[:20]!r}")
        if m.group(1):
            out.append(("int", int(m.group(1))))
        elif m.group(2):
            out.append(("name", m.group(2)))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    out.append(("end", None))
    return out


class _Parser:
    def __init__(self, tokens, ring):
        self.toks = tokens
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ValueError(f"expected {op!r}")

    def expr(self):
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            p = self.term()
            if val == "-":
                p = -p
        else:
            p = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self):
        p = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.factor()
            else:
                return p

    def factor(self):
        p = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise ValueError("exponent must be a nonnegative integer")
            p = p ** val
        return p

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            num = val
            kind2, val2 = self.peek()
            if kind2 == "op" and val2 == "/":
                self.take()
                kind3, den = self.take()
                if kind3 != "int" or den == 0:
                    raise ValueError("bad rational coefficient")
                return Poly.constant(Fraction(num, den), self.ring.n)
            return Poly.constant(num, self.ring.n)
        if kind == "name":
            idx = self.ring.index(val)
            return Poly.variable(idx, self.ring.n)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        if kind == "op" and val == "-":
            return -self.factor()
        raise ValueError(f"unexpected token {val!r}")


class Ring:
    """Variable names plus an integer multigrading."""

    def __init__(self, variables, grading=None):
        self.variables = tuple(str(v) for v in variables)
        n = len(self.variables)
        if len(set(self.variables)) != n:
            raise ValueError("duplicate variable names")
        if grading is None:
            grading = [[1] * n]
        self.grading = tuple(tuple(int(a) for a in row) for row in grading)
        for row in self.grading:
            if len(row) != n:
                raise ValueError("grading row length does not match variable count")
        self._index = {name: i for i, name in enumerate(self.variables)}

    @property
    def n(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def degree(self, e):
        """Multidegree of a single exponent tuple."""
        return tuple(dot(row, e) for row in self.grading)

    def multidegree(self, p):
        """Common multidegree of all terms of p; raises on mixed degrees.

        The zero polynomial has every degree; None is returned for it.
        """
        it = iter(p.terms)
        try:
            e0 = next(it)
        except StopIteration:
            return None
        d0 = self.degree(e0)
        for e in it:
            d = self.degree(e)
            if d != d0:
                m0, m1 = self.format(Poly.monomial(e0)), self.format(Poly.monomial(e))
                raise InhomogeneousError(
                    f"not homogeneous: {m0} has degree {d0} but {m1} has degree {d}",
                    (e0, e),
                )
        return d0

    def is_homogeneous(self, p):
        try:
            self.multidegree(p)
        except InhomogeneousError:
            return False
        return True

    def positivity_certificate(self):
        """Rational row combination giving every variable strictly positive degree.

        Returns an integer vector lam with lam . deg(x_j) >= 1 for all j, or
        None when the grading is not positive in this sense (for example when
        degree-zero parameter variables are present).
        """
        cols = [tuple(row[j] for row in self.grading) for j in range(self.n)]
        return positive_separator(cols)

    def extend(self, names):
        """Adjoin parameter variables of degree zero."""
        new_vars = self.variables + tuple(names)
        pad = len(names)
        grading = [row + (0,) * pad for row in self.grading]
        return Ring(new_vars, grading)

    def parse(self, s):
        p = _Parser(_tokenize(s), self)
        result = p.expr()
        kind, val = p.peek()
        if kind != "end":
            raise ValueError(f"trailing input near {val!r}")
        return result

    def format(self, p, key=None):
        """Canonical string, terms in descending order (grevlex by default)."""
        if p.is_zero:
            return "0"
        if key is None:
            key = _gkey
        pieces = []
        for e in sorted(p.terms, key=key, reverse=True):
            c = p.terms[e]
            mono = "*".join(
                name + (f"^{k}" if k > 1 else "")
                for name, k in zip(self.variables, e)
                if k
            )
            pieces.append((c, mono))
        out = []
        for i, (c, mono) in enumerate(pieces):
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Ring({','.join(self.variables)}; grading {list(map(list, self.grading))})"

    def __eq__(self, other):
        if isinstance(other, Ring):
            return self.variables == other.variables and self.grading == other.grading
        return NotImplemented


_RING_LINE = re.compile(r"ring\s+(\S+)\s+grading\s+(\[.*\])\s*$")


def read_ideal_file(path):
    """Read a ring header plus one polynomial per line.

    Format:
        ring x,y,z grading [[1,1,1]]
        y^2*z - x^3 + z^3

    Blank lines and lines starting with '#' are skipped.
    Returns (ring, [poly, ...]).
    """
    with open(path) as fh:
        lines = [ln.strip() for ln in fh]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError(f"{path}: empty ideal file")
    m = _RING_LINE.match(lines[0])
    if not m:
        raise ValueError(f"{path}: first line must be 'ring <vars> grading <rows>'")
    variables = [v.strip() for v in m.group(1).split(",")]
    grading = ast.literal_eval(m.group(2))
    ring = Ring(variables, grading)
    polys = [ring.parse(ln) for ln in lines[1:]]
    return ring, polys


def read_matrix_file(path):
    """Read an integer or rational matrix, optionally with column labels.

    Format:
        columns p123,p124,...
        1 0 2 ...
        0 1 1 ...

    Returns (labels_or_None, rows).
    """
    labels = None
    rows = []
    with open(path) as fh:
        for ln in fh:
            ln = ln.strip()
            if not ln or ln.startswith("#"):
                continue
            if ln.startswith("columns"):
                labels = tuple(v.strip() for v in ln[len("columns"):].strip().split(","))
                continue
            rows.append(tuple(Fraction(tok) for tok in ln.split()))
    if not rows:
        raise ValueError(f"{path}: no matrix rows")
    width = len(rows[0])
    for row in rows:
        if len(row) != width:
            raise ValueError(f"{path}: ragged matrix rows")
    if labels is not None and len(labels) != width:
        raise ValueError(f"{path}: label count does not match column count")
    return labels, tuple(rows)
