"""Term orders on monomials and total orders on value vectors.

Every order here is exposed through a key function: the leading term of a
polynomial is the term whose exponent maximizes `order.key`.  Four kinds are
supported: lex, graded reverse lex, a weight vector refined by a tie order,
and a matrix of weight rows refined by a tie order.
"""

import ast
import re
from fractions import Fraction

from .linalg import dot, separating_vector


def grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def lex_key(e):
    return tuple(e)


class TermOrder:
    __slots__ = ("kind", "weight", "rows", "tie")

    def __init__(self, kind, weight=None, rows=None, tie=None):
        if kind not in ("lex", "grevlex", "weight", "matrix"):
            raise ValueError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.weight = tuple(weight) if weight is not None else None
        self.rows = tuple(tuple(r) for r in rows) if rows is not None else None
        self.tie = tie
        if kind == "weight" and self.weight is None:
            raise ValueError("weight order needs a weight vector")
        if kind == "matrix" and not self.rows:
            raise ValueError("matrix order needs at least one row")
        if kind in ("weight", "matrix") and self.tie is None:
            self.tie = TermOrder("grevlex")

    def key(self, e):
        if self.kind == "grevlex":
            return grevlex_key(e)
        if self.kind == "lex":
            return lex_key(e)
        if self.kind == "weight":
            return (dot(self.weight, e), self.tie.key(e))
        return (tuple(dot(r, e) for r in self.rows), self.tie.key(e))

    def leading_exponent(self, poly):
        if poly.is_zero:
            raise ValueError("zero polynomial has no leading term")
        return max(poly.terms, key=self.key)

    def sorted_exponents(self, poly):
        return sorted(poly.terms, key=self.key, reverse=True)

    def refine_by_weight(self, w):
        """The order that compares w first and falls back to self."""
        return TermOrder("weight", weight=w, tie=self)

    def serialize(self):
        if self.kind in ("lex", "grevlex"):
            return self.kind
        if self.kind == "weight":
            body = f"weight {list(self.weight)}"
        else:
            body = f"matrix {[list(r) for r in self.rows]}"
        tie = self.tie.serialize()
        return body if tie == "grevlex" else f"{body} tie {tie}"

    def __repr__(self):
        return f"TermOrder({self.serialize()})"

    def _token(self):
        tie = self.tie._token() if self.tie is not None else None
        return (self.kind, self.weight, self.rows, tie)

    def __eq__(self, other):
        if isinstance(other, TermOrder):
            return self._token() == other._token()
        return NotImplemented

    def __hash__(self):
        return hash(self._token())


GREVLEX = TermOrder("grevlex")
LEX = TermOrder("lex")

_ORDER_RE = re.compile(r"^(lex|grevlex|weight\s+(\[[^\]]*\])|matrix\s+(\[.*?\]))(\s+tie\s+(.*))?$")


def parse_order(s):
    """Inverse of TermOrder.serialize.

    Accepted forms: "lex", "grevlex", "weight [2,3,0]",
    "matrix [[1,1,1],[2,3,0]]", each optionally followed by "tie <order>".
    """
    s = s.strip()
    m = _ORDER_RE.match(s)
    if not m:
        raise ValueError(f"cannot parse term order {s!r}")
    head = m.group(1)
    tie = parse_order(m.group(5)) if m.group(5) else None
    if head == "lex" or head == "grevlex":
        if tie is not None:
            raise ValueError(f"{head} order takes no tie")
        return TermOrder(head)
    if head.startswith("weight"):
        w = ast.literal_eval(m.group(2))
        return TermOrder("weight", weight=w, tie=tie)
    rows = ast.literal_eval(m.group(3))
    return TermOrder("matrix", rows=rows, tie=tie)


def representing_weight(order, exponents):
    """Integer weight vector ranking the given exponents exactly as `order`.

    Only the finitely many comparisons among `exponents` are represented;
    ties under the weight may not occur.  Returns None if no single weight
    works (cannot happen for distinct exponents, since term orders are
    representable on finite sets, but the caller may pass duplicates).
    """
    exps = sorted(set(map(tuple, exponents)), key=order.key, reverse=True)
    if len(exps) < 2:
        if not exps:
            return None
        return (0,) * len(exps[0])
    diffs = [tuple(a - b for a, b in zip(exps[i], exps[i + 1])) for i in range(len(exps) - 1)]
    return separating_vector(diffs)


class ZdOrder:
    """Total order on value vectors in Z^d (or Q^d); lex by default."""

    __slots__ = ("kind",)

    def __init__(self, kind="lex"):
        if kind != "lex":
            raise ValueError(f"unknown value order {kind!r}")
        self.kind = kind

    def key(self, v):
        return tuple(Fraction(x) for x in v)

    def max(self, vectors):
        vectors = list(vectors)
        if not vectors:
            raise ValueError("max of no value vectors")
        return max(vectors, key=self.key)

    def serialize(self):
        return self.kind

    def __eq__(self, other):
        if isinstance(other, ZdOrder):
            return self.kind == other.kind
        return NotImplemented

    def __hash__(self):
        return hash(("zd", self.kind))
