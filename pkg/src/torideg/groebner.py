"""Buchberger's algorithm and friends, tuned for medium-size exact inputs.

Polynomials travel as Poly objects at the API boundary but the inner loops
work on raw dicts.  Pair management follows Gebauer and Moeller; selection is
the normal strategy (smallest lcm in the term order).  All bases returned by
`reduced_gb` are monic, interreduced, and sorted, hence canonical for the
given order.
"""

import heapq
from fractions import Fraction

from .linalg import dot
from .polycore import Poly


def _mask(e):
    m = 0
    for i, x in enumerate(e):
        if x:
            m |= 1 << i
    return m


def _cached(key):
    """Memoize a key function on exponent tuples; they recur constantly."""
    cache = {}

    def k(e):
        v = cache.get(e)
        if v is None:
            v = cache[e] = key(e)
        return v

    return k


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _nf_dict(f, basis, key):
    """Full division remainder of dict f by [(lead, mask, dict), ...]."""
    rem = {}
    work = dict(f)
    while work:
        lt = max(work, key=key)
        c = work.pop(lt)
        mlt = _mask(lt)
        hit = None
        for le, lm, pd in basis:
            if lm & ~mlt:
                continue
            if _divides(le, lt):
                hit = (le, pd)
                break
        if hit is None:
            rem[lt] = c
            continue
        le, pd = hit
        shift = tuple(x - y for x, y in zip(lt, le))
        for e2, c2 in pd.items():
            if e2 == le:
                continue
            e = tuple(x + y for x, y in zip(e2, shift))
            s = work.get(e, 0) - c * c2
            if s:
                work[e] = s
            else:
                work.pop(e, None)
    return rem


def _monic(d, key):
    lt = max(d, key=key)
    c = d[lt]
    if c == 1:
        return d, lt
    inv = Fraction(1) / c
    return {e: cc * inv for e, cc in d.items()}, lt


class _Engine:
    def __init__(self, order):
        self.key = _cached(order.key)
        self.leads = []
        self.masks = []
        self.polys = []
        self.pairs = set()
        self.heap = []

    def _push_pair(self, i, j):
        if i > j:
            i, j = j, i
        self.pairs.add((i, j))
        L = _lcm(self.leads[i], self.leads[j])
        heapq.heappush(self.heap, (self.key(L), i, j))

    def add(self, d):
        """Gebauer-Moeller update with a new monic polynomial dict."""
        key = self.key
        t = max(d, key=key)
        n = len(self.leads)
        lcm_with = [_lcm(t, self.leads[i]) for i in range(n)]

        # prune new pairs against each other: drop (t, i) when some (t, j)
        # has an lcm dividing this one (ties keep the smallest index)
        keep = []
        for i in range(n):
            li = lcm_with[i]
            drop = False
            for j in range(n):
                if j == i:
                    continue
                lj = lcm_with[j]
                if _divides(lj, li) and (lj != li or j < i):
                    drop = True
                    break
            if not drop:
                keep.append(i)

        # prune old pairs via the chain condition
        for (a, b) in list(self.pairs):
            L = _lcm(self.leads[a], self.leads[b])
            if (
                _divides(t, L)
                and lcm_with[a] != L
                and lcm_with[b] != L
            ):
                self.pairs.discard((a, b))

        self.leads.append(t)
        self.masks.append(_mask(t))
        self.polys.append(d)

        for i in keep:
            if not _coprime(t, self.leads[i]):
                self._push_pair(i, n)

    def run(self):
        key = self.key
        while self.heap:
            _, i, j = heapq.heappop(self.heap)
            if (i, j) not in self.pairs:
                continue
            self.pairs.discard((i, j))
            li, lj = self.leads[i], self.leads[j]
            L = _lcm(li, lj)
            si = tuple(x - y for x, y in zip(L, li))
            sj = tuple(x - y for x, y in zip(L, lj))
            s = {}
            for e, c in self.polys[i].items():
                ee = tuple(x + y for x, y in zip(e, si))
                s[ee] = s.get(ee, 0) + c
            for e, c in self.polys[j].items():
                ee = tuple(x + y for x, y in zip(e, sj))
                v = s.get(ee, 0) - c
                if v:
                    s[ee] = v
                else:
                    s.pop(ee, None)
            basis = list(zip(self.leads, self.masks, self.polys))
            r = _nf_dict(s, basis, key)
            if r:
                r, _ = _monic(r, key)
                self.add(r)
        return list(self.polys)


def interreduce(dicts, key):
    """Make a generating set reduced: no term of any g divisible by another lead.

    Runs to a fixpoint, so it is safe on arbitrary input, not only on bases
    fresh out of Buchberger.
    """
    work = [_monic(d, key) for d in dicts if d]
    changed = True
    while changed:
        changed = False
        for idx in range(len(work)):
            d, lt = work[idx]
            if d is None:
                continue
            others = [
                (lt2, _mask(lt2), d2)
                for k, (d2, lt2) in enumerate(work)
                if k != idx and d2 is not None
            ]
            r = _nf_dict(d, others, key)
            if r == d:
                continue
            changed = True
            work[idx] = _monic(r, key) if r else (None, None)
    out = []
    seen = set()
    for d, lt in work:
        if d is None:
            continue
        fz = frozenset(d.items())
        if fz in seen:
            continue
        seen.add(fz)
        out.append(d)
    out.sort(key=lambda d: key(max(d, key=key)))
    return out


def reduced_gb(gens, order):
    """The reduced Groebner basis, canonical for the order; list of Poly."""
    eng = _Engine(order)
    key = eng.key
    seeds = interreduce([g.terms for g in gens if not g.is_zero], key)
    for d in seeds:
        eng.add(d)
    raw = eng.run()
    red = interreduce(raw, key)
    return [Poly(d) for d in red]


def normal_form(f, gb, order):
    """Division remainder of f by the basis; canonical when gb is a GB."""
    key = _cached(order.key)
    basis = []
    for g in gb:
        d, lt = _monic(g.terms, key)
        basis.append((lt, _mask(lt), d))
    return Poly(_nf_dict(f.terms, basis, key))


def in_ideal(f, gb, order):
    return normal_form(f, gb, order).is_zero


def ideals_equal(gens1, gens2, order):
    """Do two generating sets span the same ideal?"""
    g1 = gens1 if _looks_reduced(gens1, order) else reduced_gb(gens1, order)
    g2 = gens2 if _looks_reduced(gens2, order) else reduced_gb(gens2, order)
    return all(in_ideal(f, g2, order) for f in g1) and all(in_ideal(f, g1, order) for f in g2)


def _looks_reduced(gens, order):
    # cheap test: monic and no term reducible by another lead
    key = order.key
    leads = []
    for g in gens:
        if g.is_zero:
            return False
        lt = max(g.terms, key=key)
        if g.terms[lt] != 1:
            return False
        leads.append(lt)
    pre = [(lt, _mask(lt)) for lt in leads]
    for i, g in enumerate(gens):
        for e in g.terms:
            me = _mask(e)
            for j, (lt, lm) in enumerate(pre):
                if i == j and e == leads[i]:
                    continue
                if lm & ~me == 0 and _divides(lt, e):
                    return False
    return True


def s_polynomial(f, g, order):
    key = order.key
    df, lf = _monic(f.terms, key)
    dg, lg = _monic(g.terms, key)
    L = _lcm(lf, lg)
    sf = tuple(x - y for x, y in zip(L, lf))
    sg = tuple(x - y for x, y in zip(L, lg))
    return Poly(df).term_mul(sf, 1) - Poly(dg).term_mul(sg, 1)


# ---------------------------------------------------------------------------
# initial forms

def initial_form(f, w):
    """Terms of f whose w-weight is maximal."""
    if f.is_zero:
        return Poly()
    best = max(dot(w, e) for e in f.terms)
    return Poly({e: c for e, c in f.terms.items() if dot(w, e) == best})


def initial_form_matrix(f, rows):
    """Iterated initial form: maximize row values lexicographically."""
    if f.is_zero:
        return Poly()
    vkey = lambda e: tuple(dot(r, e) for r in rows)
    best = max(vkey(e) for e in f.terms)
    return Poly({e: c for e, c in f.terms.items() if vkey(e) == best})


def initial_ideal(gens, w, order, rows=False):
    """Generators of the initial ideal of (gens) at weight w.

    Computes a Groebner basis for the w-refined order first, so the result
    really generates in_w(I).  With rows=True, w is a matrix (list of rows)
    and refinement is by all rows in sequence.
    """
    from .orders import TermOrder

    if rows:
        refined = TermOrder("matrix", rows=w, tie=order)
        gb = reduced_gb(gens, refined)
        return [initial_form_matrix(g, w) for g in gb]
    refined = TermOrder("weight", weight=w, tie=order)
    gb = reduced_gb(gens, refined)
    return [initial_form(g, w) for g in gb]


def is_weight_homogeneous(f, w):
    vals = {dot(w, e) for e in f.terms}
    return len(vals) <= 1


def homogenize(f, w, position=None):
    """f with a new variable t making every term's w-weight equal the max.

    The new variable sits at the end unless `position` says otherwise.
    """
    if f.is_zero:
        return Poly()
    top = max(dot(w, e) for e in f.terms)
    t = {}
    for e, c in f.terms.items():
        k = top - dot(w, e)
        if position is None:
            ee = e + (k,)
        else:
            ee = e[:position] + (k,) + e[position:]
        t[ee] = c
    return Poly(t)


# ---------------------------------------------------------------------------
# standard monomials and numerics of the quotient

def leading_exponents(gb, order):
    return [order.leading_exponent(g) for g in gb]


def standard_monomials(ring, lead_exps, degree):
    """All exponents e with ring-degree `degree` avoiding every lead exponent.

    Needs a positive grading so the answer is finite.
    """
    lam = ring.positivity_certificate()
    if lam is None:
        raise ValueError("grading is not positive; degree slices are infinite")
    degree = tuple(degree)
    n = ring.n
    cols = [tuple(row[j] for row in ring.grading) for j in range(n)]
    lamcols = [dot(lam, c) for c in cols]
    leads = [tuple(le) for le in lead_exps]
    out = []

    def rec(j, rem, lam_rem, partial):
        if lam_rem < 0:
            return
        if j == n:
            if all(x == 0 for x in rem):
                e = tuple(partial)
                if not any(_divides(le, e) for le in leads):
                    out.append(e)
            return
        c = cols[j]
        lc = lamcols[j]
        kmax = lam_rem // lc if lc > 0 else 0
        for k in range(kmax + 1):
            rec(
                j + 1,
                tuple(r - k * ci for r, ci in zip(rem, c)),
                lam_rem - k * lc,
                partial + [k],
            )

    rec(0, degree, dot(lam, degree), [])
    out.sort()
    return out


def hilbert_slice(ring, gens, degree, order):
    """dim of (R/I) in one multidegree, via standard monomials of in(I)."""
    gb = reduced_gb(gens, order)
    leads = leading_exponents(gb, order)
    return len(standard_monomials(ring, leads, degree))


def krull_dim(lead_exps, n):
    """Dimension of R/in(I) from the monomial generators of in(I).

    Max size of a variable subset meeting the support of no generator.
    """
    supports = []
    for le in lead_exps:
        s = frozenset(i for i, x in enumerate(le) if x)
        if not s:
            return -1  # unit ideal
        supports.append(s)
    supports = sorted(set(supports), key=len)
    # drop supersets: they are implied
    minimal = []
    for s in supports:
        if not any(t <= s for t in minimal):
            minimal.append(s)

    best = [0]
    full = frozenset(range(n))

    seen = set()

    def rec(allowed, todo):
        if allowed in seen:
            return
        seen.add(allowed)
        if len(allowed) <= best[0]:
            return
        live = [s for s in todo if s <= allowed]
        if not live:
            best[0] = max(best[0], len(allowed))
            return
        s = live[0]
        for v in sorted(s):
            rec(allowed - {v}, live)

    rec(full, minimal)
    return best[0]
