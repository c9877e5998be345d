"""Exact linear algebra over the rationals and over integer lattices.

Plain lists of ints / fractions.Fraction throughout.  No floats anywhere:
every routine here is used to certify something, so approximation is not an
option.  Sizes are desk-scale (dozens of rows/columns), hence the textbook
algorithms.
"""

from fractions import Fraction
from math import gcd


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def mat_vec(M, v):
    return tuple(dot(row, v) for row in M)


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def is_zero(v):
    return all(a == 0 for a in v)


def primitive(v):
    """Clear denominators and divide by the gcd; direction is preserved.

    Returns a tuple of ints.  The zero vector stays zero.
    """
    den = 1
    for a in v:
        if isinstance(a, Fraction):
            den = den * a.denominator // gcd(den, a.denominator)
    w = [int(a * den) for a in v]
    g = 0
    for a in w:
        g = gcd(g, abs(a))
    if g > 1:
        w = [a // g for a in w]
    return tuple(w)


def rref(rows):
    """Reduced row echelon form over Q.

    Returns (new_rows, pivot_columns).  Input rows are not modified.
    """
    M = [[Fraction(a) for a in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(M)):
            if M[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pv = M[r][c]
        M[r] = [a / pv for a in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return [tuple(row) for row in M[:r]], pivots


def rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[0])


def nullspace(rows):
    """Rational kernel {x : A x = 0} as a list of basis tuples (Fractions)."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(tuple(v))
    return basis


def solve(rows, b):
    """One rational solution x of A x = b, or None if inconsistent."""
    if not rows:
        return None if any(x != 0 for x in b) else ()
    ncols = len(rows[0])
    aug = [list(row) + [bb] for row, bb in zip(rows, b)]
    red, pivots = rref(aug)
    for row in red:
        if all(a == 0 for a in row[:-1]) and row[-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = red[i][-1]
    return tuple(x)


def det(rows):
    """Determinant of a square rational matrix (Gaussian elimination)."""
    n = len(rows)
    M = [[Fraction(a) for a in row] for row in rows]
    result = Fraction(1)
    for c in range(n):
        piv = None
        for i in range(c, n):
            if M[i][c] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            result = -result
        result *= M[c][c]
        inv = 1 / M[c][c]
        for i in range(c + 1, n):
            if M[i][c] != 0:
                f = M[i][c] * inv
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return result


def _xgcd(a, b):
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def integer_kernel(rows):
    """Basis of the lattice {x in Z^n : M x = 0} for an integer matrix M.

    Column elimination with an identity mirror; the mirror columns sitting
    over zeroed-out columns of M form a basis of the kernel lattice.
    """
    if not rows:
        return []
    m, n = len(rows), len(rows[0])
    M = [[int(a) for a in row] for row in rows]
    T = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_swap(j1, j2):
        for i in range(m):
            M[i][j1], M[i][j2] = M[i][j2], M[i][j1]
        for i in range(n):
            T[i][j1], T[i][j2] = T[i][j2], T[i][j1]

    def col_addmul(jdst, jsrc, q):
        # column jdst += q * column jsrc
        for i in range(m):
            M[i][jdst] += q * M[i][jsrc]
        for i in range(n):
            T[i][jdst] += q * T[i][jsrc]

    col = 0
    for r in range(m):
        if col == n:
            break
        while True:
            support = [j for j in range(col, n) if M[r][j] != 0]
            if not support:
                break
            jmin = min(support, key=lambda j: abs(M[r][j]))
            if jmin != col:
                col_swap(col, jmin)
            done = True
            for j in range(col + 1, n):
                if M[r][j] != 0:
                    q = -(M[r][j] // M[r][col])
                    col_addmul(j, col, q)
                    if M[r][j] != 0:
                        done = False
            if done:
                col += 1
                break
    return [tuple(T[i][j] for i in range(n)) for j in range(col, n)]


def lattice_row_basis(rows):
    """Hermite-style basis of the lattice generated by integer row vectors."""
    work = [list(int(a) for a in row) for row in rows if not is_zero(row)]
    if not work:
        return []
    n = len(work[0])
    basis = []
    r = 0
    for c in range(n):
        live = [i for i in range(r, len(work)) if work[i][c] != 0]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda i: abs(work[i][c]))
            i0 = live[0]
            for i in live[1:]:
                q = work[i][c] // work[i0][c]
                work[i] = [a - q * b for a, b in zip(work[i], work[i0])]
            live = [i for i in live if work[i][c] != 0]
        i0 = live[0]
        work[r], work[i0] = work[i0], work[r]
        if work[r][c] < 0:
            work[r] = [-a for a in work[r]]
        r += 1
    # rows r.. are zero now; reduce above-pivot entries for a canonical form
    basis = work[:r]
    for i in range(r - 1, -1, -1):
        c = next(j for j in range(n) if basis[i][j] != 0)
        for k in range(i):
            q = basis[k][c] // basis[i][c]
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return [tuple(row) for row in basis]


def saturation_basis(rows):
    """Basis of (Q-span of rows) \\cap Z^n, the saturated lattice."""
    if not rows:
        return []
    perp = nullspace(rows)
    if not perp:
        n = len(rows[0])
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    return integer_kernel([primitive(v) for v in perp])


def lattice_index(rows):
    """Index of the lattice generated by integer rows inside its saturation."""
    for row in rows:
        for a in row:
            if Fraction(a).denominator != 1:
                raise ValueError("lattice_index needs integer vectors")
    gen = lattice_row_basis(rows)
    if not gen:
        return 1
    sat = saturation_basis(gen)
    coords = []
    satT = list(zip(*sat))
    for g in gen:
        x = solve(satT, g)
        if x is None:
            raise ValueError("lattice basis does not lie in its own saturation")
        coords.append(x)
    d = det(coords)
    if d.denominator != 1:
        raise ValueError("non-integer lattice coordinates")
    return abs(int(d))


def echelon_basis(vectors):
    """Primitive integer row-echelon basis of the rational span of `vectors`.

    Pivot entries are made positive; this is the canonical shape used for
    lineality spaces.
    """
    red, _ = rref(vectors)
    out = []
    for row in red:
        p = primitive(row)
        k = next((i for i, a in enumerate(p) if a != 0), None)
        if k is None:
            continue
        if p[k] < 0:
            p = tuple(-a for a in p)
        out.append(p)
    return out


def reduce_mod_rowspace(v, echelon_rows):
    """Subtract multiples of echelon rows from v to zero out pivot coordinates."""
    w = [Fraction(a) for a in v]
    for row in echelon_rows:
        k = next(i for i, a in enumerate(row) if a != 0)
        if w[k] != 0:
            f = w[k] / row[k]
            w = [a - f * b for a, b in zip(w, row)]
    return tuple(w)


# ---------------------------------------------------------------------------
# exact simplex

def _pivot(T, basis, r, c):
    pr = T[r]
    pv = pr[c]
    if pv != 1:
        T[r] = pr = [a / pv for a in pr]
    for i, row in enumerate(T):
        if i != r and row[c] != 0:
            f = row[c]
            T[i] = [a - f * b for a, b in zip(row, pr)]
    basis[r] = c


def _run_simplex(T, basis, ncols):
    """Bland's rule on a full tableau; last row = reduced costs, last col = rhs."""
    while True:
        enter = None
        obj = T[-1]
        for j in range(ncols):
            if obj[j] < 0:
                enter = j
                break
        if enter is None:
            return "optimal"
        leave = None
        best = None
        for i in range(len(T) - 1):
            piv = T[i][enter]
            if piv > 0:
                ratio = T[i][-1] / piv
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return "unbounded"
        _pivot(T, basis, leave, enter)


def lp_solve(c, A, b):
    """min c.x subject to A x = b, x >= 0, exactly.

    Returns (status, x, value) with status one of "optimal", "infeasible",
    "unbounded"; x is a tuple of Fractions when status == "optimal".
    """
    m = len(A)
    n = len(c)
    A = [[Fraction(a) for a in row] for row in A]
    b = [Fraction(x) for x in b]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-a for a in A[i]]
            b[i] = -b[i]

    # phase 1: artificials n..n+m-1
    T = []
    for i in range(m):
        T.append(A[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)] + [b[i]])
    costrow = [Fraction(0)] * (n + m + 1)
    for j in range(n + m + 1):
        s = Fraction(0)
        for i in range(m):
            s += T[i][j]
        costrow[j] = -s
    for j in range(n, n + m):
        costrow[j] = Fraction(0)
    T.append(costrow)
    basis = list(range(n, n + m))
    _run_simplex(T, basis, n + m)
    if -T[-1][-1] != 0:
        return "infeasible", None, None

    # kick artificials out of the basis where possible, drop redundant rows
    keep = []
    for i in range(m):
        if basis[i] >= n:
            piv = next((j for j in range(n) if T[i][j] != 0), None)
            if piv is None:
                continue  # redundant constraint
            _pivot(T, basis, i, piv)
        keep.append(i)
    T = [T[i][:n] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    obj = [Fraction(x) for x in c] + [Fraction(0)]
    for i, bv in enumerate(basis):
        if obj[bv] != 0:
            f = obj[bv]
            obj = [a - f * t for a, t in zip(obj, T[i])]
    T.append(obj)
    status = _run_simplex(T, basis, n)
    if status == "unbounded":
        return "unbounded", None, None
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        x[bv] = T[i][-1]
    return "optimal", tuple(x), -T[-1][-1]


def lp_feasible(A, b):
    """Some x >= 0 with A x = b, or None."""
    if not A:
        return ()
    status, x, _ = lp_solve([Fraction(0)] * len(A[0]), A, b)
    return x if status == "optimal" else None


def separating_vector(diffs):
    """Integer w with w.d >= 1 for each d in diffs; w unrestricted in sign.

    Returns None when the system is infeasible.
    """
    diffs = [tuple(d) for d in diffs]
    if any(is_zero(d) for d in diffs):
        return None
    if not diffs:
        return None
    n = len(diffs[0])
    # w = u - v with u, v >= 0; w.d - s = 1
    A = []
    b = []
    for k, d in enumerate(diffs):
        row = (
            [Fraction(x) for x in d]
            + [Fraction(-x) for x in d]
            + [Fraction(-1) if j == k else Fraction(0) for j in range(len(diffs))]
        )
        A.append(row)
        b.append(Fraction(1))
    x = lp_feasible(A, b)
    if x is None:
        return None
    w = [x[i] - x[n + i] for i in range(n)]
    den = 1
    for a in w:
        den = den * a.denominator // gcd(den, a.denominator)
    return tuple(int(a * den) for a in w)


def positive_separator(diffs):
    """Integer vector e with every e_i >= 1 and e.d >= 1 for each d in diffs.

    Used both to represent a term order on the monomials it has actually been
    asked about and to pick order-preserving projections Z^d -> Z.  Returns
    None when no such vector exists.
    """
    diffs = [tuple(d) for d in diffs]
    if not diffs or any(is_zero(d) for d in diffs):
        return None  # e.0 >= 1 is impossible
    n = len(diffs[0])
    # e = 1 + u with u >= 0; constraint u.d - s = 1 - sum(d)
    nvars = n + len(diffs)
    A = []
    b = []
    for k, d in enumerate(diffs):
        row = [Fraction(x) for x in d] + [Fraction(0)] * len(diffs)
        row[n + k] = Fraction(-1)
        A.append(row)
        b.append(Fraction(1 - sum(d)))
    x = lp_feasible(A, b)
    if x is None:
        return None
    e = [Fraction(1) + x[i] for i in range(n)]
    den = 1
    for a in e:
        den = den * a.denominator // gcd(den, a.denominator)
    return tuple(int(a * den) for a in e)
