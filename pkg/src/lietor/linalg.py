"""Dense exact linear algebra over Q or a cyclotomic field.

Matrices are lists of row lists whose entries all belong to one field
instance.  Gaussian elimination never leaves the field, so ranks, kernels
and solutions are exact.
"""

from __future__ import annotations

from fractions import Fraction


def mat_copy(m):
    return [list(row) for row in m]


def rref(m, field):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = mat_copy(m)
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c]
        if inv != field.one:
            rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m, field) -> int:
    return len(rref(m, field)[1])


def kernel(m, field, ncols=None):
    """Basis of the right null space {v : m v = 0}."""
    if not m:
        if ncols is None:
            return []
        basis = []
        for j in range(ncols):
            v = [field.zero] * ncols
            v[j] = field.one
            basis.append(v)
        return basis
    ncols = len(m[0]) if ncols is None else ncols
    rows, pivots = rref(m, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(v)
    return basis


def solve(m, b, field):
    """One solution of m x = b, or None if inconsistent."""
    if not m:
        return None if any(b) else []
    ncols = len(m[0])
    aug = [list(row) + [bv] for row, bv in zip(m, b)]
    rows, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for r, p in enumerate(pivots):
        x[p] = rows[r][ncols]
    return x


def mat_mul(a, b, field):
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    out = [[field.zero] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] = oi[j] + c * bt[j]
    return out


def mat_vec(m, v, field):
    return [sum((c * x for c, x in zip(row, v) if c and x), field.zero) for row in m]


def identity(n, field):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def span_contains(basis_rows, v, field) -> bool:
    """Is v in the row span of basis_rows?"""
    if not any(v):
        return True
    if not basis_rows:
        return False
    return rank(basis_rows, field) == rank(basis_rows + [v], field)


def span_basis(rows, field):
    """Deterministic basis of the row span (rref rows without zero rows)."""
    red, pivots = rref(rows, field)
    return [red[i] for i in range(len(pivots))]


def span_equal(rows_a, rows_b, field) -> bool:
    ra = rank(rows_a, field) if rows_a else 0
    rb = rank(rows_b, field) if rows_b else 0
    if ra != rb:
        return False
    return rank(rows_a + rows_b, field) == ra if rows_a else rb == 0


# Integer lattice routines (exact, arbitrary precision ints).


def hnf(rows):
    """Row-style Hermite normal form of an integer matrix; zero rows dropped."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        # Euclidean elimination below the pivot.
        changed = True
        while changed:
            changed = False
            for i in range(r + 1, len(rows)):
                if rows[i][c]:
                    if abs(rows[i][c]) < abs(rows[r][c]):
                        rows[r], rows[i] = rows[i], rows[r]
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        changed = True
        if rows[r][c] < 0:
            rows[r] = [-a for a in rows[r]]
        for i in range(r):
            q = rows[i][c] // rows[r][c]
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return [row for row in rows[:r] if any(row)]


def lattice_rank(rows) -> int:
    return len(hnf(rows))


def lattice_reduce(v, hnf_rows):
    """Canonical representative of v modulo the lattice spanned by hnf_rows."""
    v = list(v)
    for row in hnf_rows:
        c = next(j for j, x in enumerate(row) if x)
        q = v[c] // row[c]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return tuple(v)


def in_lattice(v, hnf_rows) -> bool:
    return not any(lattice_reduce(v, hnf_rows))


def integer_kernel(rows, ncols=None):
    """Basis of {v in Z^n : rows . v = 0} (integer vectors)."""
    if not rows:
        return [] if ncols is None else [
            [1 if i == j else 0 for j in range(ncols)] for i in range(ncols)
        ]
    ncols = len(rows[0]) if ncols is None else ncols
    basis = kernel([[Fraction(x) for x in row] for row in rows], _QFIELD, ncols)
    out = []
    for v in basis:
        den = 1
        for x in v:
            den = den * x.denominator // _gcd(den, x.denominator)
        out.append([int(x * den) for x in v])
    return hnf(out)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class _QF:
    zero = Fraction(0)
    one = Fraction(1)


_QFIELD = _QF()
