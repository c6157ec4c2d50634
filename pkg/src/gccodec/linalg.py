"""Dense exact linear algebra over a finite field handle.

Matrices are tuples (or lists) of row tuples holding field elements in their
integer encoding; all arithmetic goes through the field handle, so any object
with add/sub/mul/inv/neg works.
"""

from .errors import InvalidParams


def identity(f, n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def vec_add(f, u, v):
    return tuple(f.add(a, b) for a, b in zip(u, v))


def vec_sub(f, u, v):
    return tuple(f.sub(a, b) for a, b in zip(u, v))


def vec_scale(f, c, u):
    return tuple(f.mul(c, a) for a in u)


def vec_mat(f, v, m):
    """Row vector times matrix."""
    if len(v) != len(m):
        raise InvalidParams(f"vector length {len(v)} does not match {len(m)} rows")
    cols = len(m[0]) if m else 0
    out = [0] * cols
    for vi, row in zip(v, m):
        if vi == 0:
            continue
        for j, rj in enumerate(row):
            if rj:
                out[j] = f.add(out[j], f.mul(vi, rj))
    return tuple(out)


def mat_mul(f, a, b):
    return tuple(vec_mat(f, row, b) for row in a)


def mat_sub(f, a, b):
    return tuple(vec_sub(f, ra, rb) for ra, rb in zip(a, b))


def transpose(m):
    return tuple(tuple(row[j] for row in m) for j in range(len(m[0]))) if m else ()


def rref(f, m):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = f.inv(rows[r][c])
        rows[r] = [f.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                coef = rows[i][c]
                rows[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(f, m):
    return len(rref(f, m)[1])


def det(f, m):
    n = len(m)
    if any(len(row) != n for row in m):
        raise InvalidParams("determinant requires a square matrix")
    rows = [list(r) for r in m]
    result = 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = f.neg(result)
        result = f.mul(result, rows[c][c])
        inv = f.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                coef = f.mul(inv, rows[i][c])
                rows[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(rows[i], rows[c])]
    return result


def mat_inv(f, m):
    n = len(m)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    reduced, pivots = rref(f, aug)
    if pivots[:n] != tuple(range(n)):
        raise InvalidParams("matrix is singular")
    return tuple(tuple(row[n:]) for row in reduced)


def right_inverse(f, m):
    """N x K matrix R with m . R = I, m a full-rank K x N matrix.

    Uses the lexicographically first set of K linearly independent columns
    (the RREF pivot columns), so the choice is deterministic.
    """
    k = len(m)
    n = len(m[0])
    _, pivots = rref(f, m)
    if len(pivots) != k:
        raise InvalidParams("matrix does not have full row rank")
    sub = tuple(tuple(row[c] for c in pivots) for row in m)
    sub_inv = mat_inv(f, sub)
    out = [[0] * k for _ in range(n)]
    for i, c in enumerate(pivots):
        out[c] = list(sub_inv[i])
    return tuple(tuple(row) for row in out)
