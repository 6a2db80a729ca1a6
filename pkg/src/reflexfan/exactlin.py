"""Exact integer linear algebra for lattice-geometry predicates.

Vectors are plain tuples of Python ints (arbitrary precision) and matrices are
tuples of row vectors.  Everything here is exact: no floating point anywhere,
and no modular shortcuts leak into results.
"""

from __future__ import annotations

from math import gcd

IntVector = tuple[int, ...]
IntMatrix = tuple[IntVector, ...]


class NonUnimodularBasisError(ValueError):
    """Raised when a claimed lattice basis has |det| != 1."""


def as_vector(v) -> IntVector:
    vec = tuple(int(x) for x in v)
    if any(vec[i] != v[i] for i in range(len(vec))):
        raise ValueError(f"non-integer entry in vector {v!r}")
    return vec


def as_matrix(rows) -> IntMatrix:
    mat = tuple(as_vector(r) for r in rows)
    if mat and any(len(r) != len(mat[0]) for r in mat):
        raise ValueError("ragged matrix")
    return mat


def dot(u: IntVector, v: IntVector) -> int:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vec_add(u: IntVector, v: IntVector) -> IntVector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: IntVector, v: IntVector) -> IntVector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: int, v: IntVector) -> IntVector:
    return tuple(c * a for a in v)


def vec_sum(vectors) -> IntVector:
    vectors = list(vectors)
    if not vectors:
        raise ValueError("empty sum")
    acc = list(vectors[0])
    for v in vectors[1:]:
        for i, x in enumerate(v):
            acc[i] += x
    return tuple(acc)


def content(v: IntVector) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: IntVector) -> IntVector:
    """v divided by the gcd of its entries; rejects the zero vector."""
    g = content(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in v) if g > 1 else v


def sign_normalized(v: IntVector) -> IntVector:
    """Flip sign so the first nonzero entry is positive."""
    for x in v:
        if x != 0:
            return v if x > 0 else tuple(-y for y in v)
    return v


def det(m: IntMatrix) -> int:
    """Exact determinant via fraction-free Bareiss elimination.

    Rejects non-square input.  Division steps in Bareiss are exact by
    construction, so only integer arithmetic occurs.
    """
    m = as_matrix(m)
    n = len(m)
    if n == 0:
        return 1
    if any(len(r) != n for r in m):
        raise ValueError(f"determinant of non-square matrix {len(m)}x{len(m[0])}")
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank(m: IntMatrix) -> int:
    """Rank over Q, via integer fraction-free elimination."""
    m = as_matrix(m)
    a = [list(r) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if a[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        for i in range(r + 1, rows):
            if a[i][c] != 0:
                p, q = a[r][c], a[i][c]
                a[i] = [p * a[i][j] - q * a[r][j] for j in range(cols)]
        r += 1
        if r == rows:
            break
    return r


def _row_hnf_transform(m: IntMatrix) -> tuple[list[list[int]], list[list[int]], int]:
    """Row echelon (Hermite-style) form H = U m with U unimodular.

    Returns (H, U, rank).  H's nonzero rows come first with positive pivots in
    increasing column order; only properties needed internally are guaranteed
    (no off-diagonal reduction).
    """
    h = [list(r) for r in m]
    rows = len(h)
    cols = len(h[0]) if rows else 0
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    r = 0
    for c in range(cols):
        # Euclidean elimination in column c below row r
        while True:
            nz = [i for i in range(r, rows) if h[i][c] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(h[i][c]))
            if i_min != r:
                h[r], h[i_min] = h[i_min], h[r]
                u[r], u[i_min] = u[i_min], u[r]
            done = True
            for i in range(r + 1, rows):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    h[i] = [h[i][j] - q * h[r][j] for j in range(cols)]
                    u[i] = [u[i][j] - q * u[r][j] for j in range(rows)]
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if r < rows and h[r][c] != 0:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            r += 1
            if r == rows:
                break
    return h, u, r


def kernel_basis(columns) -> list[IntVector]:
    """Basis of the integer kernel of the map x -> sum x_i * columns[i].

    The input is the list of column vectors; the output vectors x satisfy
    sum x_i * columns[i] = 0 exactly.  The result is a lattice basis of the
    (saturated) kernel lattice, each vector primitive, in a canonical order:
    the rows of the Hermite form of the kernel, pivots positive.
    """
    cols = as_matrix(columns)
    if not cols:
        return []
    _, u, r = _row_hnf_transform(cols)
    kernel_rows = [tuple(u[i]) for i in range(r, len(cols))]
    if not kernel_rows:
        return []
    h, _, kr = _row_hnf_transform(tuple(kernel_rows))
    assert kr == len(kernel_rows)
    out = [sign_normalized(tuple(h[i])) for i in range(kr)]
    for v in out:
        assert content(v) == 1
    return out


def dual_basis(basis) -> list[IntVector]:
    """Dual vectors b'_i with <b'_i, b_j> = delta_ij, for a lattice basis.

    Requires |det| = 1; otherwise the dual vectors are not integral and a
    NonUnimodularBasisError is raised.
    """
    b = as_matrix(basis)
    n = len(b)
    if n == 0 or any(len(r) != n for r in b):
        raise ValueError("dual_basis needs a square list of vectors")
    d = det(b)
    if d not in (1, -1):
        raise NonUnimodularBasisError(f"basis determinant {d}, not a lattice basis")
    adj = _adjugate(b)
    # dual vectors are the columns of B^{-1} = adj / det
    dual = [tuple(d * adj[i][j] for i in range(n)) for j in range(n)]
    for i in range(n):
        for j in range(n):
            assert dot(dual[i], b[j]) == (1 if i == j else 0)
    return dual


def _adjugate(m: IntMatrix) -> list[list[int]]:
    n = len(m)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = tuple(
                tuple(m[r][c] for c in range(n) if c != j)
                for r in range(n)
                if r != i
            )
            adj[j][i] = (-1) ** (i + j) * det(minor)
    return adj


def complete_to_basis(vectors) -> list[IntVector]:
    """Extend independent rows spanning a saturated sublattice to a basis of Z^d.

    The first k rows of the result are the inputs; the remaining d - k rows
    complete them so the full matrix has determinant +-1.  Rejects input whose
    row lattice is not saturated (gcd of maximal minors != 1).
    """
    v = as_matrix(vectors)
    k = len(v)
    d = len(v[0]) if k else 0
    if k > d:
        raise ValueError("more vectors than ambient dimension")
    # Column-style HNF of the transpose: U * v^T = [H; 0] with U in GL_d(Z).
    vt = tuple(tuple(v[i][j] for i in range(k)) for j in range(d))
    h, u, r = _row_hnf_transform(vt)
    if r != k:
        raise ValueError("vectors are linearly dependent")
    hk = tuple(tuple(h[i][:k]) for i in range(k))
    if det(hk) not in (1, -1):
        raise NonUnimodularBasisError(
            "row lattice is not saturated; cannot complete to a lattice basis"
        )
    # v^T = U^{-1} [H; 0] with |det H| = 1, so the row lattice equals the span
    # of the first k columns of U^{-1}; the last d-k columns complete a basis.
    uinv = _unimodular_inverse(u)
    completion = [tuple(uinv[i][j] for i in range(d)) for j in range(k, d)]
    full = list(v) + completion
    if det(tuple(full)) not in (1, -1):
        raise AssertionError("basis completion failed")
    return full


def _unimodular_inverse(m) -> list[list[int]]:
    n = len(m)
    d = det(tuple(tuple(r) for r in m))
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    adj = _adjugate(tuple(tuple(r) for r in m))
    return [[d * adj[i][j] for j in range(n)] for i in range(n)]


def solve_unique(matrix: IntMatrix, rhs: IntVector):
    """Solve M x = rhs for square nonsingular integer M, over the rationals.

    Returns (numerators, denominator) with x_i = numerators[i] / denominator
    exactly (denominator = det M, sign preserved).
    """
    m = as_matrix(matrix)
    n = len(m)
    d = det(m)
    if d == 0:
        raise ValueError("singular system")
    adj = _adjugate(m)
    nums = tuple(sum(adj[i][j] * rhs[j] for j in range(n)) for i in range(n))
    return nums, d
