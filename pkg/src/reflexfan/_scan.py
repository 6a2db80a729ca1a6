"""Bulk exact point-in-cone membership scans.

The hot loops of candidate enumeration test hundreds of thousands of
(cone, lattice point) pairs.  For a simplicial cone with independent
generators the membership test is a square solve plus a sign check, which
vectorizes over all points as integer matrix products.  int64 numpy is used
only when a priori magnitude bounds rule out overflow; otherwise the same
arithmetic runs on Python ints.  Either way the result is exact.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .exactlin import det

_INT64_SAFE = 2**62


def independent_columns(gens):
    """Column subset on which the generator rows form an invertible matrix."""
    k = len(gens)
    d = len(gens[0])
    for cols in combinations(range(d), k):
        sub = tuple(tuple(g[c] for c in cols) for g in gens)
        if fast_det(sub) != 0:
            return cols
    return None


def det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def det3(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def fast_det(m):
    k = len(m)
    if k == 1:
        return m[0][0]
    if k == 2:
        return det2(m)
    if k == 3:
        return det3(m)
    if k == 4:
        total = 0
        for i in range(4):
            minor = tuple(row[:i] + row[i + 1 :] for row in m[1:])
            term = m[0][i] * det3(minor)
            total += term if i % 2 == 0 else -term
        return total
    return det(tuple(tuple(r) for r in m))


def _adjugate_and_det(sub):
    k = len(sub)
    if k == 1:
        return [[1]], sub[0][0]
    adj = [[0] * k for _ in range(k)]
    for i in range(k):
        rows = [sub[r] for r in range(k) if r != i]
        for j in range(k):
            minor = tuple(tuple(row[c] for c in range(k) if c != j) for row in rows)
            adj[j][i] = fast_det(minor) if (i + j) % 2 == 0 else -fast_det(minor)
    return adj, fast_det(sub)


class PointTable:
    """Fixed table of integer points prepared for repeated cone scans."""

    def __init__(self, points):
        self.points = [tuple(p) for p in points]
        self.dim = len(self.points[0]) if self.points else 0
        self.max_abs = max((abs(x) for p in self.points for x in p), default=0)
        self._arr = None

    def array(self):
        if self._arr is None:
            self._arr = np.array(self.points, dtype=np.int64)
        return self._arr

    def contained_indices(self, gens) -> list[int]:
        """Indices of table points lying in Cone(gens), gens independent."""
        k = len(gens)
        cols = independent_columns(gens)
        if cols is None:
            raise ValueError("generators are linearly dependent")
        sub = tuple(tuple(gens[j][c] for j in range(k)) for c in cols)
        adj, den = _adjugate_and_det(sub)
        if den < 0:
            adj = [[-x for x in row] for row in adj]
            den = -den
        gen_abs = max(abs(x) for g in gens for x in g)
        adj_abs = max((abs(x) for row in adj for x in row), default=1)
        num_bound = k * adj_abs * self.max_abs
        check_bound = max(k * num_bound * gen_abs, den * self.max_abs)
        if check_bound < _INT64_SAFE:
            return self._contained_numpy(gens, cols, adj, den)
        return self._contained_python(gens, cols, adj, den)

    def _contained_numpy(self, gens, cols, adj, den):
        x = self.array()
        adj_t = np.array(adj, dtype=np.int64).T
        nums = x[:, cols] @ adj_t
        mask = (nums >= 0).all(axis=1)
        if not mask.any():
            return []
        g = np.array(gens, dtype=np.int64)
        recon = nums[mask] @ g
        ok = (recon == den * x[mask]).all(axis=1)
        idx = np.nonzero(mask)[0][ok]
        return [int(i) for i in idx]

    def _contained_python(self, gens, cols, adj, den):
        k = len(gens)
        d = self.dim
        out = []
        for i, p in enumerate(self.points):
            nums = [
                sum(adj[r][j] * p[cols[j]] for j in range(k)) for r in range(k)
            ]
            if any(v < 0 for v in nums):
                continue
            if all(
                sum(nums[j] * gens[j][c] for j in range(k)) == den * p[c]
                for c in range(d)
            ):
                out.append(i)
        return out

    def cone_is_empty(self, gen_indices) -> bool:
        """Cone over the given table points meets the table only in them.

        The origin is not expected to be a table entry; generators themselves
        always test as contained.
        """
        gens = [self.points[i] for i in gen_indices]
        inside = self.contained_indices(gens)
        return len(inside) == len(gen_indices)
