"""Lattice polytopes: facets, duality, reflexivity, lattice points, faces.

Polytopes are stored canonically (vertices and facets sorted lexicographically)
so that equality is plain tuple equality and emitted files are reproducible.
All predicates are exact; facet enumeration is a brute-force scan over
dim-element vertex subsets with exact side tests, which is plenty at the scale
this package targets (a few dozen vertices, dimension 3 to 6).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from . import _lp
from .exactlin import (
    IntVector,
    as_matrix,
    dot,
    kernel_basis,
    rank,
    vec_sub,
)

SUPPORTED_DIMS = range(3, 7)


class NonLatticeDualError(ValueError):
    """Dual polytope has a non-integral vertex (the polytope is not reflexive).

    Carries the offending facet normal and the exact rational vertex.
    """

    def __init__(self, normal: IntVector, offset: int, vertex: tuple[Fraction, ...]):
        self.normal = normal
        self.offset = offset
        self.vertex = vertex
        coords = ", ".join(str(c) for c in vertex)
        super().__init__(
            f"dual vertex ({coords}) for facet normal {normal} (offset {offset}) "
            "is not a lattice point"
        )


@dataclass(frozen=True)
class Facet:
    normal: IntVector
    offset: int
    vertex_set: tuple[int, ...]


@dataclass(frozen=True)
class Face:
    vertex_set: tuple[int, ...]
    dim: int


class LatticePolytope:
    """Full-dimensional lattice polytope with derived facet data.

    Construct through :func:`hull`; direct construction assumes canonical,
    already-validated data.
    """

    def __init__(self, dim: int, vertices: tuple[IntVector, ...], facets: tuple[Facet, ...]):
        self.dim = dim
        self.vertices = vertices
        self.facets = facets
        self._points: list[IntVector] | None = None
        self._point_index: dict[IntVector, int] | None = None

    def __eq__(self, other):
        return (
            isinstance(other, LatticePolytope)
            and self.dim == other.dim
            and self.vertices == other.vertices
        )

    def __hash__(self):
        return hash((self.dim, self.vertices))

    def __repr__(self):
        return (
            f"LatticePolytope(dim={self.dim}, vertices={len(self.vertices)}, "
            f"facets={len(self.facets)})"
        )

    def contains(self, x: IntVector) -> bool:
        return all(dot(f.normal, x) <= f.offset for f in self.facets)

    def on_boundary(self, x: IntVector) -> bool:
        return self.contains(x) and any(dot(f.normal, x) == f.offset for f in self.facets)

    def carrier_facets(self, x: IntVector) -> tuple[int, ...]:
        """Indices of facets whose hyperplane contains x."""
        return tuple(
            i for i, f in enumerate(self.facets) if dot(f.normal, x) == f.offset
        )


def hull(points) -> LatticePolytope:
    """Canonical lattice polytope from a spanning list of lattice points.

    Redundant (non-extreme) points are dropped exactly, via rational LP.
    Rejects inputs that are not full-dimensional or whose dimension is outside
    the supported range 3..6.
    """
    pts = sorted(set(as_matrix(points)))
    if not pts:
        raise ValueError("empty point list")
    dim = len(pts[0])
    if dim not in SUPPORTED_DIMS:
        raise ValueError(f"dimension {dim} unsupported (need 3 <= dim <= 6)")
    homog = tuple(p + (1,) for p in pts)
    if rank(homog) != dim + 1:
        raise ValueError("points do not affinely span the ambient space; "
                         "polytope is not full-dimensional")
    vertices = tuple(p for i, p in enumerate(pts) if _is_extreme(pts, i))
    facets = _enumerate_facets(vertices, dim)
    return LatticePolytope(dim, vertices, facets)


def _is_extreme(pts, i) -> bool:
    """Exact test that pts[i] is not a convex combination of the others."""
    others = [p for j, p in enumerate(pts) if j != i]
    if not others:
        return True
    target = pts[i] + (1,)
    columns = [p + (1,) for p in others]
    return _lp.feasible_nonneg_combination(columns, target) is None


def _enumerate_facets(vertices, dim) -> tuple[Facet, ...]:
    n = len(vertices)
    seen = {}
    for subset in combinations(range(n), dim):
        base = vertices[subset[0]]
        diffs = [vec_sub(vertices[j], base) for j in subset[1:]]
        cols = [tuple(d[j] for d in diffs) for j in range(dim)]
        normals = kernel_basis(cols)
        if len(normals) != 1:
            continue  # not affinely spanning a hyperplane
        normal = normals[0]
        offset = dot(normal, base)
        side = _side_of(vertices, normal, offset)
        if side == 0:
            continue  # cuts through the polytope
        if side < 0:
            normal = tuple(-x for x in normal)
            offset = -offset
        key = (normal, offset)
        if key not in seen:
            incident = tuple(
                i for i, v in enumerate(vertices) if dot(normal, v) == offset
            )
            seen[key] = Facet(normal, offset, incident)
    return tuple(seen[k] for k in sorted(seen))


def _side_of(vertices, normal, offset) -> int:
    """+1 if all vertices have <normal,v> <= offset, -1 if all >=, else 0."""
    below = above = False
    for v in vertices:
        s = dot(normal, v)
        if s > offset:
            above = True
        elif s < offset:
            below = True
        if above and below:
            return 0
    return -1 if above else 1


def origin_interior(p: LatticePolytope) -> bool:
    return all(f.offset > 0 for f in p.facets)


def is_reflexive(p: LatticePolytope) -> bool:
    """True iff the origin is interior and every facet has offset one.

    Facet normals are primitive by construction, so offset one makes every
    dual vertex a lattice point.
    """
    return all(f.offset == 1 for f in p.facets)


def dual(p: LatticePolytope) -> LatticePolytope:
    """Dual polytope {m : <m, n> >= -1 on p}, as a lattice polytope.

    Requires the origin strictly interior.  The dual vertices are -u_F/c_F per
    facet; the first non-integral one (in canonical facet order) is reported
    via NonLatticeDualError.
    """
    if not origin_interior(p):
        raise ValueError("origin is not interior; dual polytope is unbounded")
    duals = []
    for f in p.facets:
        vertex = tuple(Fraction(-x, f.offset) for x in f.normal)
        if any(c.denominator != 1 for c in vertex):
            raise NonLatticeDualError(f.normal, f.offset, vertex)
        duals.append(tuple(int(c) for c in vertex))
    return hull(duals)


def lattice_points(p: LatticePolytope) -> list[IntVector]:
    """All lattice points of p, lexicographically sorted (cached)."""
    if p._points is None:
        lo = [min(v[i] for v in p.vertices) for i in range(p.dim)]
        hi = [max(v[i] for v in p.vertices) for i in range(p.dim)]
        found = []
        for candidate in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
            if p.contains(candidate):
                found.append(candidate)
        p._points = found
        p._point_index = {pt: i for i, pt in enumerate(found)}
    return p._points


def interior_lattice_points(p: LatticePolytope) -> list[IntVector]:
    return [x for x in lattice_points(p) if not p.on_boundary(x)]


def boundary_lattice_points(p: LatticePolytope) -> list[IntVector]:
    return [x for x in lattice_points(p) if p.on_boundary(x)]


def boundary_multiplicity(x: IntVector, p: LatticePolytope) -> int:
    """The integer r with x in r * (boundary of p), for reflexive p.

    Computed as max over facets of <u_F, x>, clamped at zero (x = 0 gives 0).
    """
    if not is_reflexive(p):
        raise ValueError("boundary multiplicity needs a reflexive polytope")
    return max(0, max(dot(f.normal, x) for f in p.facets))


def smallest_face_containing(pts, p: LatticePolytope) -> Face | None:
    """Smallest proper face of p containing all pts, or None.

    The smallest face is the intersection of all facets containing every
    point; None when no facet does (only the improper face works).  Points
    outside p are rejected.
    """
    pts = as_matrix(pts)
    if not pts:
        raise ValueError("empty point list")
    for x in pts:
        if not p.contains(x):
            raise ValueError(f"point {x} lies outside the polytope")
    carriers = [
        f for f in p.facets if all(dot(f.normal, x) == f.offset for x in pts)
    ]
    if not carriers:
        return None
    vertex_set = set(carriers[0].vertex_set)
    for f in carriers[1:]:
        vertex_set &= set(f.vertex_set)
    vertex_set = tuple(sorted(vertex_set))
    members = [p.vertices[i] for i in vertex_set]
    face_dim = rank(tuple(v + (1,) for v in members)) - 1 if members else -1
    return Face(vertex_set, face_dim)
