"""Cones and fans: membership, unimodularity, completeness, projectivity.

A Fan stores a shared table of primitive ray generators plus maximal cones as
sorted index tuples; equality is equality of the canonical tables.  The
completeness test is the local one (pure, every ridge shared by exactly two
maximal cones from opposite sides) which is exact for objects satisfying the
fan axioms; projectivity is decided by an exact rational LP over the wall
inequalities and every positive answer is re-verified against the full
strict-convexity quantifier before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

from . import _lp
from .exactlin import (
    IntVector,
    as_matrix,
    det,
    dot,
    kernel_basis,
    primitive,
    rank,
    solve_unique,
    vec_add,
)
from .polytope import LatticePolytope, lattice_points, origin_interior


@dataclass(frozen=True)
class Cone:
    """Pointed polyhedral cone given by its extreme primitive generators."""

    generators: tuple[IntVector, ...]

    @staticmethod
    def from_generators(vectors) -> "Cone":
        gens = sorted({primitive(tuple(v)) for v in as_matrix(vectors)})
        if not gens:
            raise ValueError("cone needs at least one generator")
        if rank(tuple(gens)) < len(gens):
            # dependent generators: verify pointedness, drop non-extreme rays
            if _contains_line(gens):
                raise ValueError("cone is not pointed (contains a line)")
            gens = _extreme_rays(gens)
        return Cone(tuple(gens))

    @property
    def dim(self) -> int:
        return rank(self.generators)

    @property
    def simplicial(self) -> bool:
        return self.dim == len(self.generators)


def _contains_line(gens) -> bool:
    # pointed <=> 0 not in conv(generators) for nonzero primitive generators
    d = len(gens[0])
    columns = [g + (1,) for g in gens]
    target = (0,) * d + (1,)
    return _lp.feasible_nonneg_combination(columns, target) is not None


def _extreme_rays(gens):
    kept = list(gens)
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(kept):
            others = kept[:i] + kept[i + 1 :]
            if others and _lp.feasible_nonneg_combination(others, g) is not None:
                kept.pop(i)
                changed = True
                break
    return sorted(kept)


def cone_contains(cone, x: IntVector) -> bool:
    """Exact membership of an integer vector in a pointed cone."""
    gens = cone.generators if isinstance(cone, Cone) else as_matrix(cone)
    x = tuple(x)
    if all(v == 0 for v in x):
        return True
    k = len(gens)
    if rank(gens) == k:
        res = _solve_in_independent(gens, x)
        return res is not None
    return _lp.feasible_nonneg_combination(list(gens), x) is not None


def _independent_columns(gens):
    """Column indices (size = #gens) on which the generator rows are invertible."""
    k = len(gens)
    d = len(gens[0])
    for cols in combinations(range(d), k):
        sub = tuple(tuple(g[c] for c in cols) for g in gens)
        if det(sub) != 0:
            return cols
    return None


def _solve_in_independent(gens, x):
    """Coefficients of x over independent gens if x in Cone(gens), else None.

    Returns (numerators, positive denominator); membership requires all
    numerators >= 0 and the combination to reproduce x exactly.
    """
    k = len(gens)
    d = len(gens[0])
    cols = _independent_columns(gens)
    if cols is None:
        return None
    sub = tuple(tuple(gens[j][c] for j in range(k)) for c in cols)
    rhs = tuple(x[c] for c in cols)
    nums, den = solve_unique(sub, rhs)
    if den < 0:
        nums = tuple(-v for v in nums)
        den = -den
    if any(v < 0 for v in nums):
        return None
    for c in range(d):
        if sum(nums[j] * gens[j][c] for j in range(k)) != den * x[c]:
            return None
    return nums, den


def is_unimodular(cone) -> bool:
    """True iff the generators are part of a lattice basis of the ambient lattice.

    For a full-dimensional simplicial cone this is |det| = 1; in general the
    gcd of the maximal minors of the generator matrix must be 1 (the cone is
    unimodular relative to the lattice of its span).  Dependent generators are
    rejected.
    """
    gens = cone.generators if isinstance(cone, Cone) else as_matrix(cone)
    k = len(gens)
    d = len(gens[0])
    if rank(gens) != k:
        raise ValueError("unimodularity needs linearly independent generators")
    g = 0
    for cols in combinations(range(d), k):
        sub = tuple(tuple(row[c] for c in cols) for row in gens)
        g = gcd(g, det(sub))
        if g == 1:
            return True
    return g == 1


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    verdict: bool
    violations: tuple[Violation, ...]


class Fan:
    """Set of maximal cones over a shared, lex-sorted primitive point table.

    `max_cones` holds sorted index tuples (0-based into `points`), the list
    itself sorted; equality and hashing use exactly this canonical data.
    Completeness/simpliciality/projectivity flags are tri-state caches.
    """

    def __init__(self, dim: int, points, max_cones, *, heights=None):
        pts = tuple(tuple(p) for p in points)
        if list(pts) != sorted(set(pts)):
            raise ValueError("fan point table must be lex-sorted and duplicate-free")
        if any(len(p) != dim for p in pts):
            raise ValueError("point dimension mismatch")
        cones = sorted({tuple(sorted(c)) for c in max_cones})
        for c in cones:
            if not c or c[-1] >= len(pts) or len(set(c)) != len(c):
                raise ValueError(f"bad cone index tuple {c}")
        for a, b in combinations(cones, 2):
            if set(a) <= set(b) or set(b) <= set(a):
                raise ValueError(f"cone {a} is a face of listed maximal cone {b}")
        self.dim = dim
        self.points = pts
        self.max_cones = tuple(cones)
        self.simplicial: bool | None = None
        self.complete: bool | None = None
        self.projective: bool | None = None
        self._heights = dict(heights) if heights else None
        self._ridge_cache = None

    def __eq__(self, other):
        return (
            isinstance(other, Fan)
            and self.dim == other.dim
            and self.points == other.points
            and self.max_cones == other.max_cones
        )

    def __hash__(self):
        return hash((self.dim, self.points, self.max_cones))

    def __repr__(self):
        return (
            f"Fan(dim={self.dim}, rays={len(self.rays_used())}, "
            f"max_cones={len(self.max_cones)})"
        )

    def cone_vectors(self, cone_index_tuple) -> tuple[IntVector, ...]:
        return tuple(self.points[i] for i in cone_index_tuple)

    def rays_used(self) -> tuple[int, ...]:
        used = set()
        for c in self.max_cones:
            used.update(c)
        return tuple(sorted(used))

    def is_simplicial(self) -> bool:
        if self.simplicial is None:
            self.simplicial = all(
                rank(self.cone_vectors(c)) == len(c) for c in self.max_cones
            )
        return self.simplicial


def face_fan(p: LatticePolytope) -> Fan:
    """Fan of cones over the proper faces of p (origin must be interior).

    Maximal cones are the cones over facets; heights identically one give a
    strictly convex support function, so the fan is stored with that witness
    and flagged complete and projective.
    """
    if not origin_interior(p):
        raise ValueError("face fan needs the origin in the interior")
    cones = [f.vertex_set for f in p.facets]
    fan = Fan(p.dim, p.vertices, cones,
              heights={i: Fraction(1) for i in range(len(p.vertices))})
    fan.complete = True
    fan.projective = True
    return fan


def _annihilator(vectors, dim):
    """Basis of the integer functionals vanishing on all given vectors."""
    cols = [tuple(v[i] for v in vectors) for i in range(dim)]
    return kernel_basis(cols)


def _cone_facet_data(gens, dim):
    """Facets of a full-dimensional pointed cone with extreme generators.

    Returns a list of (incident generator index tuple, inward normal).
    """
    k = len(gens)
    if k == dim and rank(gens) == dim:
        # simplicial: facets omit one generator each
        out = []
        for i in range(k):
            others = tuple(gens[j] for j in range(k) if j != i)
            normal = _annihilator(others, dim)[0]
            if dot(normal, gens[i]) < 0:
                normal = tuple(-x for x in normal)
            out.append((tuple(j for j in range(k) if j != i), normal))
        return out
    seen = {}
    for subset in combinations(range(k), dim - 1):
        chosen = tuple(gens[i] for i in subset)
        normals = _annihilator(chosen, dim)
        if len(normals) != 1:
            continue
        normal = normals[0]
        side = _side_sign(gens, normal)
        if side == 0:
            continue
        if side < 0:
            normal = tuple(-x for x in normal)
        incident = tuple(i for i, g in enumerate(gens) if dot(normal, g) == 0)
        seen.setdefault((normal, incident), (incident, normal))
    return list(seen.values())


def _side_sign(gens, normal) -> int:
    pos = neg = False
    for g in gens:
        s = dot(normal, g)
        if s > 0:
            pos = True
        elif s < 0:
            neg = True
        if pos and neg:
            return 0
    if pos:
        return 1
    if neg:
        return -1
    return 0


def _fan_ridges(fan: Fan):
    """Map ridge (sorted point-index tuple) -> list of (cone position, side).

    side is the sign of the off-ridge part of the cone against the ridge
    normal; the normal per ridge is canonical (sign-normalized kernel vector).
    """
    if fan._ridge_cache is not None:
        return fan._ridge_cache
    ridges: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    normals: dict[tuple[int, ...], IntVector] = {}
    for ci, cone in enumerate(fan.max_cones):
        gens = fan.cone_vectors(cone)
        k = len(cone)
        if k == fan.dim and rank(gens) == k:
            facet_sets = [tuple(j for j in range(k) if j != i) for i in range(k)]
        else:
            facet_sets = [inc for inc, _ in _cone_facet_data(gens, fan.dim)]
        for inc in facet_sets:
            key = tuple(sorted(cone[j] for j in inc))
            if key not in normals:
                vecs = tuple(fan.points[i] for i in key)
                ann = _annihilator(vecs, fan.dim)
                if len(ann) != 1:
                    normals[key] = None
                else:
                    normals[key] = ann[0]
            normal = normals[key]
            if normal is None:
                side = 0
            else:
                off = [cone[j] for j in range(k) if cone[j] not in key]
                signs = {(_sign(dot(normal, fan.points[i]))) for i in off}
                side = signs.pop() if len(signs) == 1 and 0 not in signs else 0
            ridges.setdefault(key, []).append((ci, side))
    fan._ridge_cache = (ridges, normals)
    return fan._ridge_cache


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def is_complete(fan: Fan) -> bool:
    """Support equals the whole space.

    Criterion (exact under the fan axioms): every maximal cone is
    full-dimensional, and every ridge lies in exactly two maximal cones, on
    opposite sides of the ridge hyperplane.
    """
    for cone in fan.max_cones:
        if len(cone) < fan.dim or rank(fan.cone_vectors(cone)) != fan.dim:
            fan.complete = False
            return False
    ridges, _ = _fan_ridges(fan)
    for key, incidences in ridges.items():
        if len(incidences) != 2:
            fan.complete = False
            return False
        (_, s1), (_, s2) = incidences
        if s1 == 0 or s2 == 0 or s1 == s2:
            fan.complete = False
            return False
    fan.complete = True
    return True


def _wall_inequalities(fan: Fan):
    """One integer inequality row over ray heights per interior wall.

    For a wall shared by cones (ridge + g1) and (ridge + g2): writing g2 over
    the basis (independent ridge subset, g1) with coefficients c/den, strict
    convexity across the wall is den*h[g2] - sum c_i h[basis_i] > 0 (den
    normalized positive).
    """
    ridges, _ = _fan_ridges(fan)
    npts = len(fan.points)
    rows = []
    for key, incidences in sorted(ridges.items()):
        if len(incidences) != 2:
            raise ValueError("fan is not complete; projectivity undefined")
        (c1, _), (c2, _) = incidences
        cone1 = fan.max_cones[c1]
        cone2 = fan.max_cones[c2]
        key_vecs = tuple(fan.points[i] for i in key)
        sub_pos = _independent_row_subset(key_vecs, fan.dim - 1)
        g1 = next(i for i in cone1 if i not in key)
        g2 = next(i for i in cone2 if i not in key)
        basis_idx = [key[i] for i in sub_pos] + [g1]
        basis_vecs = [fan.points[i] for i in basis_idx]
        matrix = tuple(
            tuple(basis_vecs[j][c] for j in range(fan.dim))
            for c in range(fan.dim)
        )
        nums, den = solve_unique(matrix, fan.points[g2])
        if den < 0:
            nums = tuple(-v for v in nums)
            den = -den
        row = [0] * npts
        row[g2] += den
        for j, idx in enumerate(basis_idx):
            row[idx] -= nums[j]
        rows.append(row)
    return rows


def _linearity_equalities(fan: Fan):
    """Equality rows forcing heights linear on each non-simplicial max cone."""
    rows = []
    npts = len(fan.points)
    for cone in fan.max_cones:
        gens = fan.cone_vectors(cone)
        if len(cone) == fan.dim:
            continue
        basis_pos = _independent_row_subset(gens, fan.dim)
        basis_idx = [cone[i] for i in basis_pos]
        basis_vecs = [fan.points[i] for i in basis_idx]
        matrix = tuple(
            tuple(basis_vecs[j][c] for j in range(fan.dim)) for c in range(fan.dim)
        )
        for pos, idx in enumerate(cone):
            if pos in basis_pos:
                continue
            nums, den = solve_unique(matrix, fan.points[idx])
            row = [0] * npts
            row[idx] += den
            for j, bidx in enumerate(basis_idx):
                row[bidx] -= nums[j]
            rows.append(row)
    return rows


def _independent_row_subset(gens, target_rank):
    for subset in combinations(range(len(gens)), target_rank):
        if rank(tuple(gens[i] for i in subset)) == target_rank:
            return subset
    raise ValueError(f"generators do not span rank {target_rank}")


def _heights_strictly_convex(fan: Fan, heights) -> bool:
    """Full-quantifier check: each cone's linear piece lies strictly below the
    heights at every ray outside the cone."""
    from ._scan import _adjugate_and_det

    used = fan.rays_used()
    for cone in fan.max_cones:
        gens = fan.cone_vectors(cone)
        basis_pos = (
            tuple(range(len(cone)))
            if len(cone) == fan.dim
            else _independent_row_subset(gens, fan.dim)
        )
        basis_idx = [cone[i] for i in basis_pos]
        basis_vecs = [fan.points[i] for i in basis_idx]
        matrix = tuple(
            tuple(basis_vecs[j][c] for j in range(fan.dim)) for c in range(fan.dim)
        )
        adj, den = _adjugate_and_det(matrix)
        den_h = [heights[i] for i in basis_idx]
        for w in used:
            pw = fan.points[w]
            lw = sum(
                Fraction(sum(adj[j][c] * pw[c] for c in range(fan.dim))) * den_h[j]
                for j in range(fan.dim)
            ) / den
            if w in cone:
                if lw != heights[w]:
                    return False
            elif not lw < heights[w]:
                return False
    return True


def is_projective(fan: Fan) -> bool:
    """Existence of a strictly convex support function, decided exactly.

    A stored construction witness is verified first; otherwise an exact
    rational simplex (Bland's rule) maximizes the minimum wall slack with
    heights boxed to [-1, 1], and a strictly positive optimum is re-verified
    against the full quantifier before returning True.
    """
    if fan.complete is None:
        is_complete(fan)
    if not fan.complete:
        raise ValueError("projectivity is defined for complete fans only")
    if fan._heights is not None:
        heights = {i: Fraction(fan._heights[i]) for i in fan.rays_used()}
        if _heights_strictly_convex(fan, heights):
            fan.projective = True
            return True
        fan._heights = None  # stale witness; fall through to the LP
    rows = _wall_inequalities(fan)
    eqs = _linearity_equalities(fan)
    delta, h = _lp.maximize_min_slack(rows, len(fan.points), extra_eq=eqs or None)
    if h is None or delta <= 0:
        fan.projective = False
        return False
    heights = {i: h[i] for i in range(len(fan.points))}
    assert _heights_strictly_convex(fan, heights), (
        "wall-convex heights failed the global check"
    )
    fan._heights = heights
    fan.projective = True
    return True


def skeleton(fan: Fan, n: int) -> list[Cone]:
    """All cones of the fan of dimension 1..n, deduplicated and sorted."""
    faces: set[tuple[IntVector, ...]] = set()
    for cone in fan.max_cones:
        gens = fan.cone_vectors(cone)
        if rank(gens) == len(gens):
            for size in range(1, min(n, len(gens)) + 1):
                for sub in combinations(gens, size):
                    faces.add(tuple(sorted(sub)))
        else:
            for face in _all_cone_faces(gens, fan.dim):
                if 1 <= rank(face) <= n:
                    faces.add(tuple(sorted(face)))
    cones = [Cone(f) for f in sorted(faces, key=lambda f: (rank(f), f))]
    return cones


def _all_cone_faces(gens, dim):
    """Every proper nonzero face of a pointed cone, as generator tuples."""
    out = set()
    stack = [tuple(sorted(gens))]
    seen = {tuple(sorted(gens))}
    while stack:
        current = stack.pop()
        r = rank(current)
        if r == 1:
            out.add(current)
            continue
        out.add(current)
        if len(current) == r:
            for i in range(len(current)):
                sub = tuple(v for j, v in enumerate(current) if j != i)
                key = tuple(sorted(sub))
                if key not in seen:
                    seen.add(key)
                    stack.append(key)
            continue
        for inc, _ in _cone_facet_data_general(current, dim):
            sub = tuple(sorted(current[i] for i in inc))
            if sub and sub not in seen:
                seen.add(sub)
                stack.append(sub)
    return out


def _cone_facet_data_general(gens, dim):
    """Facets of a pointed cone of any dimension inside R^dim."""
    r = rank(gens)
    k = len(gens)
    seen = {}
    for subset in combinations(range(k), r - 1):
        chosen = tuple(gens[i] for i in subset)
        if rank(chosen) != r - 1:
            continue
        anns = _annihilator(chosen, dim)
        useful = [a for a in anns if any(dot(a, g) != 0 for g in gens)]
        if not useful:
            continue
        normal = useful[0]
        side = _side_sign(gens, normal)
        if side == 0:
            continue
        incident = tuple(i for i, g in enumerate(gens) if dot(normal, g) == 0)
        seen.setdefault(incident, (incident, normal))
    return list(seen.values())


def maximal_fan_points(p: LatticePolytope) -> tuple[IntVector, ...]:
    """Canonical ray table for maximal fans of p: nonzero lattice points, sorted."""
    origin = (0,) * p.dim
    return tuple(x for x in lattice_points(p) if x != origin)


def derive_polytope(fan: Fan) -> LatticePolytope:
    """Convex hull of the fan's ray points.

    For a maximal fan this recovers the underlying reflexive polytope, whose
    nonzero lattice points are exactly the rays.
    """
    from .polytope import hull

    return hull(fan.points)


def validate_maximal_fan(fan: Fan, p: LatticePolytope) -> ValidationReport:
    """Check that `fan` is a maximal fan for the reflexive polytope p.

    Verifies (a) the rays are exactly the rays over nonzero lattice points of
    p, (b) completeness, (c) simpliciality, (d) the fan axioms (pairwise
    intersections are common faces), and additionally that no maximal cone
    traps a lattice point of p beyond its generators.  All violations found
    are reported.
    """
    from .polytope import is_reflexive

    if not is_reflexive(p):
        raise ValueError("maximal fans are defined over reflexive polytopes")
    violations: list[Violation] = []
    expected = maximal_fan_points(p)
    expected_set = set(expected)
    used = fan.rays_used()
    used_points = {fan.points[i] for i in used}
    for x in expected:
        if x not in used_points:
            violations.append(Violation("missing_ray", f"no cone uses ray {x}"))
    for x in sorted(used_points - expected_set):
        violations.append(
            Violation("extra_ray", f"ray {x} is not a nonzero lattice point")
        )

    simplicial_positions = []
    for pos, cone in enumerate(fan.max_cones):
        gens = fan.cone_vectors(cone)
        if len(cone) != fan.dim or rank(gens) != fan.dim:
            violations.append(
                Violation(
                    "non_simplicial_cone",
                    f"cone {cone} is not a full-dimensional simplex",
                )
            )
        else:
            simplicial_positions.append(pos)

    ridges, _ = _fan_ridges(fan)
    for key, incidences in sorted(ridges.items()):
        sides = {s for _, s in incidences}
        if len(incidences) != 2 or sides != {1, -1}:
            violations.append(
                Violation(
                    "incompleteness",
                    f"ridge {key} is shared by {len(incidences)} cone(s)",
                )
            )

    table = _scan_table(p)
    for pos in simplicial_positions:
        cone = fan.max_cones[pos]
        try:
            inside = table.contained_indices(
                [fan.points[i] for i in cone]
            )
        except ValueError:
            continue
        gen_points = {fan.points[i] for i in cone}
        for i in inside:
            if table.points[i] not in gen_points:
                violations.append(
                    Violation(
                        "interior_lattice_point",
                        f"cone {cone} contains lattice point {table.points[i]}",
                    )
                )

    normals_cache = {
        pos: _inward_facet_normals(fan, fan.max_cones[pos])
        for pos in simplicial_positions
    }
    for a, b in combinations(simplicial_positions, 2):
        ca, cb = fan.max_cones[a], fan.max_cones[b]
        if not _intersect_properly(fan, ca, cb, normals_cache[a], normals_cache[b]):
            violations.append(
                Violation("overlap", f"cones {ca} and {cb} do not meet in a face")
            )

    return ValidationReport(not violations, tuple(violations))


def _scan_table(p: LatticePolytope):
    from ._scan import PointTable

    if not hasattr(p, "_scan_table_cache"):
        p._scan_table_cache = PointTable(maximal_fan_points(p))
    return p._scan_table_cache


def _inward_facet_normals(fan: Fan, cone):
    """Per-generator inward facet normals of a full-dim simplicial cone."""
    gens = fan.cone_vectors(cone)
    out = []
    for i in range(len(cone)):
        others = tuple(g for j, g in enumerate(gens) if j != i)
        normal = _annihilator(others, fan.dim)[0]
        if dot(normal, gens[i]) < 0:
            normal = tuple(-x for x in normal)
        out.append(normal)
    return out


def _intersect_properly(fan: Fan, ca, cb, normals_a, normals_b) -> bool:
    """Exact test that Cone(ca) and Cone(cb) meet in the common-generator face.

    By the separation lemma the intersection is the common face iff some
    functional vanishes on the common generators and is strictly positive on
    the rest of ca and strictly negative on the rest of cb.  Fast path: sums
    of inward facet normals; full decision: reduce modulo the common
    generators and run the strict-separation certificate construction.
    """
    common = set(ca) & set(cb)
    for cone, other, normals in ((ca, cb, normals_a), (cb, ca, normals_b)):
        m = None
        for pos, idx in enumerate(cone):
            if idx in common:
                continue
            m = normals[pos] if m is None else vec_add(m, normals[pos])
        if m is None:
            continue
        pairings = [dot(m, fan.points[i]) for i in other]
        if all(v <= 0 for v in pairings) and all(
            (v == 0) == (i in common) for v, i in zip(pairings, other)
        ):
            return True
    if common:
        key = tuple(sorted(common))
        cache = getattr(fan, "_reducer_cache", None)
        if cache is None:
            cache = fan._reducer_cache = {}
        reducers = cache.get(key)
        if reducers is None:
            reducers = _annihilator([fan.points[i] for i in key], fan.dim)
            cache[key] = reducers
        k = len(reducers)
        reduced = [
            tuple(dot(r, fan.points[i]) for r in reducers)
            for i in ca
            if i not in common
        ] + [
            tuple(-dot(r, fan.points[i]) for r in reducers)
            for i in cb
            if i not in common
        ]
        na = len(ca) - len(common)
    else:
        k = fan.dim
        reduced = [fan.points[i] for i in ca] + [
            tuple(-x for x in fan.points[i]) for i in cb
        ]
        na = len(ca)
    return _strictly_separable(reduced, k, na)


def _strictly_separable(points, k, na) -> bool:
    """Does some y satisfy <y, p> > 0 for every p in `points` (which span R^k)?

    Equivalent to Cone(points) being pointed.  When it is, the dual cone is
    full-dimensional and the sum of all one-sided hyperplane normals through
    (k-1)-subsets is a strictly interior certificate; so accumulating those
    normals and testing the sum decides the question exactly, with no LP.
    Subsets drawn from one side alone (the first `na` points or the rest) are
    tried first; their sum alone often certifies and mixed subsets are skipped.
    """
    from ._scan import fast_det

    if k == 0:
        return False
    n = len(points)
    total = [0] * k
    found = False

    def try_subset(subset):
        nonlocal found
        normal = []
        for j in range(k):
            minor = tuple(tuple(r[c] for c in range(k) if c != j) for r in subset)
            val = fast_det(minor)
            normal.append(val if j % 2 == 0 else -val)
        if all(v == 0 for v in normal):
            return
        pos = neg = False
        for p in points:
            s = sum(normal[c] * p[c] for c in range(k))
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
            if pos and neg:
                return
        if neg:
            for c in range(k):
                total[c] -= normal[c]
        else:
            for c in range(k):
                total[c] += normal[c]
        found = True

    def certified():
        return found and all(
            sum(total[c] * p[c] for c in range(k)) > 0 for p in points
        )

    pure = [s for s in combinations(range(n), k - 1)
            if max(s, default=0) < na or min(s, default=n) >= na]
    for subset in pure:
        try_subset(tuple(points[i] for i in subset))
    if certified():
        return True
    for subset in combinations(range(n), k - 1):
        if max(subset, default=0) < na or min(subset, default=n) >= na:
            continue  # pure subset, already tried
        try_subset(tuple(points[i] for i in subset))
    return certified()
