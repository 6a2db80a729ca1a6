"""Subdivisions and enumeration: MPCP fans, empty-cone candidates, all maximal
fans of a polytope, and refinement across nested reflexive polytopes.

Height-lift subdivisions use squared length plus a small seeded rational
jitter; lattice-point margins on the paraboloid are at least one, so every
point stays on the lower hull (the subdivision uses every point) and the
jitter only breaks ties.  Genericity (all cells simplicial) is validated post
hoc and heights are redrawn on failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ._scan import PointTable, _adjugate_and_det
from .exactlin import IntVector, dot, rank
from .fan import (
    Fan,
    derive_polytope,
    is_projective,
    maximal_fan_points,
    validate_maximal_fan,
)
from .polytope import LatticePolytope, is_reflexive, lattice_points

_JITTER_BITS = 28
_JITTER_DEN = 1 << 50


class SearchBudgetExceeded(RuntimeError):
    """Backtracking node budget exhausted; carries the fans found so far."""

    def __init__(self, fans):
        super().__init__(f"search budget exhausted after finding {len(fans)} fan(s)")
        self.partial_fans = tuple(fans)


class SubdivisionError(RuntimeError):
    """No generic height assignment found within the retry budget."""


@dataclass(frozen=True)
class MaximalConeCandidate:
    """Four independent lattice points whose cone holds no further point of p."""

    generators: tuple[int, ...]
    empty: bool
    in_common_face: bool


def _point_table(p: LatticePolytope) -> PointTable:
    if not hasattr(p, "_scan_table_cache"):
        p._scan_table_cache = PointTable(maximal_fan_points(p))
    return p._scan_table_cache


def _reduce_against(echelon, v):
    """Fraction-free reduction of v by echelon rows; None if v is dependent."""
    row = list(v)
    for pivot_col, base in echelon:
        if row[pivot_col] != 0:
            a, b = base[pivot_col], row[pivot_col]
            row = [a * x - b * y for x, y in zip(row, base)]
    for c, x in enumerate(row):
        if x != 0:
            return c, tuple(row)
    return None


def empty_independent_subsets(table: PointTable, size: int):
    """Yield index tuples, in lexicographic order, of independent point subsets
    whose cone contains no other table point.

    Pruning is monotone: a dependent extension is skipped, and a subset whose
    cone already traps an extra point cannot become empty again.
    """
    n = len(table.points)

    def rec(start, chosen, echelon):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        remaining = size - len(chosen)
        for j in range(start, n - remaining + 1):
            red = _reduce_against(echelon, table.points[j])
            if red is None:
                continue
            chosen.append(j)
            if len(chosen) < 2 or table.cone_is_empty(chosen):
                echelon.append(red)
                yield from rec(j + 1, chosen, echelon)
                echelon.pop()
            chosen.pop()

    yield from rec(0, [], [])


def _carrier_masks(p: LatticePolytope, table: PointTable):
    masks = []
    for pt in table.points:
        mask = 0
        for fi, f in enumerate(p.facets):
            if dot(f.normal, pt) == f.offset:
                mask |= 1 << fi
        masks.append(mask)
    return masks


def enumerate_maximal_cones(p: LatticePolytope) -> list[MaximalConeCandidate]:
    """All 4-point candidates: independent, and empty in the sense that the
    cone meets the lattice points of p only in the origin and the generators.

    Indices refer to the canonical nonzero-lattice-point table of p.
    """
    if p.dim != 4:
        raise ValueError("candidate enumeration is defined for 4-polytopes")
    if not is_reflexive(p):
        raise ValueError("candidate enumeration needs a reflexive polytope")
    cached = getattr(p, "_maximal_cone_cache", None)
    if cached is not None:
        return list(cached)
    table = _point_table(p)
    masks = _carrier_masks(p, table)
    out = []
    for subset in empty_independent_subsets(table, 4):
        mask = masks[subset[0]]
        for i in subset[1:]:
            mask &= masks[i]
        out.append(MaximalConeCandidate(subset, True, mask != 0))
    p._maximal_cone_cache = tuple(out)
    return out


# ---------------------------------------------------------------------------
# regular subdivisions from heights


def _draw_heights(points, seed: int):
    rng = random.Random(seed)
    heights = {}
    for i, pt in enumerate(points):
        norm2 = sum(x * x for x in pt)
        jitter = rng.getrandbits(_JITTER_BITS)
        heights[i] = Fraction(norm2 * _JITTER_DEN + jitter, _JITTER_DEN)
    return heights


class _DegenerateHeights(Exception):
    pass


def _aug_kernel(rows, width):
    """Kernel vector of a full-rank (width-1) x width integer system, as the
    signed maximal minors; None when the rows are dependent."""
    from ._scan import fast_det

    k = []
    cols = range(width)
    for j in cols:
        minor = tuple(tuple(r[c] for c in cols if c != j) for r in rows)
        val = fast_det(minor)
        k.append(val if j % 2 == 0 else -val)
    if all(v == 0 for v in k):
        return None
    return k


def _lower_cells(points, subset, heights, dim):
    """Maximal cells of the regular subdivision of the cone over `subset`.

    `subset` indexes into `points`; heights are Fractions.  Each returned cell
    is a sorted index tuple of size `dim` whose supporting linear functional
    lies strictly below the lifted heights off the cell.  A tie with a point
    outside a supported cell signals non-generic heights.
    """
    from itertools import combinations
    from math import lcm

    sub = list(subset)
    den_lcm = 1
    for i in sub:
        den_lcm = lcm(den_lcm, heights[i].denominator)
    # lifted rows (p, h(p)); a cell's functional (alpha, -1) is proportional
    # to the signed-minor kernel of its four lifted rows
    aug = {i: points[i] + (int(heights[i] * den_lcm),) for i in sub}
    cells = []
    for cand in combinations(sub, dim):
        rows = tuple(aug[i] for i in cand)
        k = _aug_kernel(rows, dim + 1)
        if k is None or k[dim] == 0:
            continue  # lifted rows dependent, or the points themselves are
        if k[dim] > 0:
            k = [-v for v in k]
        cand_set = set(cand)
        above = False
        ties = []
        for q in sub:
            if q in cand_set:
                continue
            row = aug[q]
            s = sum(row[c] * k[c] for c in range(dim + 1))
            if s > 0:
                above = True
                break
            if s == 0:
                ties.append(q)
        if above:
            continue
        if ties:
            raise _DegenerateHeights(f"points {ties} tie with cell {cand}")
        cells.append(tuple(sorted(cand)))
    return cells


def _attach_projectivity_witness(fan: Fan, base, local):
    """Try K*base + local as a strictly convex witness for escalating K."""
    from .fan import _heights_strictly_convex

    for k_bits in (20, 30, 40, 60):
        scale = 1 << k_bits
        heights = {
            i: base[i] * scale + local[i] for i in range(len(fan.points))
        }
        if _heights_strictly_convex(fan, heights):
            fan._heights = heights
            fan.projective = True
            return True
    return False


def mpcp(p: LatticePolytope, seed: int = 0) -> Fan:
    """A projective maximal fan refining the face fan of p (an MPCP fan).

    Built facet by facet as the regular subdivision of the facet's lattice
    points under seeded generic heights; one global height function keeps the
    pieces coherent.  Heights are redrawn (up to 32 attempts) if a tie makes
    some cell non-simplicial or validation fails.
    """
    if not is_reflexive(p):
        raise ValueError("mpcp needs a reflexive polytope")
    if p.dim > 5:
        raise ValueError("mpcp supports dimension at most 5")
    points = maximal_fan_points(p)
    index = {pt: i for i, pt in enumerate(points)}
    facet_point_sets = []
    for f in p.facets:
        facet_point_sets.append(
            [index[pt] for pt in points if dot(f.normal, pt) == f.offset]
        )
    last_error = None
    for attempt in range(32):
        heights = _draw_heights(points, seed * 1000003 + attempt)
        try:
            cones = set()
            for fpts in facet_point_sets:
                for cell in _lower_cells(points, fpts, heights, p.dim):
                    cones.add(cell)
            fan = Fan(p.dim, points, sorted(cones))
            report = validate_maximal_fan(fan, p)
            if not report.verdict:
                last_error = f"validation: {report.violations[0].detail}"
                continue
            base = {i: Fraction(1) for i in range(len(points))}
            if not _attach_projectivity_witness(fan, base, heights):
                last_error = "no strictly convex witness"
                continue
            fan.simplicial = True
            fan.complete = True
            return fan
        except _DegenerateHeights as exc:
            last_error = str(exc)
            continue
    raise SubdivisionError(
        f"no generic heights after 32 attempts (last: {last_error})"
    )


# ---------------------------------------------------------------------------
# exhaustive enumeration of maximal fans


def _generic_direction(points, dim):
    """Deterministic rational direction avoiding every hyperplane spanned by
    point subsets (so strict cone membership is unambiguous)."""
    from itertools import combinations

    from .exactlin import kernel_basis

    normals = set()
    for subset in combinations(range(len(points)), dim - 1):
        vecs = tuple(points[i] for i in subset)
        cols = [tuple(v[c] for v in vecs) for c in range(dim)]
        ann = kernel_basis(cols)
        if len(ann) == 1:
            normals.add(ann[0])
    k = 1
    while True:
        x0 = tuple(k**j for j in range(dim))
        if all(dot(n, x0) != 0 for n in normals):
            return x0
        k += 1


def _strictly_contains(points, cone_idx, x0):
    gens = tuple(points[i] for i in cone_idx)
    adj, den = _adjugate_and_det(
        tuple(tuple(gens[j][c] for j in range(len(gens))) for c in range(len(x0)))
    )
    coeffs = [
        sum(adj[j][c] * x0[c] for c in range(len(x0))) for j in range(len(gens))
    ]
    if den < 0:
        coeffs = [-v for v in coeffs]
    return all(v > 0 for v in coeffs)


def enumerate_maximal_fans(p: LatticePolytope, limit: int = 1_000_000) -> list[Fan]:
    """Every complete simplicial fan on exactly the nonzero lattice points of p
    whose maximal cones are empty candidates, in canonical order.

    Backtracking over ridge matching: each chosen cone leaves open ridges that
    must be closed by exactly one opposite-side candidate.  `limit` bounds the
    number of expanded search nodes; SearchBudgetExceeded carries partial
    results.
    """
    if p.dim != 4:
        raise ValueError("fan enumeration is defined for 4-polytopes")
    candidates = [c.generators for c in enumerate_maximal_cones(p)]
    points = maximal_fan_points(p)
    dim = p.dim
    x0 = _generic_direction(points, dim)
    contains_x0 = [_strictly_contains(points, c, x0) for c in candidates]

    cand_ridges = []
    ridge_sides = []
    from .exactlin import kernel_basis

    normal_cache: dict[tuple[int, ...], IntVector | None] = {}
    for cand in candidates:
        ridges = []
        sides = []
        for i in range(dim):
            key = tuple(cand[j] for j in range(dim) if j != i)
            if key not in normal_cache:
                vecs = tuple(points[k] for k in key)
                cols = [tuple(v[c] for v in vecs) for c in range(dim)]
                ann = kernel_basis(cols)
                normal_cache[key] = ann[0] if len(ann) == 1 else None
            normal = normal_cache[key]
            s = dot(normal, points[cand[i]]) if normal else 0
            ridges.append(key)
            sides.append((s > 0) - (s < 0))
        cand_ridges.append(ridges)
        ridge_sides.append(sides)

    by_ridge: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for ci, (ridges, sides) in enumerate(zip(cand_ridges, ridge_sides)):
        for key, s in zip(ridges, sides):
            by_ridge.setdefault(key, []).append((ci, s))

    fans: list[Fan] = []
    nodes = 0

    def record(chosen):
        fan = Fan(dim, points, sorted(candidates[ci] for ci in chosen))
        report = validate_maximal_fan(fan, p)
        if report.verdict:
            fan.simplicial = True
            fan.complete = True
            is_projective(fan)
            fans.append(fan)

    def search(chosen, ridge_state):
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise SearchBudgetExceeded(_sorted_fans(fans))
        open_ridges = [key for key, entries in ridge_state.items()
                       if len(entries) == 1]
        if not open_ridges:
            record(chosen)
            return
        target = min(open_ridges)
        (_, need_side) = ridge_state[target][0]
        for ci, s in by_ridge.get(target, ()):
            if ci in chosen or s != -need_side:
                continue
            if contains_x0[ci]:
                continue
            ok = True
            for key, side in zip(cand_ridges[ci], ridge_sides[ci]):
                entries = ridge_state.get(key, ())
                if len(entries) >= 2 or any(s2 == side for _, s2 in entries):
                    ok = False
                    break
            if not ok:
                continue
            for key, side in zip(cand_ridges[ci], ridge_sides[ci]):
                ridge_state.setdefault(key, []).append((ci, side))
            chosen.add(ci)
            search(chosen, ridge_state)
            chosen.discard(ci)
            for key, _ in zip(cand_ridges[ci], ridge_sides[ci]):
                entries = ridge_state[key]
                entries.pop()
                if not entries:
                    del ridge_state[key]

    for root, cand in enumerate(candidates):
        if not contains_x0[root]:
            continue
        ridge_state: dict[tuple[int, ...], list[tuple[int, int]]] = {}
        for key, side in zip(cand_ridges[root], ridge_sides[root]):
            ridge_state.setdefault(key, []).append((root, side))
        search({root}, ridge_state)

    return _sorted_fans(fans)


def _sorted_fans(fans):
    return sorted(fans, key=lambda f: f.max_cones)


# ---------------------------------------------------------------------------
# refinement across nested reflexive polytopes


def refine_to(fan1: Fan, p2: LatticePolytope, seed: int = 0) -> Fan:
    """A maximal fan for p2 refining fan1 (a projective maximal fan for the
    polytope spanned by its own rays).

    Heights are a large multiple of fan1's strictly convex support function
    plus the generic paraboloid term, so each cell stays inside one cone of
    fan1; the result is validated against p2, checked for refinement, and
    carries a verified projectivity witness.
    """
    p1 = derive_polytope(fan1)
    if not is_reflexive(p1):
        raise ValueError("refinement source rays do not span a reflexive polytope")
    if not is_reflexive(p2):
        raise ValueError("refinement target polytope is not reflexive")
    for v in p1.vertices:
        if not p2.contains(v):
            raise ValueError(f"vertex {v} of the source polytope lies outside the target")
    report = validate_maximal_fan(fan1, p1)
    if not report.verdict:
        raise ValueError(f"source fan invalid: {report.violations[0].detail}")
    if not is_projective(fan1):
        raise ValueError("source fan is not projective")
    base1 = fan1._heights

    points = maximal_fan_points(p2)
    table = PointTable(points)
    dim = p2.dim

    # evaluate fan1's support function at every target point
    cone_data = []
    for cone in fan1.max_cones:
        gens = fan1.cone_vectors(cone)
        matrix = tuple(tuple(gens[j][c] for j in range(dim)) for c in range(dim))
        adj, den = _adjugate_and_det(matrix)
        hvals = [base1[i] for i in cone]
        cone_data.append((adj, den, hvals))
    base = {}
    for i, pt in enumerate(points):
        best = None
        for adj, den, hvals in cone_data:
            coeffs = [
                Fraction(sum(adj[j][c] * pt[c] for c in range(dim)), den)
                for j in range(dim)
            ]
            val = sum(c * h for c, h in zip(coeffs, hvals))
            best = val if best is None else max(best, val)
        base[i] = best
    # integerize the support function so its wall bends are integers >= 1
    from math import lcm

    base_den = 1
    for v in base.values():
        base_den = lcm(base_den, v.denominator)
    base_int = {i: int(v * base_den) for i, v in base.items()}

    members = []
    for cone in fan1.max_cones:
        gens = [fan1.points[i] for i in cone]
        members.append(table.contained_indices(gens))

    last_error = None
    for attempt in range(32):
        local = _draw_heights(points, seed * 7368787 + attempt)
        for k_bits in (20, 32, 48):
            # lexicographic structure: support-function term >> constant
            # radial term >> paraboloid-plus-jitter term.  The support term is
            # homogeneous-convex (it never fights extremality) and its strict
            # wall bends dominate any reflex bend of the radial term; the
            # radial term keeps every lifted point extreme among conic
            # combinations of total weight above one; the paraboloid settles
            # equal-weight ties inside a cone.
            scale = 1 << k_bits
            heights = {
                i: (Fraction(base_int[i]) * scale + 1) * scale + local[i]
                for i in range(len(points))
            }
            try:
                cones = set()
                for subset in members:
                    for cell in _lower_cells(points, subset, heights, dim):
                        cones.add(cell)
            except _DegenerateHeights as exc:
                last_error = str(exc)
                continue
            fan2 = Fan(dim, points, sorted(cones))
            if not _refines(fan2, fan1):
                last_error = "output does not refine the source fan"
                continue
            report2 = validate_maximal_fan(fan2, p2)
            if not report2.verdict:
                last_error = f"validation: {report2.violations[0].detail}"
                continue
            from .fan import _heights_strictly_convex

            if not _heights_strictly_convex(fan2, heights):
                last_error = "construction heights are not a strict witness"
                continue
            fan2._heights = dict(heights)
            fan2.projective = True
            fan2.simplicial = True
            fan2.complete = True
            return fan2
    raise SubdivisionError(
        f"no usable heights after 32 attempts (last: {last_error})"
    )


def _refines(fine: Fan, coarse: Fan) -> bool:
    """Every maximal cone of `fine` is contained in some cone of `coarse`.

    Coarse cones are full-dimensional, so containment reduces to sign checks
    against their inward facet normals.
    """
    from .fan import _cone_facet_data

    hreps = []
    for cc in coarse.max_cones:
        gens = coarse.cone_vectors(cc)
        hreps.append([normal for _, normal in _cone_facet_data(gens, coarse.dim)])
    for cone in fine.max_cones:
        gens = fine.cone_vectors(cone)
        if not any(
            all(all(dot(n, g) >= 0 for n in hrep) for g in gens) for hrep in hreps
        ):
            return False
    return True
