"""Goodness of empty full cones and smoothness certificates for generic
anticanonical hypersurfaces.

A 4-cone of lattice points with no extra polytope point is "good" when its
generator sum lies in 3 or 4 times the polytope boundary.  Good cones whose
generators avoid a common facet contribute a linear term to the local chart
equation (witnessed by a dual lattice point with unit exponent vector), which
rules out a singular point there; cones inside a common facet are missed by
generic members entirely.  A certificate classifies every maximal cone of a
fan accordingly; remaining cones are reported as undecided, never waved
through.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .exactlin import IntVector, as_matrix, dot, rank, vec_sum
from .fan import Cone, Fan, is_unimodular, validate_maximal_fan
from .polytope import (
    LatticePolytope,
    boundary_multiplicity,
    dual,
    is_reflexive,
    lattice_points,
)

GOOD = "good"
BAD = "bad"

MISSED_BY_GENERIC = "MISSED_BY_GENERIC"
LINEAR_TERM = "LINEAR_TERM"
UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class GoodnessResult:
    generators: tuple[IntVector, ...]
    sum_vector: IntVector
    multiplicity: int
    verdict: str


def is_good_cone(generators, p: LatticePolytope) -> GoodnessResult:
    """Classify four independent lattice points of p by the boundary
    multiplicity of their sum (good means 3 or 4)."""
    gens = as_matrix(generators)
    if rank(gens) != len(gens):
        raise ValueError("goodness needs linearly independent generators")
    for g in gens:
        if not p.contains(g):
            raise ValueError(f"generator {g} is not a point of the polytope")
    s = vec_sum(gens)
    r = boundary_multiplicity(s, p)
    return GoodnessResult(gens, s, r, GOOD if r in (3, 4) else BAD)


def has_good_maximal_cones(p: LatticePolytope):
    """Run the goodness test over every empty-cone candidate of p.

    Returns (all_good, results) with one GoodnessResult per candidate, in
    candidate order, for audit.
    """
    from .triangulate import enumerate_maximal_cones

    from .fan import maximal_fan_points

    points = maximal_fan_points(p)
    results = []
    all_good = True
    for cand in enumerate_maximal_cones(p):
        gens = tuple(points[i] for i in cand.generators)
        res = is_good_cone(gens, p)
        results.append(res)
        if res.verdict != GOOD:
            all_good = False
    return all_good, results


@dataclass(frozen=True)
class ChartExponents:
    generators: tuple[IntVector, ...]
    dual_point: IntVector
    exponents: tuple[int, ...]


def chart_exponents(cone, m) -> ChartExponents:
    """Exponent vector of the anticanonical monomial of m on the chart of a
    unimodular full cone: one plus the pairing with each generator."""
    gens = cone.generators if isinstance(cone, Cone) else as_matrix(cone)
    m = tuple(m)
    dim = len(gens[0])
    if len(gens) != dim or rank(gens) != dim:
        raise ValueError("chart needs a full-dimensional simplicial cone")
    if not is_unimodular(gens):
        raise ValueError("chart exponents are defined for unimodular cones")
    exponents = []
    for i, g in enumerate(gens):
        c = 1 + dot(m, g)
        if c < 0:
            raise ValueError(
                f"dual point {m} pairs to {c - 1} with generator {i}; "
                "it lies outside the dual polytope"
            )
        exponents.append(c)
    return ChartExponents(tuple(gens), m, tuple(exponents))


@dataclass(frozen=True)
class ConeClass:
    cone: tuple[int, ...]
    label: str
    sum_vector: IntVector
    multiplicity: int
    witness: IntVector | None


@dataclass(frozen=True)
class SmoothnessCertificate:
    fan_id: str
    entries: tuple[ConeClass, ...]
    overall: str  # "smooth" | "undecided"


def fan_digest(fan: Fan) -> str:
    payload = json.dumps(
        {"dim": fan.dim, "points": fan.points, "max_cones": fan.max_cones},
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def smoothness_certificate(fan: Fan, p: LatticePolytope) -> SmoothnessCertificate:
    """Per-cone smoothness classification for the generic anticanonical family.

    Cones whose generators sit in a common facet are missed by generic
    members; otherwise a good cone yields a linear chart term, recorded with
    the witnessing dual lattice point whose exponent vector is a unit vector.
    Any other cone is UNDECIDED and makes the overall verdict "undecided".
    """
    report = validate_maximal_fan(fan, p)
    if not report.verdict:
        raise ValueError(
            f"certificate requires a valid maximal fan: {report.violations[0].detail}"
        )
    dual_points = lattice_points(dual(p))
    entries = []
    undecided = False
    for cone in fan.max_cones:
        gens = fan.cone_vectors(cone)
        s = vec_sum(gens)
        r = boundary_multiplicity(s, p)
        carriers = set(p.carrier_facets(gens[0]))
        for g in gens[1:]:
            carriers &= set(p.carrier_facets(g))
        if carriers:
            entries.append(ConeClass(cone, MISSED_BY_GENERIC, s, r, None))
            continue
        if r == 3:
            witness = _linear_term_witness(gens, dual_points)
            if witness is not None:
                entries.append(ConeClass(cone, LINEAR_TERM, s, r, witness))
                continue
        entries.append(ConeClass(cone, UNDECIDED, s, r, None))
        undecided = True
    return SmoothnessCertificate(
        fan_digest(fan),
        tuple(entries),
        "undecided" if undecided else "smooth",
    )


def _linear_term_witness(gens, dual_points):
    """First dual lattice point whose chart exponent vector is a unit vector."""
    for m in dual_points:
        pairings = [dot(m, g) for g in gens]
        exps = [1 + v for v in pairings]
        if min(exps) < 0:
            continue
        if sum(exps) == 1 and max(exps) == 1:
            return m
    return None


def remark_witness(p: LatticePolytope):
    """Search for an empty, independent, non-unimodular d-cone of lattice
    points not contained in any facet cone; None when none exists.

    Lexicographic depth-first search with monotone emptiness pruning; the
    first witness in canonical generator order is returned as a Cone.
    """
    if p.dim not in (4, 5):
        raise ValueError("witness search supports dimensions 4 and 5")
    if not is_reflexive(p):
        raise ValueError("witness search needs a reflexive polytope")
    from .triangulate import _carrier_masks, _point_table, empty_independent_subsets

    table = _point_table(p)
    masks = _carrier_masks(p, table)
    for subset in empty_independent_subsets(table, p.dim):
        mask = masks[subset[0]]
        for i in subset[1:]:
            mask &= masks[i]
        if mask != 0:
            continue  # contained in a facet cone of the face fan
        gens = tuple(table.points[i] for i in subset)
        if not is_unimodular(gens):
            return Cone(gens)
    return None
