"""Oriented circuits, their two local fans, and wall-crossing flips.

A flip replaces the cells of one side of a circuit (joined with the circuit's
link in the fan) by the cells of the other side, realizing the wall crossing
between two maximal fans without building the secondary fan itself.  Flip
discovery is anchored at fan walls: any applicable move has at least two
removed cells sharing a ridge, and that ridge together with the two opposite
generators spans the move's circuit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import IntVector, as_matrix, kernel_basis, rank
from .fan import Cone, Fan, _fan_ridges, derive_polytope, validate_maximal_fan


@dataclass(frozen=True)
class OrientedCircuit:
    """Spanning point set with its (unique up to sign) integer dependence.

    support is lex-sorted; coeffs are aligned with support, primitive, and
    oriented so that |W+| >= |W-|, ties broken by putting the lexicographically
    smallest point carrying a nonzero coefficient into W+.
    """

    support: tuple[IntVector, ...]
    coeffs: tuple[int, ...]

    @property
    def w_plus(self) -> tuple[IntVector, ...]:
        return tuple(p for p, b in zip(self.support, self.coeffs) if b > 0)

    @property
    def w_zero(self) -> tuple[IntVector, ...]:
        return tuple(p for p, b in zip(self.support, self.coeffs) if b == 0)

    @property
    def w_minus(self) -> tuple[IntVector, ...]:
        return tuple(p for p, b in zip(self.support, self.coeffs) if b < 0)

    def reversed(self) -> "OrientedCircuit":
        return OrientedCircuit(self.support, tuple(-b for b in self.coeffs))


def circuit_of(points) -> OrientedCircuit:
    """Oriented circuit of d+1 points spanning the ambient space."""
    pts = as_matrix(points)
    dim = len(pts[0])
    if len(pts) != dim + 1:
        raise ValueError(f"need {dim + 1} points, got {len(pts)}")
    if rank(pts) != dim:
        raise ValueError("points do not span the ambient space")
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    pts = tuple(pts[i] for i in order)
    kernel = kernel_basis(pts)
    assert len(kernel) == 1
    coeffs = kernel[0]
    n_plus = sum(1 for b in coeffs if b > 0)
    n_minus = sum(1 for b in coeffs if b < 0)
    flip_sign = n_plus < n_minus
    if n_plus == n_minus:
        lead = next(b for b in coeffs if b != 0)
        flip_sign = lead < 0
    if flip_sign:
        coeffs = tuple(-b for b in coeffs)
    # exactness of the dependence
    assert all(
        sum(b * p[c] for b, p in zip(coeffs, pts)) == 0 for c in range(dim)
    )
    return OrientedCircuit(pts, coeffs)


def circuit_fans(circuit: OrientedCircuit) -> tuple[list[Cone], list[Cone]]:
    """The two local simplicial fans of the circuit, as lists of maximal cones.

    The plus fan drops one W- member per cone, the minus fan one W+ member;
    both are verified simplicial with support the full cone over the support
    (internal ridges matched, boundary ridges supported).
    """
    from . import _lp

    support = circuit.support
    dim = len(support[0])
    gens_aug = [p + (1,) for p in support]
    target = (0,) * dim + (1,)
    if _lp.feasible_nonneg_combination(gens_aug, target) is not None:
        raise ValueError("support cone is not pointed")
    plus = [
        Cone(tuple(p for p in support if p != w)) for w in circuit.w_minus
    ]
    minus = [
        Cone(tuple(p for p in support if p != w)) for w in circuit.w_plus
    ]
    for side in (plus, minus):
        for cone in side:
            if rank(cone.generators) != len(cone.generators):
                raise AssertionError("local fan cell is not simplicial")
        _check_local_fan(side, support, dim)
    return plus, minus


def _check_local_fan(cells, support, dim):
    """Ridge-match the cells inside the cone over `support`."""
    from .exactlin import dot
    from .fan import _annihilator

    ridge_count: dict[tuple[IntVector, ...], int] = {}
    for cone in cells:
        for i in range(len(cone.generators)):
            ridge = tuple(g for j, g in enumerate(cone.generators) if j != i)
            ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
    for ridge, count in ridge_count.items():
        if count == 2:
            continue
        if count != 1:
            raise AssertionError(f"ridge {ridge} in {count} cells")
        anns = _annihilator(ridge, dim)
        boundary = any(
            all(dot(n, p) >= 0 for p in support)
            or all(dot(n, p) <= 0 for p in support)
            for n in anns
        )
        if len(anns) == 1 and not boundary:
            raise AssertionError(f"unmatched interior ridge {ridge}")


@dataclass(frozen=True)
class FlipMove:
    """A wall crossing on a specific fan: replace `removed` cones by `added`.

    Cones and circuit support are index tuples into the fan's point table;
    wall_cones lists the affected non-simplicial wall cones (circuit support
    joined with each link)."""

    support: tuple[int, ...]
    coeffs: tuple[int, ...]
    removed: tuple[tuple[int, ...], ...]
    added: tuple[tuple[int, ...], ...]
    wall_cones: tuple[tuple[int, ...], ...]

    def reversed(self) -> "FlipMove":
        return FlipMove(
            self.support,
            tuple(-b for b in self.coeffs),
            self.added,
            self.removed,
            self.wall_cones,
        )


def find_flips(fan: Fan, p=None) -> list[FlipMove]:
    """All flips available on a validated maximal fan.

    A candidate circuit is anchored at each wall (the ridge's two opposite
    generators carry like-signed coefficients); the move removes every cell of
    the anchored side joined with the circuit's common link and is kept only
    when both sides of the circuit have at least two members, so the ray set
    is preserved.  Moves are returned in canonical order.
    """
    ridges, _ = _fan_ridges(fan)
    cone_set = set(fan.max_cones)
    moves: dict = {}
    for key, incidences in sorted(ridges.items()):
        if len(incidences) != 2:
            continue
        (c1, _), (c2, _) = incidences
        cone1, cone2 = fan.max_cones[c1], fan.max_cones[c2]
        g1 = next(i for i in cone1 if i not in key)
        g2 = next(i for i in cone2 if i not in key)
        support_idx = tuple(sorted(set(key) | {g1, g2}))
        vectors = [fan.points[i] for i in support_idx]
        if rank(tuple(vectors)) != fan.dim:
            continue
        circ = circuit_of(vectors)
        # fan.points is lex-sorted, so sorted indices align with circ.support
        sign_by_idx = dict(zip(support_idx, (
            (b > 0) - (b < 0) for b in circ.coeffs
        )))
        s1, s2 = sign_by_idx[g1], sign_by_idx[g2]
        if s1 == 0 or s1 != s2:
            continue
        plus_idx = [i for i in support_idx if sign_by_idx[i] > 0]
        minus_idx = [i for i in support_idx if sign_by_idx[i] < 0]
        if len(plus_idx) < 2 or len(minus_idx) < 2:
            continue
        removed_class = plus_idx if s1 > 0 else minus_idx
        added_class = minus_idx if s1 > 0 else plus_idx
        z_set = set(plus_idx) | set(minus_idx)
        links = None
        for w in removed_class:
            needed = z_set - {w}
            found = {
                tuple(sorted(set(c) - needed))
                for c in fan.max_cones
                if needed <= set(c)
            }
            if links is None:
                links = found
            elif links != found:
                links = None
                break
        if not links:
            continue
        removed = tuple(sorted(
            tuple(sorted((z_set - {w}) | set(lam)))
            for w in removed_class
            for lam in links
        ))
        added = tuple(sorted(
            tuple(sorted((z_set - {w}) | set(lam)))
            for w in added_class
            for lam in links
        ))
        if any(c not in cone_set for c in removed):
            continue
        if any(c in cone_set for c in added):
            continue
        if any(
            rank(tuple(fan.points[i] for i in c)) != fan.dim for c in added
        ):
            continue
        coeffs = circ.coeffs if s1 > 0 else tuple(-b for b in circ.coeffs)
        wall_cones = tuple(sorted(
            tuple(sorted(z_set | set(lam))) for lam in links
        ))
        move = FlipMove(support_idx, coeffs, removed, added, wall_cones)
        moves[(removed, added)] = move
    return [moves[k] for k in sorted(moves)]


def flip(fan: Fan, move: FlipMove, polytope=None, validate: bool = True) -> Fan:
    """Apply a flip move, returning the new fan (canonical form).

    The move must have been discovered on `fan` (all removed cones present,
    no added cone present); the result is validated as a maximal fan against
    `polytope` (derived from the ray points when not given).
    """
    cone_set = set(fan.max_cones)
    if not set(move.removed) <= cone_set:
        raise ValueError("move does not apply: removed cones are absent")
    if set(move.added) & cone_set:
        raise ValueError("move does not apply: added cones already present")
    new_cones = (cone_set - set(move.removed)) | set(move.added)
    result = Fan(fan.dim, fan.points, sorted(new_cones))
    if validate:
        p = polytope if polytope is not None else derive_polytope(fan)
        report = validate_maximal_fan(result, p)
        if not report.verdict:
            raise ValueError(
                f"flip result is not a maximal fan: {report.violations[0].detail}"
            )
        result.simplicial = True
        result.complete = True
    return result
