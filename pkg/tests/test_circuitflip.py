import pytest

from reflexfan import circuitflip as cf
from reflexfan import fan as fn
from reflexfan import smoothcert as sc
from reflexfan import triangulate as tri
from reflexfan.exactlin import complete_to_basis, dot, dual_basis, vec_sum

from conftest import C1, C2, C5, C6, C7, UNIT, cone_indices

E1, E2, E3, E4 = UNIT


def test_circuit_forced_dependence():
    c = cf.circuit_of([E1, E2, E3, E4, (1, 1, 1, 1)])
    assert set(c.w_plus) == {E1, E2, E3, E4}
    assert c.w_minus == ((1, 1, 1, 1),)
    assert c.w_zero == ()
    assert sorted(c.coeffs) == [-1, 1, 1, 1, 1]


def test_circuit_of_the_worked_wall():
    c = cf.circuit_of([E1, E2, E3, (0, 0, 0, -1), (1, 1, 1, 1)])
    assert set(c.w_plus) == {E1, E2, E3}
    assert set(c.w_minus) == {(0, 0, 0, -1), (1, 1, 1, 1)}
    assert c.w_zero == ()
    # e1 + e2 + e3 = (1,1,1,1) + (0,0,0,-1) exactly
    assert vec_sum(c.w_plus) == vec_sum(c.w_minus)


def test_circuit_square_with_slack_point():
    c = cf.circuit_of([E1, E2, E3, (1, 1, -1, 0), E4])
    assert c.w_zero == (E4,)
    assert len(c.w_plus) == 2 and len(c.w_minus) == 2
    # orientation: the lexicographically smallest member with a nonzero
    # coefficient lands in W+
    nonzero = [p for p, b in zip(c.support, c.coeffs) if b != 0]
    assert min(nonzero) in c.w_plus


def test_circuit_rejects_non_spanning():
    with pytest.raises(ValueError):
        cf.circuit_of([E1, E2, E3, (1, 1, 0, 0), (0, 1, 1, 0)])


def test_circuit_dependence_is_exact():
    c = cf.circuit_of([(2, 1, 0, 0), (1, 2, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
                       (3, 3, 1, 1)])
    for col in range(4):
        assert sum(b * p[col] for b, p in zip(c.coeffs, c.support)) == 0


def test_circuit_fans_of_worked_wall():
    c = cf.circuit_of([E1, E2, E3, (0, 0, 0, -1), (1, 1, 1, 1)])
    plus, minus = cf.circuit_fans(c)
    plus_sets = {p.generators for p in plus}
    minus_sets = {p.generators for p in minus}
    assert plus_sets == {
        tuple(sorted(C1)), tuple(sorted(C2))
    }
    assert minus_sets == {
        tuple(sorted(C5)), tuple(sorted(C6)), tuple(sorted(C7))
    }


def test_circuit_fans_square():
    c = cf.circuit_of([E1, E2, E3, (1, 1, -1, 0), E4])
    plus, minus = cf.circuit_fans(c)
    assert len(plus) == 2 and len(minus) == 2


def test_circuit_fans_point_in_simplex():
    c = cf.circuit_of([E1, E2, E3, E4, (1, 1, 1, 1)])
    plus, minus = cf.circuit_fans(c)
    assert len(plus) == 1  # the whole simplex
    assert len(minus) == 4  # the star of the interior point


def test_circuit_fans_reject_non_pointed():
    c = cf.circuit_of([E1, E2, E3, E4, (-1, -1, -1, -1)])
    with pytest.raises(ValueError):
        cf.circuit_fans(c)


def _seven_fans(seven):
    fans = tri.enumerate_maximal_fans(seven)
    by_size = {len(f.max_cones): f for f in fans}
    return by_size[12], by_size[11]


def test_find_flips_on_worked_example(seven):
    sigma_delta, sigma_bl = _seven_fans(seven)
    pts = fn.maximal_fan_points(seven)
    flips = cf.find_flips(sigma_delta, seven)
    assert len(flips) == 1
    move = flips[0]
    assert set(move.removed) == {
        cone_indices(pts, C5), cone_indices(pts, C6), cone_indices(pts, C7)
    }
    assert set(move.added) == {cone_indices(pts, C1), cone_indices(pts, C2)}
    assert cf.flip(sigma_delta, move, seven) == sigma_bl

    back = cf.find_flips(sigma_bl, seven)
    assert len(back) == 1
    assert cf.flip(sigma_bl, back[0], seven) == sigma_delta


def test_flip_involution(seven):
    sigma_delta, _ = _seven_fans(seven)
    move = cf.find_flips(sigma_delta, seven)[0]
    once = cf.flip(sigma_delta, move, seven)
    again = cf.flip(once, move.reversed(), seven)
    assert again == sigma_delta
    assert again.max_cones == sigma_delta.max_cones
    assert again.points == sigma_delta.points


def test_stale_move_rejected(seven):
    sigma_delta, sigma_bl = _seven_fans(seven)
    move = cf.find_flips(sigma_delta, seven)[0]
    with pytest.raises(ValueError):
        cf.flip(sigma_bl, move, seven)


def test_no_flips_on_rigid_fans(cross, p4_simplex, square_sum):
    for p in (cross, p4_simplex, square_sum):
        for fan in tri.enumerate_maximal_fans(p):
            assert cf.find_flips(fan, p) == []


def test_discovered_flips_have_two_sided_circuits(seven):
    sigma_delta, sigma_bl = _seven_fans(seven)
    for fan in (sigma_delta, sigma_bl):
        for move in cf.find_flips(fan, seven):
            n_plus = sum(1 for b in move.coeffs if b > 0)
            n_minus = sum(1 for b in move.coeffs if b < 0)
            assert n_plus >= 2 and n_minus >= 2


def test_goodness_preserved_across_flips(seven):
    sigma_delta, sigma_bl = _seven_fans(seven)
    for fan in (sigma_delta, sigma_bl):
        for move in cf.find_flips(fan, seven):
            target = cf.flip(fan, move, seven)
            src_good = _all_cones_good(fan, seven)
            dst_good = _all_cones_good(target, seven)
            assert src_good == dst_good


def _all_cones_good(fan, p):
    for cone in fan.max_cones:
        gens = fan.cone_vectors(cone)
        if sc.is_good_cone(gens, p).verdict != sc.GOOD:
            return False
    return True


def square_circuit_normal_form(fan, move):
    """Verify the unimodular normal form of a 4-element flip circuit.

    Returns the images of the circuit members under the dual-basis map of a
    basis extending an adjacent unimodular 3-cone (w1, w2 from W+ and w3 from
    W-); the expected images are e1, e2, e3 and e1 + e2 - e3.
    """
    support = [fan.points[i] for i in move.support]
    coeffs = move.coeffs
    w_plus = [p for p, b in zip(support, coeffs) if b > 0]
    w_minus = [p for p, b in zip(support, coeffs) if b < 0]
    assert len(w_plus) == 2 and len(w_minus) == 2
    assert sorted(abs(b) for b in coeffs if b != 0) == [1, 1, 1, 1]
    w1, w2 = w_plus
    w3, w4 = w_minus
    basis = None
    for cone_idx in move.removed + move.added:
        gens = [fan.points[i] for i in cone_idx]
        if all(w in gens for w in (w1, w2, w3)) and fn.is_unimodular(gens):
            others = [g for g in gens if g not in (w1, w2, w3)]
            basis = [w1, w2, w3] + others
            break
    if basis is None:
        basis = complete_to_basis([w1, w2, w3])
    dual = dual_basis(basis)
    image = lambda x: tuple(dot(d, x) for d in dual)
    assert image(w1) == (1, 0, 0, 0)
    assert image(w2) == (0, 1, 0, 0)
    assert image(w3) == (0, 0, 1, 0)
    assert image(w4) == (1, 1, -1, 0)
    return True
