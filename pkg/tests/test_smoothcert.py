from itertools import permutations

import pytest

from reflexfan import fan as fn
from reflexfan import polytope as pt
from reflexfan import smoothcert as sc
from reflexfan import triangulate as tri
from reflexfan.exactlin import det, dot

from conftest import C1, C2, UNIT, cone_indices

E1, E2, E3, E4 = UNIT


def test_is_good_cone_common_facet(cross):
    # generators inside one facet pair to 4 against its normal
    res = sc.is_good_cone([E1, E2, E3, E4], cross)
    assert res.multiplicity == 4
    assert res.verdict == sc.GOOD


def test_is_good_cone_worked_cones(seven):
    res1 = sc.is_good_cone(C1, seven)
    assert res1.sum_vector == (1, 1, 1, -1)
    assert res1.multiplicity == 3
    assert res1.verdict == sc.GOOD
    res2 = sc.is_good_cone(C2, seven)
    assert res2.sum_vector == (2, 2, 2, 1)
    assert res2.multiplicity == 3
    assert res2.verdict == sc.GOOD


def test_is_good_cone_rejects_dependent(cross):
    with pytest.raises(ValueError):
        sc.is_good_cone([E1, E2, E3, (1, 1, 0, 0)], cross)


def test_has_good_maximal_cones_cross(cross):
    ok, results = sc.has_good_maximal_cones(cross)
    assert ok
    assert len(results) == 16
    assert all(r.multiplicity == 4 for r in results)


def test_has_good_maximal_cones_seven(seven):
    ok, results = sc.has_good_maximal_cones(seven)
    assert ok
    assert all(r.verdict == sc.GOOD for r in results)


def test_chart_exponents_examples():
    assert sc.chart_exponents([E1, E2, E3, E4], (0, 0, 0, 0)).exponents == (1, 1, 1, 1)
    assert sc.chart_exponents([E1, E2, E3, E4], (-1, 0, 0, 0)).exponents == (0, 1, 1, 1)
    assert sc.chart_exponents([E1, E2, E3, (1, 1, 1, 1)], (0, 0, 0, 0)).exponents == (1, 1, 1, 1)


def test_chart_exponents_rejects_non_unimodular():
    with pytest.raises(ValueError):
        sc.chart_exponents([E1, E2, E3, (1, 1, 1, 2)], (0, 0, 0, 0))


def test_chart_exponents_rejects_outside_dual():
    with pytest.raises(ValueError) as err:
        sc.chart_exponents([E1, E2, E3, E4], (-2, 0, 0, 0))
    assert "generator 0" in str(err.value)


def test_chart_exponents_consistency(cross):
    dual_pts = pt.lattice_points(pt.dual(cross))
    gens = [E1, E2, E3, E4]
    all_ones = 0
    for m in dual_pts:
        exps = sc.chart_exponents(gens, m).exponents
        assert all(e >= 0 for e in exps)
        if exps == (1, 1, 1, 1):
            all_ones += 1
            assert m == (0, 0, 0, 0)
    assert all_ones == 1


def _seven_fans(seven):
    fans = tri.enumerate_maximal_fans(seven)
    by_size = {len(f.max_cones): f for f in fans}
    return by_size[12], by_size[11]


def test_certificate_orthant_fan(cross):
    fan = tri.mpcp(cross, 0)
    cert = sc.smoothness_certificate(fan, cross)
    assert cert.overall == "smooth"
    assert all(e.label == sc.MISSED_BY_GENERIC for e in cert.entries)


def test_certificate_sigma_delta(seven):
    sigma_delta, _ = _seven_fans(seven)
    cert = sc.smoothness_certificate(sigma_delta, seven)
    assert cert.overall == "smooth"
    assert all(e.label == sc.MISSED_BY_GENERIC for e in cert.entries)
    assert len(cert.entries) == 12


def test_certificate_sigma_bl(seven):
    _, sigma_bl = _seven_fans(seven)
    pts = fn.maximal_fan_points(seven)
    cert = sc.smoothness_certificate(sigma_bl, seven)
    assert cert.overall == "smooth"
    special = {e.cone: e for e in cert.entries if e.label == sc.LINEAR_TERM}
    assert set(special) == {cone_indices(pts, C1), cone_indices(pts, C2)}
    dual_pts = set(pt.lattice_points(pt.dual(seven)))
    for e in special.values():
        m = e.witness
        assert m in dual_pts
        gens = [pts[i] for i in e.cone]
        exps = sc.chart_exponents(gens, m).exponents
        assert sorted(exps) == [0, 0, 0, 1]
        # the set not contained in a proper face: the linear term is needed
        assert pt.smallest_face_containing(gens, seven) is None
    others = [e for e in cert.entries if e.label == sc.MISSED_BY_GENERIC]
    assert len(others) == 9


def test_certificate_rejects_invalid_fan(seven):
    sigma_delta, _ = _seven_fans(seven)
    broken = fn.Fan(4, sigma_delta.points, sigma_delta.max_cones[:-1])
    with pytest.raises(ValueError):
        sc.smoothness_certificate(broken, seven)


def test_edges_of_valid_fans_lie_in_faces(cross, seven):
    for p in (cross, seven):
        for fan in tri.enumerate_maximal_fans(p):
            for cone in fn.skeleton(fan, 2):
                if len(cone.generators) == 2:
                    assert pt.smallest_face_containing(cone.generators, p) is not None


def test_three_cones_off_facets_have_dual_vertex_pattern(seven):
    _, sigma_bl = _seven_fans(seven)
    d = pt.dual(seven)
    dual_verts = d.vertices
    dual_pts = pt.lattice_points(d)
    for cone in fn.skeleton(sigma_bl, 3):
        gens = cone.generators
        if len(gens) != 3:
            continue
        carriers = set(seven.carrier_facets(gens[0]))
        for g in gens[1:]:
            carriers &= set(seven.carrier_facets(g))
        if carriers:
            continue
        # part 1: some dual vertex pairs (-1,-1,0) in some order
        patterns = [
            tuple(sorted(dot(m, g) for g in gens)) for m in dual_verts
        ]
        assert (-1, -1, 0) in patterns
        # part 2: for each assignment, at most one dual lattice point fits
        for perm in permutations(range(3)):
            hits = [
                m for m in dual_pts
                if dot(m, gens[perm[0]]) == -1
                and dot(m, gens[perm[1]]) == -1
                and dot(m, gens[perm[2]]) == 0
            ]
            assert len(hits) <= 1


def test_remark_witness_p5_dual():
    p5dual = pt.hull(
        [(-1,) * 5] + sorted(set(permutations((5, -1, -1, -1, -1))))
    )
    cone = sc.remark_witness(p5dual)
    assert cone is not None
    gens = cone.generators
    # independent recomputation: non-unimodular determinant
    assert abs(det(gens)) >= 2
    # emptiness via direct membership over all lattice points
    origin = (0,) * 5
    inside = [
        x for x in pt.lattice_points(p5dual)
        if x != origin and fn.cone_contains(gens, x)
    ]
    assert sorted(inside) == sorted(gens)
    # not contained in any facet cone: no facet pairs to 1 with every gen
    for f in p5dual.facets:
        assert not all(dot(f.normal, g) == f.offset for g in gens)


def test_remark_witness_none_in_dim4(cross):
    assert sc.remark_witness(cross) is None


def test_remark_witness_rejects_other_dims():
    from itertools import product

    small = pt.hull(list(product((-1, 1), repeat=3)))
    with pytest.raises(ValueError):
        sc.remark_witness(small)
