import itertools
from fractions import Fraction

import pytest

import toricgeom as tg
from toricgeom.cohomology import _gamma_dims
from toricgeom.errors import UnsupportedInputError
from toricgeom.polyring import Grading, graded_component_basis


def hvec(v, coords):
    d = v.divisor_class(coords)
    return tuple(tg.cohomology_dim(v, d, i) for i in range(v.dim + 1))


# ---------------------------------------------------------------------------
# the oracle


def test_cohomology_p1xp1_examples(fan_corpus):
    X = fan_corpus["P1xP1"]
    assert tg.cohomology_dim(X, X.divisor_class([0, 0]), 0) == 1
    assert tg.cohomology_dim(X, X.divisor_class([1, 1]), 0) == 4
    assert hvec(X, [-2, -2]) == (0, 0, 1)


def test_cohomology_h0_is_monomial_count(fan_corpus):
    X = fan_corpus["P1xP1"]
    ring = X.cox_ring()
    grading = X.grading()
    for a in range(0, 4):
        for b in range(0, 4):
            count = len(graded_component_basis(ring, grading, (a, b)))
            assert count == (a + 1) * (b + 1)
            assert tg.cohomology_dim(X, X.divisor_class([a, b]), 0) == count


def test_cohomology_p1_line_bundles(fan_corpus):
    P1 = fan_corpus["P1"]
    for k in range(-5, 5):
        d = P1.divisor_class([k])
        assert tg.cohomology_dim(P1, d, 0) == max(0, k + 1)
        assert tg.cohomology_dim(P1, d, 1) == max(0, -k - 1)


def test_cohomology_p2(fan_corpus):
    P2 = fan_corpus["P2"]
    assert tg.cohomology_dim(P2, P2.divisor_class([2]), 0) == 6
    assert hvec(P2, [-3]) == (0, 0, 1)
    assert hvec(P2, [-1]) == (0, 0, 0)


def test_cohomology_rejects_unsupported(fan_corpus):
    v = fan_corpus["rays_only"]
    with pytest.raises(UnsupportedInputError):
        tg.cohomology_dim(v, v.divisor_class([0]), 0)
    cqs = fan_corpus["cqs_2_1"]
    with pytest.raises(UnsupportedInputError):
        tg.vanishing_sets(cqs)


# ---------------------------------------------------------------------------
# contribution sets


def cs_as_dict(v):
    return {(frozenset(c.rays), c.index): c.multiplicity
            for c in tg.contribution_sets(v)}


def test_contribution_sets_p1xp1(fan_corpus):
    X = fan_corpus["P1xP1"]
    assert cs_as_dict(X) == {
        (frozenset(), 0): 1,
        (frozenset({0, 1}), 1): 1,
        (frozenset({2, 3}), 1): 1,
        (frozenset({0, 1, 2, 3}), 2): 1,
    }


def test_contribution_sets_dp1(fan_corpus):
    X = fan_corpus["dP1"]
    assert cs_as_dict(X) == {
        (frozenset(), 0): 1,
        (frozenset({0, 1}), 1): 1,
        (frozenset({2, 3}), 1): 1,
        (frozenset({0, 1, 2, 3}), 2): 1,
    }


def test_contribution_sets_p2(fan_corpus):
    X = fan_corpus["P2"]
    assert cs_as_dict(X) == {
        (frozenset(), 0): 1,
        (frozenset({0, 1, 2}), 2): 1,
    }


def test_face_subcomplexes_are_acyclic(fan_corpus):
    """Gamma of a nonempty cone's ray set is contractible: no reduced
    cohomology (the empty face instead carries the h^0 contribution)."""
    for name in ("P1xP1", "dP1", "P2", "H2"):
        v = fan_corpus[name]
        for c in v.fan.max_cones:
            for size in range(1, len(c) + 1):
                for sub in itertools.combinations(c, size):
                    assert _gamma_dims(v, frozenset(sub)) == {}
        assert _gamma_dims(v, frozenset()) == {-1: 1}


def test_empty_set_multiplicity_one(fan_corpus):
    for name in ("P1xP1", "dP1", "P2", "H2", "P1xP2"):
        v = fan_corpus[name]
        assert (frozenset(), 0) in cs_as_dict(v)
        assert cs_as_dict(v)[(frozenset(), 0)] == 1


# ---------------------------------------------------------------------------
# vanishing sets


def regions_as_set(vs):
    return {(r.apex, r.generators) for r in vs.regions}


def test_vanishing_sets_p1xp1_exact(fan_corpus):
    X = fan_corpus["P1xP1"]
    v0, v1, v2 = tg.vanishing_sets(X)
    assert regions_as_set(v0) == {((0, 0), ((0, 1), (1, 0)))}
    assert regions_as_set(v1) == {((-2, 0), ((-1, 0), (0, 1))),
                                  ((0, -2), ((0, -1), (1, 0)))}
    assert regions_as_set(v2) == {((-2, -2), ((-1, 0), (0, -1)))}
    assert tg.print_constraints(v0.regions[0].polyhedron) == "-x1 <= 0\n-x2 <= 0"
    assert tg.print_constraints(v2.regions[0].polyhedron) == "x1 <= -2\nx2 <= -2"


DP1_REGION_POINTS = {
    # P0: x >= 0 and y <= x
    (0, 0): [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2),
             (3, 0), (3, 1), (3, 3), (0, -1), (1, -2), (4, 2)],
    # P1_(1): y >= 1 and y >= x + 2
    (-1, 1): [(-1, 1), (-2, 1), (-3, 1), (-4, 1), (0, 2), (-1, 2),
              (-2, 2), (1, 3), (0, 3), (-3, 2), (-4, 4), (-2, 3)],
    # P1_(2): y <= -2 and y <= x
    (-2, -2): [(-2, -2), (-1, -2), (0, -2), (1, -2), (2, -2), (-2, -3),
               (0, -3), (2, -3), (3, -3), (-3, -4), (-1, -3), (4, -2)],
    # P2: x <= -3 and y >= x + 2
    (-3, -1): [(-3, -1), (-3, 0), (-3, 1), (-4, -2), (-4, -1), (-4, 0),
               (-5, -3), (-5, 0), (-3, 2), (-4, 2), (-5, -2), (-6, -4)],
}


def test_vanishing_sets_dp1_regions(fan_corpus):
    X = fan_corpus["dP1"]
    sets = tg.vanishing_sets(X)
    apexes = {r.apex: (vs.index, r) for vs in sets for r in vs.regions}
    assert set(apexes) == set(DP1_REGION_POINTS)
    for apex, pts in DP1_REGION_POINTS.items():
        index, region = apexes[apex]
        for p in pts:
            assert region.polyhedron.contains(p), (apex, p)
            assert not tg.in_vanishing_set(sets[index], X.divisor_class(p))


def test_vanishing_set_p1(fan_corpus):
    P1 = fan_corpus["P1"]
    v0, v1 = tg.vanishing_sets(P1)
    for k in range(-6, 6):
        d = P1.divisor_class([k])
        assert tg.in_vanishing_set(v1, d) == (k >= -1)
        assert tg.in_vanishing_set(v0, d) == (k < 0)


def test_in_vanishing_set_examples(fan_corpus):
    X = fan_corpus["P1xP1"]
    sets = tg.vanishing_sets(X)
    assert not tg.in_vanishing_set(sets[0], X.divisor_class([0, 0]))
    for i in range(3):
        assert tg.in_vanishing_set(sets[i], X.divisor_class([-1, -1]))
    assert not tg.in_vanishing_set(sets[1], X.divisor_class([-2, 0]))


# ---------------------------------------------------------------------------
# cross checks


def test_oracle_polyhedra_consistency_sample(fan_corpus):
    for name in ("P1xP1", "dP1"):
        v = fan_corpus[name]
        sets = tg.vanishing_sets(v)
        for a in range(-3, 4):
            for b in range(-3, 4):
                d = v.divisor_class([a, b])
                for i in range(3):
                    assert (tg.cohomology_dim(v, d, i) == 0) == \
                        tg.in_vanishing_set(sets[i], d), (name, (a, b), i)


def test_serre_duality_sample(fan_corpus):
    for name in ("P1xP1", "dP1"):
        v = fan_corpus[name]
        K = tg.canonical_divisor_class(v)
        for a in range(-3, 4):
            for b in range(-3, 4):
                d = v.divisor_class([a, b])
                for i in range(3):
                    assert tg.cohomology_dim(v, d, i) == \
                        tg.cohomology_dim(v, K - d, 2 - i), (name, (a, b), i)


def test_euler_characteristic_is_polynomial(fan_corpus):
    """Third finite differences of chi along lines through 0 vanish on a
    surface (chi has degree <= 2)."""
    X = fan_corpus["P1xP1"]

    def chi(t, direction):
        d = X.divisor_class([t * direction[0], t * direction[1]])
        return sum((-1) ** i * tg.cohomology_dim(X, d, i) for i in range(3))

    for direction in [(1, 0), (0, 1), (1, 1), (1, 2), (2, 1), (1, -1)]:
        vals = [chi(t, direction) for t in range(6)]
        third = [vals[t + 3] - 3 * vals[t + 2] + 3 * vals[t + 1] - vals[t]
                 for t in range(3)]
        assert all(x == 0 for x in third), direction


def test_euler_characteristic_p1xp1_closed_form(fan_corpus):
    X = fan_corpus["P1xP1"]
    for a in range(-3, 4):
        for b in range(-3, 4):
            d = X.divisor_class([a, b])
            chi = sum((-1) ** i * tg.cohomology_dim(X, d, i) for i in range(3))
            assert chi == (a + 1) * (b + 1)
