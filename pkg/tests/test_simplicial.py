"""Simplicial complexes: fixtures, homology, orientation, semicharacteristic."""

import itertools

import pytest

from skkinv import fixtures
from skkinv.simplicial import (
    ComplexFormatError,
    DimensionMismatch,
    NotClosed,
    NotOrientable,
    OddEulerCharacteristic,
    SimplicialComplex,
    complex_from_json,
    complex_to_json,
    disjoint_union,
    euler_characteristic,
    homology,
    is_orientable,
    kervaire_semicharacteristic,
    orient,
    validate_closed,
)


def face_incidence_oracle(K):
    """Brute-force face counting: every (dim-1)-face in exactly two facets."""
    counter = {}
    for facet in K.facets:
        for face in itertools.combinations(facet, K.dim):
            counter[face] = counter.get(face, 0) + 1
    return counter


class TestValidateClosed:
    def test_sphere_boundary(self):
        assert validate_closed(fixtures.sphere2())

    def test_single_triangle(self):
        K = SimplicialComplex.from_facets(2, [(0, 1, 2)])
        assert not validate_closed(K)

    def test_torus_with_oracle(self):
        T = fixtures.torus7()
        counts = face_incidence_oracle(T)
        assert len(T.vertices()) == 7
        assert len(T.simplices(1)) == 21
        assert len(T.facets) == 14
        assert all(c == 2 for c in counts.values())
        assert validate_closed(T)


class TestOrient:
    def test_sphere_orientable(self):
        oriented = orient(fixtures.sphere2())
        assert oriented.orientations is not None

    def test_projective_plane_not_orientable(self):
        with pytest.raises(NotOrientable):
            orient(fixtures.projective_plane6())
        assert not is_orientable(fixtures.projective_plane6())

    def test_torus_orientable(self):
        assert is_orientable(fixtures.torus7())

    def test_requires_closed(self):
        K = SimplicialComplex.from_facets(2, [(0, 1, 2)])
        with pytest.raises(NotClosed):
            orient(K)

    @pytest.mark.parametrize("complex_name", ["sphere2", "sphere3", "sphere4", "torus7"])
    def test_signed_boundary_vanishes(self, complex_name):
        K = orient(fixtures.FIXTURES[complex_name]())
        boundary = {}
        for sign, facet in zip(K.orientations, K.facets):
            for omit in range(len(facet)):
                face = facet[:omit] + facet[omit + 1:]
                boundary[face] = boundary.get(face, 0) + sign * (-1) ** omit
        assert all(total == 0 for total in boundary.values())


class TestEulerCharacteristic:
    def test_sphere(self):
        assert euler_characteristic(fixtures.sphere2()) == 4 - 6 + 4 == 2

    def test_torus(self):
        assert euler_characteristic(fixtures.torus7()) == 7 - 21 + 14 == 0

    def test_disjoint_spheres(self):
        two = disjoint_union(fixtures.sphere2(), fixtures.sphere2())
        assert euler_characteristic(two) == 4

    def test_cp2(self):
        assert euler_characteristic(fixtures.cp2_9()) == 9 - 36 + 84 - 90 + 36 == 3


class TestHomology:
    @pytest.mark.parametrize("name,betti", [
        ("sphere2", (1, 0, 1)),
        ("sphere3", (1, 0, 0, 1)),
        ("sphere4", (1, 0, 0, 0, 1)),
        ("torus7", (1, 2, 1)),
        ("cp2_9", (1, 0, 1, 0, 1)),
    ])
    def test_betti_integers(self, name, betti):
        profile = homology(fixtures.FIXTURES[name]())
        assert profile.betti == betti
        assert all(t == () for t in profile.torsion)

    def test_projective_plane_torsion(self):
        profile = homology(fixtures.projective_plane6())
        assert profile.betti == (1, 0, 0)
        assert profile.torsion == ((), (2,), ())

    def test_rationals_match_integer_betti(self):
        for name in fixtures.FIXTURES:
            K = fixtures.FIXTURES[name]()
            assert homology(K, "rationals").betti == homology(K).betti

    def test_mod2_ranks_dominate(self):
        for name in ("projective_plane6", "torus7", "sphere2"):
            K = fixtures.FIXTURES[name]()
            mod2 = homology(K, "mod2").betti
            rational = homology(K, "rationals").betti
            assert all(m >= r for m, r in zip(mod2, rational))

    def test_chi_equals_alternating_betti(self):
        for name in fixtures.FIXTURES:
            K = fixtures.FIXTURES[name]()
            betti = homology(K, "rationals").betti
            assert euler_characteristic(K) == sum(
                (-1) ** k * b for k, b in enumerate(betti)
            )

    def test_poincare_duality_on_closed_orientable(self):
        for name in ("sphere2", "sphere3", "sphere4", "torus7", "cp2_9"):
            K = fixtures.FIXTURES[name]()
            betti = homology(K, "rationals").betti
            assert betti == tuple(reversed(betti))

    def test_unknown_coefficients(self):
        with pytest.raises(ValueError):
            homology(fixtures.sphere2(), "mod3")


class TestKervaireSemicharacteristic:
    def test_sphere(self):
        assert kervaire_semicharacteristic(fixtures.sphere2()) == 1

    def test_circle(self):
        assert kervaire_semicharacteristic(fixtures.circle()) == 1

    def test_sphere3(self):
        assert kervaire_semicharacteristic(fixtures.sphere3()) == 1

    def test_two_circles_even(self):
        two = disjoint_union(fixtures.circle(), fixtures.circle())
        assert kervaire_semicharacteristic(two) == 0

    def test_odd_chi_rejected(self):
        with pytest.raises(OddEulerCharacteristic):
            kervaire_semicharacteristic(fixtures.cp2_9())

    def test_requires_closed(self):
        K = SimplicialComplex.from_facets(2, [(0, 1, 2)])
        with pytest.raises(NotClosed):
            kervaire_semicharacteristic(K)

    def test_additive_under_disjoint_union(self):
        a, b = fixtures.sphere2(), fixtures.torus7()
        union = disjoint_union(a, b)
        assert kervaire_semicharacteristic(union) == (
            kervaire_semicharacteristic(a) + kervaire_semicharacteristic(b)
        )
        odd_a, odd_b = fixtures.circle(3), fixtures.circle(4)
        union = disjoint_union(odd_a, odd_b)
        assert kervaire_semicharacteristic(union) == (
            kervaire_semicharacteristic(odd_a) + kervaire_semicharacteristic(odd_b)
        ) % 2


class TestDisjointUnion:
    def test_betti_add(self):
        union = disjoint_union(fixtures.sphere2(), fixtures.torus7())
        assert homology(union).betti == (2, 2, 2)

    def test_empty_identity(self):
        empty = SimplicialComplex.from_facets(2, [])
        K = fixtures.torus7()
        assert disjoint_union(K, empty) == K

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            disjoint_union(fixtures.sphere2(), fixtures.sphere3())


class TestComplexFormat:
    def test_round_trip(self):
        K = fixtures.cp2_9()
        assert complex_from_json(complex_to_json(K)) == K

    def test_unknown_field_rejected(self):
        with pytest.raises(ComplexFormatError):
            complex_from_json('{"dim": 2, "facets": [[0,1,2]], "color": "red"}')

    def test_missing_fields_rejected(self):
        with pytest.raises(ComplexFormatError):
            complex_from_json('{"dim": 2}')

    def test_bad_orientations_rejected(self):
        with pytest.raises(ComplexFormatError):
            complex_from_json('{"dim": 2, "facets": [[0,1,2]], "orientations": [2]}')

    def test_invalid_json_rejected(self):
        with pytest.raises(ComplexFormatError):
            complex_from_json("{not json")

    def test_duplicate_facets_rejected(self):
        with pytest.raises(ComplexFormatError):
            complex_from_json('{"dim": 2, "facets": [[0,1,2],[2,1,0]]}')
