"""
Tests for ground sets, reduction and cone membership.
"""

from fractions import Fraction

import numpy as np
import pytest

from momentcone.basis import Point, affine_system, gapped_system, projective_system
from momentcone.config import settings
from momentcone.decompose import (
    GroundSet,
    Verdict,
    cara_countable,
    evaluate_function,
    membership,
    min_atoms,
    minimal_support,
    reduce,
    require_member,
    signed_decompose,
)
from momentcone.exceptions import GroundSetError, InvalidMeasureError, NotAMemberError
from momentcone.momentmap import AtomicMeasure, MomentSequence, moments


def _line(*values):
    return GroundSet(Point.affine(v) for v in values)


def _random_measure(rng, system, atoms):
    """Random positive measure with small integer points."""
    pairs = []
    for _ in range(atoms):
        mass = Fraction(int(rng.integers(1, 10)), int(rng.integers(1, 5)))
        coords = [int(v) for v in rng.integers(-4, 5, size=system.n)]
        if system.chart.value == "projective":
            point = Point.projective(1, *coords)
        else:
            point = Point.affine(*coords)
        pairs.append((mass, point))
    return AtomicMeasure(pairs)


def _check_reduction(system, measure):
    reduced = reduce(system, measure)
    assert moments(system, reduced) == moments(system, measure)
    assert set(reduced.points) <= set(measure.points)
    assert all(c > 0 for c in reduced.masses)
    assert len(reduced) <= system.size
    if len(reduced):
        assert cara_countable(system, GroundSet(reduced.points)) == len(reduced)


@pytest.fixture(params=["A_1_3", "A_2_2", "gapped", "B_2_2"])
def system(request):
    """Small systems of each kind."""
    return {
        "A_1_3": affine_system(1, 3),
        "A_2_2": affine_system(2, 2),
        "gapped": gapped_system([0, 1, 2, 6]),
        "B_2_2": projective_system(2, 2),
    }[request.param]


class TestGroundSet:
    """Test cases for GroundSet."""

    def test_drops_duplicates(self):
        """Test the first occurrence is kept."""
        ground = GroundSet([Point.projective(1, 2), Point.projective(2, 4), Point.projective(0, 1)])
        assert len(ground) == 2
        assert ground.index(Point.projective(0, 5)) == 1

    def test_grid_order(self):
        """Test product grids are lexicographic."""
        ground = GroundSet.grid(2, [0, 1])
        assert list(ground) == [Point.affine(0, 0), Point.affine(0, 1), Point.affine(1, 0), Point.affine(1, 1)]

    def test_invalid(self):
        """Test empty, mixed and missing points."""
        with pytest.raises(GroundSetError):
            GroundSet([])
        with pytest.raises(GroundSetError):
            GroundSet([Point.affine(1), Point.affine(1, 2)])
        with pytest.raises(GroundSetError):
            _line(0, 1).index(Point.affine(3))


class TestReduction:
    """Test cases for Richter reduction."""

    def test_five_atoms_on_the_line(self):
        """Test five unit atoms under A_{1,2} reduce to three."""
        system = affine_system(1, 2)
        measure = AtomicMeasure.unit([Point.affine(v) for v in range(5)])
        reduced = reduce(system, measure)
        assert len(reduced) <= 3
        assert moments(system, reduced) == (5, 10, 30)

    def test_independent_measure_unchanged(self):
        """Test nothing happens when the curve points are independent."""
        system = affine_system(1, 2)
        measure = AtomicMeasure([(2, Point.affine(0)), ("1/3", Point.affine(1))])
        assert reduce(system, measure) == measure

    def test_signed_rejected(self):
        """Test reduction needs a positive measure."""
        measure = AtomicMeasure([(-1, Point.affine(0))], signed=True)
        with pytest.raises(InvalidMeasureError):
            reduce(affine_system(1, 2), measure)

    def test_random_measures(self, system):
        """Test reduction invariants on random measures."""
        rng = np.random.default_rng(11)
        for _ in range(10):
            measure = _random_measure(rng, system, int(rng.integers(1, 2 * system.size + 2)))
            _check_reduction(system, measure)

    @pytest.mark.slow
    def test_many_random_measures(self, system):
        """Test reduction invariants on the configured number of instances."""
        rng = np.random.default_rng(settings.seed)
        for _ in range(settings.reduce_property_instances):
            measure = _random_measure(rng, system, int(rng.integers(1, 3 * system.size)))
            _check_reduction(system, measure)


class TestSignedDecomposition:
    """Test cases for signed representations."""

    def test_any_sequence(self):
        """Test a sequence outside the cone still decomposes."""
        system = affine_system(1, 2)
        measure = signed_decompose(system, [1, 0, -1], _line(-1, 0, 1, 2))
        assert moments(system, measure) == (1, 0, -1)
        assert len(measure) <= 3
        assert any(c < 0 for c in measure.masses)

    def test_zero_sequence(self):
        """Test the empty measure represents zero."""
        assert len(signed_decompose(affine_system(1, 2), [0, 0, 0], _line(0, 1, 2))) == 0

    def test_ground_set_too_small(self):
        """Test the spanning requirement."""
        with pytest.raises(GroundSetError):
            signed_decompose(affine_system(1, 2), [1, 0, 1], _line(0, 1))


class TestMembership:
    """Test cases for exact cone membership."""

    def test_member(self):
        """Test delta_1 + delta_{-1} on {-1, 0, 1}."""
        system = affine_system(1, 2)
        ground = _line(-1, 0, 1)
        certificate = membership(system, ground, [2, 0, 2])
        assert certificate.verdict == Verdict.MEMBER
        assert moments(system, certificate.measure) == (2, 0, 2)
        assert certificate.verify(system, ground, [2, 0, 2])

    def test_negative_second_moment(self):
        """Test a separator for s_2 < 0."""
        system = affine_system(1, 2)
        ground = _line(-1, 0, 1)
        s = MomentSequence(system, [1, 0, -1])
        certificate = membership(system, ground, s)
        assert not certificate.is_member
        assert s.riesz(certificate.separator) < 0
        values = evaluate_function(certificate.separator, ground.evaluate(system))
        assert all(v >= 0 for v in values)
        assert all(isinstance(c, int) or c.is_rational for c in certificate.separator)

    def test_outside_ground_cone(self):
        """Test a moment vector of a point not in X."""
        system = affine_system(1, 2)
        ground = _line(0, 1)
        s = [1, "1/2", "1/4"]
        certificate = membership(system, ground, s)
        assert not certificate.is_member
        assert certificate.verify(system, ground, s)

    def test_irrational_ground_set(self):
        """Test membership with a sqrt(2) atom."""
        system = affine_system(1, 2)
        ground = _line(0, "sqrt2")
        certificate = membership(system, ground, [1, "sqrt2", 2])
        assert certificate.is_member
        assert certificate.measure.points == (Point.affine("sqrt2"),)

    def test_require_member_raises(self):
        """Test the separator travels with the error."""
        with pytest.raises(NotAMemberError) as error:
            require_member(affine_system(1, 2), _line(-1, 0, 1), [1, 0, -1])
        assert error.value.separator is not None

    def test_cara_countable(self):
        """Test the rank of the curve points."""
        assert cara_countable(affine_system(1, 2), _line(0, 1, 2, 3)) == 3
        assert cara_countable(affine_system(1, 2), _line(0, 1)) == 2


class TestMinimalSupport:
    """Test cases for the smallest representing measure."""

    def test_three_atoms_needed(self):
        """Test delta_{-1} + delta_0 + delta_1 under A_{1,4} needs three atoms."""
        system = affine_system(1, 4)
        ground = _line(-2, -1, 0, 1, 2)
        s = moments(system, AtomicMeasure.unit([Point.affine(v) for v in (-1, 0, 1)]))
        assert min_atoms(system, ground, s) == 3

    def test_single_atom(self):
        """Test a multiple of one curve point."""
        system = affine_system(1, 4)
        ground = _line(-2, -1, 0, 1, 2)
        measure = minimal_support(system, ground, [2, 2, 2, 2, 2])
        assert measure == AtomicMeasure.dirac(Point.affine(1), 2)

    def test_non_member(self):
        """Test the membership check comes first."""
        with pytest.raises(NotAMemberError):
            min_atoms(affine_system(1, 2), _line(0, 1), [1, 0, -1])

    def test_ground_set_limit(self):
        """Test the subset search refuses large ground sets."""
        ground = _line(*range(10))
        with pytest.raises(GroundSetError):
            minimal_support(affine_system(1, 2), ground, [1, 0, 0], max_ground=5)

    @pytest.mark.slow
    @pytest.mark.parametrize("d", range(2, 9))
    def test_random_measures_on_the_line(self, d):
        """Test ceil((d+1)/2) random atoms under A_{1,d} admit no shorter representation."""
        rng = np.random.default_rng([settings.seed, d])
        atoms = -(-(d + 1) // 2)
        values = [int(v) for v in rng.choice(np.arange(-20, 21), size=atoms + 10, replace=False)]
        measure = AtomicMeasure(
            (Fraction(int(rng.integers(1, 10)), int(rng.integers(1, 5))), Point.affine(v))
            for v in values[:atoms]
        )
        system = affine_system(1, d)
        # two representations differ by at most 2*atoms - 1 <= d + 1 Vandermonde columns
        assert min_atoms(system, _line(*values), moments(system, measure)) == atoms


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
