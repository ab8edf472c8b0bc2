"""
Tests for faces, core varieties and maximal masses.
"""

import numpy as np
import pytest

from momentcone.basis import Point, affine_system, make_system, projective_system
from momentcone.catalog.examples import kappa_example
from momentcone.catalog.harris import harris, harris_zeros
from momentcone.decompose import GroundSet, evaluate_function
from momentcone.exceptions import GroundSetError, NotAMemberError, UnpointedConeError
from momentcone.facial import (
    atom_set,
    core_variety,
    face_dimension,
    face_report,
    gamma_space,
    max_mass,
    positivity_witness,
    psp_check,
    tangency_rows,
    v_set,
)
from momentcone.momentmap import AtomicMeasure, moments


def _line(*values):
    return GroundSet(Point.affine(v) for v in values)


@pytest.fixture
def symmetric():
    """A_{1,2}, X = {-1, 0, 1} and s = delta_{-1} + delta_1."""
    return affine_system(1, 2), _line(-1, 0, 1), [2, 0, 2]


@pytest.fixture(scope="module")
def harris_setup():
    """B_{2,10}, X = the 30 Harris zeros, s = unit masses on z_1..z_23."""
    system = projective_system(2, 10)
    zeros = harris_zeros()
    s = moments(system, AtomicMeasure.unit(zeros[:23]))
    return system, GroundSet(zeros), s, zeros


class TestAtomsAndZeros:
    """Test cases for W(s) and V(s)."""

    def test_unique_representation(self, symmetric):
        """Test W and V when the measure is unique."""
        system, ground, s = symmetric
        assert atom_set(system, ground, s) == (Point.affine(-1), Point.affine(1))
        zeros = v_set(system, ground, s)
        assert zeros.points == (Point.affine(-1), Point.affine(1))
        assert zeros.functional == (1, 0, -1)
        assert not zeros.degenerate

    def test_atoms_beyond_one_measure(self):
        """Test W collects atoms of every representing measure."""
        system = affine_system(1, 2)
        ground = _line(0, 1, 2, 3)
        assert atom_set(system, ground, [2, 2, 4]) == tuple(ground)

    def test_interior_is_degenerate(self):
        """Test only p = 0 is annihilated by an interior sequence."""
        system = affine_system(1, 2)
        zeros = v_set(system, _line(-1, 0, 1), [3, 0, 2])
        assert zeros.degenerate
        assert len(zeros.points) == 3
        assert zeros.functional == (0, 0, 0)

    def test_degenerate_keeps_vanishing_member(self):
        """Test a degenerate V(s) reports x(x-1) rather than p = 0."""
        system = affine_system(1, 2)
        zeros = v_set(system, _line(0, 1), [2, 1, 1])
        assert zeros.degenerate
        assert len(zeros.points) == 2
        c0, c1, c2 = zeros.functional
        assert c0 == 0
        assert c1 == -c2 != 0

    def test_non_member(self, symmetric):
        """Test facial queries need a member."""
        system, ground, _ = symmetric
        with pytest.raises(NotAMemberError):
            atom_set(system, ground, [1, 0, -1])
        with pytest.raises(NotAMemberError):
            v_set(system, ground, [1, 0, -1])

    def test_tangency_rows(self):
        """Test one derivative row per coordinate."""
        assert tangency_rows(affine_system(1, 2), [Point.affine(1)]) == [[0, 1, 2]]

    @pytest.mark.slow
    def test_harris_atoms(self, harris_setup):
        """Test W(s) is the first 23 zeros."""
        system, ground, s, zeros = harris_setup
        assert atom_set(system, ground, s) == zeros[:23]

    @pytest.mark.slow
    def test_harris_zeros_with_tangency(self, harris_setup):
        """Test V(s) is all 30 zeros and the family is spanned by h."""
        system, ground, s, zeros = harris_setup
        result = v_set(system, ground, s, tangent_at=zeros[:23])
        assert result.points == zeros
        assert result.degenerate
        assert result.functional == harris().coefficients


class TestCoreVariety:
    """Test cases for the core variety iteration."""

    def test_moment_functional(self, symmetric):
        """Test the iteration stops at W(s)."""
        system, ground, s = symmetric
        core = core_variety(system, ground, s)
        assert core.points == atom_set(system, ground, s)
        assert core.iterations == 1
        assert core.trace[0] == tuple(ground)

    def test_zero_functional(self, symmetric):
        """Test a positive constant empties the set at once."""
        system, ground, _ = symmetric
        core = core_variety(system, ground, [0, 0, 0])
        assert core.points == ()
        assert core.iterations == 1

    @pytest.mark.slow
    def test_harris(self, harris_setup):
        """Test V_1 is all zeros and V_2 = V_C = W(s)."""
        system, ground, s, zeros = harris_setup
        core = core_variety(system, ground, s, tangent_at=zeros[:23])
        assert core.trace[1] == zeros
        assert core.points == zeros[:23]
        assert core.iterations == 2


class TestFaceReport:
    """Test cases for D_s and gamma_s."""

    def test_gamma_space(self):
        """Test gamma_s for a single atom at 0."""
        basis, gamma = gamma_space(affine_system(1, 2), [Point.affine(0)])
        assert gamma == 2
        assert basis == [(0, 1, 0), (0, 0, 1)]
        assert face_dimension(affine_system(1, 2), [Point.affine(0)]) == 1

    def test_empty_support(self):
        """Test empty supports are refused."""
        with pytest.raises(GroundSetError):
            face_dimension(affine_system(1, 2), [])

    def test_report(self, symmetric):
        """Test the combined report."""
        system, ground, s = symmetric
        report = face_report(system, ground, s)
        assert report.atoms == (Point.affine(-1), Point.affine(1))
        assert report.zeros == report.atoms
        assert report.face_dimension == 2
        assert report.gamma_dimension == 1
        assert report.gamma_basis == ((1, 0, -1),)
        assert report.face_dimension + report.gamma_dimension == system.size

    def test_report_interior(self):
        """Test a full-dimensional face."""
        report = face_report(affine_system(1, 2), _line(0, 1, 2, 3), [2, 2, 4])
        assert len(report.atoms) == 4
        assert report.face_dimension == 3
        assert report.gamma_dimension == 0


class TestMaxMass:
    """Test cases for rho, kappa and positive separation."""

    def test_piecewise_instance(self):
        """Test rho = kappa = 1 on {1, x, f_1} at x = -2."""
        system, ground, s, x = kappa_example(1)
        report = max_mass(system, ground, s, x)
        assert report.rho == 1
        assert report.kappa == 1
        assert report.residual == (1, 0, 0)
        assert report.outside_atoms
        assert report.outside_zeros

    def test_known_functional_is_optimal(self):
        """Test p = -x/2 + f_1 is feasible and reaches kappa."""
        system, ground, s, x = kappa_example(1)
        p = (0, "-1/2", 1)
        assert all(v >= 0 for v in evaluate_function(p, ground.evaluate(system)))
        assert system.apply(p, x) == 1
        assert s.riesz(p) == max_mass(system, ground, s, x).kappa

    @pytest.mark.slow
    def test_harris_extra_mass(self, harris_setup):
        """Test rho = c for s + c * s_A(z_24) over the independent zeros."""
        system, ground, s, zeros = harris_setup
        extra = s + moments(system, AtomicMeasure.dirac(zeros[23], 2))
        report = max_mass(system, ground, extra, zeros[23])
        assert report.rho == 2
        assert report.kappa == 2
        assert report.residual == s

    def test_point_outside_ground_set(self, symmetric):
        """Test x must be in X."""
        system, ground, s = symmetric
        with pytest.raises(GroundSetError):
            max_mass(system, ground, s, Point.affine(5))

    def test_unpointed_cone(self):
        """Test {x} on {-1, 1} has no positive function."""
        system = make_system("custom", functions=[lambda c: c[0]])
        ground = _line(-1, 1)
        with pytest.raises(UnpointedConeError):
            positivity_witness(system, ground)
        with pytest.raises(UnpointedConeError):
            max_mass(system, ground, [0], Point.affine(1))

    @pytest.mark.parametrize("seed", range(5))
    def test_random_duality(self, seed):
        """Test rho = kappa and the residual excludes x."""
        _check_random_duality(np.random.default_rng(seed))

    @pytest.mark.slow
    def test_many_random_duality(self):
        """Test duality on one hundred random instances."""
        rng = np.random.default_rng(100)
        for _ in range(100):
            _check_random_duality(rng)

    def test_psp_feasible(self):
        """Test Lagrange-type separators for A_{1,4}."""
        system = affine_system(1, 4)
        ground = _line(-1, 0, 1, 2, 3)
        points = [Point.affine(v) for v in (0, 1, 2)]
        result = psp_check(system, ground, points)
        assert result.feasible
        for i, p in enumerate(result.functionals):
            assert [system.apply(p, y) for y in points] == [1 if j == i else 0 for j in range(3)]

    def test_psp_infeasible(self):
        """Test lines cannot separate 0 from 1 positively on {0, 1, 2}."""
        result = psp_check(affine_system(1, 1), _line(0, 1, 2), [Point.affine(0), Point.affine(1)])
        assert not result.feasible
        assert result.failed_index == 0
        assert result.functionals == ()
        assert result.farkas is not None

    def test_psp_point_outside(self):
        """Test separation points must be in X."""
        with pytest.raises(GroundSetError):
            psp_check(affine_system(1, 2), _line(0, 1), [Point.affine(2)])


def _check_random_duality(rng):
    degree = int(rng.integers(2, 4))
    system = affine_system(1, degree)
    values = rng.choice(np.arange(-6, 7), size=int(rng.integers(degree + 2, 8)), replace=False)
    ground = _line(*(int(v) for v in values))
    weights = [(int(rng.integers(0, 4)), p) for p in ground]
    measure = AtomicMeasure((c, p) for c, p in weights if c)
    if not len(measure):
        measure = AtomicMeasure.dirac(ground[0])
    s = moments(system, measure)
    x = ground[int(rng.integers(0, len(ground)))]
    report = max_mass(system, ground, s, x)
    assert report.rho == report.kappa
    assert report.rho >= measure.mass_at(x)
    assert report.outside_atoms
    assert report.outside_zeros


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
