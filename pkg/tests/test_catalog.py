"""
Tests for the catalog of named polynomials, examples, tables and bounds.
"""

import logging
from fractions import Fraction

import numpy as np
import pytest

from momentcone.basis import Point, affine_system, gapped_system
from momentcone.catalog import (
    TABLE1_RANKS,
    NamedPolynomial,
    RankMethod,
    Space,
    boundary_determinant,
    boundary_polynomial,
    cara_bounds,
    example_system,
    example_systems,
    flat_extension_counts,
    frak_p,
    frak_q,
    grid_rank_count,
    harris,
    harris_zeros,
    increments,
    kappa_example,
    named_system,
    observed_trends,
    pythagoras_lower,
    quadratic_cone_member,
    r_prime_n2,
    square_dimension,
    table1,
    table2,
    table2_grid,
    tensor_rank_lower,
)
from momentcone.catalog.polynomial import poly_mul
from momentcone.decompose import GroundSet, cara_countable
from momentcone.exceptions import BudgetExceededError, InvalidArgumentError
from momentcone.momentmap import Regularity, classify

# Published face dimensions per (n, d), listed for d = 1, 2, ...
PUBLISHED_RANKS = {
    3: [1, 8, 27, 63, 121, 206, 323, 477, 673, 916, 1211, 1563, 1977, 2458, 3011],
    4: [1, 16, 76, 221, 503, 986, 1746, 2871],
    5: [1, 31, 192, 667, 1753, 3888, 7678],
    6: [1, 57, 435, 1758, 5251],
    7: [1, 99, 897, 4146],
    8: [1, 163, 1711],
    9: [1, 256, 3061],
    10: [1, 386],
}
PUBLISHED_PRIMED_RANKS = {
    3: [7, 23, 54, 105, 181, 287, 428, 609, 835, 1111, 1442, 1833, 2289, 2815, 3416],
    4: [11, 50, 150, 355, 721, 1316, 2220, 3525],
    5: [16, 96, 357, 1007, 2373],
    6: [22, 168, 756, 2499],
    7: [29, 274, 1464],
    8: [37, 423],
    9: [46, 625],
    10: [56, 891],
}


class TestHarris:
    """Test cases for the Harris polynomial."""

    def test_thirty_zeros(self):
        """Test h vanishes exactly at every listed zero."""
        h = harris()
        zeros = harris_zeros()
        assert len(zeros) == 30
        assert len(set(zeros)) == 30
        assert h.vanishes_on_zeros()

    def test_coefficients(self):
        """Test the coefficient pattern and a value off the zero set."""
        h = harris()
        terms = dict(h.terms())
        assert terms["x0^10"] == 16
        assert terms["x0^8*x1^2"] == -36
        assert terms["x0^6*x1^4"] == 20
        assert terms["x0^6*x1^2*x2^2"] == 57
        assert terms["x0^4*x1^4*x2^2"] == -38
        assert h(Point.projective(1, 0, 0)) == 16
        assert h.at(2, 0, 0) == 16 * 2 ** 10

    def test_sampled_nonnegative(self):
        """Test h >= 0 at random rational points."""
        assert harris().sample_nonnegative(count=25, seed=3)

    def test_curve_points_independent(self):
        """Test the 30 curve points have rank 30."""
        system = harris().system
        assert cara_countable(system, GroundSet(harris_zeros())) == 30

    def test_increments(self):
        """Test the reference rank row and its increments."""
        steps = increments(TABLE1_RANKS)
        assert steps[:10] == [3] * 10
        assert steps[10:20] == [3] * 10
        assert steps[20:23] == [2, 1, 2]
        assert steps[23:] == [0] * 7
        assert increments([3, 6, 8]) == [3, 3, 2]

    @pytest.mark.slow
    def test_table1(self):
        """Test the ranks over all 30 prefixes."""
        assert table1() == list(TABLE1_RANKS)


class TestGridPolynomials:
    """Test cases for p, q and the grid table."""

    def test_univariate_factor(self):
        """Test p_{1,2} = x^2 (x-1)^2."""
        assert frak_p(1, 2).coefficients == (0, 0, 1, -2, 1)
        assert frak_q(1, 1).coefficients == (0, 1, -1)
        assert poly_mul([1, 1], [1, -1]) == [1, 0, -1]

    def test_zero_sets(self):
        """Test the declared grids are zeros."""
        p = frak_p(2, 3)
        assert len(p.zeros) == 9
        assert p.vanishes_on_zeros()
        assert p(Point.affine(3, 0)) > 0
        q = frak_q(2, 2)
        assert len(q.zeros) == 9
        assert q.vanishes_on_zeros()
        assert q(Point.affine("1/2", 0)) == Fraction(3, 16)

    @pytest.mark.parametrize(
        "n,d,primed,rank",
        [(3, 4, False, 63), (5, 2, False, 31), (4, 2, True, 50), (4, 3, False, 76), (3, 2, True, 23)],
    )
    def test_cells(self, n, d, primed, rank):
        """Test reference cells."""
        assert table2(n, d, primed=primed).rank == rank

    def test_csv_row(self):
        """Test the unreduced ratio format."""
        assert table2(3, 4).csv() == "3,4,165,64,63,63/165,63/64"

    def test_methods_agree(self):
        """Test elimination and normal form on small grids."""
        for n, d, primed in [(2, 2, False), (2, 3, True), (3, 2, False), (3, 2, True)]:
            by_rank = table2(n, d, primed=primed, method=RankMethod.ELIMINATION)
            by_count = table2(n, d, primed=primed, method=RankMethod.NORMAL_FORM)
            assert by_rank.method == RankMethod.ELIMINATION
            assert by_rank == by_count

    def test_auto_prefers_elimination(self):
        """Test auto ranks mid-sized grids exactly and falls back past the limit."""
        row = table2(3, 5)
        assert row.method == RankMethod.ELIMINATION
        assert row.rank == 121
        fallback = table2(3, 5, elimination_limit=1000)
        assert fallback.method == RankMethod.NORMAL_FORM
        assert fallback.rank == 121

    @pytest.mark.slow
    @pytest.mark.parametrize("primed", [False, True])
    def test_published_grid(self, primed):
        """Test every cell within the default budget against the published ranks."""
        published = PUBLISHED_PRIMED_RANKS if primed else PUBLISHED_RANKS
        rows = table2_grid(primed=primed, budget=4096)
        assert len(rows) == (34 if primed else 41)
        for row in rows:
            assert row.zeros <= 4096
            assert row.rank == published[row.n][row.d - 1], (row.n, row.d)

    def test_r_prime(self):
        """Test r'_{n,2} = (n^2 + n + 2) / 2."""
        assert r_prime_n2(1) == 2
        assert r_prime_n2(3) == 7
        assert r_prime_n2(10) == 56
        for n in range(1, 11):
            assert table2(n, 1, primed=True).rank == r_prime_n2(n)

    def test_budget(self):
        """Test oversized grids are refused."""
        with pytest.raises(BudgetExceededError) as error:
            table2(10, 2, budget=100)
        assert error.value.details["zeros"] == 1024

    def test_grid_skips_large_cells(self, caplog):
        """Test the full table keeps only cells within the budget."""
        with caplog.at_level(logging.INFO, logger="momentcone.catalog.grids"):
            rows = table2_grid(budget=16)
        cells = [(row.n, row.d) for row in rows]
        assert cells == [(3, 1), (3, 2), (4, 1), (4, 2)] + [(n, 1) for n in range(5, 11)]
        assert all(row.zeros <= 16 for row in rows)
        assert all(row.rank == 1 for row in rows if row.d == 1)
        assert "skipping n=3 d=3 primed=False" in caplog.text

    def test_trends(self):
        """Test w increases along d for n = 3."""
        rows = [table2(3, d) for d in range(1, 5)]
        trends = {t.name: t for t in observed_trends(rows)}
        assert trends["w increases with d"].holds
        assert trends["w increases with d"].comparisons == 3
        assert not trends["z decreases with d"].holds

    def test_grid_rank_count(self):
        """Test standard monomial counts."""
        assert grid_rank_count(10, 2, 2) == 56
        assert grid_rank_count(2, 4, 2) == 4
        assert grid_rank_count(1, 3, 10) == 4


class TestExamples:
    """Test cases for the worked example systems."""

    def test_catalog_flags(self):
        """Test the four combinations of C_A = N_A and interior iff regular."""
        flags = [(e.cara_equals_na, e.interior_iff_regular) for e in example_systems()]
        assert flags == [(True, True), (True, False), (False, True), (False, False)]
        with pytest.raises(InvalidArgumentError):
            example_system("unknown")

    def test_complete(self):
        """Test A_{1,4} at three atoms is regular."""
        example = example_system("complete")
        assert example.cara == example.na == 3
        assert example.jacobian_rank() == 5

    def test_inter_singular(self):
        """Test the kernel functional of {1, x^2, x^3, x^5, x^6} at 1 and 2."""
        example = example_system("inter-singular")
        assert example.functional == (52, -231, 225, -63, 17)
        assert example.functional_at(-1) == -324
        assert example.functional_at(0) == 52
        assert example.jacobian_rank() == 4

    def test_boundary_singular(self):
        """Test p_1 = x^6 - 3x^2 + 2 vanishes at the atoms."""
        example = example_system("boundary-singular")
        assert example.points == (Point.affine(1), Point.affine(-1))
        assert example.functional_at(1) == 0
        assert example.functional_at(0) == 2
        assert classify(example.system, example.measure()) == Regularity.SINGULAR

    def test_inter_singular_multi(self):
        """Test ten atoms under B_{2,6} have rank 27 and an indefinite functional."""
        example = example_system("inter-singular-multi")
        assert example.jacobian_rank() == 27
        assert example.functional_at(1, 2, 3) == 72
        assert example.functional_at(6, 2, 3) == -1008
        assert all(not example.functional_at(*z.coordinates) for z in example.points)

    def test_boundary_determinant(self):
        """Test the factored determinant at fixed and random rationals."""
        assert boundary_determinant(1, 0) == (4, 4)
        assert boundary_determinant(2, 0)[0] == 512
        rng = np.random.default_rng(20)
        for _ in range(20):
            x = Fraction(int(rng.integers(-20, 21)), int(rng.integers(1, 10)))
            y = Fraction(int(rng.integers(-20, 21)), int(rng.integers(1, 10)))
            if x == y:
                continue
            computed, factored = boundary_determinant(x, y)
            assert computed == factored
        with pytest.raises(InvalidArgumentError):
            boundary_determinant(1, 1)

    def test_boundary_polynomial(self):
        """Test p_a terms and the single zero at a = 0."""
        p = boundary_polynomial(1)
        assert isinstance(p, NamedPolynomial)
        assert p.terms() == [("1", 2), ("x^2", -3), ("x^6", 1)]
        assert len(boundary_polynomial(0).zeros) == 1

    def test_kappa_example(self):
        """Test the piecewise instance data."""
        system, ground, s, x = kappa_example(1)
        assert system.labels == ("1", "x", "f1")
        assert len(ground) == 3
        assert s == (2, -2, 0)
        assert x == Point.affine(-2)
        assert system.evaluate(Point.affine(3)) == (1, 3, 3)

    def test_named_system(self):
        """Test lookup by name."""
        assert named_system("harris").size == 66
        assert named_system("kappa_2").labels == ("1", "x", "f2")
        assert named_system("kappa3").evaluate(Point.affine(2)) == (1, 2, 8)
        assert named_system("inter-singular").size == 5
        with pytest.raises(InvalidArgumentError):
            named_system("kappa_x")
        with pytest.raises(InvalidArgumentError):
            named_system("nope")


class TestBounds:
    """Test cases for counting bounds."""

    def test_plane_projective(self):
        """Test B_{2,10}."""
        bounds = cara_bounds(2, 10, Space.PROJECTIVE)
        assert bounds.m == 66
        assert bounds.upper == 32
        assert bounds.lower == 22

    def test_cube(self):
        """Test A_{10,2} on the cube."""
        bounds = cara_bounds(10, 2, "cube")
        assert bounds.lower == 56
        assert bounds.upper == 65

    def test_line(self):
        """Test the exact univariate value."""
        bounds = cara_bounds(1, 4, Space.LINE)
        assert bounds.lower == bounds.upper == 3
        assert bounds.signed_upper == 4
        with pytest.raises(InvalidArgumentError):
            cara_bounds(2, 4, Space.LINE)

    def test_plane_odd(self):
        """Test A_{2,3} is pinned down to 4."""
        bounds = cara_bounds(2, 3)
        assert bounds.lower == bounds.upper == 4
        assert bounds.signed_upper == 8

    def test_entries_have_sources(self):
        """Test every entry names where it comes from."""
        bounds = cara_bounds(2, 4)
        assert bounds.lower == 6
        assert ("lower", 6) in {(b.kind, b.value) for b in bounds.entries if "N_A" in b.source}
        assert all(b.source for b in bounds.entries)
        assert {b.kind for b in bounds.entries} == {"lower", "upper"}

    def test_flat_extension(self):
        """Test moment counts for A_{5,14} and 7678 atoms."""
        counts = flat_extension_counts(5, 7, 7678)
        assert counts.matrix_size == 792
        assert counts.degree == 13
        assert counts.lower == 107127
        assert counts.upper == 158283
        zero = flat_extension_counts(2, 2, 0)
        assert zero.lower == zero.upper == 0

    def test_pythagoras(self):
        """Test square dimensions and the resulting bound."""
        assert square_dimension(gapped_system([0, 1, 3, 7])) == 10
        assert pythagoras_lower(gapped_system([0, 1, 3, 7])) == 3
        assert pythagoras_lower(affine_system(1, 5)) == 2
        assert pythagoras_lower(gapped_system([0])) == 1

    def test_tensor_rank(self):
        """Test the dimension count."""
        assert tensor_rank_lower([2, 2, 2]) == 2
        assert tensor_rank_lower([3, 3, 3]) == 4
        with pytest.raises(InvalidArgumentError):
            tensor_rank_lower([])

    def test_quadratic_cone(self):
        """Test Hankel positivity for {1, x, x^2}."""
        assert quadratic_cone_member([1, 0, 1])
        assert quadratic_cone_member([0, 0, 0])
        assert quadratic_cone_member([2, 2, 2])
        assert not quadratic_cone_member([1, 2, 1])
        assert not quadratic_cone_member([0, 0, 1])
        with pytest.raises(InvalidArgumentError):
            quadratic_cone_member([1, 0])


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
