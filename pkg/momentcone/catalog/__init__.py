"""Named polynomials, example systems, table generators and counting bounds."""

from momentcone.catalog.bounds import (
    Bound,
    CaraBounds,
    FlatExtensionCounts,
    Space,
    cara_bounds,
    flat_extension_counts,
    pythagoras_lower,
    quadratic_cone_member,
    square_dimension,
    tensor_rank_lower,
)
from momentcone.catalog.examples import (
    ExampleSystem,
    boundary_determinant,
    example_system,
    example_systems,
    kappa_example,
    kappa_system,
    named_system,
)
from momentcone.catalog.grids import (
    RankMethod,
    TableRow,
    Trend,
    frak_p,
    frak_q,
    grid_rank_count,
    observed_trends,
    r_prime_n2,
    table2,
    table2_grid,
)
from momentcone.catalog.harris import TABLE1_RANKS, boundary_polynomial, harris, harris_zeros, increments, table1
from momentcone.catalog.polynomial import NamedPolynomial

__all__ = [
    "Bound",
    "CaraBounds",
    "ExampleSystem",
    "FlatExtensionCounts",
    "NamedPolynomial",
    "RankMethod",
    "Space",
    "TABLE1_RANKS",
    "TableRow",
    "Trend",
    "boundary_determinant",
    "boundary_polynomial",
    "cara_bounds",
    "example_system",
    "example_systems",
    "flat_extension_counts",
    "frak_p",
    "frak_q",
    "grid_rank_count",
    "harris",
    "harris_zeros",
    "increments",
    "kappa_example",
    "kappa_system",
    "named_system",
    "observed_trends",
    "pythagoras_lower",
    "quadratic_cone_member",
    "r_prime_n2",
    "square_dimension",
    "table1",
    "table2",
    "table2_grid",
    "tensor_rank_lower",
]
