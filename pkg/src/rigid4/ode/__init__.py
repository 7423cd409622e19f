"""Differential equations, power series and algebraic verification."""

from .algebraic import denominator_support, solve_algebraic, verify_algebraic
from .goursat import (OdeCoefficients, goursat_operator, ode_coefficients,
                      recursion_coefficients, series_by_recursion,
                      series_by_substitution, series_solutions)
from .hypergeom import NewtonPolygonSides, newton_exponents, newton_polygon, pfq_series
from .operator import LinearOperator, indicial_exponents, indicial_polynomial
from .series import PowerSeries
