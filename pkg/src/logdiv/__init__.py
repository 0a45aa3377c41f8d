"""Exact computational commutative algebra for logarithmic forms and derivations of divisors."""

from .budget import Budget, BudgetExhausted, use_budget
from .gb import (
    FreeModule,
    HilbertSeries,
    Ideal,
    ModuleElement,
    Submodule,
    colon,
    groebner,
    hilbert_series,
    intersect,
    krull_dimension,
    normal_form,
    saturate,
    syzygies,
)
from .poly import PolyRing, Polynomial, evaluate, parse_polynomial, partial, weighted_degree

__version__ = "0.1.0"
