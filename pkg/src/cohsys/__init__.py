"""Coherent systems on the projective line: walls, flip numbers and existence ranges."""

from .classifier import ExistenceVerdict, classify, construction_route
from .critical import (
    CriticalDataSet,
    FlipNumbers,
    alpha_c_of,
    c12_rearranged,
    enumerate_walls,
    flip_numbers,
    flip_outcome,
    is_allowable,
)
from .exact import DomainError, format_rational, isqrt, parse_rational, rational_cmp
from .systems import AlphaRange, Coordinates, SystemType, beta, decompose, mu_alpha, necessary_range

__version__ = "0.1.0"
