"""Exact tools for degree estimates of polynomial systems and plane automorphisms."""

from .calculus import (PolySystem, chain_rule_residual, gradient, is_algebraically_independent,
                       jacobian_minor, max_jacobian_degree)
from .errors import TamePolyError
from .parachute import ParachuteReport, check_para_inequality, derivative_wrt_generator, parachute
from .poly import NEG_INFINITY, Polynomial, VarSpace, Xspace, format_poly, parse, substitute, xspace

__all__ = [
    "NEG_INFINITY", "ParachuteReport", "PolySystem", "Polynomial", "TamePolyError", "VarSpace",
    "Xspace", "chain_rule_residual", "check_para_inequality", "derivative_wrt_generator",
    "format_poly", "gradient", "is_algebraically_independent", "jacobian_minor",
    "max_jacobian_degree", "parachute", "parse", "substitute", "xspace",
]
