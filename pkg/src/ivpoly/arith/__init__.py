"""Exact arithmetic kernels: polynomials and square matrices over Z, Q and
Z/dZ, division-free characteristic polynomials, and modular kernels."""
from .linalg import hermite_normal_form, kernel_mod_d, rank_rational, solve_rational, span_mod_d
from .matrix import (
    ModMat,
    QMat,
    ZMat,
    charpoly,
    charpoly_by_lift,
    companion,
    format_matrix,
    mat_poly_eval,
)
from .parse import parse_int_matrix, parse_matrix, parse_poly, parse_quadratic_element, parse_zpoly
from .poly import ZERO_DEGREE, ModPoly, QPoly, ZPoly, format_poly, poly_divmod_monic

__all__ = [
    "ZERO_DEGREE",
    "ZPoly",
    "QPoly",
    "ModPoly",
    "ZMat",
    "QMat",
    "ModMat",
    "poly_divmod_monic",
    "charpoly",
    "charpoly_by_lift",
    "companion",
    "mat_poly_eval",
    "kernel_mod_d",
    "span_mod_d",
    "hermite_normal_form",
    "rank_rational",
    "solve_rational",
    "format_poly",
    "format_matrix",
    "parse_poly",
    "parse_zpoly",
    "parse_matrix",
    "parse_int_matrix",
    "parse_quadratic_element",
]
