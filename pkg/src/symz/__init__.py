"""Exact symmetric polynomials in the variables z_j = x_j + 1/x_j.

The subpackages are importable on their own; this module re-exports the
entry points most callers want.
"""
from .chebyshev import ChebKind, cheb_half, cheb_value
from .classical import base_poly, monomial_symmetric, schur, skew_schur_jt, sp_o_jt
from .exactpoly import LaurentPoly, MultiPoly, PolyMatrix, UniPoly, det_exact
from .palintoeplitz import PalindromicSymbol, ZRootData, symbol_from_zroots, toeplitz_det, toeplitz_minor
from .partition import Partition, SkewPartition, conjugate, parse_partition
from .phi import laurent_check, phi, phi_odd
from .zfamilies import det_family, expand_in_basis, sz_skew, zbase

__version__ = "0.1.0"

__all__ = [
    "ChebKind", "LaurentPoly", "MultiPoly", "PalindromicSymbol", "Partition", "PolyMatrix",
    "SkewPartition", "UniPoly", "ZRootData", "base_poly", "cheb_half", "cheb_value", "conjugate",
    "det_exact", "det_family", "expand_in_basis", "laurent_check", "monomial_symmetric",
    "parse_partition", "phi", "phi_odd", "schur", "skew_schur_jt", "sp_o_jt", "symbol_from_zroots",
    "sz_skew", "toeplitz_det", "toeplitz_minor", "zbase",
]
