"""Bivariate Koornwinder polynomials (parabolic biangle, square, Laguerre-Jacobi,
Laguerre-Laguerre), their closed-form parameter derivatives, and quadrature /
finite-difference oracles that check them."""

from .derivatives import Expansion2D, ExpansionTerm2D, UnsupportedParameterError, derivative_expansion, eval_expansion
from .families import DomainError, Family, FamilySpec, MultiIndex, family_eval, family_norm, family_weight
from .quadrature import family_rule, gauss_jacobi, gauss_laguerre, golub_welsch, inner_product
from .verification import fd_derivative, ortho_constant, verify_derivatives, verify_orthogonality

__all__ = [
    "DomainError",
    "Expansion2D",
    "ExpansionTerm2D",
    "Family",
    "FamilySpec",
    "MultiIndex",
    "UnsupportedParameterError",
    "derivative_expansion",
    "eval_expansion",
    "family_eval",
    "family_norm",
    "family_rule",
    "family_weight",
    "fd_derivative",
    "gauss_jacobi",
    "gauss_laguerre",
    "golub_welsch",
    "inner_product",
    "ortho_constant",
    "verify_derivatives",
    "verify_orthogonality",
]
