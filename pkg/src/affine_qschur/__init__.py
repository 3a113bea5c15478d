"""Exact computations in the affine q-Schur algebra S(n, d)."""
from .laurent import LaurentPoly, qint, qbinom_entry
from .affine_weyl import AffinePerm, kappa, kappa_inv
from .theta import ThetaMatrix, Order, e_matrix, from_entries, diag_matrix, leq_a
from .schur import SchurElement, standard, mult_bidiag, highest_term, mult_general, identity_element
from .bases import BasisContext, BidiagonalChain, factor_bidiagonal, monomial, bar_standard, canonical
from .hecke import oracle_product, oracle_bar

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "qint",
    "qbinom_entry",
    "AffinePerm",
    "kappa",
    "kappa_inv",
    "ThetaMatrix",
    "Order",
    "e_matrix",
    "from_entries",
    "diag_matrix",
    "leq_a",
    "SchurElement",
    "standard",
    "mult_bidiag",
    "highest_term",
    "mult_general",
    "identity_element",
    "BasisContext",
    "BidiagonalChain",
    "factor_bidiagonal",
    "monomial",
    "bar_standard",
    "canonical",
    "oracle_product",
    "oracle_bar",
]
