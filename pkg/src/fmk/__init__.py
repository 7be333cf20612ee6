"""Exact classification toolkit for projectively covariant operators.

The package classifies and constructs, by exact rational computation, the
equivariant differential operators from scalar densities to fiber-valued
densities on the cell model of real projective space, together with the
matching maps of generalized Verma modules, their kernel/image K-type
tables, and the standardness of the module maps.
"""

__version__ = "0.1.0"

from .engine import (
    ClassificationRecord, DiffOperatorSpec, FSystem, VermaHomSpec,
    assemble_fsystem, build_operator, classify, fc_inverse, reducibility,
    solve_degree, symbol_inverse,
)
from .errors import FmkError
from .exact import MultiIndex, Polynomial, VectorPolynomial, monomial_basis
from .ktype import (
    composition_series, finite_model_check, harmonic_dim, kernel_image_ktypes,
)
from .ratfunc import LAM, RatFunc
from .series import BundleParams, PDOperator, dpi, verify_intertwining
from .slstruct import GMatrix, ParabolicData, Weight, bracket, parity_add
from .standardness import (
    RootSystemA, boe_check, linkage_search, mu_eta_weights, standardness_report,
)
from .weyl import WeylElement

__all__ = [
    "BundleParams", "ClassificationRecord", "DiffOperatorSpec", "FSystem",
    "FmkError", "GMatrix", "LAM", "MultiIndex", "PDOperator", "ParabolicData",
    "Polynomial", "RatFunc", "RootSystemA", "VectorPolynomial", "VermaHomSpec",
    "Weight", "WeylElement", "assemble_fsystem", "boe_check", "bracket",
    "build_operator", "classify", "composition_series", "dpi", "fc_inverse",
    "finite_model_check", "harmonic_dim", "kernel_image_ktypes",
    "linkage_search", "monomial_basis", "mu_eta_weights", "parity_add",
    "reducibility", "solve_degree", "standardness_report", "symbol_inverse",
    "verify_intertwining",
]
