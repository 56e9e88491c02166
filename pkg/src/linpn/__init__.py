"""Exact linear Poisson-Nijenhuis structures and their trace-polynomial Hamiltonians."""

from .errors import DegenerateError, DimensionError, LinPNError, PreconditionError, StructureError
from .exactmath import Mat, MPoly, Rational, mat_inverse, mat_mul, parse_rational, poly_eval
from .lsa import AlgebraSpec, LieAlgebraSpec, derived_lie, jacobi_defect, left_symmetry_defect
from .symplectic import Cocycle2, SymplecticLieAlgebra, cocycle_defect, lsa_from_symplectic
from .hamiltonians import hamiltonians, involution_certificate, independence_rank

__version__ = "0.1.0"
