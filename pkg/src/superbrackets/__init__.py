"""Higher Poisson, Koszul--Schouten and higher Schouten brackets on supermanifolds."""

__version__ = "0.1.0"

from .grading import (
    Parity, Kind, GradedVariable, GradedPolynomial, Poly, ZERO, ONE,
    GradedAlgebraError, UnknownVariable, MixedCoordinateSystems, ParityMismatch,
    normalize, mul, partial, right_partial, substitute, hbar_coefficient,
)
from .phase import (
    Bundle, Manifold, CoordinateSystem, HigherPoissonStructure, VectorField,
    InvalidStructure, NotEven, MasterEquationViolation, WrongBundle,
    schouten, canonical_poisson, degree_component, multivector_degree,
    form_degree, deform, hamiltonian_vector_field, linear_hamiltonian,
    r_pullback,
)
from .operators import (
    DiffOperator, apply, compose, commutator, exterior_derivative,
    interior_product, lie_derivative, total_symbol, check_lie_morphism,
    check_nilpotent, check_naturality, check_symbol_squares_to_zero,
)
from .brackets import (
    Hierarchy, BracketHierarchy, NotABaseFunction, ArityMismatch,
    higher_poisson_bracket, ks_bracket, higher_schouten_bracket, bracket,
    jacobiator, check_strict_leibniz, check_ks_recursion,
    check_d_derivation_rule, check_lemma_poisson, check_prop3,
    check_theorem_symbol_form, check_kp_hamiltonian, check_kp_display,
    check_termination, kp_display,
)
from .report import BracketReport
from .dsl import parse, parse_expr, format_poly, DSLError
