"""Exact-arithmetic Lie algebra extensions and geometric structure checks."""

from .algebra import LieAlgebra, Subspace, adjoint, bracket, center, check_jacobi
from .catalog import BUILTINS, Builtin, builtin
from .derivations import (
    Commute,
    FormEigen,
    Leibniz,
    Sends,
    derivation_space,
    is_derivation,
    map_in_family,
)
from .extensions import (
    ExtensionResult,
    central_extension,
    derivation_extension,
    double_extension,
    is_cocycle,
    lift_one_form,
    reversed_double_extension,
)
from .forms import KForm, ce_differential, evaluation_sign, radical, top_contact_test, wedge, wedge_power
from .linalg import Matrix, Scalar, Vector, matrix, scalar, vector
from .report import CheckItem, CheckReport, DimensionMismatch, LieforgeError, PreconditionError
from .structures import (
    ContactStructure,
    FrobeniusStructure,
    KahlerStructure,
    NijenhuisTable,
    SasakianStructure,
    check_contact,
    check_frobenius,
    check_kahler,
    check_sasakian,
    kahler_metric,
    kirillov_form,
    nijenhuis,
    principal_element,
    sasakian_metric,
)
from .theorems import (
    DoubleExtensionParams,
    contact_ideal_restriction,
    extend_complex_structure,
    frobenius_kahler_to_sasakian,
    kahler_extension_obstruction,
    kahler_to_sasakian_central,
    sasakian_double_extension,
    sasakian_double_extension_conditions,
    sasakian_reduction,
    sasakian_to_frobenius_kahler,
    solve_double_extension_params,
)

__version__ = "0.1.0"
