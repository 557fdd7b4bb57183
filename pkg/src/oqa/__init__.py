"""Exact tooling for oriented quantum algebra structures.

Finite-dimensional algebras are given by structure constants over an exact
scalar field (rational functions in named parameters); on top of that the
package provides sparse tensor elements, axiom checkers for oriented quantum
algebras, their nine-component cross variants and (quasitriangular) Hopf
algebras, the tensor-product constructions relating them, a catalog of
built-in worked examples with expected outputs, and a command-line front end.
"""

from .algebra import (
    Algebra,
    AlgebraError,
    AlgebraMap,
    BadUnitError,
    Element,
    NonAssociativeError,
    NotInvertibleError,
    NotMultiplicativeError,
    NotUnitalError,
    ShapeMismatchError,
    SingularError,
    identity_map,
    invert_element,
    make_algebra,
    make_map,
    maps_commute,
    matrix_algebra,
    opposite,
    tensor_algebra,
    tensor_map,
    validate_algebra,
)
from .catalog import (
    CatalogError,
    DiffReport,
    Fixture,
    OrderingSpec,
    catalog_get,
    catalog_names,
    compare_to_expected,
    matrix_of,
)
from .hopf import (
    HopfAlgebra,
    antipode_square_inverse,
    bicrossed_coproduct,
    check_hopf,
    check_quasitriangular,
    check_weak_rmatrix,
    combined_coupling,
    cor39_oqa,
    certify_hopf,
    make_hopf,
    qt_bicrossed,
    qt_to_oqa,
)
from .nonuple import (
    Nonuple,
    build_thm35,
    build_thm36,
    build_thm37,
    certify_nonuple,
    check_nonuple,
    check_pair_compat,
    derived_identities,
    diagonal_nonuple,
    swap_nonuple_orientation,
)
from .oriented import (
    OqaCandidate,
    certify,
    check_oqa,
    check_ybe_alt,
    radford_double,
    swap_orientation,
    tensor_oqa,
)
from .reports import CertificationError, CheckReport, UncertifiedInputError, Verdict, Witness
from .scalars import (
    EvaluationError,
    LaurentPoly,
    Rational,
    Scalar,
    ScalarError,
    ScalarParseError,
    eval_scalar,
    parse_scalar,
    scalar_eq,
)
from .tensors import (
    TensorElement,
    apply_maps,
    embed,
    first_difference,
    flatten,
    multi_product,
    outer,
    permute_legs,
    tensor_invert,
    tensor_multiply,
    unflatten,
)

__all__ = [name for name in dir() if not name.startswith("_")]
