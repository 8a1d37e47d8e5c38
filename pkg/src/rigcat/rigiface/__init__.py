from .instance import (
    EnumerationUnsupported,
    FSetInstance,
    MatInstance,
    MutantInstance,
    RigInstance,
    d_prime_recursive,
    fset_instance,
    instance_by_name,
    mat_instance,
    target_names,
    v_iso,
)
from .laplaza import DIAGRAMS, NotStrict, axiom_ids, check_laplaza, strict
from .matrix import (
    ExactMatrix,
    NonInvertible,
    matrix_from_literal,
    perm_matrix,
    random_invertible,
    random_matrix,
)
from .report import FAIL, PASS, SKIP, AxiomReport, Witness

__all__ = [
    "AxiomReport",
    "DIAGRAMS",
    "EnumerationUnsupported",
    "ExactMatrix",
    "FAIL",
    "FSetInstance",
    "MatInstance",
    "MutantInstance",
    "NonInvertible",
    "NotStrict",
    "PASS",
    "RigInstance",
    "SKIP",
    "Witness",
    "axiom_ids",
    "check_laplaza",
    "d_prime_recursive",
    "fset_instance",
    "instance_by_name",
    "mat_instance",
    "matrix_from_literal",
    "perm_matrix",
    "random_invertible",
    "random_matrix",
    "strict",
    "target_names",
    "v_iso",
]
