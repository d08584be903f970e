"""Exact fields and canonical linear algebra."""

from .fields import (
    QQ,
    Cyclotomic,
    FieldMismatchError,
    FieldSpec,
    PrimeField,
    Rationals,
    Scalar,
    cyclotomic_polynomial,
    euler_phi,
    field_from_spec,
    root_of_unity,
)
from .linalg import (
    Mat,
    RowReducer,
    identity,
    inverse_rows,
    left_kernel_rows,
    mat_mul,
    rank,
    rref,
    rref_rows,
    solve_left,
    tensor_index,
    tensor_unindex,
    transpose,
    unit_vector,
)
from .subspace import Subspace, image, kernel, preimage, quotient_basis

__all__ = [
    "QQ", "Cyclotomic", "FieldMismatchError", "FieldSpec", "PrimeField", "Rationals",
    "Scalar", "cyclotomic_polynomial", "euler_phi", "field_from_spec", "root_of_unity",
    "Mat", "RowReducer", "identity", "inverse_rows", "left_kernel_rows", "mat_mul",
    "rank", "rref", "rref_rows", "solve_left", "tensor_index", "tensor_unindex",
    "transpose", "unit_vector", "Subspace", "image", "kernel", "preimage", "quotient_basis",
]
