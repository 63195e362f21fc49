"""Finite-group ground truth: GL_n(F_q) double cosets and structure constants."""

from .kernel import BACKEND, available_backends, backend_name, get_backend
from .oracle import (
    Check, FieldParams, GLOracle, OracleReport, SL2Decomposition, primitive_root,
    sl2_class_sizes, sl2_decompose, verify_mult_theorem,
)

__all__ = [
    "BACKEND", "available_backends", "backend_name", "get_backend",
    "Check", "FieldParams", "GLOracle", "OracleReport", "SL2Decomposition",
    "primitive_root", "sl2_class_sizes", "sl2_decompose", "verify_mult_theorem",
]
