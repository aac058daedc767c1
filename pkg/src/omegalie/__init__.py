"""Exact tools for omega-deformed Lie algebras.

A deformed algebra is a skew bracket [.,.] together with a 2-form omega
satisfying, for all A, B, C,

    [A,[B,C]] + [C,[A,B]] + [B,[C,A]] = omega(B,C) A + omega(A,B) C + omega(C,A) B.

The package represents such structures exactly (rational arithmetic
throughout), decomposes the 3-dimensional ones into dual data (n, a, b)
with the forced choice b = -2 n a, splits general-dimension brackets into
trace part and trace-free part, classifies every valid 3-dimensional
instance onto one of two Bianchi-style normal-form tables, and ships a
JSON document format plus the ``omegalie`` command line around it all.
"""

from .algebra_core import (AlgebraSpec, ResidualTensor, SkewViolation,
                           SkewViolationError, bracket, jacobiator,
                           omega_rhs, omega_rhs_is_identically_zero,
                           omega_value, residual, transport, validate_skew)
from .classify3d import (FIRST_TABLE_ORDER, PARAMETRIC_LABELS,
                         SECOND_TABLE_ORDER, BianchiLabel, ExactCertificates,
                         NormalForm, NotAnAlgebraError, ScalingGroup,
                         causal_character, classify, generate, orbit_sample,
                         residual_scalings, table_row)
from .decomp3d import (NabTriple, decompose, dual_c, forced_b, forced_omega,
                       reconstruct, t_vector)
from .decomp_nd import (DeformabilityResult, GeneralSplit,
                        check_deformability, deformability, induced_omega,
                        split_trace)
from .io_cli import (DocumentError, ExactnessError, document_object, parse,
                     serialize)
from .tensor_core import (Inertia, Matrix, Scalar, SingularMatrixError,
                          adjugate, congruence_diagonalize, inertia, invert,
                          levi_civita, rational)

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec", "BianchiLabel", "DeformabilityResult", "DocumentError",
    "ExactCertificates", "ExactnessError", "FIRST_TABLE_ORDER",
    "GeneralSplit", "Inertia", "Matrix", "NabTriple", "NormalForm",
    "NotAnAlgebraError", "PARAMETRIC_LABELS", "ResidualTensor",
    "SECOND_TABLE_ORDER", "Scalar", "ScalingGroup", "SingularMatrixError",
    "SkewViolation", "SkewViolationError", "adjugate", "bracket",
    "causal_character", "check_deformability", "classify",
    "congruence_diagonalize", "decompose", "deformability",
    "document_object", "dual_c", "forced_b", "forced_omega", "generate",
    "induced_omega", "inertia", "invert", "jacobiator", "levi_civita",
    "omega_rhs", "omega_rhs_is_identically_zero", "omega_value",
    "orbit_sample", "parse", "rational", "reconstruct", "residual",
    "residual_scalings", "serialize", "split_trace", "t_vector",
    "table_row", "transport", "validate_skew",
]
