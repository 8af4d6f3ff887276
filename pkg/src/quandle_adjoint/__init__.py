"""Adjoint and fundamental groups of finite Alexander quandles.

Core layers, bottom up:

  exactalg   Smith normal form, unimodular inverses, cokernels
  abelian    finite abelian groups, elements, endomorphisms
  quandle    operation tables, axioms, connectivity
  tensor     tensor squares, the twist, S(M, T), the class map
  adjoint    the model group on Z x M x S(M, T), actions, suites
  oracle     brute-force enumeration cross-checks

Front ends: ``cli`` (thin command line client) and ``service``
(FastAPI app over the same report builders in ``reports``).
"""

__version__ = "0.1.0"

from .abelian import (
    EndoMatrix,
    FinAbGroup,
    add,
    apply_endo,
    elements,
    endo_pow,
    is_automorphism,
    make_endo,
    make_group,
    neg,
    zero,
)
from .adjoint import (
    AdjContext,
    FElement,
    GeneratorWord,
    Pi1Result,
    act,
    check_phi_relations,
    eval_word,
    express_in_generators,
    f_inv,
    f_mul,
    gamma,
    make_context,
    phi,
    pi1,
    verify_identity_suite,
)
from .errors import (
    CapExceeded,
    DimensionMismatch,
    IllDefinedHom,
    InfiniteQuotient,
    InvalidInputSpec,
    NonFiniteGroup,
    NotConnected,
    NotInvertible,
    QuandleAdjointError,
)
from .exactalg import CokerPresentation, SnfResult, cokernel, smith_normal_form
from .quandle import (
    QuandleTable,
    alexander_op,
    build_alexander_table,
    is_connected,
    is_connected_linear,
    is_quandle,
)
from .tensor import SGroup, TensorSquare, bilinear_expand, class_of, lift_class, s_group, tau_matrix

__all__ = [
    "AdjContext",
    "CapExceeded",
    "CokerPresentation",
    "DimensionMismatch",
    "EndoMatrix",
    "FElement",
    "FinAbGroup",
    "GeneratorWord",
    "IllDefinedHom",
    "InfiniteQuotient",
    "InvalidInputSpec",
    "NonFiniteGroup",
    "NotConnected",
    "NotInvertible",
    "Pi1Result",
    "QuandleAdjointError",
    "QuandleTable",
    "SGroup",
    "SnfResult",
    "TensorSquare",
    "act",
    "add",
    "alexander_op",
    "apply_endo",
    "bilinear_expand",
    "build_alexander_table",
    "check_phi_relations",
    "class_of",
    "cokernel",
    "elements",
    "endo_pow",
    "eval_word",
    "express_in_generators",
    "f_inv",
    "f_mul",
    "gamma",
    "is_automorphism",
    "is_connected",
    "is_connected_linear",
    "is_quandle",
    "lift_class",
    "make_context",
    "make_endo",
    "make_group",
    "neg",
    "phi",
    "pi1",
    "s_group",
    "smith_normal_form",
    "tau_matrix",
    "verify_identity_suite",
    "zero",
]
