"""Exact root-system and splitting-type computations.

Rational results are returned as :class:`fractions.Fraction`.
"""

from ._unbend import (
    UnbendError,
    cartan_matrix,
    classify_splitting,
    fundamental_weight,
    highest_root,
    horospherical_verify,
    module_weights,
    pairing,
    positive_roots,
    run_cli,
    special_nodes,
    tangent_splitting,
    unbendable_violations,
    weyl_dimension,
)

__all__ = [
    "UnbendError",
    "cartan_matrix",
    "classify_splitting",
    "fundamental_weight",
    "highest_root",
    "horospherical_verify",
    "module_weights",
    "pairing",
    "positive_roots",
    "run_cli",
    "special_nodes",
    "tangent_splitting",
    "unbendable_violations",
    "weyl_dimension",
]

__version__ = "0.1.0"
