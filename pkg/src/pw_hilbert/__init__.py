"""Exact cohomology of Hilbert schemes of points on two surfaces with matching Betti numbers.

Builds ``H*(S^[n])`` from partition-indexed symmetric-product pieces, computes
weight, halved weight, perverse Leray and Leray filtrations, and checks the
perverse/weight exchange and three hard Lefschetz statements by exact rank
computations.
"""

from .filtrations import (
    halved_weight,
    leray_filtration_X,
    perverse_filtration_X,
    pw_exchange_check,
    weight_filtration_Y,
)
from .hilbert import assemble, betti, goettsche_oracle, mixed_hodge_table
from .invariants import cup_operator, invariant_basis, signed_permute, symmetric_power_dim_oracle
from .lefschetz import atq2_check, chl_check, hl_check, relative_hl_check
from .linalg import ExactMatrix
from .partitions import Partition, automorphism_order, enumerate_partitions, length, multiplicity_symbol
from .surfaces import X_ID, Y_ID, alpha_class, cup, graded_basis, model

__all__ = [
    "ExactMatrix", "Partition", "X_ID", "Y_ID", "alpha_class", "assemble", "atq2_check",
    "automorphism_order", "betti", "chl_check", "cup", "cup_operator", "enumerate_partitions",
    "goettsche_oracle", "graded_basis", "halved_weight", "hl_check", "invariant_basis", "length",
    "leray_filtration_X", "mixed_hodge_table", "model", "multiplicity_symbol", "perverse_filtration_X",
    "pw_exchange_check", "relative_hl_check", "signed_permute", "symmetric_power_dim_oracle",
    "weight_filtration_Y",
]
