"""Exact left/right multiplication matrices for C, H and O, barred octonionic
operators under right-action priority, and machine-checked Clifford sets."""

from .algebra import (
    ComplexNum,
    OctonionNum,
    QuaternionNum,
    StructureTable,
    associator,
    commutator,
    conj,
    mul,
    norm_sq,
    structure_table,
)
from .appendix import appendix_block, appendix_tables
from .clifford import (
    GammaSet,
    LieBasis,
    cliff70_set,
    cliff76_set,
    quaternion_gamma_set,
    sixth_gamma_search,
    so7_basis,
    so8_basis,
    spin23_basis,
    verify_clifford,
)
from .matrix import IntMatrix, span_rank
from .reps import (
    conj_matrix,
    conj_twisted,
    embed,
    left_matrix,
    mixed_matrix,
    octonion_commutator_defect,
    right_matrix,
    unembed,
    verify_quaternion_product_rules,
)
from .words import Factor, OperatorWord, anticommutator, apply, l_op, naive_anticommutator, parse_word, r_op, translate

__version__ = "0.1.0"
