"""Exact cohomology computations for the dihedral moduli spaces M_{0,n}^delta."""

from .combinatorics import Dissection, Partition, count_P, count_T, enumerate_dissections, partitions
from .moduli import (
    BettiTable,
    betti_table,
    closed_formula_check,
    euler_compact,
    euler_delta,
    euler_open,
    middle_betti,
    verify_inversion,
)
from .polynomial import Polynomial
from .series import TruncatedSeries, compose, egf_scale, revert, revert_lagrange

__version__ = "0.1.0"
