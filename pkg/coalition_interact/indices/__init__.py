"""Unrestricted indices: Shapley value and the Shapley and Banzhaf interaction indices."""
from .shapley import (
    banzhaf_ii,
    banzhaf_ii_deriv,
    banzhaf_ii_div,
    banzhaf_value,
    s_derivative,
    shapley,
    shapley_marginal,
    sii_deriv,
    sii_div,
)
from .table import IndexKind, InteractionTable, build_table, coalitions_up_to, interaction_table

__all__ = [
    "banzhaf_ii",
    "banzhaf_ii_deriv",
    "banzhaf_ii_div",
    "banzhaf_value",
    "s_derivative",
    "shapley",
    "shapley_marginal",
    "sii_deriv",
    "sii_div",
    "IndexKind",
    "InteractionTable",
    "build_table",
    "coalitions_up_to",
    "interaction_table",
]
