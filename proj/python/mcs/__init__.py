"""Minimal common supersequence algorithms.

Linear-time reduction of a common supersequence of two strings to a minimal
one, an O(N log N) reduction for k strings, and enumeration of every minimal
common supersequence of two strings with linear delay.
"""

from ._mcs import (
    brute_is_minimal,
    brute_mcs_set,
    count_mcs,
    delay_probe,
    enumerate_mcs,
    essential_indices,
    is_subsequence,
    left_embedding,
    mcs_k,
    mcs_two,
    reduce_k,
    reduce_two,
    right_embedding,
    st_graph_dot,
    verify_minimal,
)

__all__ = [
    "brute_is_minimal",
    "brute_mcs_set",
    "count_mcs",
    "delay_probe",
    "enumerate_mcs",
    "essential_indices",
    "is_subsequence",
    "left_embedding",
    "mcs_k",
    "mcs_two",
    "reduce_k",
    "reduce_two",
    "right_embedding",
    "st_graph_dot",
    "verify_minimal",
]
