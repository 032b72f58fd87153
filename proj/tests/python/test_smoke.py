"""Smoke tests for the Python bindings."""

import pytest

import mcs


def test_reduction_example():
    assert mcs.reduce_two("ababacbcb", "abab", "acbcb") == "abacbcb"
    assert mcs.mcs_two("abab", "acbcb") == "abacbcb"
    assert mcs.mcs_k(["abab", "acbcb", "bb"]) != ""


def test_embeddings():
    assert mcs.right_embedding("abab", "ababacbcb") == [3, 4, 5, 9]
    assert mcs.left_embedding("abab", "ababacbcb") == [1, 2, 3, 4]
    assert mcs.is_subsequence("abab", "abcbacb")
    assert not mcs.is_subsequence("abab", "abcbcb")
    with pytest.raises(ValueError):
        mcs.left_embedding("ba", "ab")


def test_verify_and_essential():
    assert mcs.verify_minimal("abacbcb", ["abab", "acbcb"])
    assert not mcs.verify_minimal("ababacbcb", ["abab", "acbcb"])
    assert 5 in mcs.essential_indices("abcbacb", "abab")


def test_enumeration():
    assert mcs.enumerate_mcs("a", "b") == ["ba", "ab"]
    assert mcs.count_mcs("a", "b") == 2
    assert mcs.count_mcs("abca", "abca") == 1
    full = mcs.enumerate_mcs("bacba", "abcca")
    assert len(full) == len(set(full))
    assert mcs.count_mcs("bacba", "abcca") == len(full)
    assert mcs.enumerate_mcs("bacba", "abcca", limit=2) == full[:2]
    assert sorted(set(full)) == mcs.brute_mcs_set("bacba", "abcca", 10)


def test_reduce_errors():
    with pytest.raises(ValueError):
        mcs.reduce_two("ab", "ab", "ba")
    with pytest.raises(ValueError):
        mcs.reduce_k("ab", ["ab", "ba"])


def test_delay_probe_and_dot():
    assert mcs.delay_probe("abc", "abc") == [0]
    gaps = mcs.delay_probe("bacba", "abcca")
    assert len(gaps) == mcs.count_mcs("bacba", "abcca")
    dot = mcs.st_graph_dot("bacba", "abcca")
    assert '"(A,0,B,0)"' in dot
    assert mcs.st_graph_dot("ab", "ab").startswith("digraph")
