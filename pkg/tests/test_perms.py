import itertools

import pytest
from hypothesis import given, strategies as st

from richtoric.perms import (
    all_perms,
    all_subsets,
    bruhat_leq,
    check_perm,
    check_subset,
    complement,
    enumerate_S,
    enumerate_T,
    gale_leq,
    identity,
    induced,
    inversions,
    longest,
    parse_perm,
    parse_subset,
    partition_perm,
    perm_leq_subset,
    perm_leq_subset_bruhat,
    perm_str,
    reverse,
    subset_leq_perm,
    subset_leq_perm_bruhat,
    subset_str,
)


# ---------------------------------------------------------------------------
# validation


def test_check_perm_rejects_non_bijections():
    for bad in [(), (0, 1), (1, 1), (2, 3), (1, 2, 4)]:
        with pytest.raises(ValueError):
            check_perm(bad)


def test_check_subset_bounds():
    assert check_subset([3, 1]) == (1, 3)
    with pytest.raises(ValueError):
        check_subset([])
    with pytest.raises(ValueError):
        check_subset([0, 1])
    with pytest.raises(ValueError):
        check_subset([2, 5], n=4)


# ---------------------------------------------------------------------------
# subset order


def test_gale_examples():
    assert gale_leq((1, 2), (2,))
    assert not gale_leq((2, 3), (1, 3))
    assert gale_leq((1, 3), (1, 3))
    # size increase is never dominated
    assert not gale_leq((2,), (1, 3))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_gale_is_a_partial_order(n):
    subs = all_subsets(n)
    for I in subs:
        assert gale_leq(I, I)
    for I, J in itertools.permutations(subs, 2):
        if gale_leq(I, J) and gale_leq(J, I):
            assert I == J
    for I in subs:
        for J in subs:
            if not gale_leq(I, J):
                continue
            for K in subs:
                if gale_leq(J, K):
                    assert gale_leq(I, K)


# ---------------------------------------------------------------------------
# Bruhat order


def test_bruhat_examples():
    assert bruhat_leq((1, 3, 2), (3, 1, 2))
    assert bruhat_leq((2, 3, 1, 4), (4, 3, 1, 2))
    assert not bruhat_leq(longest(3), identity(3))
    assert bruhat_leq(identity(4), longest(4))


def test_bruhat_size_mismatch():
    with pytest.raises(ValueError):
        bruhat_leq((1, 2), (1, 2, 3))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_bruhat_is_a_partial_order(n):
    perms = all_perms(n)
    index = {p: i for i, p in enumerate(perms)}
    up = []
    for p in perms:
        mask = 0
        for q in perms:
            if bruhat_leq(p, q):
                mask |= 1 << index[q]
        up.append(mask)
    for i, p in enumerate(perms):
        assert up[i] >> i & 1  # reflexive
        for j, q in enumerate(perms):
            if up[i] >> j & 1 and up[j] >> i & 1:
                assert i == j  # antisymmetric
            if up[i] >> j & 1:
                assert up[j] & ~up[i] == 0  # transitive


# ---------------------------------------------------------------------------
# mixed comparisons and the Bruhat reformulation


def test_subset_vs_perm_examples():
    assert subset_leq_perm((2, 3), (2, 4, 3, 1))
    assert not perm_leq_subset((2, 3, 1, 4), (1, 2))
    w = (2, 4, 3, 1)
    for k in range(1, 4):
        assert subset_leq_perm(tuple(sorted(w[:k])), w)


def test_reformulation_examples():
    assert subset_leq_perm_bruhat((2, 3), (2, 4, 3, 1))
    assert not perm_leq_subset_bruhat((2, 3, 1, 4), (1, 2))
    # {1} extends to the identity, below everything
    for w in all_perms(4):
        assert subset_leq_perm_bruhat((1,), w)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reformulation_agrees_exhaustively(n):
    for I in all_subsets(n):
        for w in all_perms(n):
            assert subset_leq_perm(I, w) == subset_leq_perm_bruhat(I, w)
            assert perm_leq_subset(w, I) == perm_leq_subset_bruhat(w, I)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_complement_reversal_claim(n):
    # K <= w iff reverse(w) <= complement(K)
    for K in all_subsets(n):
        Kc = complement(K, n)
        for w in all_perms(n):
            assert subset_leq_perm(K, w) == perm_leq_subset(reverse(w), Kc)


# ---------------------------------------------------------------------------
# inversions, induced


def test_inversions():
    assert inversions(identity(5)) == 0
    assert inversions(longest(4)) == 6
    assert inversions((4, 2, 3, 1)) == 5


def test_induced_examples():
    assert induced((1, 3, 4, 2)) == (1, 3, 2)
    assert induced((2, 4, 3, 1)) == (2, 3, 1)
    assert induced(identity(5)) == identity(4)
    with pytest.raises(ValueError):
        induced((1,))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_induced_fibers(n):
    fibers = {}
    for w in all_perms(n):
        fibers.setdefault(induced(w), 0)
        fibers[induced(w)] += 1
    assert set(fibers) == set(all_perms(n - 1))
    assert all(count == n for count in fibers.values())


# ---------------------------------------------------------------------------
# surviving and vanishing coordinate sets


def test_survivor_sets_2314_4231():
    v, w = (2, 3, 1, 4), (4, 2, 3, 1)
    assert [subset_str(J) for J in enumerate_T(v, w)] == [
        "2", "3", "4", "23", "24", "123", "124", "134", "234",
    ]
    assert [subset_str(J) for J in enumerate_S(v, w)] == ["1", "12", "13", "14", "34"]


def test_survivors_at_identity_are_prefixes():
    n = 4
    ident = identity(n)
    assert enumerate_T(ident, ident) == [(1,), (1, 2), (1, 2, 3)]


def test_survivors_incomparable_pair_raises():
    with pytest.raises(ValueError):
        enumerate_T((3, 1, 2), (1, 3, 2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_survivors_contain_both_prefix_chains(n):
    for v in all_perms(n):
        for w in all_perms(n):
            if not bruhat_leq(v, w):
                continue
            surviving = set(enumerate_T(v, w))
            for k in range(1, n):
                assert tuple(sorted(w[:k])) in surviving
                assert tuple(sorted(v[:k])) in surviving


# ---------------------------------------------------------------------------
# permutations from ordered partitions


def test_partition_perm_examples():
    assert partition_perm([(1, 3), (2, 4)], ["up", "up"]) == (1, 3, 2, 4)
    assert partition_perm([(2, 5), (1, 3, 4)], ["down", "down"]) == (5, 2, 4, 3, 1)
    assert partition_perm([(2,), (1,), (3,)], ["up", "down", "up"]) == (2, 1, 3)


def test_partition_perm_rejects_bad_partitions():
    with pytest.raises(ValueError):
        partition_perm([(1, 2), (2, 3)], ["up", "up"])
    with pytest.raises(ValueError):
        partition_perm([(1, 2)], ["up", "up"])
    with pytest.raises(ValueError):
        partition_perm([(1, 2), (3,)], ["up", "sideways"])


# ---------------------------------------------------------------------------
# serialisation


def test_serialisation_examples():
    assert perm_str((2, 3, 1, 4)) == "2314"
    assert parse_perm("2314") == (2, 3, 1, 4)
    assert subset_str((2, 3, 4)) == "234"
    assert parse_subset("234") == (2, 3, 4)
    big = tuple(range(1, 11))
    assert parse_perm(perm_str(big)) == big
    assert "," in perm_str(big)


@given(st.permutations(list(range(1, 9))))
def test_perm_roundtrip(p):
    w = tuple(p)
    assert parse_perm(perm_str(w)) == w


@given(st.sets(st.integers(min_value=1, max_value=8), min_size=1))
def test_subset_roundtrip(s):
    I = tuple(sorted(s))
    assert parse_subset(subset_str(I)) == I
