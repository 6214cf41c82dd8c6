"""Enumeration order, restriction rules, and exact counts of the two
partition families."""

import pytest

from nthderiv.partitions import (
    RoleSplit,
    SetPartition,
    count_implicit_partitions,
    count_parametric_partitions,
    count_restricted_partitions,
    double_factorial,
    enumerate_implicit_partitions,
    enumerate_parametric_partitions,
)

# frozen count rows, cross-checked against a brute-force enumerator
PARAMETRIC_ROWS = {
    1: [1],
    2: [1, 1],
    3: [1, 4, 3],
    4: [1, 11, 25, 15],
    5: [1, 26, 130, 210, 105],
    6: [1, 57, 546, 1750, 2205, 945],
    7: [1, 120, 2037, 11368, 26775, 27720, 10395],
}
IMPLICIT_ROWS = {
    1: [1],
    2: [1, 2, 1],
    3: [1, 6, 12, 10, 3],
    4: [1, 14, 61, 124, 131, 70, 15],
    5: [1, 30, 240, 890, 1830, 2226, 1600, 630, 105],
}


def test_parametric_golden_order():
    got = [str(p) for p in enumerate_parametric_partitions(3, 1)]
    assert got == ["{1,2}{3,4}", "{1,3}{2,4}", "{1,4}{2,3}", "{1}{2,3,4}"]


def test_parametric_top_layer_shape():
    # k = n-1 forces {1} plus doubletons only
    ps = enumerate_parametric_partitions(4, 3)
    assert len(ps) == 15
    for p in ps:
        assert p.block_containing(1) == (1,)
        assert sorted(p.block_sizes()) == [1, 2, 2, 2]


def test_implicit_golden_order():
    assert [str(p) for p in enumerate_implicit_partitions(2, 3)] == ["{1}{2}{3,4}"]
    got = [str(p) for p in enumerate_implicit_partitions(3, 5)]
    assert got == ["{1}{2}{3}{4,5}{6,7}", "{1}{2}{3}{4,6}{5,7}", "{1}{2}{3}{4,7}{5,6}"]


@pytest.mark.parametrize("n", range(1, 7))
def test_parametric_partition_shape(n):
    for k in range(n):
        ps = enumerate_parametric_partitions(n, k)
        for p in ps:
            assert p.ground_size == n + k
            assert p.num_blocks == k + 1
            for b in p.blocks:
                assert len(b) > 1 or b == (1,)


@pytest.mark.parametrize("n", range(1, 6))
def test_implicit_partition_shape(n):
    for k in range(1, 2 * n):
        ps = enumerate_implicit_partitions(n, k)
        for p in ps:
            assert p.ground_size == n + k - 1
            assert p.num_blocks == k
            for b in p.blocks:
                assert len(b) > 1 or b[0] <= n


@pytest.mark.parametrize("n,row", sorted(PARAMETRIC_ROWS.items()))
def test_parametric_counts_frozen(n, row):
    assert [count_parametric_partitions(n, k) for k in range(n)] == row


@pytest.mark.parametrize("n,row", sorted(IMPLICIT_ROWS.items()))
def test_implicit_counts_frozen(n, row):
    assert [count_implicit_partitions(n, k) for k in range(1, 2 * n)] == row


@pytest.mark.parametrize("n", range(1, 8))
def test_parametric_count_matches_enumeration(n):
    for k in range(-1, n + 1):
        assert count_parametric_partitions(n, k) == len(enumerate_parametric_partitions(n, k))


@pytest.mark.parametrize("n", range(1, 6))
def test_implicit_count_matches_enumeration(n):
    for k in range(0, 2 * n + 1):
        assert count_implicit_partitions(n, k) == len(enumerate_implicit_partitions(n, k))


def test_out_of_range_is_empty_not_error():
    assert enumerate_parametric_partitions(3, -1) == []
    assert enumerate_parametric_partitions(3, 3) == []
    assert enumerate_implicit_partitions(3, 0) == []
    assert enumerate_implicit_partitions(3, 6) == []
    assert count_parametric_partitions(3, 7) == 0
    assert count_implicit_partitions(3, -2) == 0


@pytest.mark.parametrize("fn", [
    enumerate_parametric_partitions, enumerate_implicit_partitions,
    count_parametric_partitions, count_implicit_partitions,
])
def test_nonpositive_n_rejected(fn):
    with pytest.raises(ValueError):
        fn(0, 1)


def test_enumeration_is_deterministic():
    a = enumerate_parametric_partitions(5, 2)
    b = enumerate_parametric_partitions(5, 2)
    assert a == b
    assert enumerate_implicit_partitions(4, 3) == enumerate_implicit_partitions(4, 3)


def test_unrestricted_count_is_stirling():
    # bound = 0 reduces to Stirling numbers of the second kind; row m = 6
    assert [count_restricted_partitions(6, 0, j) for j in range(1, 7)] == \
        [1, 31, 90, 65, 15, 1]


def test_top_counts_are_double_factorials():
    for n in range(2, 9):
        assert count_parametric_partitions(n, n - 1) == double_factorial(2 * n - 3)
        assert count_implicit_partitions(n, 2 * n - 1) == double_factorial(2 * n - 3)


def test_double_factorial_values():
    assert [double_factorial(m) for m in (-3, -1, 0, 1, 2, 3, 5, 7, 9)] == \
        [1, 1, 1, 1, 2, 3, 15, 105, 945]


def test_set_partition_canonicalization():
    p = SetPartition([[3, 4], [2, 1]])
    assert str(p) == "{1,2}{3,4}"
    assert p.blocks == ((1, 2), (3, 4))
    assert p.ground_size == 4 and p.num_blocks == 2
    assert p.block_containing(3) == (3, 4)
    with pytest.raises(KeyError):
        p.block_containing(9)


def test_set_partition_validation():
    with pytest.raises(ValueError):
        SetPartition([[1, 2], [2, 3]])    # overlap
    with pytest.raises(ValueError):
        SetPartition([[1], [3]])          # gap: not {1..m}
    with pytest.raises(ValueError):
        SetPartition([[1], []])           # empty block
    with pytest.raises(ValueError):
        SetPartition([])


def test_role_split():
    roles = RoleSplit(3)
    assert [roles.is_small(x) for x in (1, 3, 4)] == [True, True, False]
    with pytest.raises(ValueError):
        RoleSplit(-1)
