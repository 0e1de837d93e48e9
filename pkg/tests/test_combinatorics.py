import pytest

from dihedral_moduli.combinatorics import (
    Dissection,
    Partition,
    count_P,
    count_T,
    enumerate_dissections,
    iter_dissections,
    partitions,
)


def partition_count_dp(m):
    """Independent oracle: coin-change style count of partitions of m."""
    ways = [1] + [0] * m
    for part in range(1, m + 1):
        for total in range(part, m + 1):
            ways[total] += ways[total - part]
    return ways[m]


def test_partitions_small():
    assert partitions(0) == [Partition()]
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("m", [1, 5, 10, 23])
def test_partition_counts_match_dp(m):
    ps = partitions(m)
    assert len(ps) == partition_count_dp(m)
    assert len(set(ps)) == len(ps)
    assert all(p.weight == m for p in ps)


def test_partition_count_23():
    assert len(partitions(23)) == 1255


def test_partition_order_is_decreasing_lex():
    parts = [p.parts for p in partitions(9)]
    assert parts == sorted(parts, reverse=True)


def test_partition_text():
    lam = Partition({2: 1, 1: 2})
    assert str(lam) == "1^2 2"
    assert Partition.parse("1^2 2") == lam
    assert Partition.parse(str(Partition({4: 1}))) == Partition({4: 1})
    with pytest.raises(ValueError):
        Partition.parse("1^")


def test_partition_fields():
    lam = Partition.from_parts([3, 1, 1])
    assert lam.multiplicities == ((1, 2), (3, 1))
    assert (lam.weight, lam.length, lam.polygon_size) == (5, 3, 7)
    assert lam.multiplicity(1) == 2 and lam.multiplicity(2) == 0


@pytest.mark.parametrize(
    "lam, expected",
    [
        ({3: 1, 1: 1}, 6),
        ({2: 2}, 3),
        ({2: 1, 1: 2}, 21),
        ({1: 4}, 14),
        ({4: 1}, 1),
        ({7: 1}, 1),
    ],
)
def test_count_P_hexagon(lam, expected):
    assert count_P(Partition(lam)) == expected


@pytest.mark.parametrize("lam, expected", [({5: 1}, 1), ({1: 2}, 3), ({2: 2}, 10), ({1: 3}, 15), ({2: 1, 1: 1}, 10)])
def test_count_T(lam, expected):
    assert count_T(Partition(lam)) == expected


def test_count_P_rejects_empty():
    with pytest.raises(ValueError):
        count_P(Partition())


def test_counts_positive_integers():
    for m in range(1, 16):
        for lam in partitions(m):
            assert count_P(lam) > 0
            assert count_T(lam) > 0


def test_dissection_validation():
    Dissection(6, frozenset({(0, 2), (0, 3)}))  # shared endpoint: fine
    with pytest.raises(ValueError):
        Dissection(6, frozenset({(0, 3), (1, 4)}))
    with pytest.raises(ValueError):
        Dissection(6, frozenset({(0, 1)}))
    with pytest.raises(ValueError):
        Dissection(6, frozenset({(0, 5)}))
    with pytest.raises(ValueError):
        Dissection(2, frozenset())


def test_cells_of_a_known_dissection():
    d = Dissection(6, frozenset({(0, 2), (2, 5)}))
    cells = sorted(sorted(c) for c in d.cells())
    assert cells == [[0, 1, 2], [0, 2, 5], [2, 3, 4, 5]]
    assert d.type() == Partition({1: 2, 2: 1})


def test_enumerate_square():
    assert enumerate_dissections(4) == {Partition({2: 1}): 1, Partition({1: 2}): 2}


def test_enumerate_hexagon():
    got = {str(k): v for k, v in enumerate_dissections(6).items()}
    assert got == {"4": 1, "1 3": 6, "2^2": 3, "1^2 2": 21, "1^4": 14}
    assert list(got) == ["4", "1 3", "2^2", "1^2 2", "1^4"]


def test_enumerate_rejects_small():
    with pytest.raises(ValueError):
        enumerate_dissections(2)


def test_total_for_octagon_matches_formula_sum():
    total = sum(enumerate_dissections(8).values())
    assert total == sum(count_P(lam) for lam in partitions(6)) == 903


@pytest.mark.parametrize("n", range(3, 10))
def test_enumerator_agrees_with_closed_form(n):
    found = enumerate_dissections(n)
    for lam in partitions(n - 2):
        assert found.get(lam, 0) == count_P(lam)
    triangles = Partition({1: n - 2})
    assert found[triangles] == count_P(triangles)


@pytest.mark.parametrize("n", [5, 7, 8])
def test_each_dissection_is_well_formed(n):
    seen = set()
    for d in iter_dissections(n):
        assert d.chords not in seen
        seen.add(d.chords)
        lam = d.type()
        assert lam.length == len(d.chords) + 1
        assert lam.weight == n - 2
        assert all(len(cell) >= 3 for cell in d.cells())
