import math
from fractions import Fraction

import pytest

from permspec.characters import (
    Partition,
    block_scalars,
    character_sum_dichotomy,
    character_table,
    class_size,
    hook_dim,
    mn_character,
    partitions,
    z_mu,
)
from permspec.errors import ResourceLimitError, UsageError


def test_partition_parsing_and_labels():
    shape = Partition.parse("1+3")
    assert shape.parts == (3, 1)
    assert shape.label == "3+1"
    assert str(shape) == "(3,1)"
    assert Partition.parse("(2,2)") == Partition((2, 2))
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))


def test_partition_validation():
    with pytest.raises(UsageError):
        Partition((1, 2))
    with pytest.raises(UsageError):
        Partition((2, 0))


def test_partitions_order_and_count():
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    with pytest.raises(ResourceLimitError):
        partitions(40)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_hook_dims_square_sum(n):
    assert sum(hook_dim(shape) ** 2 for shape in partitions(n)) == math.factorial(n)


def test_hook_dim_examples():
    assert hook_dim(Partition((3, 1))) == 3
    assert hook_dim(Partition((2, 2))) == 2
    assert hook_dim(Partition((3, 2))) == 5


@pytest.mark.parametrize("n", [4, 5, 6])
def test_class_sizes_sum_to_factorial(n):
    assert sum(class_size(mu) for mu in partitions(n)) == math.factorial(n)


def test_z_mu():
    assert z_mu(Partition((2, 1, 1))) == 4
    assert z_mu(Partition((1, 1, 1, 1))) == 24


def test_standard_character_counts_fixed_points_minus_one():
    for mu in partitions(5):
        assert mn_character(Partition((4, 1)), mu) == mu.fix - 1


def test_sign_character():
    sign = Partition((1, 1, 1, 1))
    assert mn_character(sign, Partition((2, 1, 1))) == -1
    assert mn_character(sign, Partition((2, 2))) == 1
    assert mn_character(sign, Partition((4,))) == -1


def test_mn_character_degree_mismatch():
    with pytest.raises(UsageError):
        mn_character(Partition((3,)), Partition((2, 2)))


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_character_table_invariants(n):
    table = character_table(n)
    assert table.column_orthogonality_holds()
    assert table.first_column_matches_dims()
    assert table.trivial_row_is_ones()


def test_character_table_csv():
    lines = character_table(3).to_csv().splitlines()
    assert lines[0] == ",3,2+1,1+1+1"
    assert lines[1] == "3,1,1,1"
    assert lines[2] == "2+1,-1,0,2"
    assert lines[3] == "1+1+1,1,-1,1"


def test_character_table_disk_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("PERMSPEC_CACHE_DIR", str(tmp_path))
    first = character_table(4)
    assert (tmp_path / "characters_n4.json").exists()
    assert character_table(4) == first


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_character_sum_dichotomy(n):
    report = character_sum_dichotomy(n)
    assert report.passed
    assert [shape.label for shape in report.nonzero] == [str(n), f"{n - 1}+1"]
    assert all(report.sums[shape] == math.factorial(n) for shape in report.nonzero)


def test_dichotomy_range():
    with pytest.raises(UsageError):
        character_sum_dichotomy(3)


def test_block_scalars_n4():
    scalars = block_scalars(4)
    assert scalars[Partition((4,))] == Fraction(24)
    assert scalars[Partition((3, 1))] == Fraction(8)
    assert scalars[Partition((2, 2))] == 0
