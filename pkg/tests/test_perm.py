import math

import pytest

from permspec.errors import ResourceLimitError, UsageError
from permspec.perm import (
    Cycle,
    Permutation,
    chain_discipline_holds,
    chain_prefixes,
    compose,
    cycle_type,
    cycles,
    enumerate_permutations,
    fixdisc_transposition_chain,
    indexed_group,
    inverse,
    lef_holds,
    rank,
    transposition,
    unrank,
)


def test_enumerate_is_lexicographic():
    words = [p.word for p in enumerate_permutations(3)]
    assert words == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]


@pytest.mark.parametrize("n", [1, 2, 4, 5])
def test_enumerate_counts(n):
    perms = enumerate_permutations(n)
    assert len(perms) == math.factorial(n)
    assert len(set(perms)) == len(perms)


def test_enumerate_caps():
    with pytest.raises(UsageError):
        enumerate_permutations(0)
    with pytest.raises(ResourceLimitError):
        enumerate_permutations(99)


def test_rank_and_unrank_agree_with_enumeration():
    for k, p in enumerate(enumerate_permutations(4)):
        assert rank(p) == k
        assert unrank(4, k) == p
    with pytest.raises(UsageError):
        unrank(3, 6)


def test_compose_applies_right_to_left():
    s = Permutation.parse("2,3,1")
    t = Permutation.parse("1,3,2")
    # s(t(1)) = s(1) = 2, s(t(2)) = s(3) = 1, s(t(3)) = s(2) = 3
    assert compose(s, t).word == (2, 1, 3)


def test_compose_worked_example():
    s = Permutation.parse("2,1,3")
    t = Permutation.parse("1,3,2")
    assert compose(s, t).word == (2, 3, 1)


def test_compose_degree_mismatch():
    with pytest.raises(UsageError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_inverse():
    s = Permutation.parse("3,1,4,2")
    assert compose(s, inverse(s)).is_identity()
    assert compose(inverse(s), s).is_identity()


def test_invalid_words_rejected():
    with pytest.raises(UsageError):
        Permutation((1, 1, 2))
    with pytest.raises(UsageError):
        Permutation(())


def test_cycles_and_cycle_type():
    s = Permutation.parse("2,3,1,4,6,5")
    assert [c.support for c in cycles(s)] == [(1, 2, 3), (5, 6)]
    assert cycle_type(s).parts == (3, 2, 1)
    assert cycle_type(Permutation.identity(4)).parts == (1, 1, 1, 1)


def test_transposition():
    assert transposition(1, 3, 4).word == (3, 2, 1, 4)
    with pytest.raises(UsageError):
        transposition(2, 2, 4)


def test_cycle_as_permutation():
    assert Cycle((1, 3, 2)).as_permutation(3).word == (3, 1, 2)
    with pytest.raises(UsageError):
        Cycle((1, 1))


def test_transposition_chain_rebuilds_every_permutation():
    for t in enumerate_permutations(4):
        chain = fixdisc_transposition_chain(t)
        prefixes = chain_prefixes(chain, 4)
        assert prefixes[0].is_identity()
        assert prefixes[-1] == t
        assert chain_discipline_holds(chain, 4)
        assert len(chain) == 4 - len(cycles(t)) - t.fix_count


def test_identity_has_empty_chain():
    assert fixdisc_transposition_chain(Permutation.identity(5)) == []


def test_chain_discipline_detects_bad_order():
    # (1 2) then (1 2) again: the second step's point 2 is no longer fixed
    bad = [Cycle((1, 2)), Cycle((1, 2))]
    assert not chain_discipline_holds(bad, 3)


def test_lef_holds_for_all_pairs():
    perms = enumerate_permutations(3)
    assert all(lef_holds(s, t) for s in perms for t in perms)


def test_indexed_group_products():
    group = indexed_group(4)
    assert len(group) == 24
    for a in (0, 5, 17):
        for b in (3, 11, 23):
            expected = compose(group.perms[a], group.perms[b])
            assert group.mul(a, b) == group.rank_of(expected)
        assert group.mul(a, group.inverse_index[a]) == 0
