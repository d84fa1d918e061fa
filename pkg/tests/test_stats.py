import math

import pytest

from permspec.errors import UsageError
from permspec.exact_algebra import Matrix, specialize
from permspec.perm import Permutation, enumerate_permutations
from permspec.stats import (
    Z,
    StatKind,
    VarId,
    des_set,
    inv,
    inv_set,
    maj,
    mif_assignment,
    printed_inv_set,
    registry_for,
    stat_total,
    stat_value,
)


def test_sets_and_scalars():
    s = Permutation.parse("3,1,2")
    assert des_set(s) == {1}
    assert inv_set(s) == {(1, 2), (1, 3)}
    assert maj(s) == 1
    assert inv(s) == 2


def test_printed_inversion_condition_differs():
    s = Permutation.parse("2,1,3")
    assert inv_set(s) == {(1, 2)}
    assert printed_inv_set(s) == {(1, 2), (1, 3)}


def test_var_id_validation():
    assert str(VarId.y(1, 3)) == "y[1,3]"
    assert VarId.x(2).symbol_name == "x2"
    with pytest.raises(UsageError):
        VarId.y(3, 2)
    with pytest.raises(UsageError):
        VarId("w")


def test_registry_order():
    registry = registry_for(3)
    assert [str(key) for key in registry.keys] == ["x[1]", "x[2]", "y[1,2]", "y[1,3]", "y[2,3]", "z"]
    assert VarId.zi(1) in registry_for(3, marked=True)


def test_stat_value_forms():
    registry = registry_for(4)
    s = Permutation.parse("2,1,3,4")
    value = stat_value(StatKind.DES_X_PLUS_INV_Y_PLUS_FIX_Z, s)
    assert registry.format(value) == "x[1] + y[1,2] + 2*z"
    assert stat_value(StatKind.MAJ_PLUS_INV_PLUS_FIX, s) == registry.constant(1 + 1 + 2)


def test_stat_totals_n3():
    registry = registry_for(3)
    gen = registry.gen
    assert stat_total(StatKind.INV_Y, 3) == (gen(VarId.y(1, 2)) + gen(VarId.y(1, 3)) + gen(VarId.y(2, 3))) * 3
    assert stat_total(StatKind.DES_X, 3) == (gen(VarId.x(1)) + gen(VarId.x(2))) * 3


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_fix_total_is_n_factorial(n):
    registry = registry_for(n)
    assert stat_total(StatKind.FIX_Z, n) == registry.gen(Z) * math.factorial(n)


def test_marked_fixed_points_total():
    registry = registry_for(4, marked=True)
    total = stat_total(StatKind.MFIX, 4)
    assert all(registry.coefficient(total, VarId.zi(i)) == 6 for i in range(1, 5))


def test_mif_assignment_recovers_integer_statistics():
    n = 4
    registry = registry_for(n)
    assignment = mif_assignment(n)
    perms = enumerate_permutations(n)
    forms = Matrix(1, len(perms), tuple(stat_value(StatKind.DES_X_PLUS_INV_Y_PLUS_FIX_Z, s) for s in perms))
    values = specialize(forms, registry, assignment).entries
    assert list(values) == [maj(s) + inv(s) + s.fix_count for s in perms]
