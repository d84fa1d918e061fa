import math

import numpy as np
import pytest

from permspec import config
from permspec.errors import ResourceLimitError, UsageError
from permspec.exact_algebra import mat_mul
from permspec.groupalg import (
    GroupAlgebraElement,
    all_ones_element,
    coefficient_column,
    convolve,
    delta_identity,
    dif_by_substitution,
    element_of,
    matrix_of_element,
    regular_matrix,
    regular_matrix_csv,
    transposed_orientation_matrix,
)
from permspec.perm import Permutation
from permspec.stats import Z, StatKind, registry_for


def _random_element(rng, n):
    size = math.factorial(n)
    return GroupAlgebraElement(n, tuple(int(v) for v in rng.integers(-3, 4, size=size)))


def test_identity_is_neutral():
    rng = np.random.default_rng(5)
    a = _random_element(rng, 3)
    e = delta_identity(3)
    assert convolve(a, e) == a
    assert convolve(e, a) == a


def test_convolution_is_associative():
    rng = np.random.default_rng(6)
    a, b, c = (_random_element(rng, 3) for _ in range(3))
    assert convolve(convolve(a, b), c) == convolve(a, convolve(b, c))


def test_regular_matrix_is_an_algebra_map():
    rng = np.random.default_rng(7)
    a, b = _random_element(rng, 3), _random_element(rng, 3)
    assert matrix_of_element(convolve(a, b)) == mat_mul(matrix_of_element(a), matrix_of_element(b))
    assert mat_mul(matrix_of_element(a), coefficient_column(b)) == coefficient_column(convolve(a, b))


def test_convolution_caps_and_mismatch():
    with pytest.raises(ResourceLimitError):
        convolve(all_ones_element(5, 1), all_ones_element(5, 1))
    with pytest.raises(UsageError):
        convolve(delta_identity(3), delta_identity(4))
    with pytest.raises(UsageError):
        GroupAlgebraElement(3, (1, 2))


def test_element_coefficients():
    registry = registry_for(3)
    f = element_of(StatKind.FIX_Z, 3)
    assert f.coefficient(Permutation.identity(3)) == registry.gen(Z) * 3
    assert f.coefficient(Permutation.parse("2,3,1")) == registry.zero


@pytest.mark.parametrize("n", [3, 4])
def test_fix_matrix_rows_sum_to_n_factorial_z(n):
    registry = registry_for(n)
    m = regular_matrix(StatKind.FIX_Z, n)
    assert m.rows == math.factorial(n)
    assert set(m.row_sums()) == {registry.gen(Z) * math.factorial(n)}
    assert m.trace() == registry.gen(Z) * (n * math.factorial(n))


def test_fix_matrix_orientation_is_transpose():
    assert transposed_orientation_matrix(StatKind.FIX_Z, 4) == regular_matrix(StatKind.FIX_Z, 4).transpose()


@pytest.mark.parametrize("n", [3, 4])
def test_fix_matrix_is_symmetric(n):
    assert regular_matrix(StatKind.FIX_Z, n).is_symmetric()


def test_fix_element_is_central():
    rng = np.random.default_rng(8)
    f = element_of(StatKind.FIX_Z, 4)
    for _ in range(3):
        a = _random_element(rng, 4)
        assert convolve(f, a) == convolve(a, f)


@pytest.mark.parametrize("n", [3, 4])
def test_dif_is_substituted_if(n):
    assert dif_by_substitution(n) == regular_matrix(StatKind.DES_X_PLUS_INV_Y_PLUS_FIX_Z, n)


def test_regular_matrix_cap(monkeypatch):
    monkeypatch.setattr(config, "MAX_MATRIX_N", 3)
    with pytest.raises(ResourceLimitError):
        regular_matrix(StatKind.FIX_Z, 4)


def test_regular_matrix_csv_shape():
    text = regular_matrix_csv(regular_matrix(StatKind.FIX_Z, 3), 3, registry_for(3))
    lines = text.splitlines()
    assert len(lines) == 7
    assert lines[1].startswith('"1,2,3",3*z,')
