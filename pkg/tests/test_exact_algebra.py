from fractions import Fraction

import numpy as np
import pytest

from permspec.errors import CertificationSetupError, UsageError
from permspec.exact_algebra import (
    Matrix,
    PolyRegistry,
    kernel_dim,
    mat_mul,
    matrix_to_csv,
    random_assignment,
    rank,
    rank_mod_p,
    registry_of,
    specialize,
    to_qq,
    to_rational,
)


@pytest.fixture
def registry():
    return PolyRegistry(["a", "b"], ["a", "b"])


def test_rational_conversions():
    assert to_rational(to_qq(Fraction(-3, 4))) == Fraction(-3, 4)
    assert to_rational(to_qq(5)) == 5


def test_linear_forms(registry):
    form = registry.linear({"a": 2, "b": Fraction(-1)}, constant=3)
    assert registry.coefficient(form, "a") == 2
    assert registry.coefficient(form, "b") == -1
    assert registry.constant_term(form) == 3
    assert registry.variables(form) == ["a", "b"]
    assert registry.format(form) == "2*a - b + 3"
    assert registry.format(registry.zero) == "0"


def test_registry_of(registry):
    form = registry.gen("a")
    assert registry_of(form).ring == registry.ring
    with pytest.raises(UsageError):
        registry_of(7)


def test_unknown_variable(registry):
    with pytest.raises(UsageError):
        registry.gen("c")


def test_evaluate_and_substitute(registry):
    a, b = registry.gen("a"), registry.gen("b")
    p = a * b + a * to_qq(Fraction(1, 2))
    assert registry.evaluate(p, {"a": Fraction(4), "b": Fraction(3)}) == 14
    with pytest.raises(UsageError):
        registry.evaluate(p, {"a": Fraction(1)})
    assert registry.substitute(a + b, {"a": b}) == b * 2


def test_matrix_basics():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert m.trace() == 5
    assert m.row_sums() == [3, 7]
    assert m.transpose().to_rows() == [[1, 3], [2, 4]]
    assert m.shift(1).to_rows() == [[0, 2], [3, 3]]
    assert (m - m).is_zero()
    with pytest.raises(UsageError):
        Matrix.from_rows([[1, 2], [3]])
    with pytest.raises(UsageError):
        Matrix(2, 2, (1, 2, 3))


def test_mat_mul():
    a = Matrix.from_rows([[1, 2], [0, 1]])
    b = Matrix.from_rows([[3, 0], [1, 1]])
    assert mat_mul(a, b).to_rows() == [[5, 2], [1, 1]]
    with pytest.raises(UsageError):
        mat_mul(a, Matrix.from_rows([[1, 2, 3]]))


def test_rank_exact():
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1
    hilbert = Matrix.from_rows([[Fraction(1, i + j + 1) for j in range(4)] for i in range(4)])
    assert rank(hilbert) == 4
    assert kernel_dim(Matrix.from_rows([[0, 0], [0, 0]])) == 2
    with pytest.raises(UsageError):
        kernel_dim(Matrix.from_rows([[1, 2, 3]]))


def test_rank_mod_p_bounds_rational_rank():
    rng = np.random.default_rng(11)
    for _ in range(5):
        left = rng.integers(-5, 5, size=(6, 3))
        right = rng.integers(-5, 5, size=(3, 6))
        product = Matrix.from_rows((left @ right).tolist())
        assert rank_mod_p(product) <= rank(product) <= 3
        assert rank_mod_p(product) == rank(product)


def test_rank_is_invariant_under_transpose_and_scaling():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(m) == rank(m.transpose()) == rank(m.scale(Fraction(-7, 3))) == 2


def test_specialize(registry):
    a, b = registry.gen("a"), registry.gen("b")
    m = Matrix.from_rows([[a, b], [a + b, registry.zero]])
    values = specialize(m, registry, random_assignment(["a", "b"], seed=1))
    assert all(isinstance(v, Fraction) for v in values.entries)
    assert values[1, 0] == values[0, 0] + values[0, 1]


def test_random_assignment_is_reproducible(registry):
    first = random_assignment(["a", "b"], seed=42, registry=registry, distinct=[registry.gen("a"), registry.gen("b")])
    second = random_assignment(["b", "a"], seed=42, registry=registry, distinct=[registry.gen("a"), registry.gen("b")])
    assert first.values == second.values
    assert first.values["a"] != first.values["b"]
    assert first.to_dict()["seed"] == 42


def test_random_assignment_errors(registry):
    with pytest.raises(UsageError):
        random_assignment(["a"], seed=-1)
    with pytest.raises(CertificationSetupError):
        random_assignment(["a"], seed=3, registry=registry, distinct=[registry.gen("a"), registry.gen("a")])


def test_matrix_to_csv():
    m = Matrix.from_rows([[Fraction(1, 2), 0], [1, -1]])
    assert matrix_to_csv(m, ["r1", "r2"], ["c1", "c2"]) == ",c1,c2\nr1,1/2,0\nr2,1,-1\n"
