"""
Group-algebra elements of S_n and their regular representation.

Convolution is (a * b)(t) = sum_s a(s) b(s^-1 t). The regular matrix of an
element puts a(s t^-1) at (rank s, rank t), so matrix_of_element(a) applied
to the coefficient column of b is the coefficient column of a * b.
"""

import json
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement

from . import config
from .errors import ResourceLimitError, UsageError
from .exact_algebra import Matrix, PolyRegistry, matrix_to_csv
from .perm import Permutation, indexed_group, require_degree
from .stats import StatKind, VarId, registry_for, stat_values


@dataclass(frozen=True)
class GroupAlgebraElement:
    """Coefficients indexed by permutation rank; entries are ring elements or plain numbers."""

    n: int
    coeffs: Tuple[Any, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != len(indexed_group(self.n)):
            raise UsageError(f"S_{self.n} element needs {len(indexed_group(self.n))} coefficients, got {len(coeffs)}")

    def coefficient(self, s: Permutation) -> Any:
        return self.coeffs[indexed_group(self.n).rank_of(s)]

    def _check_degree(self, other: "GroupAlgebraElement") -> None:
        if self.n != other.n:
            raise UsageError(f"degree mismatch: S_{self.n} vs S_{other.n}")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check_degree(other)
        return GroupAlgebraElement(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check_degree(other)
        return GroupAlgebraElement(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, factor) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.n, tuple(c * factor for c in self.coeffs))

    def shift(self, value) -> "GroupAlgebraElement":
        """self - value * identity."""
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] - value
        return GroupAlgebraElement(self.n, tuple(coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self, registry: Optional[PolyRegistry] = None) -> str:
        def render(value) -> str:
            return registry.format(value) if isinstance(value, PolyElement) else str(value)

        group = indexed_group(self.n)
        data = {"n": self.n, "coeffs": {str(p): render(c) for p, c in zip(group.perms, self.coeffs)}}
        return json.dumps(data)


def delta_identity(n: int, one=1, zero=0) -> GroupAlgebraElement:
    """The unit of the group algebra: coefficient one on the identity."""
    size = len(indexed_group(n))
    return GroupAlgebraElement(n, (one,) + (zero,) * (size - 1))


def element_of(kind: StatKind, n: int) -> GroupAlgebraElement:
    """sum_s stat(s) s, e.g. i_y(n) for INV_Y and f_z(n) for FIX_Z."""
    require_degree(n, config.MAX_ENUM_N, "element_of")
    return GroupAlgebraElement(n, stat_values(kind, n))


def all_ones_element(n: int, p) -> GroupAlgebraElement:
    """sum_s p s."""
    return GroupAlgebraElement(n, (p,) * len(indexed_group(n)))


def convolve(a: GroupAlgebraElement, b: GroupAlgebraElement, max_n: Optional[int] = None) -> GroupAlgebraElement:
    """
    Group-algebra product, (a * b)(t) = sum_s a(s) b(s^-1 t).

    Args:
        a: Left factor
        b: Right factor
        max_n: Degree cap for this call; defaults to MAX_CONVOLUTION_N

    Returns:
        The product, summed over s in rank order for every output cell
    """
    a._check_degree(b)
    cap = config.MAX_CONVOLUTION_N if max_n is None else max_n
    if a.n > cap:
        raise ResourceLimitError(f"convolution at n={a.n} exceeds the cap {cap}")
    group = indexed_group(a.n)
    zero = (a.coeffs[0] - a.coeffs[0]) * (b.coeffs[0] - b.coeffs[0])
    out = [zero] * len(group)
    nonzero_b = [(r, c) for r, c in enumerate(b.coeffs) if c]
    for s, a_s in enumerate(a.coeffs):
        if not a_s:
            continue
        # t = s r ranges over the group as r does
        for r, b_r in nonzero_b:
            t = group.mul(s, r)
            out[t] = out[t] + a_s * b_r
    return GroupAlgebraElement(a.n, tuple(out))


def matrix_of_element(e: GroupAlgebraElement) -> Matrix:
    """Regular matrix: entry (s, t) is e(s t^-1)."""
    require_degree(e.n, config.MAX_MATRIX_N, "regular matrix")
    group = indexed_group(e.n)
    size = len(group)
    entries = []
    for s in range(size):
        for t in range(size):
            entries.append(e.coeffs[group.mul(s, group.inverse_index[t])])
    return Matrix(size, size, tuple(entries))


def regular_matrix(kind: StatKind, n: int) -> Matrix:
    return matrix_of_element(element_of(kind, n))


def transposed_orientation_matrix(kind: StatKind, n: int) -> Matrix:
    """Entries stat(s^-1 t), the orientation used in the fixed-point lemmas."""
    require_degree(n, config.MAX_MATRIX_N, "regular matrix")
    group = indexed_group(n)
    values = stat_values(kind, n)
    size = len(group)
    return Matrix(size, size, tuple(
        values[group.mul(group.inverse_index[s], t)] for s in range(size) for t in range(size)
    ))


def coefficient_column(e: GroupAlgebraElement) -> Matrix:
    return Matrix(len(e.coeffs), 1, e.coeffs)


def adjacent_substitution(n: int) -> Dict[VarId, PolyElement]:
    """y[i,i+1] -> x[i] + y[i,i+1]."""
    registry = registry_for(n)
    return {VarId.y(i, i + 1): registry.gen(VarId.x(i)) + registry.gen(VarId.y(i, i + 1)) for i in range(1, n)}


def dif_by_substitution(n: int) -> Matrix:
    """IF(n) with every y[i,i+1] replaced by x[i] + y[i,i+1]."""
    registry = registry_for(n)
    replacements = adjacent_substitution(n)
    substituted = {}

    def replace(entry: PolyElement) -> PolyElement:
        key = id(entry)
        if key not in substituted:
            substituted[key] = registry.substitute(entry, replacements)
        return substituted[key]

    return regular_matrix(StatKind.INV_Y_PLUS_FIX_Z, n).map(replace)


def permutation_labels(n: int) -> Sequence[str]:
    return [str(p) for p in indexed_group(n).perms]


def regular_matrix_csv(m: Matrix, n: int, registry: PolyRegistry) -> str:
    labels = permutation_labels(n)
    return matrix_to_csv(m, labels, labels, formatter=registry.format)
