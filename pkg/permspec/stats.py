"""
Descent, inversion and fixed-point statistics as linear forms.

A statistic value is an element of the registry ring for its degree n:
des_x(s) = sum of x_i over descents, inv_y(s) = sum of y_{i,j} over
inversions, fix_z(s) = #Fix(s) * z, mfix(s) = sum of z_i over fixed points.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, List, Tuple

from sympy.polys.rings import PolyElement

from .errors import UsageError
from .exact_algebra import Assignment, PolyRegistry
from .perm import Permutation, enumerate_permutations


@dataclass(frozen=True, order=True)
class VarId:
    """A variable: x[i], y[i,j] with i < j, z, or the marked z[i]."""

    kind: str
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.kind == "y" and not 1 <= self.i < self.j:
            raise UsageError(f"y[{self.i},{self.j}] needs 1 <= i < j")
        if self.kind in ("x", "zi") and self.i < 1:
            raise UsageError(f"{self.kind} index must be positive, got {self.i}")
        if self.kind not in ("x", "y", "z", "zi"):
            raise UsageError(f"unknown variable kind {self.kind!r}")

    @classmethod
    def x(cls, i: int) -> "VarId":
        return cls("x", i)

    @classmethod
    def y(cls, i: int, j: int) -> "VarId":
        return cls("y", i, j)

    @classmethod
    def z(cls) -> "VarId":
        return cls("z")

    @classmethod
    def zi(cls, i: int) -> "VarId":
        return cls("zi", i)

    @property
    def symbol_name(self) -> str:
        return {"x": f"x{self.i}", "y": f"y{self.i}_{self.j}", "z": "z", "zi": f"zm{self.i}"}[self.kind]

    def __str__(self) -> str:
        return {"x": f"x[{self.i}]", "y": f"y[{self.i},{self.j}]", "z": "z", "zi": f"z[{self.i}]"}[self.kind]


Z = VarId.z()


class StatKind(Enum):
    DES_X = "des_x"
    INV_Y = "inv_y"
    FIX_Z = "fix_z"
    MFIX = "mfix"
    DES_X_PLUS_INV_Y_PLUS_FIX_Z = "des_x+inv_y+fix_z"
    INV_Y_PLUS_FIX_Z = "inv_y+fix_z"
    MAJ_PLUS_INV_PLUS_FIX = "maj+inv+fix"


def registry_variables(n: int, marked: bool = False) -> List[VarId]:
    """x[1..n-1], y[i,j] in lex order, z, then z[1..n] when marked."""
    variables = [VarId.x(i) for i in range(1, n)]
    variables += [VarId.y(i, j) for i, j in combinations(range(1, n + 1), 2)]
    variables.append(Z)
    if marked:
        variables += [VarId.zi(i) for i in range(1, n + 1)]
    return variables


@lru_cache(maxsize=None)
def registry_for(n: int, marked: bool = False) -> PolyRegistry:
    """The variable registry of degree n; the marked one adds z[i] for mfix."""
    if n < 1:
        raise UsageError(f"registry needs n >= 1, got {n}")
    variables = registry_variables(n, marked)
    return PolyRegistry(variables, [v.symbol_name for v in variables])


def des_set(s: Permutation) -> FrozenSet[int]:
    return frozenset(i for i in range(1, s.n) if s(i) > s(i + 1))


def inv_set(s: Permutation) -> FrozenSet[Tuple[int, int]]:
    return frozenset((i, j) for i, j in combinations(range(1, s.n + 1), 2) if s(i) > s(j))


def printed_inv_set(s: Permutation) -> FrozenSet[Tuple[int, int]]:
    """The inversion set read with the condition s(i) > s(i+1); kept for the errata ledger."""
    return frozenset((i, j) for i, j in combinations(range(1, s.n + 1), 2) if s(i) > s(i + 1))


def maj(s: Permutation) -> int:
    return sum(des_set(s))


def inv(s: Permutation) -> int:
    return len(inv_set(s))


def fix(s: Permutation) -> int:
    return s.fix_count


def _kind_uses_marked_registry(kind: StatKind) -> bool:
    return kind is StatKind.MFIX


def stat_value(kind: StatKind, s: Permutation, registry: PolyRegistry = None) -> PolyElement:
    """
    The statistic of s as an exact linear form.

    Args:
        kind: Which statistic
        s: The permutation
        registry: Ring to build in; defaults to registry_for(s.n)

    Returns:
        A degree-one element of the registry ring
    """
    if registry is None:
        registry = registry_for(s.n, _kind_uses_marked_registry(kind))
    if kind is StatKind.DES_X:
        return registry.linear({VarId.x(i): 1 for i in des_set(s)})
    if kind is StatKind.INV_Y:
        return registry.linear({VarId.y(i, j): 1 for i, j in inv_set(s)})
    if kind is StatKind.FIX_Z:
        return registry.linear({Z: s.fix_count})
    if kind is StatKind.MFIX:
        return registry.linear({VarId.zi(i): 1 for i in s.fixed_points()})
    if kind is StatKind.INV_Y_PLUS_FIX_Z:
        return stat_value(StatKind.INV_Y, s, registry) + stat_value(StatKind.FIX_Z, s, registry)
    if kind is StatKind.DES_X_PLUS_INV_Y_PLUS_FIX_Z:
        return stat_value(StatKind.DES_X, s, registry) + stat_value(StatKind.INV_Y_PLUS_FIX_Z, s, registry)
    if kind is StatKind.MAJ_PLUS_INV_PLUS_FIX:
        return registry.constant(maj(s) + inv(s) + fix(s))
    raise UsageError(f"unknown statistic {kind}")


@lru_cache(maxsize=None)
def stat_values(kind: StatKind, n: int) -> Tuple[PolyElement, ...]:
    """stat_value for every permutation of S_n, indexed by rank."""
    registry = registry_for(n, _kind_uses_marked_registry(kind))
    return tuple(stat_value(kind, s, registry) for s in enumerate_permutations(n))


def stat_total(kind: StatKind, n: int) -> PolyElement:
    registry = registry_for(n, _kind_uses_marked_registry(kind))
    return sum(stat_values(kind, n), registry.zero)


def mif_assignment(n: int) -> Assignment:
    """x_i = i, y_{i,j} = 1, z = 1: turns des_x + inv_y + fix_z into maj + inv + fix."""
    values = {variable: Fraction(variable.i if variable.kind == "x" else 1) for variable in registry_variables(n)}
    return Assignment(values=values, seed=None)


def fix_counts(n: int) -> Tuple[int, ...]:
    """Scalar fix(s) for every permutation, indexed by rank."""
    return tuple(s.fix_count for s in enumerate_permutations(n))
