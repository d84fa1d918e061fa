"""
Action matrices on the standard module S^(n-1,1).

The module is spanned by v_i = e_1 - e_i (i = 2..n) inside the sum-zero part
of the permutation module. A vector w = sum a_i v_i has coordinate -a_j at
position j >= 2, which is how images are read back in the v-basis.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement

from . import config
from .errors import InvariantViolation, UsageError
from .exact_algebra import Matrix, PolyRegistry, matrix_to_csv, registry_of, to_qq
from .groupalg import GroupAlgebraElement, element_of
from .perm import enumerate_permutations, indexed_group, require_degree
from .spectra import CheckReport, MatrixKind, SpectrumSpec, certify, make_spec, predicted_spectrum
from .stats import VarId, Z, StatKind, registry_for, stat_values


@dataclass(frozen=True)
class SpechtBasis:
    """v_i = e_1 - e_i for i = 2..n, as coordinate maps on [n]."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise UsageError(f"S^(n-1,1) needs n >= 2, got {self.n}")

    @property
    def vectors(self) -> List[Dict[int, int]]:
        return [{1: 1, i: -1} for i in range(2, self.n + 1)]

    @property
    def labels(self) -> List[str]:
        return [f"v{i}" for i in range(2, self.n + 1)]

    def coordinates(self, w: Mapping[int, Any]) -> List[Any]:
        """v-coordinates of a sum-zero vector given by its entries on [n]."""
        total = sum((w[k] for k in range(2, self.n + 1)), w[1])
        if total:
            raise InvariantViolation(f"vector is not in the sum-zero subspace (coordinate sum {total})")
        return [-w[j] for j in range(2, self.n + 1)]


def specht_action(e: GroupAlgebraElement) -> Matrix:
    """
    Matrix of sum c_s s on S^(n-1,1); column i is the image of v_i, row j the coefficient of v_j.

    Args:
        e: Group-algebra element of degree n >= 2

    Returns:
        The (n-1)x(n-1) action matrix, entry (j, i) = sum_{s(i)=j} c_s - sum_{s(1)=j} c_s
    """
    basis = SpechtBasis(e.n)
    group = indexed_group(e.n)
    zero = e.coeffs[0] - e.coeffs[0]
    columns = []
    for i in range(2, e.n + 1):
        w = {k: zero for k in range(1, e.n + 1)}
        for s, c in zip(group.perms, e.coeffs):
            if not c:
                continue
            w[s(1)] = w[s(1)] + c
            w[s(i)] = w[s(i)] - c
        columns.append(basis.coordinates(w))
    size = e.n - 1
    return Matrix(size, size, tuple(columns[i][j] for j in range(size) for i in range(size)))


def specht_csv(m: Matrix, n: int, registry: PolyRegistry) -> str:
    labels = SpechtBasis(n).labels
    return matrix_to_csv(m, labels, labels, formatter=registry.format)


_LEYIJ_SETS = {
    1: lambda s, i, j: s(1) == 1 and s(i) == j,
    2: lambda s, i, j: s(1) == j and s(i) == 1,
    3: lambda s, i, j: s(1) != 1 and s(i) == j,
    4: lambda s, i, j: s(1) == j and s(i) != 1,
}


def _check_leyij_indices(n: int, i: int, j: int, which: int) -> None:
    if n < 4:
        raise UsageError(f"inversion sums need n >= 4, got {n}")
    if not (2 <= i <= n and 2 <= j <= n):
        raise UsageError(f"i and j must lie in 2..{n}, got i={i}, j={j}")
    if which not in _LEYIJ_SETS:
        raise UsageError(f"item must be 1..4, got {which}")


def leyij_sums(n: int, i: int, j: int, which: int) -> PolyElement:
    """Sum of inv_y(s) over the constrained set of the given item, by enumeration."""
    _check_leyij_indices(n, i, j, which)
    member = _LEYIJ_SETS[which]
    total = registry_for(n).zero
    for s, value in zip(enumerate_permutations(n), stat_values(StatKind.INV_Y, n)):
        if member(s, i, j):
            total += value
    return total


def _combination(registry: PolyRegistry, parts: Sequence[Tuple[Any, Mapping[VarId, int]]]) -> PolyElement:
    coefficients: Dict[VarId, Fraction] = {}
    for scale, terms in parts:
        for key, value in terms.items():
            coefficients[key] = coefficients.get(key, Fraction(0)) + Fraction(scale) * value
    return registry.linear(coefficients)


def _index_sums(n: int, i: int) -> Dict[str, Dict[VarId, int]]:
    others = [m for m in range(2, n + 1) if m != i]
    return {
        "y1i": {VarId.y(1, i): 1},
        "before": {VarId.y(l, i): 1 for l in range(2, i)},
        "after": {VarId.y(i, m): 1 for m in range(i + 1, n + 1)},
        "first": {VarId.y(1, m): 1 for m in others},
        "rest": {VarId.y(l, m): 1 for l, m in combinations(others, 2)},
    }


def leyij_closed_form(n: int, i: int, j: int, which: int) -> PolyElement:
    """Closed form of leyij_sums in terms of the sums around index i."""
    _check_leyij_indices(n, i, j, which)
    f = math.factorial
    r = f(n - 3)
    sums = _index_sums(n, i)
    half = Fraction(f(n - 2), 2)
    spread = Fraction(n - 2, 2) * f(n - 2)
    mixed = ((j - 1) * (n - 4) + j) * r
    parts = {
        1: [((n - j) * r, sums["before"]), ((j - 2) * r, sums["after"]), (half, sums["rest"])],
        2: [
            (f(n - 2), sums["y1i"]),
            ((j - 2) * r, sums["first"]),
            ((n - 2) * r, sums["before"]),
            (half, sums["rest"]),
        ],
        3: [
            ((n - j) * f(n - 2), sums["y1i"]),
            (math.comb(n - 1, 2) * r, sums["first"]),
            (mixed, sums["after"]),
            ((n - j) * (n - 3) * r, sums["before"]),
            (spread, sums["rest"]),
        ],
        4: [
            ((j - 2) * f(n - 2), sums["y1i"]),
            (mixed, sums["first"]),
            (math.comb(n - 2, 2) * r, sums["before"]),
            (math.comb(n - 1, 2) * r, sums["after"]),
            (spread, sums["rest"]),
        ],
    }[which]
    return _combination(registry_for(n), parts)


def prinv_factors(n: int) -> Tuple[List[Fraction], List[PolyElement]]:
    """
    Rank-one factors of the inversion action: entry (j, i) = lambda_j * x_i.

    lambda_j = (n - 2j + 1)/2 * (n-2)! and
    x_i = 2 y[1,i] + sum_{m != 1,i} y[1,m] + sum_{1<l<i} y[l,i] - sum_{m>i} y[i,m],
    both listed for j, i = 2..n.
    """
    if n < 2:
        raise UsageError(f"prinv_factors needs n >= 2, got {n}")
    registry = registry_for(n)
    f = math.factorial
    lambdas = [Fraction(n - 2 * j + 1, 2) * f(n - 2) for j in range(2, n + 1)]
    xs = []
    for i in range(2, n + 1):
        sums = _index_sums(n, i)
        xs.append(_combination(registry, [
            (2, sums["y1i"]), (1, sums["first"]), (1, sums["before"]), (-1, sums["after"]),
        ]))
    return lambdas, xs


def leg_defining_sum(n: int) -> PolyElement:
    lambdas, xs = prinv_factors(n)
    total = registry_for(n).zero
    for lam, x in zip(lambdas, xs):
        total += x * to_qq(lam)
    return total


def leg_closed_form(n: int) -> PolyElement:
    f = math.factorial
    return registry_for(n).linear({VarId.y(i, j): -f(n - 2) * (j - i) for i, j in combinations(range(1, n + 1), 2)})


def leg_form(n: int) -> PolyElement:
    """g = sum_i lambda_i x_i, checked against -(n-2)! sum (j-i) y[i,j]."""
    if n < 4:
        raise UsageError(f"leg_form needs n >= 4, got {n}")
    defined = leg_defining_sum(n)
    closed = leg_closed_form(n)
    if defined != closed:
        registry = registry_for(n)
        raise InvariantViolation(f"g = {registry.format(defined)} but closed form is {registry.format(closed)}")
    return defined


def lex_matrix(lambdas: Sequence[Any], xs: Sequence[PolyElement]) -> Matrix:
    """X with entry (i, j) = lambda_i x_j."""
    if len(lambdas) != len(xs) or not xs:
        raise UsageError("lambda and x must be non-empty and of equal length")
    size = len(xs)
    return Matrix(size, size, tuple(xs[j] * to_qq(lambdas[i]) for i in range(size) for j in range(size)))


def lex_spectrum(
    lambdas: Sequence[Any],
    xs: Sequence[PolyElement],
    registry: Optional[PolyRegistry] = None,
) -> SpectrumSpec:
    """
    Spectrum of the rank-one matrix (lambda_i x_j): its trace once, 0 with multiplicity n - 1.

    Raises:
        UsageError: If the lengths differ, x_1 = 0, or the trace vanishes
    """
    if len(lambdas) != len(xs) or not xs:
        raise UsageError("lambda and x must be non-empty and of equal length")
    if not xs[0]:
        raise UsageError("the rank-one spectrum needs x_1 != 0")
    registry = registry_of(xs[0]) if registry is None else registry
    trace = registry.zero
    for lam, x in zip(lambdas, xs):
        trace += x * to_qq(lam)
    if not trace:
        raise UsageError("sum lambda_i x_i vanishes, so X is nilpotent rather than diagonalizable")
    size = len(xs)
    return make_spec(MatrixKind.X, size, [(trace, 1), (registry.zero, size - 1)], "LeX", registry, size)


def rank_one_minors_vanish(m: Matrix) -> Tuple[bool, Optional[Tuple[int, int, int, int]]]:
    """Every 2x2 minor is zero; otherwise the first offending (row, row, col, col)."""
    for r1, r2 in combinations(range(m.rows), 2):
        for c1, c2 in combinations(range(m.cols), 2):
            if m[r1, c1] * m[r2, c2] - m[r1, c2] * m[r2, c1]:
                return False, (r1, r2, c1, c2)
    return True, None


def verify_thsp(n: int, seeds: Optional[Sequence[int]] = None, jobs: Optional[int] = None) -> CheckReport:
    """
    Certify the spectrum of i_y(n) + f_z(n) acting on S^(n-1,1).

    Checks that f_z acts as n(n-2)! z I, that the i_y action is the rank-one
    matrix (lambda_j x_i) with trace g, that kernel dimensions at seeded
    specializations match multiplicities 1 and n - 2, and that they add up to
    n - 1.
    """
    if n < 4:
        raise UsageError(f"verify_thsp needs n >= 4, got {n}")
    require_degree(n, config.MAX_MATRIX_N, "verify_thsp")
    registry = registry_for(n)
    f = math.factorial
    report = CheckReport(name="ThSp", n=n)
    checks: Dict[str, bool] = {}

    fix_action = specht_action(element_of(StatKind.FIX_Z, n))
    scalar = registry.linear({Z: n * f(n - 2)})
    checks["fix_action_scalar"] = fix_action.entries == Matrix.scalar(n - 1, scalar, registry.zero).entries
    if not checks["fix_action_scalar"]:
        report.issues.append(f"f_z does not act as {registry.format(scalar)} I")

    inv_action = specht_action(element_of(StatKind.INV_Y, n))
    checks["rank_one_minors"], witness = rank_one_minors_vanish(inv_action)
    if witness is not None:
        report.issues.append(f"nonzero 2x2 minor at rows {witness[:2]}, columns {witness[2:]}")

    g = leg_form(n)
    checks["trace_is_g"] = inv_action.trace() == g
    if not checks["trace_is_g"]:
        report.issues.append(f"trace {registry.format(inv_action.trace())} != g = {registry.format(g)}")

    lambdas, xs = prinv_factors(n)
    mismatch = next(
        ((r, c) for r in range(n - 1) for c in range(n - 1) if inv_action[r, c] != xs[c] * to_qq(lambdas[r])),
        None,
    )
    checks["prinv_factorization"] = mismatch is None
    if mismatch is not None:
        report.issues.append(f"entry (v{mismatch[0] + 2}, v{mismatch[1] + 2}) is not lambda_j x_i")

    combined = specht_action(element_of(StatKind.INV_Y_PLUS_FIX_Z, n))
    certification = certify(predicted_spectrum(MatrixKind.SPECHT_IF, n), seeds=seeds, jobs=jobs, matrix=combined)
    checks["kernel_dims"] = certification.passed
    checks["diagonalizable"] = all(certification.diagonalizable)
    if not certification.passed:
        report.issues.extend(f"certification: {failure}" for failure in certification.failures)
    if not checks["diagonalizable"]:
        report.issues.append("kernel dimensions do not add up to n - 1")

    report.details["checks"] = checks
    report.details["certification"] = certification.to_dict(timing=False)
    return report
