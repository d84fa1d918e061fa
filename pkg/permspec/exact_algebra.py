"""
Exact arithmetic: rationals, polynomial registries, dense matrices.

Linear forms and polynomials are elements of a sympy sparse polynomial ring
over QQ, one ring per variable registry. Specialized values are exposed as
fractions.Fraction. Rank is computed by fraction-free elimination on integer
rows, never with floating point.
"""

import csv
import io
import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any, Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring as polynomial_ring

from . import config
from .errors import CertificationSetupError, UsageError

Rational = Fraction

# 2^31 - 1: residues multiply without overflowing int64
MODULAR_PRIME = 2147483647


def to_rational(coefficient) -> Fraction:
    """Convert a QQ domain element to a Fraction."""
    return Fraction(int(QQ.numer(coefficient)), int(QQ.denom(coefficient)))


def to_qq(value) -> Any:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def format_rational(value) -> str:
    return str(Fraction(value))


# ring -> registry, so a bare polynomial can always be printed
_REGISTRIES: Dict[Any, "PolyRegistry"] = {}


def registry_of(p: PolyElement) -> "PolyRegistry":
    """The registry whose ring p belongs to."""
    try:
        return _REGISTRIES[p.ring]
    except (AttributeError, KeyError):
        raise UsageError(f"{p!r} does not belong to a registered ring") from None


class PolyRegistry:
    """
    A fixed, ordered set of variables and the polynomial ring over them.

    Keys are any sortable hashables whose str() is the printed variable name
    (e.g. "y[1,2]"); symbol_names are the identifiers handed to sympy.
    """

    def __init__(self, keys: Sequence[Hashable], symbol_names: Sequence[str]):
        if len(keys) != len(symbol_names) or not keys:
            raise UsageError("a registry needs one symbol name per key and at least one key")
        self.keys: Tuple[Hashable, ...] = tuple(keys)
        self.ring, *gens = polynomial_ring(",".join(symbol_names), QQ)
        self.gens: Tuple[PolyElement, ...] = tuple(gens)
        self._position = {key: index for index, key in enumerate(self.keys)}
        self._zero_monom = (0,) * len(self.keys)
        _REGISTRIES.setdefault(self.ring, self)

    def __contains__(self, key) -> bool:
        return key in self._position

    @property
    def zero(self) -> PolyElement:
        return self.ring.zero

    @property
    def one(self) -> PolyElement:
        return self.ring.one

    def gen(self, key) -> PolyElement:
        if key not in self._position:
            raise UsageError(f"variable {key} is not in this registry")
        return self.gens[self._position[key]]

    def constant(self, value) -> PolyElement:
        return self.ring.ground_new(to_qq(value))

    def linear(self, terms: Mapping[Hashable, Any], constant=0) -> PolyElement:
        """Build sum(c * key) + constant from a sparse coefficient map."""
        form = self.constant(constant)
        for key, coefficient in terms.items():
            if coefficient:
                form += self.gen(key) * to_qq(coefficient)
        return form

    def coefficient(self, p: PolyElement, key) -> Fraction:
        """Coefficient of the degree-one monomial key."""
        monom = tuple(1 if index == self._position[key] else 0 for index in range(len(self.keys)))
        return to_rational(p.get(monom, QQ.zero))

    def constant_term(self, p: PolyElement) -> Fraction:
        return to_rational(p.get(self._zero_monom, QQ.zero))

    def linear_terms(self, p: PolyElement) -> Dict[Hashable, Fraction]:
        return {key: self.coefficient(p, key) for key in self.keys if self.coefficient(p, key)}

    def variables(self, p: PolyElement) -> List[Hashable]:
        present = set()
        for monom in p.keys():
            present.update(index for index, exponent in enumerate(monom) if exponent)
        return [self.keys[index] for index in sorted(present)]

    def degree(self, p: PolyElement) -> int:
        return max((sum(monom) for monom in p.keys()), default=0)

    def is_constant(self, p: PolyElement) -> bool:
        return all(not any(monom) for monom in p.keys())

    def evaluate(self, p: PolyElement, values: Mapping[Hashable, Fraction]) -> Fraction:
        """Evaluate at a point; every variable present in p must be assigned."""
        total = Fraction(0)
        for monom, coefficient in p.items():
            term = to_rational(coefficient)
            for index, exponent in enumerate(monom):
                if not exponent:
                    continue
                key = self.keys[index]
                if key not in values:
                    raise UsageError(f"variable {key} is not assigned")
                term *= Fraction(values[key]) ** exponent
            total += term
        return total

    def substitute(self, p: PolyElement, replacements: Mapping[Hashable, PolyElement]) -> PolyElement:
        """Replace variables by polynomials of the same ring."""
        result = self.zero
        for monom, coefficient in p.items():
            term = self.ring.ground_new(coefficient)
            for index, exponent in enumerate(monom):
                if exponent:
                    base = replacements.get(self.keys[index], self.gens[index])
                    term *= base ** exponent
            result += term
        return result

    def format(self, p: PolyElement) -> str:
        """Canonical text: monomials in registry order, constant last."""
        if not p:
            return "0"
        pieces = []
        for monom in sorted(p.keys(), reverse=True):
            coefficient = to_rational(p[monom])
            factors = [
                str(self.keys[index]) if exponent == 1 else f"{self.keys[index]}^{exponent}"
                for index, exponent in enumerate(monom)
                if exponent
            ]
            body = "*".join(factors)
            if not body:
                piece = str(coefficient)
            elif coefficient == 1:
                piece = body
            elif coefficient == -1:
                piece = "-" + body
            else:
                piece = f"{coefficient}*{body}"
            pieces.append(piece)
        text = pieces[0]
        for piece in pieces[1:]:
            text += " - " + piece[1:] if piece.startswith("-") else " + " + piece
        return text


def _zero_like(entry):
    return entry - entry


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix over Fraction, int or PolyElement entries."""

    rows: int
    cols: int
    entries: Tuple[Any, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.rows * self.cols:
            raise UsageError(f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "Matrix":
        width = len(rows[0]) if rows else 0
        if any(len(row) != width for row in rows):
            raise UsageError("ragged rows")
        return cls(len(rows), width, tuple(value for row in rows for value in row))

    @classmethod
    def scalar(cls, dim: int, value, zero) -> "Matrix":
        return cls(dim, dim, tuple(value if i == j else zero for i in range(dim) for j in range(dim)))

    @classmethod
    def identity(cls, dim: int, one=Fraction(1), zero=Fraction(0)) -> "Matrix":
        return cls.scalar(dim, one, zero)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, position: Tuple[int, int]):
        i, j = position
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Any, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[Any, ...]:
        return self.entries[j::self.cols]

    def to_rows(self) -> List[List[Any]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def map(self, fn: Callable[[Any], Any]) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(fn(e) for e in self.entries))

    def _check_same_shape(self, other: "Matrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise UsageError(f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, factor) -> "Matrix":
        return self.map(lambda e: e * factor)

    def shift(self, value) -> "Matrix":
        """self - value * I."""
        if not self.is_square:
            raise UsageError("shift needs a square matrix")
        entries = list(self.entries)
        for i in range(self.rows):
            entries[i * self.cols + i] = entries[i * self.cols + i] - value
        return Matrix(self.rows, self.cols, tuple(entries))

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def trace(self):
        if not self.is_square:
            raise UsageError("trace needs a square matrix")
        return reduce(operator.add, (self[i, i] for i in range(self.rows)))

    def row_sums(self) -> List[Any]:
        return [reduce(operator.add, self.row(i)) for i in range(self.rows)]

    def is_symmetric(self) -> bool:
        return self.is_square and all(self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_zero(self) -> bool:
        return not any(self.entries)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact product; zero entries of a are skipped."""
    if a.cols != b.rows:
        raise UsageError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if not a.entries or not b.entries:
        return Matrix(a.rows, b.cols, ())
    zero = _zero_like(a.entries[0]) * _zero_like(b.entries[0])
    b_rows = [b.row(k) for k in range(b.rows)]
    entries = []
    for i in range(a.rows):
        accumulator = [zero] * b.cols
        for k, a_ik in enumerate(a.row(i)):
            if not a_ik:
                continue
            b_row = b_rows[k]
            for j in range(b.cols):
                if b_row[j]:
                    accumulator[j] = accumulator[j] + a_ik * b_row[j]
        entries.extend(accumulator)
    return Matrix(a.rows, b.cols, tuple(entries))


def _integer_rows(m: Matrix) -> List[List[int]]:
    """Clear denominators and remove the content of every row."""
    rows = []
    for i in range(m.rows):
        values = [Fraction(v) for v in m.row(i)]
        scale = math.lcm(*(v.denominator for v in values)) if values else 1
        integers = [int(v * scale) for v in values]
        content = math.gcd(*integers) if integers else 0
        if content > 1:
            integers = [v // content for v in integers]
        rows.append(integers)
    return rows


def _bareiss_rank(rows: List[List[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    a = np.array(rows, dtype=object)
    n_rows, n_cols = a.shape
    rank_so_far = 0
    previous = 1
    for col in range(n_cols):
        if rank_so_far == n_rows:
            break
        candidates = np.flatnonzero(a[rank_so_far:, col] != 0)
        if candidates.size == 0:
            continue
        pivot_row = rank_so_far + int(candidates[0])
        if pivot_row != rank_so_far:
            a[[rank_so_far, pivot_row]] = a[[pivot_row, rank_so_far]]
        pivot = a[rank_so_far, col]
        if rank_so_far + 1 < n_rows:
            below = a[rank_so_far + 1:, col:]
            # Sylvester's identity makes the division exact
            a[rank_so_far + 1:, col:] = (pivot * below - np.outer(a[rank_so_far + 1:, col], a[rank_so_far, col:])) // previous
        previous = pivot
        rank_so_far += 1
    return rank_so_far


def rank(m: Matrix) -> int:
    """Exact rank by fraction-free elimination, first nonzero pivot in column order."""
    return _bareiss_rank(_integer_rows(m))


def kernel_dim(m: Matrix) -> int:
    if not m.is_square:
        raise UsageError(f"kernel_dim needs a square matrix, got {m.rows}x{m.cols}")
    return m.rows - rank(m)


def rank_mod_p(m: Matrix, prime: int = MODULAR_PRIME) -> int:
    """
    Rank of the integer-scaled rows modulo a prime.

    This never exceeds the rational rank, so m.rows - rank_mod_p(m) bounds the
    rational kernel dimension from above.
    """
    if prime > MODULAR_PRIME:
        raise UsageError(f"prime must be at most {MODULAR_PRIME} for int64 elimination")
    rows = _integer_rows(m)
    if not rows or not rows[0]:
        return 0
    a = np.array([[value % prime for value in row] for row in rows], dtype=np.int64)
    n_rows, n_cols = a.shape
    rank_so_far = 0
    for col in range(n_cols):
        if rank_so_far == n_rows:
            break
        candidates = np.flatnonzero(a[rank_so_far:, col])
        if candidates.size == 0:
            continue
        pivot_row = rank_so_far + int(candidates[0])
        if pivot_row != rank_so_far:
            a[[rank_so_far, pivot_row]] = a[[pivot_row, rank_so_far]]
        inverse = pow(int(a[rank_so_far, col]), prime - 2, prime)
        a[rank_so_far] = (a[rank_so_far] * inverse) % prime
        factors = a[rank_so_far + 1:, col].copy()
        a[rank_so_far + 1:] = (a[rank_so_far + 1:] - np.outer(factors, a[rank_so_far]) % prime) % prime
        rank_so_far += 1
    return rank_so_far


@dataclass(frozen=True)
class Assignment:
    """Rational values for a set of variables, reproducible from its seed."""

    values: Mapping[Hashable, Fraction]
    seed: Optional[int] = None
    attempts: int = 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "attempts": self.attempts,
            "values": {str(key): format_rational(value) for key, value in sorted(self.values.items())},
        }


def specialize(m: Matrix, registry: PolyRegistry, assignment: Assignment) -> Matrix:
    """Evaluate every polynomial entry at the assignment."""
    cache: Dict[int, Fraction] = {}

    def evaluate(entry) -> Fraction:
        if not isinstance(entry, PolyElement):
            return Fraction(entry)
        # matrix builders share entry objects, so identity is a good cache key
        key = id(entry)
        if key not in cache:
            cache[key] = registry.evaluate(entry, assignment.values)
        return cache[key]

    return m.map(evaluate)


def random_assignment(
    variables: Iterable[Hashable],
    seed: int,
    registry: Optional[PolyRegistry] = None,
    distinct: Sequence[PolyElement] = (),
) -> Assignment:
    """
    Draw integers uniformly from [1, ASSIGNMENT_MAX] for each variable.

    Args:
        variables: Variables to assign
        seed: Reproducibility token (non-negative, up to 64 bits)
        registry: Registry used to evaluate the distinct forms
        distinct: Forms that must take pairwise different values

    Returns:
        The first assignment, in draw order, separating all distinct forms
    """
    if seed < 0:
        raise UsageError(f"seeds must be non-negative, got {seed}")
    if distinct and registry is None:
        raise UsageError("a registry is needed to separate forms")
    ordered = sorted(set(variables))
    rng = np.random.default_rng(seed)
    for attempt in range(1, config.MAX_RESAMPLE_ATTEMPTS + 1):
        draws = rng.integers(1, config.ASSIGNMENT_MAX, size=len(ordered), endpoint=True)
        values = {key: Fraction(int(draw)) for key, draw in zip(ordered, draws)}
        evaluated = [registry.evaluate(form, values) for form in distinct]
        if len(set(evaluated)) == len(evaluated):
            return Assignment(values=values, seed=seed, attempts=attempt)
    raise CertificationSetupError(
        f"seed {seed}: predicted values still collide after {config.MAX_RESAMPLE_ATTEMPTS} draws"
    )


def matrix_to_csv(
    m: Matrix,
    row_labels: Sequence[str],
    col_labels: Sequence[str],
    formatter: Callable[[Any], str] = format_rational,
) -> str:
    """CSV with a header row of column labels and a label in front of each row."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["", *col_labels])
    for i, label in enumerate(row_labels):
        writer.writerow([label, *(formatter(value) for value in m.row(i))])
    return buffer.getvalue()
