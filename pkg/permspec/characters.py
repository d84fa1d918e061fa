"""
Partitions, hook dimensions, class sizes and irreducible characters of S_n.

Characters come from the Murnaghan-Nakayama rule, evaluated on beta-sets
(abacus positions) so that removing a border strip of length r is moving a
single bead r places down.
"""

import csv
import io
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import chain
from typing import Dict, List, Sequence, Tuple

from sympy.utilities.iterables import partitions as _sympy_partitions

from . import config
from .errors import ResourceLimitError, UsageError


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise UsageError("a partition needs at least one part")
        if any(p <= 0 for p in parts):
            raise UsageError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise UsageError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Accept "3+1", "(3,1)" or "3,1"."""
        cleaned = text.strip().strip("()")
        pieces = cleaned.replace("+", ",").split(",")
        return cls(tuple(sorted((int(p) for p in pieces if p.strip()), reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def fix(self) -> int:
        """Number of fixed points of any permutation of this cycle type."""
        return self.parts.count(1)

    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.parts))

    def conjugate(self) -> "Partition":
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    @property
    def label(self) -> str:
        return "+".join(str(p) for p in self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partitions(n: int) -> List[Partition]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 1:
        raise UsageError(f"partitions need n >= 1, got {n}")
    if n > config.MAX_PARTITION_N:
        raise ResourceLimitError(f"partitions({n}) exceeds MAX_PARTITION_N={config.MAX_PARTITION_N}")
    found = []
    # sympy reuses the yielded dict, so flatten it immediately
    for multiplicities in _sympy_partitions(n):
        parts = chain.from_iterable([part] * count for part, count in multiplicities.items())
        found.append(Partition(tuple(sorted(parts, reverse=True))))
    return sorted(found, reverse=True)


def hook_lengths(shape: Partition) -> List[int]:
    conjugate = shape.conjugate().parts
    return [
        (row_length - j - 1) + (conjugate[j] - i - 1) + 1
        for i, row_length in enumerate(shape.parts)
        for j in range(row_length)
    ]


def hook_dim(shape: Partition) -> int:
    """Dimension of the Specht module S^shape by the hook length formula."""
    return math.factorial(shape.n) // math.prod(hook_lengths(shape))


def z_mu(cycle_type: Partition) -> int:
    """Centralizer order prod_i i^{m_i} m_i!."""
    return math.prod(part ** count * math.factorial(count) for part, count in cycle_type.multiplicities().items())


def class_size(cycle_type: Partition) -> int:
    """Size of the conjugacy class n!/z_mu."""
    return math.factorial(cycle_type.n) // z_mu(cycle_type)


@lru_cache(maxsize=None)
def _mn_value(shape: Tuple[int, ...], strips: Tuple[int, ...]) -> int:
    if not strips:
        return 1 if not shape else 0
    r, rest = strips[0], strips[1:]
    length = len(shape)
    beta = [shape[i] + (length - 1 - i) for i in range(length)]
    beads = set(beta)
    total = 0
    for bead in beta:
        target = bead - r
        if target < 0 or target in beads:
            continue
        height = sum(1 for other in beta if target < other < bead)
        moved = sorted((beads - {bead}) | {target}, reverse=True)
        reduced = tuple(p for p in (moved[i] - (length - 1 - i) for i in range(length)) if p > 0)
        total += (-1) ** height * _mn_value(reduced, rest)
    return total


def mn_character(shape: Partition, cycle_type: Partition) -> int:
    """
    Irreducible character value chi_shape at the class cycle_type.

    Args:
        shape: Partition labelling the irreducible representation
        cycle_type: Partition labelling the conjugacy class

    Returns:
        The integer character value
    """
    if shape.n != cycle_type.n:
        raise UsageError(f"|{shape}| != |{cycle_type}|")
    return _mn_value(shape.parts, cycle_type.parts)


@dataclass(frozen=True)
class CharacterTable:
    """Rows indexed by irreducibles, columns by classes, both in partitions(n) order."""

    n: int
    shapes: Tuple[Partition, ...]
    values: Tuple[Tuple[int, ...], ...]
    dims: Tuple[int, ...]
    class_sizes: Tuple[int, ...]

    def value(self, shape: Partition, cycle_type: Partition) -> int:
        return self.values[self.shapes.index(shape)][self.shapes.index(cycle_type)]

    def first_column_matches_dims(self) -> bool:
        identity_column = self.shapes.index(Partition((1,) * self.n))
        return all(row[identity_column] == d for row, d in zip(self.values, self.dims))

    def trivial_row_is_ones(self) -> bool:
        return all(v == 1 for v in self.values[self.shapes.index(Partition((self.n,)))])

    def column_orthogonality_holds(self) -> bool:
        """sum_lambda chi^mu chi^nu == delta_{mu,nu} z_mu for every pair of columns."""
        count = len(self.shapes)
        for a in range(count):
            for b in range(a, count):
                inner = sum(row[a] * row[b] for row in self.values)
                expected = z_mu(self.shapes[a]) if a == b else 0
                if inner != expected:
                    return False
        return True

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["", *(mu.label for mu in self.shapes)])
        for shape, row in zip(self.shapes, self.values):
            writer.writerow([shape.label, *row])
        return buffer.getvalue()

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "shapes": [s.label for s in self.shapes],
            "values": [list(row) for row in self.values],
            "dims": list(self.dims),
            "class_sizes": list(self.class_sizes),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "CharacterTable":
        return cls(
            n=data["n"],
            shapes=tuple(Partition.parse(label) for label in data["shapes"]),
            values=tuple(tuple(row) for row in data["values"]),
            dims=tuple(data["dims"]),
            class_sizes=tuple(data["class_sizes"]),
        )


def character_table(n: int) -> CharacterTable:
    """Full character table, memoized on disk when PERMSPEC_CACHE_DIR is set."""
    cache = config.cache_dir()
    cache_path = cache / f"characters_n{n}.json" if cache else None
    if cache_path is not None and cache_path.exists():
        with open(cache_path, "r") as f:
            return CharacterTable.from_dict(json.load(f))

    shapes = tuple(partitions(n))
    table = CharacterTable(
        n=n,
        shapes=shapes,
        values=tuple(tuple(mn_character(shape, mu) for mu in shapes) for shape in shapes),
        dims=tuple(hook_dim(shape) for shape in shapes),
        class_sizes=tuple(class_size(mu) for mu in shapes),
    )

    if cache_path is not None:
        cache_path.parent.mkdir(parents=True, exist_ok=True)
        with open(cache_path, "w") as f:
            json.dump(table.to_dict(), f, indent=2)
    return table


def _fix_weighted_sum(table: CharacterTable, row: Sequence[int]) -> int:
    return sum(mu.fix * size * chi for mu, size, chi in zip(table.shapes, table.class_sizes, row))


@dataclass
class DichotomyReport:
    """Character sums S(lambda) = sum_mu fix(mu) #class(mu) chi_lambda^mu."""

    n: int
    sums: Dict[Partition, int]
    dims: Dict[Partition, int]
    issues: List[str] = field(default_factory=list)

    @property
    def nonzero(self) -> List[Partition]:
        return [shape for shape, value in self.sums.items() if value != 0]

    @property
    def passed(self) -> bool:
        return not self.issues

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "sums": {shape.label: value for shape, value in self.sums.items()},
            "nonzero": [shape.label for shape in self.nonzero],
            "nonzero_dims": [self.dims[shape] for shape in self.nonzero],
            "verdict": "PASS" if self.passed else "FAIL",
            "issues": self.issues,
        }


def character_sum_dichotomy(n: int) -> DichotomyReport:
    """
    Evaluate S(lambda) for every lambda and check the two-block dichotomy.

    The nonzero set is reported as computed; no partition labels are presumed.
    """
    if not 4 <= n <= 8:
        raise UsageError(f"character_sum_dichotomy needs 4 <= n <= 8, got {n}")
    table = character_table(n)
    sums = {shape: _fix_weighted_sum(table, row) for shape, row in zip(table.shapes, table.values)}
    report = DichotomyReport(n=n, sums=sums, dims=dict(zip(table.shapes, table.dims)))

    factorial = math.factorial(n)
    nonzero = report.nonzero
    if len(nonzero) != 2:
        report.issues.append(f"expected 2 nonzero sums, found {len(nonzero)}: {[str(s) for s in nonzero]}")
    for shape in nonzero:
        if sums[shape] != factorial:
            report.issues.append(f"S({shape}) = {sums[shape]}, expected {factorial}")
    if sorted(report.dims[shape] for shape in nonzero) != [1, n - 1]:
        report.issues.append(f"nonzero dims {[report.dims[s] for s in nonzero]}, expected [1, {n - 1}]")
    return report


def block_scalars(n: int) -> Dict[Partition, Fraction]:
    """Scalar by which sum_sigma fix(sigma) sigma acts on each isotypic block: S(lambda)/d_lambda."""
    table = character_table(n)
    return {
        shape: Fraction(_fix_weighted_sum(table, row), dim)
        for shape, row, dim in zip(table.shapes, table.values, table.dims)
    }

