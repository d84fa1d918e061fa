"""
Predicted spectra and the engine that certifies them.

A SpectrumSpec lists eigenvalues (linear forms) with multiplicities. certify
builds the matrix by brute force and checks every multiplicity as a kernel
dimension at seeded integer specializations, together with symbolic trace
and Perron row-sum identities.
"""

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement

from . import config
from .characters import block_scalars, character_table
from .errors import RegistryError, ResourceLimitError, UsageError
from .exact_algebra import (
    MODULAR_PRIME,
    Assignment,
    Matrix,
    PolyRegistry,
    format_rational,
    kernel_dim,
    mat_mul,
    random_assignment,
    rank,
    rank_mod_p,
    specialize,
)
from .groupalg import (
    GroupAlgebraElement,
    adjacent_substitution,
    all_ones_element,
    convolve,
    dif_by_substitution,
    element_of,
    matrix_of_element,
    regular_matrix,
)
from .perm import require_degree
from .stats import VarId, Z, StatKind, fix_counts, mif_assignment, registry_for


class MatrixKind(Enum):
    F = "F"
    IF = "IF"
    DIF = "DIF"
    MIF = "MIF"
    J = "J"
    SPECHT_IF = "SPECHT_IF"
    X = "X"

    @classmethod
    def parse(cls, text: str) -> "MatrixKind":
        try:
            return cls(text.strip().upper())
        except ValueError:
            choices = ", ".join(kind.value for kind in cls)
            raise UsageError(f"unknown matrix kind {text!r} (choose from {choices})") from None


STAT_OF_KIND = {
    MatrixKind.F: StatKind.FIX_Z,
    MatrixKind.IF: StatKind.INV_Y_PLUS_FIX_Z,
    MatrixKind.DIF: StatKind.DES_X_PLUS_INV_Y_PLUS_FIX_Z,
    MatrixKind.MIF: StatKind.MAJ_PLUS_INV_PLUS_FIX,
}

# kinds whose rows all sum to the multiplicity-one eigenvalue listed first
PERRON_KINDS = frozenset({MatrixKind.F, MatrixKind.IF, MatrixKind.DIF, MatrixKind.MIF, MatrixKind.J})


@dataclass(frozen=True)
class Eigenpair:
    value: PolyElement
    multiplicity: int


@dataclass(frozen=True)
class SpectrumSpec:
    """Eigenvalues with multiplicities; the first eigenpair is the top one where that matters."""

    kind: MatrixKind
    n: int
    eigenpairs: Tuple[Eigenpair, ...]
    provenance: str
    registry: PolyRegistry
    dim: int

    def __post_init__(self):
        pairs = tuple(self.eigenpairs)
        object.__setattr__(self, "eigenpairs", pairs)
        if any(pair.multiplicity < 1 for pair in pairs):
            raise RegistryError(f"{self.kind.value}({self.n}): multiplicities must be positive")
        total = sum(pair.multiplicity for pair in pairs)
        if total != self.dim:
            raise RegistryError(f"{self.kind.value}({self.n}): multiplicities sum to {total}, expected {self.dim}")
        for a, b in combinations(range(len(pairs)), 2):
            if pairs[a].value == pairs[b].value:
                raise RegistryError(
                    f"{self.kind.value}({self.n}): eigenvalue {self.format(pairs[a].value)} listed twice"
                )

    @property
    def values(self) -> List[PolyElement]:
        return [pair.value for pair in self.eigenpairs]

    @property
    def multiplicities(self) -> List[int]:
        return [pair.multiplicity for pair in self.eigenpairs]

    def format(self, value: PolyElement) -> str:
        return self.registry.format(value)

    def predicted_trace(self) -> PolyElement:
        total = self.registry.zero
        for pair in self.eigenpairs:
            total += pair.value * pair.multiplicity
        return total

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "provenance": self.provenance,
            "eigen": [{"value": self.format(p.value), "mult": p.multiplicity} for p in self.eigenpairs],
        }


def make_spec(
    kind: MatrixKind,
    n: int,
    pairs: Sequence[Tuple[PolyElement, int]],
    provenance: str,
    registry: PolyRegistry,
    dim: int,
) -> SpectrumSpec:
    """Build a spec, dropping eigenvalues whose multiplicity formula gives zero."""
    eigenpairs = tuple(Eigenpair(value, mult) for value, mult in pairs if mult)
    return SpectrumSpec(kind=kind, n=n, eigenpairs=eigenpairs, provenance=provenance, registry=registry, dim=dim)


@dataclass
class CheckReport:
    """Outcome of a single verification; passes when no issue was recorded."""

    name: str
    n: int
    details: Dict[str, Any] = field(default_factory=dict)
    issues: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.issues

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.name,
            "n": self.n,
            "verdict": "PASS" if self.passed else "FAIL",
            **self.details,
            "issues": list(self.issues),
        }


def _pairs(n: int) -> List[Tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def _if_multiplicities(n: int) -> List[int]:
    return [
        1,
        n - 1,
        math.comb(n - 1, 2),
        (n - 1) * (n - 2),
        math.factorial(n) - n * (3 * n - 7) // 2 - 3,
    ]


def _golden_if(n: int, registry: PolyRegistry) -> List[Tuple[PolyElement, int]]:
    if n == 1:
        return [(registry.linear({Z: 1}), 1)]
    if n == 2:
        y12 = VarId.y(1, 2)
        return [(registry.linear({y12: 1, Z: 2}), 1), (registry.linear({y12: -1, Z: 2}), 1)]
    y12, y13, y23 = VarId.y(1, 2), VarId.y(1, 3), VarId.y(2, 3)
    return [
        (registry.linear({y12: 3, y13: 3, y23: 3, Z: 6}), 1),
        (registry.linear({y12: -1, y13: 1, y23: -1}), 1),
        (registry.linear({y12: -1, y13: -2, y23: -1, Z: 3}), 2),
        (registry.linear({Z: 3}), 2),
    ]


def _if_values(n: int, registry: PolyRegistry) -> List[PolyElement]:
    f = math.factorial
    pairs = _pairs(n)
    return [
        registry.linear({**{VarId.y(i, j): Fraction(f(n), 2) for i, j in pairs}, Z: f(n)}),
        registry.linear({**{VarId.y(i, j): -f(n - 2) * (j - i) for i, j in pairs}, Z: n * f(n - 2)}),
        registry.linear({VarId.y(i, j): -f(n - 3) * (n - 2 * (j - i)) for i, j in pairs}),
        registry.linear({Z: n * f(n - 2)}),
        registry.zero,
    ]


def _dif_values(n: int, registry: PolyRegistry) -> List[PolyElement]:
    f = math.factorial
    pairs = _pairs(n)
    xs = [VarId.x(i) for i in range(1, n)]
    return [
        registry.linear({
            **{x: Fraction(f(n), 2) for x in xs},
            **{VarId.y(i, j): Fraction(f(n), 2) for i, j in pairs},
            Z: f(n),
        }),
        registry.linear({
            **{x: -f(n - 2) for x in xs},
            **{VarId.y(i, j): -f(n - 2) * (j - i) for i, j in pairs},
            Z: n * f(n - 2),
        }),
        registry.linear({
            **{x: -f(n - 2) for x in xs},
            **{VarId.y(i, j): -f(n - 3) * (n - 2 * (j - i)) for i, j in pairs},
        }),
        registry.linear({Z: n * f(n - 2)}),
        registry.zero,
    ]


def _mif_values(n: int, registry: PolyRegistry) -> List[PolyElement]:
    f = math.factorial
    return [
        registry.constant(f(n) * math.comb(n, 2) + f(n)),
        registry.constant(Fraction(n * (2 - n) * (n + 5) * f(n - 2), 6)),
        registry.constant(Fraction(-2 * f(n), 3)),
        registry.constant(n * f(n - 2)),
        registry.zero,
    ]


def j_spectrum(n: int, p: Optional[PolyElement] = None) -> SpectrumSpec:
    """{n! p: 1, 0: n! - 1} for the matrix with every entry p (default p = z)."""
    registry = registry_for(n)
    p = registry.gen(Z) if p is None else p
    size = math.factorial(n)
    return make_spec(MatrixKind.J, n, [(p * size, 1), (registry.zero, size - 1)], "LeJ", registry, size)


def predicted_spectrum(kind: MatrixKind, n: int) -> SpectrumSpec:
    """
    Registered spectrum for (kind, n).

    Args:
        kind: Matrix family
        n: Degree

    Returns:
        The exact eigenpair list with multiplicities instantiated at n

    Raises:
        RegistryError: If no prediction is registered for (kind, n)
    """
    if n < 1:
        raise RegistryError(f"no spectrum registered for {kind.value}({n})")
    registry = registry_for(n)
    f = math.factorial
    if kind is MatrixKind.IF and n <= 3:
        return make_spec(kind, n, _golden_if(n, registry), "small-case table", registry, f(n))
    if kind is MatrixKind.J:
        return j_spectrum(n)
    if n < 4 or kind is MatrixKind.X:
        raise RegistryError(f"no spectrum registered for {kind.value}({n})")

    if kind is MatrixKind.F:
        z = registry.gen(Z)
        pairs = [(z * f(n), 1), (z * (n * f(n - 2)), (n - 1) ** 2), (registry.zero, f(n) - (n - 1) ** 2 - 1)]
        return make_spec(kind, n, pairs, "ThF", registry, f(n))
    if kind is MatrixKind.IF:
        return make_spec(kind, n, list(zip(_if_values(n, registry), _if_multiplicities(n))), "ThDIF", registry, f(n))
    if kind is MatrixKind.DIF:
        return make_spec(kind, n, list(zip(_dif_values(n, registry), _if_multiplicities(n))), "CoDIF", registry, f(n))
    if kind is MatrixKind.MIF:
        return make_spec(kind, n, list(zip(_mif_values(n, registry), _if_multiplicities(n))), "Mif", registry, f(n))
    if kind is MatrixKind.SPECHT_IF:
        pairs = [
            (registry.linear({**{VarId.y(i, j): -f(n - 2) * (j - i) for i, j in _pairs(n)}, Z: n * f(n - 2)}), 1),
            (registry.linear({Z: n * f(n - 2)}), n - 2),
        ]
        return make_spec(kind, n, pairs, "ThSp", registry, n - 1)
    raise RegistryError(f"no spectrum registered for {kind.value}({n})")


def build_matrix(kind: MatrixKind, n: int) -> Matrix:
    """Brute-force matrix of the given family."""
    if kind in STAT_OF_KIND:
        return regular_matrix(STAT_OF_KIND[kind], n)
    if kind is MatrixKind.J:
        require_degree(n, config.MAX_MATRIX_N, "regular matrix")
        return matrix_of_element(all_ones_element(n, registry_for(n).gen(Z)))
    if kind is MatrixKind.SPECHT_IF:
        from .specht import specht_action

        return specht_action(element_of(StatKind.INV_Y_PLUS_FIX_Z, n))
    raise UsageError(f"{kind.value} matrices are built from explicit factors, not from n")


@dataclass
class MinimalPolynomialVerdict:
    kind: MatrixKind
    n: int
    roots: List[str]
    method: str
    vanishes: bool
    minimal: List[bool]

    @property
    def passed(self) -> bool:
        return self.vanishes and all(self.minimal)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "roots": self.roots,
            "method": self.method,
            "vanishes": self.vanishes,
            "omitted_factor_nonzero": self.minimal,
            "verdict": "PASS" if self.passed else "FAIL",
        }


def _product_profile(factors: Sequence[Any], mul: Callable[[Any, Any], Any], is_zero: Callable[[Any], bool]):
    """Whether the full product vanishes, and for each k whether the product without factor k does not."""
    count = len(factors)
    prefix: List[Optional[Any]] = [None] * (count + 1)
    suffix: List[Optional[Any]] = [None] * (count + 1)
    for k in range(count):
        prefix[k + 1] = factors[k] if prefix[k] is None else mul(prefix[k], factors[k])
    for k in range(count - 1, -1, -1):
        suffix[k] = factors[k] if suffix[k + 1] is None else mul(factors[k], suffix[k + 1])
    omitted = []
    for k in range(count):
        left, right = prefix[k], suffix[k + 1]
        if left is None and right is None:
            # the empty product is the identity
            omitted.append(True)
            continue
        rest = right if left is None else left if right is None else mul(left, right)
        omitted.append(not is_zero(rest))
    return is_zero(prefix[count]), omitted


def _f_root_scalar(registry: PolyRegistry, root: PolyElement) -> Fraction:
    if registry.constant_term(root) or set(registry.variables(root)) - {Z}:
        raise UsageError(f"F(n) roots must be multiples of z, got {registry.format(root)}")
    return registry.coefficient(root, Z)


def minimal_polynomial_check(
    kind: MatrixKind,
    n: int,
    roots: Sequence[PolyElement],
    method: str = "auto",
    matrix: Optional[Matrix] = None,
) -> MinimalPolynomialVerdict:
    """
    Verify prod_k (M - root_k I) = 0 and that dropping any single factor leaves a nonzero product.

    Regular-representation kinds are multiplied in the group algebra, where the
    regular matrix is a faithful image; F(n) = z F1 reduces to integer
    coefficients. Specht matrices and explicitly supplied matrices use matrix
    products.
    """
    roots = list(roots)
    if not roots:
        raise UsageError("minimal_polynomial_check needs at least one root")
    registry = registry_for(n)
    labels = [registry.format(r) if isinstance(r, PolyElement) else format_rational(r) for r in roots]
    use_matrix = matrix is not None or kind is MatrixKind.SPECHT_IF or method == "matrix"

    if use_matrix:
        if matrix is None:
            if kind is MatrixKind.SPECHT_IF:
                require_degree(n, config.MAX_MATRIX_N, "Specht minimal polynomial")
            elif n > config.MAX_SYMBOLIC_N:
                raise ResourceLimitError(f"symbolic matrix products at n={n} exceed MAX_SYMBOLIC_N={config.MAX_SYMBOLIC_N}")
            matrix = build_matrix(kind, n)
        factors = [matrix.shift(root) for root in roots]
        vanishes, minimal = _product_profile(factors, mat_mul, lambda m: m.is_zero())
        return MinimalPolynomialVerdict(kind, n, labels, "matrix", vanishes, minimal)

    if kind is MatrixKind.F:
        cap = config.MAX_SYMBOLIC_F_N
        if n > cap:
            raise ResourceLimitError(f"F({n}) minimal polynomial exceeds MAX_SYMBOLIC_F_N={cap}")
        base = GroupAlgebraElement(n, fix_counts(n))
        factors = [base.shift(_f_root_scalar(registry, root)) for root in roots]
        method_name = "convolution-integer"
    else:
        cap = config.MAX_SYMBOLIC_N
        if n > cap:
            raise ResourceLimitError(f"symbolic convolution at n={n} exceeds MAX_SYMBOLIC_N={cap}")
        if kind is MatrixKind.J:
            base = all_ones_element(n, registry.gen(Z))
        elif kind in STAT_OF_KIND:
            base = element_of(STAT_OF_KIND[kind], n)
        else:
            raise UsageError(f"{kind.value} needs an explicit matrix")
        factors = [base.shift(root) for root in roots]
        method_name = "convolution"

    vanishes, minimal = _product_profile(
        factors, lambda a, b: convolve(a, b, max_n=cap), lambda e: e.is_zero()
    )
    return MinimalPolynomialVerdict(kind, n, labels, method_name, vanishes, minimal)


@dataclass
class CertificationReport:
    spec: SpectrumSpec
    seeds: Tuple[int, ...]
    assignments: List[Assignment] = field(default_factory=list)
    kernel_dims: List[List[int]] = field(default_factory=list)
    diagonalizable: List[bool] = field(default_factory=list)
    trace_check: bool = False
    row_sum_check: Optional[bool] = None
    rank_method: str = "exact"
    minimal_polynomial: Optional[MinimalPolynomialVerdict] = None
    failures: List[Dict[str, Any]] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:
        data = {
            "kind": self.spec.kind.value,
            "n": self.spec.n,
            "provenance": self.spec.provenance,
            "verdict": "PASS" if self.passed else "FAIL",
            "eigen": [
                {"value": self.spec.format(pair.value), "mult": pair.multiplicity, "kernel_dims": dims}
                for pair, dims in zip(self.spec.eigenpairs, self.kernel_dims)
            ],
            "seeds": list(self.seeds),
            "trace_check": self.trace_check,
            "row_sum_check": self.row_sum_check,
            "diagonalizable": self.diagonalizable,
            "rank_method": self.rank_method,
            "minimal_polynomial": self.minimal_polynomial.to_dict() if self.minimal_polynomial else None,
            "assignments": [a.to_dict() for a in self.assignments],
            "failures": self.failures,
        }
        if timing:
            data["elapsed_ms"] = self.elapsed_ms
        return data


def _as_poly(registry: PolyRegistry, value) -> PolyElement:
    return value if isinstance(value, PolyElement) else registry.constant(value)


def _kernel_dims(task: Tuple[Matrix, List[Fraction], str]) -> List[int]:
    """Kernel dimension of m - point I for each point; runs inside worker processes."""
    m, points, method = task
    if method == "exact":
        return [kernel_dim(m.shift(point)) for point in points]
    return [m.rows - rank_mod_p(m.shift(point), MODULAR_PRIME) for point in points]


def _check_certify_caps(spec: SpectrumSpec, symbolic: bool) -> None:
    """Refuse oversized certifications before any matrix is built."""
    if spec.dim > config.MAX_EXACT_RANK_DIM:
        if spec.kind is not MatrixKind.F:
            raise ResourceLimitError(
                f"{spec.kind.value}({spec.n}) is {spec.dim}x{spec.dim}, above MAX_EXACT_RANK_DIM={config.MAX_EXACT_RANK_DIM}"
            )
        symbolic = True
    if not symbolic:
        return
    if spec.kind is MatrixKind.F and spec.n > config.MAX_SYMBOLIC_F_N:
        raise ResourceLimitError(f"F({spec.n}) minimal polynomial exceeds MAX_SYMBOLIC_F_N={config.MAX_SYMBOLIC_F_N}")
    if spec.kind in STAT_OF_KIND and spec.kind is not MatrixKind.F and spec.n > config.MAX_SYMBOLIC_N:
        raise ResourceLimitError(f"symbolic convolution at n={spec.n} exceeds MAX_SYMBOLIC_N={config.MAX_SYMBOLIC_N}")


def certify(
    spec: SpectrumSpec,
    seeds: Optional[Sequence[int]] = None,
    jobs: Optional[int] = None,
    symbolic: bool = False,
    matrix: Optional[Matrix] = None,
) -> CertificationReport:
    """
    Check a predicted spectrum against the brute-force matrix.

    Args:
        spec: The prediction
        seeds: Seeds for the random specializations (default DEFAULT_SEEDS)
        jobs: Worker processes for the per-seed rank computations
        symbolic: Also verify the minimal polynomial symbolically
        matrix: Use this matrix instead of building one from spec.kind

    Returns:
        A report whose verdict is PASS only if every sub-check passed at every seed
    """
    start = time.perf_counter()
    seeds = tuple(config.DEFAULT_SEEDS if seeds is None else seeds)
    if not seeds:
        raise UsageError("certify needs at least one seed")
    jobs = config.DEFAULT_JOBS if jobs is None else jobs
    _check_certify_caps(spec, symbolic)
    if matrix is None:
        matrix = build_matrix(spec.kind, spec.n)
    if (matrix.rows, matrix.cols) != (spec.dim, spec.dim):
        raise UsageError(f"matrix is {matrix.rows}x{matrix.cols}, spectrum expects dimension {spec.dim}")

    registry = spec.registry
    report = CertificationReport(spec=spec, seeds=seeds)

    observed_trace = _as_poly(registry, matrix.trace())
    report.trace_check = observed_trace == spec.predicted_trace()
    if not report.trace_check:
        report.failures.append({
            "check": "trace",
            "expected": spec.format(spec.predicted_trace()),
            "observed": spec.format(observed_trace),
        })

    if spec.kind in PERRON_KINDS:
        top = spec.eigenpairs[0].value
        report.row_sum_check = True
        for row, total in enumerate(matrix.row_sums()):
            if _as_poly(registry, total) != top:
                report.row_sum_check = False
                report.failures.append({
                    "check": "row_sum",
                    "row": row,
                    "expected": spec.format(top),
                    "observed": spec.format(_as_poly(registry, total)),
                })
                break

    if spec.dim > config.MAX_EXACT_RANK_DIM:
        # modular kernels only bound the rational ones from above; a squarefree
        # annihilator forces them to add up to the dimension, hence equality
        report.rank_method = "modular+minimal-polynomial"
        symbolic = True

    if symbolic:
        if spec.kind in STAT_OF_KIND or spec.kind is MatrixKind.SPECHT_IF:
            verdict = minimal_polynomial_check(spec.kind, spec.n, spec.values)
        else:
            verdict = minimal_polynomial_check(spec.kind, spec.n, spec.values, matrix=matrix)
        report.minimal_polynomial = verdict
        if not verdict.passed:
            report.failures.append({"check": "minimal_polynomial", **verdict.to_dict()})

    tasks = []
    for seed in seeds:
        assignment = random_assignment(registry.keys, seed, registry, distinct=spec.values)
        report.assignments.append(assignment)
        points = [registry.evaluate(value, assignment.values) for value in spec.values]
        tasks.append((specialize(matrix, registry, assignment), points, report.rank_method.split("+")[0]))

    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_seed = list(pool.map(_kernel_dims, tasks))
    else:
        per_seed = [_kernel_dims(task) for task in tasks]

    report.kernel_dims = [[dims[k] for dims in per_seed] for k in range(len(spec.eigenpairs))]
    for seed, dims in zip(seeds, per_seed):
        report.diagonalizable.append(sum(dims) == spec.dim)
        for pair, observed in zip(spec.eigenpairs, dims):
            if observed != pair.multiplicity:
                report.failures.append({
                    "check": "kernel_dim",
                    "eigenvalue": spec.format(pair.value),
                    "seed": seed,
                    "expected": pair.multiplicity,
                    "observed": observed,
                })

    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


def lej_spectrum_check(n: int, p=None, seed: Optional[int] = None) -> CheckReport:
    """
    The all-p matrix: spectrum {n! p: 1, 0: n! - 1} and its eigenvectors.

    The all-ones column is an eigenvector for n! p, each e_id - e_s lies in the
    kernel, and together they form a basis.
    """
    if n < 1:
        raise UsageError(f"lej_spectrum_check needs n >= 1, got {n}")
    if n > 5:
        raise ResourceLimitError(f"lej_spectrum_check is limited to n <= 5, got {n}")
    registry = registry_for(n)
    if p is None:
        p = registry.gen(Z)
    elif not isinstance(p, PolyElement):
        p = registry.constant(p)
    if p.ring != registry.ring:
        raise UsageError("p must be built in the degree-n registry")
    if not p:
        raise UsageError("lej_spectrum_check needs p != 0")

    spec = j_spectrum(n, p)
    size = spec.dim
    matrix = matrix_of_element(all_ones_element(n, p))
    seed = config.DEFAULT_SEEDS[0] if seed is None else seed
    certification = certify(spec, seeds=(seed,), matrix=matrix)

    basis = Matrix(size, size, tuple(
        1 if k == 0 else (1 if row == 0 else -1 if row == k else 0)
        for row in range(size)
        for k in range(size)
    ))
    image = mat_mul(matrix, basis)
    top = p * size
    eigenvectors_ok = all(image[row, 0] == top for row in range(size)) and all(
        not image[row, k] for row in range(size) for k in range(1, size)
    )
    basis_rank = rank(basis)

    report = CheckReport(name="LeJ", n=n, details={
        "p": registry.format(p),
        "certification": certification.to_dict(timing=False),
        "eigenvectors": eigenvectors_ok,
        "basis_rank": basis_rank,
    })
    if not certification.passed:
        report.issues.append("spectrum certification failed")
    if not eigenvectors_ok:
        report.issues.append("stated eigenvectors are not mapped as predicted")
    if basis_rank != size:
        report.issues.append(f"eigenvector basis has rank {basis_rank}, expected {size}")
    return report


def codif_substitution_check(n: int) -> CheckReport:
    """y[i,i+1] -> x[i] + y[i,i+1] carries the IF(n) spectrum onto the DIF(n) one."""
    if n < 4:
        raise UsageError(f"codif_substitution_check needs n >= 4, got {n}")
    if_spec = predicted_spectrum(MatrixKind.IF, n)
    dif_spec = predicted_spectrum(MatrixKind.DIF, n)
    registry = if_spec.registry
    replacements = adjacent_substitution(n)
    report = CheckReport(name="CoDIF", n=n)

    mapped = [registry.substitute(value, replacements) for value in if_spec.values]
    for source, image, target in zip(if_spec.eigenpairs, mapped, dif_spec.eigenpairs):
        if image != target.value or source.multiplicity != target.multiplicity:
            report.issues.append(
                f"{registry.format(source.value)} maps to {registry.format(image)}, expected {registry.format(target.value)}"
            )
    report.details["eigenvalues"] = [registry.format(value) for value in mapped]

    if n <= config.MAX_SYMBOLIC_CHECK_N:
        direct = regular_matrix(StatKind.DES_X_PLUS_INV_Y_PLUS_FIX_Z, n)
        matches = dif_by_substitution(n).entries == direct.entries
        report.details["matrix_substitution"] = matches
        if not matches:
            report.issues.append("substituted IF(n) differs from the directly built DIF(n)")
    return report


def mif_from_codif(n: int) -> SpectrumSpec:
    """The DIF(n) spectrum specialized at x_i = i, y = 1, z = 1."""
    dif_spec = predicted_spectrum(MatrixKind.DIF, n)
    registry = dif_spec.registry
    values = mif_assignment(n).values
    pairs = [(registry.constant(registry.evaluate(p.value, values)), p.multiplicity) for p in dif_spec.eigenpairs]
    return make_spec(MatrixKind.MIF, n, pairs, "CoDIF specialized", registry, dif_spec.dim)


def maschke_reconciliation(n: int) -> CheckReport:
    """
    Multiplicities of F(n) from the isotypic blocks.

    The central element sum fix(s) s acts on the block of S^shape by the scalar
    S(shape)/d_shape, so that eigenvalue collects d_shape^2 dimensions.
    """
    if n < 4:
        raise UsageError(f"maschke_reconciliation needs n >= 4, got {n}")
    table = character_table(n)
    scalars = block_scalars(n)
    collected: Dict[Fraction, int] = {}
    blocks = []
    for shape, dim in zip(table.shapes, table.dims):
        scalar = scalars[shape]
        collected[scalar] = collected.get(scalar, 0) + dim * dim
        blocks.append({"shape": shape.label, "dim": dim, "scalar": format_rational(scalar)})

    f = math.factorial
    expected = {Fraction(f(n)): 1, Fraction(n * f(n - 2)): (n - 1) ** 2, Fraction(0): f(n) - (n - 1) ** 2 - 1}
    report = CheckReport(name="Maschke", n=n, details={
        "blocks": blocks,
        "multiplicities": {format_rational(k): v for k, v in sorted(collected.items(), reverse=True)},
    })
    if collected != expected:
        wanted = {format_rational(k): v for k, v in expected.items()}
        report.issues.append(f"block multiplicities {report.details['multiplicities']} differ from {wanted}")
    return report
