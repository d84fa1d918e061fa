"""
Symmetric-group arithmetic on one-line words.

Permutations of [n] = {1, ..., n} are stored as one-line words and ranked
lexicographically; the rank is the row/column index of every matrix built
downstream. Composition applies right to left: compose(s, t)(i) = s(t(i)).
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _word_permutations
from typing import Dict, FrozenSet, List, Sequence, Tuple

from . import config
from .characters import Partition
from .errors import ResourceLimitError, UsageError


@dataclass(frozen=True)
class Permutation:
    """A bijection of [n] in one-line notation [s(1), ..., s(n)]."""

    word: Tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise UsageError("a permutation needs n >= 1")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise UsageError(f"not a permutation of [{len(word)}]: {word}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse comma-separated one-line notation such as "2,1,4,3"."""
        return cls(tuple(int(part) for part in text.split(",")))

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def fixed_points(self) -> FrozenSet[int]:
        return frozenset(i for i, value in enumerate(self.word, start=1) if value == i)

    @property
    def fix_count(self) -> int:
        return sum(1 for i, value in enumerate(self.word, start=1) if value == i)

    def is_identity(self) -> bool:
        return all(value == i for i, value in enumerate(self.word, start=1))

    def __str__(self) -> str:
        return ",".join(str(value) for value in self.word)


@dataclass(frozen=True)
class Cycle:
    """A cycle (c1 c2 ... ck) sending c1 -> c2 -> ... -> ck -> c1."""

    support: Tuple[int, ...]

    def __post_init__(self):
        support = tuple(self.support)
        object.__setattr__(self, "support", support)
        if len(set(support)) != len(support):
            raise UsageError(f"cycle entries must be distinct: {support}")

    def __len__(self) -> int:
        return len(self.support)

    def as_permutation(self, n: int) -> Permutation:
        word = list(range(1, n + 1))
        for current, following in zip(self.support, self.support[1:] + self.support[:1]):
            word[current - 1] = following
        return Permutation(tuple(word))

    def __str__(self) -> str:
        return "(" + " ".join(str(c) for c in self.support) + ")"


def transposition(i: int, j: int, n: int) -> Permutation:
    if i == j:
        raise UsageError(f"transposition needs distinct points, got ({i} {j})")
    return Cycle((i, j)).as_permutation(n)


def require_degree(n: int, cap: int, what: str) -> None:
    if n < 1:
        raise UsageError(f"{what} needs n >= 1, got {n}")
    if n > cap:
        raise ResourceLimitError(f"{what} at n={n} exceeds the configured cap {cap}")


def enumerate_permutations(n: int) -> Tuple[Permutation, ...]:
    """All n! permutations in lexicographic order of their one-line words."""
    require_degree(n, config.MAX_ENUM_N, "enumeration")
    return _enumerate(n)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> Tuple[Permutation, ...]:
    return tuple(Permutation(word) for word in _word_permutations(range(1, n + 1)))


def rank(s: Permutation) -> int:
    """Lexicographic rank via the Lehmer code."""
    remaining = list(range(1, s.n + 1))
    position = 0
    for index, value in enumerate(s.word):
        smaller = remaining.index(value)
        position += smaller * math.factorial(s.n - 1 - index)
        remaining.pop(smaller)
    return position


def unrank(n: int, k: int) -> Permutation:
    if not 0 <= k < math.factorial(n):
        raise UsageError(f"rank {k} out of range for S_{n}")
    remaining = list(range(1, n + 1))
    word = []
    for index in range(n):
        block = math.factorial(n - 1 - index)
        word.append(remaining.pop(k // block))
        k %= block
    return Permutation(tuple(word))


def compose(s: Permutation, t: Permutation) -> Permutation:
    """The permutation u with u(i) = s(t(i))."""
    if s.n != t.n:
        raise UsageError(f"degree mismatch: S_{s.n} vs S_{t.n}")
    return Permutation(tuple(s.word[value - 1] for value in t.word))


def inverse(s: Permutation) -> Permutation:
    word = [0] * s.n
    for i, value in enumerate(s.word, start=1):
        word[value - 1] = i
    return Permutation(tuple(word))


def cycles(s: Permutation) -> List[Cycle]:
    """Non-trivial cycles, each started at its smallest element, sorted by that element."""
    seen = set()
    found = []
    for start in range(1, s.n + 1):
        if start in seen or s(start) == start:
            continue
        support = [start]
        seen.add(start)
        current = s(start)
        while current != start:
            support.append(current)
            seen.add(current)
            current = s(current)
        found.append(Cycle(tuple(support)))
    return found


def cycle_type(s: Permutation) -> Partition:
    lengths = [len(c) for c in cycles(s)] + [1] * s.fix_count
    return Partition(tuple(sorted(lengths, reverse=True)))


def fixdisc_transposition_chain(t: Permutation) -> List[Cycle]:
    """
    Factor t into transpositions with the fixed-point discipline.

    Each cycle (c1 ... ck) contributes (c1 c2), (c2 c3), ..., (c_{k-1} c_k).
    At every step the second point is fixed by the prefix product, and the
    first point is fixed too exactly when the step opens a new cycle. The
    identity has the empty chain.

    Args:
        t: The permutation to factor

    Returns:
        Transpositions whose left-to-right product is t
    """
    chain = []
    for cycle in cycles(t):
        chain.extend(Cycle((a, b)) for a, b in zip(cycle.support, cycle.support[1:]))
    return chain


def chain_prefixes(chain: Sequence[Cycle], n: int) -> List[Permutation]:
    """Prefix products tau_0 = identity, tau_m = tau_{m-1} o (i_m j_m)."""
    prefixes = [Permutation.identity(n)]
    for step in chain:
        prefixes.append(compose(prefixes[-1], step.as_permutation(n)))
    return prefixes


def chain_discipline_holds(chain: Sequence[Cycle], n: int) -> bool:
    """Every step (i j) has j fixed by the prefix, with i either fixed or not."""
    prefixes = chain_prefixes(chain, n)
    for step, prefix in zip(chain, prefixes):
        if len(step) != 2:
            return False
        _, j = step.support
        if prefix(j) != j:
            return False
    return True


def lef_holds(s: Permutation, t: Permutation) -> bool:
    """Fix(s^-1 t) equals the agreement set {i : s(i) = t(i)}."""
    agreement = frozenset(i for i in range(1, s.n + 1) if s(i) == t(i))
    return compose(inverse(s), t).fixed_points() == agreement


@dataclass(frozen=True)
class IndexedGroup:
    """S_n with rank lookups for fast products and inverses by index."""

    n: int
    perms: Tuple[Permutation, ...]
    index: Dict[Tuple[int, ...], int]
    inverse_index: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.perms)

    def mul(self, a: int, b: int) -> int:
        """Rank of compose(perms[a], perms[b])."""
        left = self.perms[a].word
        return self.index[tuple(left[value - 1] for value in self.perms[b].word)]

    def rank_of(self, s: Permutation) -> int:
        return self.index[s.word]


@lru_cache(maxsize=None)
def indexed_group(n: int) -> IndexedGroup:
    perms = enumerate_permutations(n)
    index = {p.word: k for k, p in enumerate(perms)}
    return IndexedGroup(
        n=n,
        perms=perms,
        index=index,
        inverse_index=tuple(index[inverse(p).word] for p in perms),
    )
