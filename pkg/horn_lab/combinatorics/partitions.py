"""
Partitions and Schubert index subsets.

Implements:
- `Partition`: weakly decreasing nonnegative integer sequence, stored
  without trailing zeros (padded input is accepted).
- `SubsetIndex`: an r-subset of {1, ..., n} indexing the Schubert class
  sigma_I in the Grassmannian of r-planes in C^n.
- The bijection between partitions in the a x (n - a) box and a-subsets,
  I = {n - a + i - lambda_i}, and the duality K -> K^vee.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from ..errors import BoxViolationError, DimensionError


@dataclass(frozen=True)
class Partition:
    """
    Weakly decreasing sequence of nonnegative integers.

    Trailing zeros are stripped, so `Partition((2, 1, 0)) == Partition((2, 1))`.
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p != q for p, q in zip(self.parts, parts)):
            raise ValueError(f"Partition parts must be integers: {self.parts}")
        if any(p < 0 for p in parts):
            raise ValueError(f"Partition parts must be nonnegative: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"Partition parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """0-based part access; parts beyond the length are 0."""
        return self.parts[i] if i < len(self.parts) else 0

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def padded(self, length: int) -> Tuple[int, ...]:
        if len(self.parts) > length:
            raise BoxViolationError(
                f"Partition {self} has more than {length} nonzero parts"
            )
        return self.parts + (0,) * (length - len(self.parts))

    def contains(self, other: "Partition") -> bool:
        """Young diagram inclusion `other` within `self`."""
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))


def as_partition(p: Partition | Sequence[int]) -> Partition:
    return p if isinstance(p, Partition) else Partition(tuple(p))


@dataclass(frozen=True)
class SubsetIndex:
    """
    Strictly increasing subset of {1, ..., n}.

    `elements` are 1-based positions; cardinality r satisfies 1 <= r <= n.
    """

    n: int
    elements: Tuple[int, ...]

    def __post_init__(self) -> None:
        elements = tuple(int(e) for e in self.elements)
        if self.n < 1:
            raise ValueError(f"Ambient size must be positive, got {self.n}")
        if not 1 <= len(elements) <= self.n:
            raise ValueError(
                f"Subset cardinality {len(elements)} outside [1, {self.n}]"
            )
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise ValueError(f"Subset elements must strictly increase: {elements}")
        if elements[0] < 1 or elements[-1] > self.n:
            raise ValueError(f"Subset elements {elements} outside [1, {self.n}]")
        object.__setattr__(self, "elements", elements)

    @property
    def r(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, i: object) -> bool:
        return i in self.elements

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"

    def complement(self) -> Tuple[int, ...]:
        """Positions of {1, ..., n} not in the subset (may be empty)."""
        chosen = set(self.elements)
        return tuple(i for i in range(1, self.n + 1) if i not in chosen)

    @property
    def codimension(self) -> int:
        """Codimension of the Schubert variety, i.e. |from_subset(self)|."""
        return weight(from_subset(self, self.r, self.n))


def weight(p: Partition | Sequence[int]) -> int:
    return sum(as_partition(p).parts)


def scale(p: Partition | Sequence[int], N: int) -> Partition:
    """Multiply every part by the positive integer N."""
    if N < 1:
        raise ValueError(f"Scaling factor must be a positive integer, got {N}")
    return Partition(tuple(N * x for x in as_partition(p).parts))


def conjugate(p: Partition | Sequence[int]) -> Partition:
    """Transpose of the Young diagram."""
    p = as_partition(p)
    return Partition(
        tuple(sum(1 for x in p.parts if x > j) for j in range(p.largest))
    )


def to_subset(p: Partition | Sequence[int], a: int, n: int) -> SubsetIndex:
    """
    Map a partition in the a x (n - a) box to {n - a + i - lambda_i : i = 1..a}.

    Raises
    ------
    BoxViolationError
        If p has more than a nonzero parts or lambda_1 > n - a.
    """
    p = as_partition(p)
    if not 1 <= a <= n:
        raise DimensionError(f"Need 1 <= a <= n, got a={a}, n={n}")
    parts = p.padded(a)
    if p.largest > n - a:
        raise BoxViolationError(
            f"Partition {p} does not fit the {a} x {n - a} box"
        )
    return SubsetIndex(n, tuple(n - a + i - parts[i - 1] for i in range(1, a + 1)))


def from_subset(s: SubsetIndex, a: int, n: int) -> Partition:
    """Inverse of `to_subset`: lambda_i = n - a + i - s_i."""
    if s.r != a or s.n != n:
        raise DimensionError(
            f"Subset {s}@n={s.n} does not have cardinality {a} in ambient {n}"
        )
    return Partition(tuple(n - a + i - e for i, e in enumerate(s.elements, start=1)))


def dual_subset(s: SubsetIndex) -> SubsetIndex:
    """i is in the dual iff n + 1 - i is in s."""
    return SubsetIndex(s.n, tuple(sorted(s.n + 1 - i for i in s.elements)))


def box_complement(p: Partition | Sequence[int], a: int, n: int) -> Partition:
    """(n - a - lambda_a, ..., n - a - lambda_1)."""
    parts = as_partition(p).padded(a)
    return Partition(tuple(n - a - x for x in reversed(parts)))


def minimal_ambient(*partitions: Partition | Sequence[int]) -> Tuple[int, int]:
    """
    Smallest (a, n) whose a x (n - a) box holds all given partitions.

    a is the largest part count (at least 1) and n - a is the largest first
    part, floored at 1 so that the complementary block is never empty.
    """
    parts = [as_partition(p) for p in partitions]
    a = max([len(p) for p in parts] + [1])
    width = max([p.largest for p in parts] + [1])
    return a, a + width


def same_shape(subsets: Iterable[SubsetIndex]) -> Tuple[int, int]:
    """Return the common (r, n) of the subsets or raise DimensionError."""
    shapes = {(s.r, s.n) for s in subsets}
    if len(shapes) != 1:
        raise DimensionError(f"Subsets do not share (r, n): {sorted(shapes)}")
    return shapes.pop()
