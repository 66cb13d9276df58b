"""Integer partitions under residue, gap, length and size constraints."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import BadResidue

Partition = tuple[int, ...]


@dataclass(frozen=True)
class PartitionConstraint:
    """Conditions every part list must meet.

    ``min_gap`` bounds consecutive differences: parts[i] - parts[i+1] >= min_gap.
    """

    modulus: int | None = None
    residues: frozenset[int] | None = None
    min_gap: int = 0
    min_part: int = 1
    max_length: int | None = None
    max_part: int | None = None

    def __post_init__(self):
        if (self.modulus is None) != (self.residues is None):
            raise ValueError("modulus and residues must be given together")
        if self.modulus is not None:
            if self.modulus < 1:
                raise ValueError("modulus must be positive")
            object.__setattr__(self, "residues", frozenset(self.residues))
            if any(not 0 <= r < self.modulus for r in self.residues):
                raise ValueError(f"residues must lie in 0..{self.modulus - 1}")
        if self.min_gap < 0:
            raise ValueError("min_gap must be nonnegative")
        if self.min_part < 1:
            raise ValueError("min_part must be at least 1")

    @classmethod
    def residue_classes(cls, modulus: int, residues: Sequence[int], **kw) -> PartitionConstraint:
        return cls(modulus=modulus, residues=frozenset(residues), **kw)

    def allows_part(self, part: int) -> bool:
        if part < self.min_part:
            return False
        if self.max_part is not None and part > self.max_part:
            return False
        return self.modulus is None or part % self.modulus in self.residues

    def accepts(self, p: Partition) -> bool:
        """Predicate form of the constraint, independent of the generators."""
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            return False
        if self.max_length is not None and len(p) > self.max_length:
            return False
        if not all(self.allows_part(x) for x in p):
            return False
        return all(p[i] - p[i + 1] >= self.min_gap for i in range(len(p) - 1))


UNRESTRICTED = PartitionConstraint()
RR_FIRST_RESIDUES = PartitionConstraint.residue_classes(5, (1, 4))
RR_SECOND_RESIDUES = PartitionConstraint.residue_classes(5, (2, 3))
RR_FIRST_GAP = PartitionConstraint(min_gap=2)
RR_SECOND_GAP = PartitionConstraint(min_gap=2, min_part=2)


def generate(n: int, c: PartitionConstraint = UNRESTRICTED) -> list[Partition]:
    """All partitions of n meeting ``c``, largest first part first.

    >>> generate(6, PartitionConstraint(min_gap=2))
    [(6,), (5, 1), (4, 2)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_gen(n, n if c.max_part is None else min(n, c.max_part), (), c))


def _gen(rest: int, cap: int, prefix: Partition, c: PartitionConstraint) -> Iterator[Partition]:
    if rest == 0:
        yield prefix
        return
    if c.max_length is not None and len(prefix) >= c.max_length:
        return
    for part in range(min(rest, cap), c.min_part - 1, -1):
        if not c.allows_part(part):
            continue
        yield from _gen(rest - part, part - c.min_gap, prefix + (part,), c)


def count(n: int, c: PartitionConstraint = UNRESTRICTED) -> int:
    """Number of partitions of n meeting ``c`` (same set as :func:`generate`)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = n if c.max_part is None else min(n, c.max_part)
    slots = -1 if c.max_length is None else c.max_length
    return _count(n, cap, slots, c)


@lru_cache(maxsize=None)
def _count(rest: int, cap: int, slots: int, c: PartitionConstraint) -> int:
    if rest == 0:
        return 1
    if slots == 0:
        return 0
    total = 0
    for part in range(min(rest, cap), c.min_part - 1, -1):
        if c.allows_part(part):
            total += _count(rest - part, part - c.min_gap, slots - 1 if slots > 0 else -1, c)
    return total


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def weight(p: Partition) -> int:
    return sum(p)


def mod5_decompose(p: Partition):
    """Split each part 5m + r (r in {1, 4}) into the letter pair (r, 5m).

    Returns the sorted :class:`~rrcauchy.rsk.Biword` of those pairs.
    """
    from .rsk import Biword

    pairs = []
    for part in p:
        r = part % 5
        if r not in (1, 4):
            raise BadResidue(f"part {part} is not congruent to 1 or 4 modulo 5")
        pairs.append((r, part - r))
    return Biword(tuple(sorted(pairs)))
