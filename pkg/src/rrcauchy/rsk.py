"""Robinson-Schensted-Knuth on biwords, and its mod-5 partition encoding.

Biword pairs are (record, insert): insert letters are row-inserted into P,
record letters mark the new cell in Q.  For the mod-5 encoding a part
5m + r (r in {1, 4}) becomes the pair (r, 5m), so P is filled with multiples
of 5 and Q with 1s and 4s.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .errors import BadResidue, DomainViolation, InvalidTableau, ShapeMismatch, UnsortedBiword
from .partitions import Partition, mod5_decompose
from .tableaux import Tableau, validate


@dataclass(frozen=True)
class Biword:
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(a), int(b)) for a, b in self.pairs))

    def is_sorted(self) -> bool:
        return all(self.pairs[i] <= self.pairs[i + 1] for i in range(len(self.pairs) - 1))

    def total(self) -> int:
        return sum(a + b for a, b in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class TableauPair:
    P: Tableau
    Q: Tableau

    @property
    def shape(self) -> Partition:
        return self.P.shape

    def total(self) -> int:
        return self.P.total() + self.Q.total()


def row_insert(rows: list[list[int]], z: int) -> int:
    """Insert z into ``rows`` in place; return the index of the row that grew."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([z])
            return r
        row = rows[r]
        # leftmost entry strictly greater than z
        j = bisect_right(row, z)
        if j == len(row):
            row.append(z)
            return r
        row[j], z = z, row[j]
        r += 1


def rsk_forward(w: Biword) -> TableauPair:
    if not w.is_sorted():
        raise UnsortedBiword("biword pairs must be sorted by (record, insert)")
    p: list[list[int]] = []
    q: list[list[int]] = []
    for record, insert in w.pairs:
        r = row_insert(p, insert)
        if r == len(q):
            q.append([])
        q[r].append(record)
    return TableauPair(Tableau(tuple(map(tuple, p))), Tableau(tuple(map(tuple, q))))


def rsk_inverse(pq: TableauPair) -> Biword:
    if pq.P.shape != pq.Q.shape:
        raise ShapeMismatch(f"P has shape {pq.P.shape}, Q has shape {pq.Q.shape}")
    for name, t in (("P", pq.P), ("Q", pq.Q)):
        if not validate(t):
            raise InvalidTableau(f"{name} is not column-strict")
    p = [list(r) for r in pq.P.rows]
    q = [list(r) for r in pq.Q.rows]
    pairs = []
    while q:
        # largest record letter, rightmost occurrence; it always sits at a corner
        top = max(row[-1] for row in q)
        r = _rightmost_corner(q, top)
        q[r].pop()
        z = p[r].pop()
        if not q[r]:
            q.pop()
            p.pop()
        for rr in range(r - 1, -1, -1):
            row = p[rr]
            # rightmost entry strictly smaller than z
            j = bisect_left(row, z) - 1
            row[j], z = z, row[j]
        pairs.append((top, z))
    return Biword(tuple(reversed(pairs)))


def _rightmost_corner(q: list[list[int]], top: int) -> int:
    best_row, best_col = -1, -1
    for i, row in enumerate(q):
        if row[-1] == top and len(row) - 1 > best_col:
            best_row, best_col = i, len(row) - 1
    if best_row < 0:
        raise InvalidTableau("recording tableau has no corner holding its largest letter")
    return best_row


def partition_to_pq(p: Partition) -> TableauPair:
    return rsk_forward(mod5_decompose(p))


def pq_to_partition(pq: TableauPair) -> Partition:
    if pq.P.shape != pq.Q.shape:
        raise DomainViolation(f"shapes differ: P {pq.P.shape} vs Q {pq.Q.shape}")
    if len(pq.Q.shape) > 2:
        raise DomainViolation(f"shape {pq.Q.shape} has more than two rows")
    if any(x % 5 for x in pq.P.entries()):
        raise DomainViolation("P has an entry that is not a multiple of 5")
    if any(x not in (1, 4) for x in pq.Q.entries()):
        raise DomainViolation("Q has an entry other than 1 or 4")
    if any(x < 0 for x in pq.P.entries()):
        raise DomainViolation("P has a negative entry")
    try:
        w = rsk_inverse(pq)
    except (InvalidTableau, ShapeMismatch) as exc:
        raise DomainViolation(str(exc)) from exc
    parts = sorted((record + insert for record, insert in w.pairs), reverse=True)
    if any(x % 5 not in (1, 4) for x in parts):  # pragma: no cover - guarded above
        raise BadResidue("decoded part outside the residue classes")
    return tuple(parts)


def enumerate_pq_pairs(total_max: int) -> dict[int, set[TableauPair]]:
    """All pairs of the mod-5 codomain with total at most ``total_max``, by total.

    P ranges over column-strict fillings by multiples of 5, Q over fillings by
    1 and 4, on a common shape with at most two rows.
    """
    from .partitions import PartitionConstraint, generate
    from .tableaux import FiniteAlphabet, GeometricAlphabet, enumerate_ssyt

    q_letters = FiniteAlphabet.of_exponents((1, 4))
    p_letters = GeometricAlphabet(0, 5)
    out: dict[int, set[TableauPair]] = {}
    two_rows = PartitionConstraint(max_length=2)
    for size in range(total_max + 1):
        for shape in generate(size, two_rows):
            for q in enumerate_ssyt(shape, q_letters, total_max):
                wq = q.total()
                for p in enumerate_ssyt(shape, p_letters, total_max - wq):
                    out.setdefault(wq + p.total(), set()).add(TableauPair(p, q))
    return out
