"""Integer partitions, Ferrers diagrams and the constructions built on them.

Partitions are immutable tuples of positive parts in weakly decreasing order.
Trailing zeros are accepted on input and stripped, so ``Partition((2, 1, 0))``
and ``Partition((2, 1))`` are the same value.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .errors import DomainError


class Partition(tuple):
    """A weakly decreasing sequence of positive integers.

    Subclasses ``tuple`` so that equality, hashing and lexicographic ordering
    are those of the canonical part sequence.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        parts = tuple(parts)
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool):
                raise DomainError(f"partition parts must be integers, got {x!r}")
            if x < 0:
                raise DomainError("partition parts must be nonnegative")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise DomainError("parts must be weakly decreasing")
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        return super().__new__(cls, parts[:end])

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (1-based), zero past the length."""
        if i < 1:
            raise DomainError("part index is 1-based")
        return self[i - 1] if i <= len(self) else 0

    def to_json(self) -> list[int]:
        return list(self)


EMPTY = Partition()


class Cell(NamedTuple):
    """A box of a Ferrers diagram, 1-based (row, column)."""

    row: int
    col: int


class SquareDecomposition(NamedTuple):
    """A partition split as its Durfee square, the part to the right, and the part below."""

    rank: int
    mu: Partition
    nu: Partition

    def reconstruct(self) -> Partition:
        top = [m + self.rank for m in _padded(self.mu, self.rank)]
        return Partition(top + list(self.nu))

    def to_json(self) -> dict:
        return {"l": self.rank, "mu": list(self.mu), "nu": list(self.nu)}


def _padded(lam: Iterable[int], width: int) -> list[int]:
    parts = list(lam)
    if len(parts) > width:
        raise DomainError(f"partition of length {len(parts)} does not fit in {width} rows")
    return parts + [0] * (width - len(parts))


def parse_partition(text: str) -> Partition:
    """Parse a comma separated part list such as ``"3,1"`` or ``"2,1,0"``.

    The empty string, ``"()"`` and ``"[]"`` denote the empty partition. Parts
    are never sorted: an increasing list is rejected.
    """
    body = text.strip()
    if body[:1] in "([" and body[-1:] in ")]":
        body = body[1:-1].strip()
    if not body:
        return EMPTY
    try:
        parts = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise DomainError(f"cannot parse partition {text!r}") from None
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    return ",".join(str(x) for x in lam)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def durfee_rank(lam: Iterable[int]) -> int:
    """Side of the largest square fitting inside the diagram."""
    rank = 0
    for i, x in enumerate(Partition(lam), start=1):
        if x >= i:
            rank = i
        else:
            break
    return rank


def cells(lam: Iterable[int]) -> Iterator[Cell]:
    """Cells of the Ferrers diagram, row by row."""
    for i, x in enumerate(Partition(lam), start=1):
        for j in range(1, x + 1):
            yield Cell(i, j)


def in_diagram(lam: Partition, cell: tuple[int, int]) -> bool:
    i, j = cell
    return i >= 1 and j >= 1 and j <= lam.part(i)


def hook_length(lam: Iterable[int], cell: tuple[int, int]) -> int:
    lam = Partition(lam)
    i, j = cell
    if not in_diagram(lam, (i, j)):
        raise DomainError(f"cell {tuple(cell)} is not in the diagram of {lam}")
    conj = conjugate(lam)
    return (lam.part(i) - j) + (conj.part(j) - i) + 1


def hook_lengths(lam: Iterable[int]) -> list[list[int]]:
    """Hook lengths arranged like the diagram: one list per row."""
    lam = Partition(lam)
    conj = conjugate(lam)
    return [
        [(x - j) + (conj.part(j) - i) + 1 for j in range(1, x + 1)]
        for i, x in enumerate(lam, start=1)
    ]


def adjoin_k(lam: Iterable[int], k: int) -> Partition:
    """Insert ``k`` parts equal to the Durfee rank, keeping the parts sorted.

    This is the partition written ``lambda(k)`` in the degeneracy-locus
    resolutions.
    """
    if k < 0:
        raise DomainError("k must be nonnegative")
    lam = Partition(lam)
    rank = durfee_rank(lam)
    if rank == 0:
        return lam
    # the rank value sits right after the Durfee rows, since lam_rank >= rank > lam_{rank+1}
    return Partition(lam[:rank] + (rank,) * k + lam[rank:])


def square_decompose(lam: Iterable[int]) -> SquareDecomposition:
    lam = Partition(lam)
    rank = durfee_rank(lam)
    mu = Partition(x - rank for x in lam[:rank])
    nu = Partition(lam[rank:])
    return SquareDecomposition(rank, mu, nu)


def from_square(rank: int, mu: Iterable[int], nu: Iterable[int]) -> Partition:
    """Inverse of :func:`square_decompose`; checks the pieces really fit."""
    mu, nu = Partition(mu), Partition(nu)
    if rank < 0 or mu.length > rank or (nu and nu[0] > rank):
        raise DomainError("mu must have at most `rank` rows and nu at most `rank` columns")
    return SquareDecomposition(rank, mu, nu).reconstruct()


def add_rectangle(lam: Iterable[int], m: int, v: int) -> Partition:
    """Add ``m`` full columns of height ``v``: ``S_lam V (x) det(V)^m``."""
    lam = Partition(lam)
    if v < 1:
        raise DomainError("v must be positive")
    if m < 0:
        raise DomainError("m must be nonnegative")
    if lam.length > v:
        raise DomainError(f"partition {lam} has more than {v} parts")
    return Partition(x + m for x in _padded(lam, v))


def is_horizontal_strip(inner: Iterable[int], outer: Iterable[int]) -> bool:
    inner, outer = Partition(inner), Partition(outer)
    if inner.length > outer.length:
        return False
    for i in range(1, outer.length + 1):
        if not outer.part(i) >= inner.part(i) >= outer.part(i + 1):
            return False
    return True


def is_vertical_strip(inner: Iterable[int], outer: Iterable[int]) -> bool:
    return is_horizontal_strip(conjugate(inner), conjugate(outer))


def contains(outer: Iterable[int], inner: Iterable[int]) -> bool:
    outer, inner = Partition(outer), Partition(inner)
    return inner.length <= outer.length and all(a >= b for a, b in zip(outer, inner))


def partitions_of(n: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n``, in reverse lexicographic order, with optional bounds."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(remaining: int, cap: int, slots: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield Partition(prefix)
            return
        if slots == 0:
            return
        for x in range(min(cap, remaining), 0, -1):
            if x * slots < remaining:
                break
            yield from rec(remaining - x, x, slots - 1, prefix + (x,))

    yield from rec(n, max_part, max_length, ())


def partitions_up_to(n: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[Partition]:
    for size in range(n + 1):
        yield from partitions_of(size, max_part, max_length)


def box_partitions(rows: int, cols: int) -> Iterator[Partition]:
    """Every partition whose diagram fits in a ``rows`` x ``cols`` rectangle."""
    if rows < 0 or cols < 0:
        return
    yield from partitions_up_to(rows * cols, max_part=cols, max_length=rows)
