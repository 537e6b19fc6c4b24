"""Dimensions, Pieri products and multiplicities of Schur powers.

Everything here is exact integer arithmetic. Products of symmetric and wedge
powers are decomposed by iterating Pieri's rules; no general
Littlewood-Richardson machinery is needed for the bundles that occur.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import DomainError
from .partitions import EMPTY, Partition, conjugate, hook_lengths


class _Zero:
    """Marker for a Schur power that vanishes by convention.

    Distinct from the empty partition, which indexes the trivial line bundle.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


class FactorKind(enum.Enum):
    SYM = "S"
    WEDGE = "W"


class PowerFactor(NamedTuple):
    kind: FactorKind
    exponent: int

    def __str__(self) -> str:
        return f"{self.kind.value}{self.exponent}"


def sym(k: int) -> PowerFactor:
    return PowerFactor(FactorKind.SYM, k)


def wedge(j: int) -> PowerFactor:
    return PowerFactor(FactorKind.WEDGE, j)


class DecompositionMultiset(Mapping):
    """Partitions with positive multiplicities; zero entries are never stored."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping | Iterable[tuple] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[Partition, int] = {}
        for lam, mult in items:
            if mult < 0:
                raise DomainError("multiplicities must be nonnegative")
            if mult:
                key = Partition(lam)
                acc[key] = acc.get(key, 0) + mult
        self._entries = acc

    def __getitem__(self, lam) -> int:
        return self._entries[Partition(lam)]

    def get(self, lam, default=0):
        return self._entries.get(Partition(lam), default)

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self._entries))

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, DecompositionMultiset):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self == DecompositionMultiset(other)
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(f"{tuple(k)}: {v}" for k, v in self.items())
        return f"DecompositionMultiset({{{body}}})"

    def total_dimension(self, v: int) -> int:
        return sum(mult * dim_schur(lam, v) for lam, mult in self.items())

    def to_json(self) -> list[dict]:
        return [{"partition": list(lam), "mult": str(mult)} for lam, mult in self.items()]


def dim_schur(lam: Iterable[int], v: int) -> int:
    """Dimension of ``S_lam V`` for ``dim V = v``, by the hook-content formula.

    Partitions with more than ``v`` rows give the zero module.
    """
    lam = Partition(lam)
    if v < 1:
        raise DomainError("v must be positive")
    if lam.length > v:
        return 0
    hooks = hook_lengths(lam)
    numerator = prod(v + j - i for i, row in enumerate(lam, 1) for j in range(1, row + 1))
    denominator = prod(h for row in hooks for h in row)
    return numerator // denominator


def dim_power(factor: PowerFactor, v: int) -> int:
    if factor.kind is FactorKind.SYM:
        return comb(v + factor.exponent - 1, factor.exponent)
    return comb(v, factor.exponent)


def _horizontal_strips(lam: Partition, k: int, max_length: int | None, max_first: int | None = None) -> Iterator[Partition]:
    """Partitions ``mu`` with ``mu / lam`` a horizontal strip of ``k`` cells."""
    rows = lam.length + 1
    if max_length is not None:
        rows = min(rows, max_length)
    if rows < lam.length:
        return

    def rec(i: int, remaining: int, prefix: tuple[int, ...]):
        # i is the 0-based row under construction
        if remaining == 0:
            yield Partition(prefix + tuple(lam[i:]))
            return
        if i >= rows:
            return
        low = lam[i] if i < lam.length else 0
        high = low + remaining if i == 0 else min(lam[i - 1], low + remaining)
        if i == 0 and max_first is not None:
            high = min(high, max_first)
        for x in range(high, low - 1, -1):
            yield from rec(i + 1, remaining - (x - low), prefix + (x,))

    yield from rec(0, k, ())


@lru_cache(maxsize=None)
def _pieri_sym(lam: Partition, k: int, v: int) -> tuple[Partition, ...]:
    return tuple(sorted(_horizontal_strips(lam, k, v)))


@lru_cache(maxsize=None)
def _pieri_wedge(lam: Partition, j: int, v: int) -> tuple[Partition, ...]:
    strips = _horizontal_strips(conjugate(lam), j, None, max_first=v)
    return tuple(sorted(conjugate(mu) for mu in strips))


def _check_bound(lam: Partition, v: int) -> None:
    if v < 1:
        raise DomainError("v must be positive")
    if lam.length > v:
        raise DomainError(f"partition {lam} has more than {v} parts")


def pieri_sym(lam: Iterable[int], k: int, v: int) -> DecompositionMultiset:
    """Decompose ``S_lam V (x) S^k V``."""
    lam = Partition(lam)
    _check_bound(lam, v)
    if k < 0:
        raise DomainError("exponent must be nonnegative")
    return DecompositionMultiset((mu, 1) for mu in _pieri_sym(lam, k, v))


def pieri_wedge(lam: Iterable[int], j: int, v: int) -> DecompositionMultiset:
    """Decompose ``S_lam V (x) wedge^j V``."""
    lam = Partition(lam)
    _check_bound(lam, v)
    if j < 0:
        raise DomainError("exponent must be nonnegative")
    return DecompositionMultiset((mu, 1) for mu in _pieri_wedge(lam, j, v))


def multiply(decomp: Mapping, factor: PowerFactor, v: int) -> DecompositionMultiset:
    """Tensor a whole decomposition by one symmetric or wedge power."""
    step = _pieri_sym if factor.kind is FactorKind.SYM else _pieri_wedge
    if factor.exponent < 0:
        raise DomainError("exponent must be nonnegative")
    acc: dict[Partition, int] = {}
    for lam, mult in decomp.items():
        lam = Partition(lam)
        _check_bound(lam, v)
        for mu in step(lam, factor.exponent, v):
            acc[mu] = acc.get(mu, 0) + mult
    return DecompositionMultiset(acc)


def product_decompose(factors: Sequence[PowerFactor], v: int, start: Iterable[int] = EMPTY) -> DecompositionMultiset:
    """Decompose a tensor product of symmetric and wedge powers of a rank ``v`` space.

    ``start`` lets the product begin from a Schur power other than the trivial one.
    """
    if v < 1:
        raise DomainError("v must be positive")
    decomp = DecompositionMultiset({Partition(start): 1})
    for factor in factors:
        decomp = multiply(decomp, factor, v)
    return decomp


def tensor_multiplicity(lam: Iterable[int]) -> int:
    """Multiplicity of ``S_lam`` in the tensor power of degree ``|lam|``.

    This is the number of standard Young tableaux of shape ``lam``.
    """
    lam = Partition(lam)
    return factorial(lam.size) // prod(h for row in hook_lengths(lam) for h in row)


@lru_cache(maxsize=65536)
def hook_partition(k: int, l: int, e: int):
    """The hook ``(k|l) = (k+1, 1^(l-1))``, or :data:`ZERO`.

    Follows the vanishing conventions for Schur powers of a rank ``e`` bundle:
    negative ``k`` or ``l`` outside ``1..e`` gives ``ZERO``, except ``(-1|0)``
    which is the trivial bundle (the empty partition).
    """
    if k == -1 and l == 0:
        return EMPTY
    if k < 0 or l <= 0 or l > e:
        return ZERO
    return Partition((k + 1,) + (1,) * (l - 1))
