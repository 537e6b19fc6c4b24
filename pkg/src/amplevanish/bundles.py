"""Formal tensor products of Schur powers of a bundle, and their text syntax.

Grammar (factors joined by ``*``)::

    S<k>(E)          symmetric power
    W<j>(E)          exterior power
    Schur[3,1](E)    Schur power of the given exponent
    O_E(a,b,...)     tautological line bundle on a relative product of P(E*)
    det^<m>(E)       power of the determinant, m may be negative
    L                the auxiliary line bundle
    O                the trivial bundle (empty product)

Printing puts power, Schur and tautological factors first in their given
order, then the determinant, then ``L``; parsing a printed form gives the
same expression back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import prod
from typing import NamedTuple, Union

from .errors import DomainError
from .partitions import Partition, format_partition, parse_partition
from .schur import FactorKind, PowerFactor, dim_power, dim_schur


class SchurFactor(NamedTuple):
    partition: Partition

    def __str__(self) -> str:
        return f"Schur[{format_partition(self.partition)}]"


class TautFactor(NamedTuple):
    """``O_E(a_1, ..., a_h)`` on the h-fold relative product of projective bundles."""

    exponents: tuple[int, ...]

    def __str__(self) -> str:
        return "O_E(" + ",".join(str(a) for a in self.exponents) + ")"


Factor = Union[PowerFactor, SchurFactor, TautFactor]


@dataclass(frozen=True)
class BundleExpression:
    factors: tuple[Factor, ...] = ()
    det_power: int = 0
    aux_line_bundle: bool = False
    bundle: str = "E"

    def tensor(self, other: "BundleExpression") -> "BundleExpression":
        if other.bundle != self.bundle:
            raise DomainError("cannot mix bundle names in one expression")
        return BundleExpression(
            self.factors + other.factors,
            self.det_power + other.det_power,
            self.aux_line_bundle or other.aux_line_bundle,
            self.bundle,
        )

    def twist(self, det_power: int = 0, aux: bool = False) -> "BundleExpression":
        return BundleExpression(self.factors, self.det_power + det_power, self.aux_line_bundle or aux, self.bundle)

    @property
    def power_factors(self) -> tuple[PowerFactor, ...]:
        return tuple(f for f in self.factors if isinstance(f, PowerFactor))

    def rank(self, e: int) -> int:
        """Rank over X when the named bundle has rank ``e``.

        Tautological factors are line bundles and count as 1.
        """
        dims = []
        for f in self.factors:
            if isinstance(f, PowerFactor):
                dims.append(dim_power(f, e))
            elif isinstance(f, SchurFactor):
                dims.append(dim_schur(f.partition, e))
        return prod(dims)

    def __str__(self) -> str:
        return format_bundle(self)


def format_bundle(expr: BundleExpression) -> str:
    b = expr.bundle
    tokens = []
    for f in expr.factors:
        if isinstance(f, TautFactor):
            tokens.append(str(f))
        else:
            tokens.append(f"{f}({b})")
    if expr.det_power:
        tokens.append(f"det^{expr.det_power}({b})")
    if expr.aux_line_bundle:
        tokens.append("L")
    return "*".join(tokens) if tokens else "O"


_TOKEN = re.compile(
    r"""
    (?P<power>[SW])(?P<exp>\d+)\((?P<pb>[A-Za-z]\w*)\)
  | Schur\[(?P<parts>[\d,\s]*)\]\((?P<sb>[A-Za-z]\w*)\)
  | O_E\((?P<taut>-?\d+(?:,-?\d+)*)?\)
  | det\^(?P<det>-?\d+)\((?P<db>[A-Za-z]\w*)\)
  | (?P<aux>L)
  | (?P<trivial>O)
    """,
    re.VERBOSE,
)


def parse_bundle(text: str) -> BundleExpression:
    factors: list[Factor] = []
    det_power = 0
    aux = False
    names: set[str] = set()
    tokens = [t.strip() for t in text.strip().split("*")]
    if tokens == ["O"]:
        return BundleExpression()
    for tok in tokens:
        m = _TOKEN.fullmatch(tok)
        if m is None or m.group("trivial"):
            raise DomainError(f"bad bundle token {tok!r}")
        if m.group("power"):
            kind = FactorKind.SYM if m.group("power") == "S" else FactorKind.WEDGE
            factors.append(PowerFactor(kind, int(m.group("exp"))))
            names.add(m.group("pb"))
        elif m.group("sb"):
            factors.append(SchurFactor(parse_partition(m.group("parts"))))
            names.add(m.group("sb"))
        elif m.group("det") is not None:
            if det_power:
                raise DomainError("determinant given twice")
            det_power = int(m.group("det"))
            names.add(m.group("db"))
        elif m.group("aux"):
            aux = True
        else:
            body = m.group("taut")
            factors.append(TautFactor(tuple(int(a) for a in body.split(",")) if body else ()))
    if len(names) > 1:
        raise DomainError(f"expression mixes bundles {sorted(names)}")
    return BundleExpression(tuple(factors), det_power, aux, names.pop() if names else "E")
