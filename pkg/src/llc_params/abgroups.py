"""Finitely generated abelian groups in invariant factor normal form.

A value represents Z**free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk
and every di >= 2.  That normal form is unique, so equality of values is
isomorphism of groups, the fact the whole matching pipeline leans on.
"""

from __future__ import annotations

from collections.abc import Iterable

from .arith import factorint, is_prime, valuation
from .errors import InvalidArgument, InvalidPrime
from .lattice import IntMatrix, smith_normal_form


def _chain_from_factors(factors: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Normalize arbitrary cyclic orders into (extra_free_rank, divisor chain).

    Zeros contribute free rank (Z/0 = Z), ones vanish, and the rest are split
    into prime powers and recombined largest-with-largest so the divisibility
    chain holds.
    """
    extra_free = 0
    primary: dict[int, list[int]] = {}
    for d in factors:
        if isinstance(d, bool) or not isinstance(d, int):
            raise InvalidArgument(f"invariant factors must be integers, got {d!r}")
        if d < 0:
            raise InvalidArgument(f"invariant factors must be nonnegative, got {d}")
        if d == 0:
            extra_free += 1
            continue
        for p, e in factorint(d):
            primary.setdefault(p, []).append(e)
    for exps in primary.values():
        exps.sort(reverse=True)
    depth = max((len(exps) for exps in primary.values()), default=0)
    chain = []
    for i in range(depth):
        f = 1
        for p, exps in primary.items():
            if i < len(exps):
                f *= p ** exps[i]
        chain.append(f)
    chain.reverse()
    return extra_free, tuple(chain)


class FinGenAbGroup:
    """A finitely generated abelian group, held in invariant factor form.

    The constructor accepts any list of cyclic orders and renormalizes:

    >>> FinGenAbGroup(0, (4, 2, 3))
    FinGenAbGroup(free_rank=0, invariant_factors=(2, 12))
    >>> FinGenAbGroup(0, (0, 6)) == FinGenAbGroup(1, (6,))
    True
    >>> FinGenAbGroup(0, (1, 1)).is_trivial
    True
    """

    __slots__ = ("_free_rank", "_factors")

    def __init__(self, free_rank: int = 0, factors: Iterable[int] = ()):
        if isinstance(free_rank, bool) or not isinstance(free_rank, int) or free_rank < 0:
            raise InvalidArgument(f"free rank must be a nonnegative integer, got {free_rank!r}")
        extra, chain = _chain_from_factors(factors)
        self._free_rank = free_rank + extra
        self._factors = chain

    @classmethod
    def trivial(cls) -> "FinGenAbGroup":
        return cls(0, ())

    @classmethod
    def cyclic(cls, n: int) -> "FinGenAbGroup":
        """Z/n, with Z/0 = Z and Z/1 = 0."""
        return cls(0, (n,))

    @property
    def free_rank(self) -> int:
        return self._free_rank

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self._factors

    @property
    def is_trivial(self) -> bool:
        return self._free_rank == 0 and not self._factors

    @property
    def is_finite(self) -> bool:
        return self._free_rank == 0

    def order(self) -> int | None:
        """Group order as an integer, or None for an infinite group."""
        if not self.is_finite:
            return None
        return self.torsion_order()

    def torsion_order(self) -> int:
        out = 1
        for d in self._factors:
            out *= d
        return out

    def direct_sum(self, other: "FinGenAbGroup") -> "FinGenAbGroup":
        return FinGenAbGroup(self._free_rank + other._free_rank, self._factors + other._factors)

    def ell_primary(self, ell: int) -> "FinGenAbGroup":
        """The ell-primary component of the torsion part (a finite group)."""
        if not is_prime(ell):
            raise InvalidPrime(f"ell = {ell} is not prime")
        return FinGenAbGroup(0, tuple(ell ** valuation(d, ell) for d in self._factors))

    def prime_to_ell(self, ell: int) -> "FinGenAbGroup":
        """The prime-to-ell part of the torsion (the free part is dropped)."""
        if not is_prime(ell):
            raise InvalidPrime(f"ell = {ell} is not prime")
        return FinGenAbGroup(0, tuple(d // ell ** valuation(d, ell) for d in self._factors))

    def describe(self) -> str:
        """Human-oriented name such as 'Z^2 + Z/2 + Z/12'; '0' when trivial."""
        parts = []
        if self._free_rank == 1:
            parts.append("Z")
        elif self._free_rank > 1:
            parts.append(f"Z^{self._free_rank}")
        parts.extend(f"Z/{d}" for d in self._factors)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"freeRank": self._free_rank, "torsion": list(self._factors)}

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinGenAbGroup):
            return NotImplemented
        return self._free_rank == other._free_rank and self._factors == other._factors

    def __hash__(self) -> int:
        return hash((self._free_rank, self._factors))

    def __repr__(self) -> str:
        return f"FinGenAbGroup(free_rank={self._free_rank}, invariant_factors={self._factors})"


def cokernel(a: IntMatrix) -> FinGenAbGroup:
    """Z^rows / (column span of a), from the Smith normal form.

    >>> cokernel(IntMatrix([[1, -1], [-1, 1]]))
    FinGenAbGroup(free_rank=1, invariant_factors=())
    >>> cokernel(IntMatrix([[-11, 1], [1, -11]]))
    FinGenAbGroup(free_rank=0, invariant_factors=(120,))
    """
    _, d, _ = smith_normal_form(a)
    diag = d.diagonal()
    nonzero = [e for e in diag if e != 0]
    return FinGenAbGroup(a.rows - len(nonzero), tuple(e for e in nonzero if e > 1))


def group_order(g: FinGenAbGroup) -> int | None:
    """Free-function alias for FinGenAbGroup.order: an int, or None when infinite."""
    return g.order()
