"""Small exact number-theory helpers: trial division, valuations, prime powers.

Every modulus this package touches is small (bounded by the CLI cap, default
10**7, or by random-test determinant sizes around 10**11), so trial division
is the right tool.  Nothing here is probabilistic.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InvalidArgument, InvalidPrime, InvalidPrimePower


@lru_cache(maxsize=65536)
def factorint(n: int) -> tuple[tuple[int, int], ...]:
    """Factor n >= 1 into a sorted tuple of (prime, exponent) pairs.

    >>> factorint(120)
    ((2, 3), (3, 1), (5, 1))
    >>> factorint(1)
    ()
    """
    if n < 1:
        raise InvalidArgument(f"cannot factor {n}: need a positive integer")
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    # remaining factors are coprime to 6; walk the 6k +- 1 wheel
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
        d += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and factorint(n) == ((n, 1),)


def prime_power_split(q: int) -> tuple[int, int]:
    """Write q = p**e with p prime, e >= 1, or raise InvalidPrimePower."""
    if q < 2:
        raise InvalidPrimePower(f"q = {q} is not a prime power", code="q-not-prime-power")
    fac = factorint(q)
    if len(fac) != 1:
        raise InvalidPrimePower(
            f"q = {q} is not a prime power",
            code="q-not-prime-power",
            hint="q must equal p**e for a single prime p",
        )
    return fac[0]


def valuation(n: int, p: int) -> int:
    """The exponent of the prime p in n != 0."""
    if n == 0:
        raise InvalidArgument("valuation of 0 is undefined")
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def prime_to_part(n: int, p: int) -> int:
    """The largest divisor of n >= 1 coprime to the prime p."""
    if n < 1:
        raise InvalidArgument(f"need a positive integer, got {n}")
    return n // p ** valuation(n, p)


def check_admissible(q: int, ell: int) -> tuple[int, int]:
    """Validate the standing hypotheses on (q, ell); return (p, e).

    q must be a power of an odd prime p, ell an odd prime different from p.
    Each violation raises with its own stable error code so callers can tell
    them apart.
    """
    p, e = prime_power_split(q)
    if p == 2:
        raise InvalidPrimePower(
            f"q = {q} is a power of 2; residue characteristic 2 is excluded",
            code="p-even",
        )
    if not is_prime(ell):
        raise InvalidPrime(f"ell = {ell} is not prime", code="ell-not-prime")
    if ell == 2:
        raise InvalidPrime("ell = 2 is excluded; the coefficient prime must be odd", code="ell-even")
    if ell == p:
        raise InvalidPrime(
            f"ell = {ell} equals the residue characteristic of q = {q}",
            code="ell-equals-p",
            hint="pick ell coprime to q",
        )
    return p, e
