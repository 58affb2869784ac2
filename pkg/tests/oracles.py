"""Independent oracles used by the test suite.

Everything here is deliberately written from scratch on top of the standard
library, with different algorithms than the package under test (Gauss over
Fraction instead of Bareiss, cofactor adjugates, coset enumeration instead
of Smith normal form, linear scans instead of closed-form counts).  Nothing
in this module imports from llc_params.
"""

from __future__ import annotations

from fractions import Fraction


def gauss_det(rows) -> int:
    """Determinant over Q by plain Gaussian elimination, returned as int.

    >>> gauss_det([[2, 0], [1, 3]])
    6
    >>> gauss_det([[1, 2], [2, 4]])
    0
    """
    n = len(rows)
    if n == 0:
        return 1
    m = [[Fraction(x) for x in row] for row in rows]
    if any(len(row) != n for row in m):
        raise ValueError("square matrix required")
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    assert det.denominator == 1
    return int(det)


def _minor(rows, i, j):
    return [[row[c] for c in range(len(row)) if c != j] for r, row in enumerate(rows) if r != i]


def adjugate(rows):
    """Classical adjugate via cofactors: adj(A)[i][j] = (-1)^(i+j) det(M_ji).

    Satisfies adj(A) @ A = det(A) * I.

    >>> adjugate([[2, 1], [5, 3]])
    [[3, -1], [-5, 2]]
    """
    n = len(rows)
    if n == 1:
        return [[1]]
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sign = -1 if (i + j) % 2 else 1
            out[i][j] = sign * gauss_det(_minor(rows, j, i))
    return out


def _prime_factors(n: int) -> dict:
    """Multiset of prime factors of n >= 1 as {p: multiplicity}."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def coset_group_structure(rows):
    """Invariant factors of Z^r / (column span of A) for square nonsingular A.

    No Smith normal form: embed the cokernel into (Z/|det|)^r through the
    adjugate (adj(A)*v = 0 mod det iff v is in the column span), enumerate
    the image by breadth-first closure, and read off each prime part from
    annihilator counts.  Returns the ascending invariant factor list, e.g.
    [2, 12].  Cost is O(|det| * r) so keep |det| small.

    >>> coset_group_structure([[2, 0], [0, 4]])
    [2, 4]
    >>> coset_group_structure([[1, -1], [-1, -11]])
    [12]
    """
    r = len(rows)
    d = abs(gauss_det(rows))
    if d == 0:
        raise ValueError("nonsingular matrix required")
    if d == 1:
        return []
    adj = adjugate(rows)
    # generators of the embedded cokernel: images of the standard basis
    gens = [tuple(adj[i][j] % d for i in range(r)) for j in range(r)]
    zero = (0,) * r
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % d for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    assert len(seen) == d, f"coset count {len(seen)} != |det| {d}"
    elements = list(seen)

    # per prime: annihilator counts give the conjugate partition
    exponents_by_prime = {}
    for p, mult in _prime_factors(d).items():
        conjugate = []
        prev_count = 1
        power = 1
        for _ in range(mult):
            power *= p
            count = sum(1 for v in elements if all((power * a) % d == 0 for a in v))
            step = count // prev_count
            if step == 1:
                break
            t = 0
            while p**t != step:
                t += 1
            conjugate.append(t)
            prev_count = count
        # conjugate partition -> exponent partition (descending)
        exps = []
        for j, t in enumerate(conjugate, start=1):
            # t = number of cyclic p-factors with exponent >= j
            while len(exps) < t:
                exps.append(0)
            for i in range(t):
                exps[i] = j
        exponents_by_prime[p] = sorted(exps, reverse=True)

    # recombine largest-with-largest into invariant factors
    width = max(len(v) for v in exponents_by_prime.values())
    factors = []
    for i in range(width):
        f = 1
        for p, exps in exponents_by_prime.items():
            if i < len(exps):
                f *= p ** exps[i]
        factors.append(f)
    return sorted(factors)


def brute_orbit_reps(n: int, q: int, modulus: int):
    """All canonical representatives of size-n multiplication-by-q orbits.

    Linear scan over Z/modulus with a visited table; the canonical
    representative of an orbit is its minimum.

    >>> brute_orbit_reps(1, 11, 2)
    [0, 1]
    """
    visited = bytearray(modulus)
    reps = []
    for a in range(modulus):
        if visited[a]:
            continue
        orbit = [a]
        x = a * q % modulus
        while x != a:
            orbit.append(x)
            x = x * q % modulus
        for x in orbit:
            visited[x] = 1
        if len(orbit) == n:
            reps.append(a)
    return reps


def brute_count(n: int, q: int, modulus: int) -> int:
    """Number of size-n multiplication-by-q orbits in Z/modulus.

    >>> brute_count(2, 11, 24)
    11
    >>> brute_count(2, 11, 120)
    55
    """
    return len(brute_orbit_reps(n, q, modulus))


def naive_is_prime(n: int) -> bool:
    """Trial division primality, no wheel.

    >>> [m for m in range(2, 30) if naive_is_prime(m)]
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    """
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def multiplicative_order(q: int, m: int) -> int:
    """Order of q in (Z/m)*; requires gcd(q, m) = 1.

    >>> multiplicative_order(11, 24)
    2
    """
    x = q % m
    order = 1
    while x != 1:
        x = x * q % m
        order += 1
        if order > m:
            raise ValueError("q is not a unit modulo m")
    return order
