"""Independent brute-force oracles the tests check the library against.

Everything here deliberately avoids the library's memoized classifier sets
and shortcut algorithms: nilpotency by plain power iteration, units by full
inverse scans, decompositions by a double loop over all pairs.
"""

from __future__ import annotations


def naive_nil_index(ring, x: int):
    """Least k >= 1 with x^k = 0 by plain iteration, None past `order` steps."""
    power = x
    for k in range(1, ring.order + 1):
        if power == ring.zero_i:
            return k
        power = ring.mul_i(power, x)
    return None


def naive_is_unit(ring, x: int) -> bool:
    return any(
        ring.mul_i(x, y) == ring.one_i and ring.mul_i(y, x) == ring.one_i
        for y in range(ring.order)
    )


def brute_pairs(ring, x: int, kind: str):
    """All (e, y) with e + y = x, e idempotent, y nilpotent or a unit."""
    out = []
    for e in range(ring.order):
        if ring.mul_i(e, e) != e:
            continue
        y = ring.sub_i(x, e)
        if kind == "nil-clean" and naive_nil_index(ring, y) is None:
            continue
        if kind == "clean" and not naive_is_unit(ring, y):
            continue
        out.append((e, y))
    return out


def divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


def radical_of_modulus(n: int) -> int:
    """Product of the distinct primes dividing n."""
    rad, remaining, p = 1, n, 2
    while p * p <= remaining:
        if remaining % p == 0:
            rad *= p
            while remaining % p == 0:
                remaining //= p
        p += 1
    if remaining > 1:
        rad *= remaining
    return rad


def tri_mat_mul(a, b, n: int, modulus: int):
    """Independent n-by-n upper-triangular matrix product over Z_modulus.

    Matrices are dicts keyed by (row, col) over the upper triangle.
    """
    out = {}
    for r in range(n):
        for c in range(r, n):
            out[(r, c)] = (
                sum(a[(r, t)] * b[(t, c)] for t in range(r, c + 1)) % modulus
            )
    return out
