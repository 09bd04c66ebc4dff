"""Elementary integer helpers."""
from __future__ import annotations

import math
from functools import lru_cache


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of |n| (n != 0)."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Write n = s * f**2 with s squarefree (sign of n kept in s)."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    s, f = (1 if n > 0 else -1), 1
    for p, e in factorize(n).items():
        f *= p ** (e // 2)
        if e % 2:
            s *= p
    return s, f


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for e in factorize(n).values())


def divisors(n: int) -> list[int]:
    """Positive divisors of |n| in increasing order."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


@lru_cache(maxsize=None)
def primes_up_to(bound: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, bound + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n))
