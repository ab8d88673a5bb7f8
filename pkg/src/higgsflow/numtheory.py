"""Elementary number theory helpers: primality, factoring, sieves, orders."""

from __future__ import annotations

import math

# Deterministic Miller-Rabin witness set, valid for all n < 3,215,031,751.
_MR_BASES = (2, 3, 5, 7)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2^31 (witnesses 2,3,5,7)."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n == b:
            return True
        if n % b == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi, ascending (simple sieve)."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray(b"\x01") * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(hi) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes((hi - i * i) // i + 1)
    return [p for p in range(max(lo, 2), hi + 1) if sieve[p]]


def _pollard_rho(n: int, seed: int = 1) -> int:
    """One nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    c = seed
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # trial division covers everything the desk-scale callers produce;
    # rho handles the occasional large semiprime from scanner discriminants
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = 17
        found = False
        while d * d <= m and d < 100_000:
            if m % d == 0:
                stack.extend([d, m // d])
                found = True
                break
            d += 2
        if not found:
            d = _pollard_rho(m)
            stack.extend([d, m // d])
    return dict(sorted(out.items()))


def multiplicative_order(a: int, n: int) -> int:
    """Order of a modulo n; requires gcd(a, n) = 1."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError("a must be invertible mod n")
    order = 1
    for p, e in factorize(_carmichael_exponent_bound(n)).items():
        order *= p**e
    # strip primes while the power still fixes 1
    for p in factorize(order):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def _carmichael_exponent_bound(n: int) -> int:
    """A multiple of the group exponent of (Z/n)^* (lambda function)."""
    lam = 1
    for p, e in factorize(n).items():
        if p == 2 and e >= 3:
            block = 2 ** (e - 2)
        else:
            block = (p - 1) * p ** (e - 1)
        lam = lam * block // math.gcd(lam, block)
    return lam
