"""Binomial coefficients modulo a prime, Lyndon words and the Witt count."""

from __future__ import annotations

__all__ = ["binom_mod_p", "lyndon_words", "mobius", "witt_dimension"]


def _small_binom(n: int, m: int, p: int) -> int:
    if m < 0 or m > n:
        return 0
    num = den = 1
    for i in range(m):
        num = num * (n - i) % p
        den = den * (i + 1) % p
    return num * pow(den, p - 2, p) % p


def binom_mod_p(n: int, m: int, p: int) -> int:
    """C(n, m) mod p by Lucas' theorem, digit by digit in base p.

    Returns 0 when ``m > n``.  Never forms factorials of ``n`` itself.

    >>> binom_mod_p(6, 3, 7)
    6
    >>> binom_mod_p(20, 6, 7)
    1
    """
    if n < 0 or m < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if m > n:
        return 0
    result = 1
    while n or m:
        nd, md = n % p, m % p
        if md > nd:
            return 0
        result = result * _small_binom(nd, md, p) % p
        n //= p
        m //= p
    return result


def lyndon_words(degree: int, alphabet: str = "xy") -> list[str]:
    """All Lyndon words of the given length, in lexicographic order.

    Uses Duval's algorithm over the ordered alphabet (``x < y`` by default).
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    n = len(alphabet)
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == degree:
            out.append("".join(alphabet[i] for i in w))
        m = len(w)
        while len(w) < degree:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()
    return out


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def witt_dimension(d: int, generators: int = 2) -> int:
    """(1/d) * sum over divisors e of d of mobius(e) * generators**(d/e)."""
    total = sum(mobius(e) * generators ** (d // e) for e in range(1, d + 1) if d % e == 0)
    return total // d
