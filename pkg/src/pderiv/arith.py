"""p-derivations on the integers and the rationals.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
:class:`fractions.Fraction`, which is always stored reduced with a positive
denominator.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

from .errors import DivisibilityError, DomainError, NotPrimeError

MAX_PRIME = 10**4


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def check_prime(p) -> int:
    """Return ``p`` as an int, raising NotPrimeError unless it is a prime <= 10**4."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise NotPrimeError(p)
    if p > MAX_PRIME:
        raise DomainError(f"{p} exceeds the supported prime bound {MAX_PRIME}")
    if not is_prime(p):
        raise NotPrimeError(p)
    return p


def exact_div(a: int, p: int) -> int:
    q, r = divmod(a, p)
    if r:
        raise DivisibilityError(f"{a} is not divisible by {p}")
    return q


def delta_int(p: int, n: int) -> int:
    """The p-derivation ``(n - n**p) / p`` on the integers."""
    p = check_prime(p)
    return exact_div(n - n**p, p)


def delta_rat(p: int, r) -> Fraction:
    p = check_prime(p)
    r = Fraction(r)
    return (r - r**p) / p


def ord_p(p: int, n: int) -> int:
    """Exponent of p in n. Raises for n == 0, whose order is infinite."""
    p = check_prime(p)
    if n == 0:
        raise DomainError("ord_p(0) is infinite")
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return a


def cp_error_term(p: int, m: int, n: int) -> int:
    """C_p(m, n), the correction in ``delta(m + n) = delta(m) + delta(n) + C_p(m, n)``."""
    p = check_prime(p)
    return -sum(exact_div(comb(p, i), p) * m**i * n ** (p - i) for i in range(1, p))


def power_rule_rhs(p: int, n: int, a: int) -> int:
    p = check_prime(p)
    if a < 1:
        raise DomainError("power rule needs a >= 1")
    d = delta_int(p, n)
    return sum(comb(a, i) * p ** (i - 1) * d**i * n ** ((a - i) * p) for i in range(1, a + 1))


def quotient_rule_rhs(p: int, m: int, n: int) -> Fraction:
    p = check_prime(p)
    if n == 0:
        raise DomainError("quotient rule needs a nonzero denominator")
    dm, dn = delta_int(p, m), delta_int(p, n)
    return Fraction(n**p * dm - m**p * dn, n ** (2 * p) + p * n**p * dn)


def canonical_lift_int(p: int, n: int) -> int:
    """Frobenius lift ``n**p + p*delta(n)`` on the integers, which is the identity."""
    p = check_prime(p)
    return n**p + p * delta_int(p, n)
