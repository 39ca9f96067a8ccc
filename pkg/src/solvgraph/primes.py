"""Prime searches and multiplicative-order utilities.

Everything here works with exact integer arithmetic; the moduli that show
up in practice stay well below 10**7, so a deterministic Miller-Rabin test
with a fixed base set is more than enough.
"""

from __future__ import annotations

from .errors import LimitExceeded

# Deterministic for n < 3,215,031,751; our search caps are far lower.
_MR_BASES = (2, 3, 5, 7)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def smallest_prime(modulus: int, residue: int, used: set[int], cap: int = 10**6) -> int:
    """Smallest prime p <= cap with p % modulus == residue and p not in used.

    ``modulus=1`` degenerates to "smallest unused prime".  Raises
    LimitExceeded when the search passes ``cap``, which signals a
    pathological congruence demand rather than a routine failure.
    """
    if modulus == 1:
        candidate = 2
        while candidate <= cap:
            if candidate not in used and is_prime(candidate):
                return candidate
            candidate += 1
        raise LimitExceeded(f"no unused prime below {cap}")
    candidate = residue if residue > 1 else residue + modulus
    while candidate <= cap:
        if candidate not in used and is_prime(candidate):
            return candidate
        candidate += modulus
    raise LimitExceeded(
        f"no unused prime p = {residue} (mod {modulus}) below {cap}"
    )


def element_of_order(order: int, order_factors: tuple[int, ...], modulus: int) -> int:
    """Smallest a > 1 whose multiplicative order mod ``modulus`` is exactly ``order``.

    ``order_factors`` must list the distinct prime factors of ``order``;
    callers always know them (the orders arising here are products of
    distinct primes).  Requires order | modulus - 1.
    """
    if (modulus - 1) % order != 0:
        raise ValueError(f"{order} does not divide {modulus}-1")
    for a in range(2, modulus):
        if pow(a, order, modulus) != 1:
            continue
        if all(pow(a, order // f, modulus) != 1 for f in order_factors):
            return a
    raise ValueError(f"no element of order {order} mod {modulus}")


def elements_of_order(order: int, order_factors: tuple[int, ...], modulus: int):
    """Yield the elements of exact multiplicative order ``order``, ascending."""
    if (modulus - 1) % order != 0:
        return
    for a in range(2, modulus):
        if pow(a, order, modulus) != 1:
            continue
        if all(pow(a, order // f, modulus) != 1 for f in order_factors):
            yield a
