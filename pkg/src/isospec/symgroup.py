"""Partitions, cycle types and irreducible characters of the symmetric group.

Characters are evaluated with the Murnaghan-Nakayama rule on beta-sets
(abacus form): removing a rim hook of length ``r`` is the same as moving a
bead from ``b`` to ``b - r``, with sign ``(-1)**(beads jumped over)``.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, gcd, lcm, prod
from typing import Iterator, Sequence

from .errors import ArgumentError, SizeLimitError

PARTITION_CAP = 64

Partition = tuple[int, ...]


def as_partition(parts: Sequence[int]) -> Partition:
    """Normalise ``parts`` into a weakly decreasing tuple of positive ints."""
    out = tuple(sorted((int(p) for p in parts), reverse=True))
    if not out or out[-1] < 1:
        raise ArgumentError(f"not a partition: {tuple(parts)!r}")
    return out


def render_partition(lam: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in lam) + ")"


def parse_partition(text: str) -> Partition:
    body = text.strip().strip("()[]")
    try:
        return as_partition([int(tok) for tok in body.split(",") if tok.strip()])
    except ValueError as exc:
        raise ArgumentError(f"cannot parse partition {text!r}") from exc


def _partitions(m: int, largest: int) -> Iterator[Partition]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def enumerate_partitions(m: int, cap: int = PARTITION_CAP) -> list[Partition]:
    """All partitions of ``m`` in reverse-lexicographic order."""
    if m < 1:
        raise ArgumentError("m must be positive")
    if m > cap:
        raise SizeLimitError(f"m={m} exceeds partition cap {cap}")
    return list(_partitions(m, m))


# -- cycle types -------------------------------------------------------------

def identity_type(m: int) -> Partition:
    return (1,) * m


def transposition_type(m: int) -> Partition:
    return as_partition((2,) + (1,) * (m - 2))


def double_transposition_type(m: int) -> Partition:
    return as_partition((2, 2) + (1,) * (m - 4))


def parity(mu: Sequence[int]) -> int:
    """0 for even permutations, 1 for odd ones."""
    return sum(c - 1 for c in mu) % 2


def order(mu: Sequence[int]) -> int:
    return lcm(*mu)


def centralizer_order(mu: Sequence[int]) -> int:
    """z_mu = prod_i i**a_i * a_i!"""
    return prod(i ** a * factorial(a) for i, a in Counter(mu).items())


def class_size(mu: Sequence[int]) -> int:
    return factorial(sum(mu)) // centralizer_order(mu)


def power_cycle_type(mu: Sequence[int], k: int) -> Partition:
    """Cycle type of ``z**k`` where ``z`` has cycle type ``mu``."""
    if k < 0:
        raise ArgumentError("k must be non-negative")
    parts: list[int] = []
    for c in mu:
        g = gcd(c, k)  # gcd(c, 0) == c: every point becomes fixed
        parts.extend([c // g] * g)
    return as_partition(parts)


# -- characters --------------------------------------------------------------

def _beta_set(lam: Partition) -> tuple[int, ...]:
    n = len(lam)
    return tuple(p + n - 1 - i for i, p in enumerate(lam))


def _from_beta(beta: Sequence[int]) -> Partition:
    bs = sorted(beta, reverse=True)
    n = len(bs)
    return tuple(p for p in (b - (n - 1 - i) for i, b in enumerate(bs)) if p > 0)


def remove_rim_hooks(lam: Partition, r: int) -> list[tuple[Partition, int]]:
    """Every ``(shape, sign)`` obtained by removing one rim hook of length ``r``."""
    beta = _beta_set(lam)
    present = set(beta)
    out = []
    for b in beta:
        t = b - r
        if t < 0 or t in present:
            continue
        height = sum(1 for c in beta if t < c < b)
        new = [t if c == b else c for c in beta]
        out.append((_from_beta(new), -1 if height % 2 else 1))
    return out


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    return sum(sign * _mn(shape, rest) for shape, sign in remove_rim_hooks(lam, r))


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi_lam evaluated on the class of cycle type ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ArgumentError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(lam, mu)


def character_cache_clear() -> None:
    _mn.cache_clear()


def conjugate(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def dimension(lam: Sequence[int]) -> int:
    """Hook length formula."""
    lam = as_partition(lam)
    cols = conjugate(lam)
    hooks = prod(
        (lam[i] - j) + (cols[j] - i) - 1
        for i in range(len(lam))
        for j in range(lam[i])
    )
    return factorial(sum(lam)) // hooks


def is_faithful(lam: Sequence[int]) -> bool:
    lam = as_partition(lam)
    m = sum(lam)
    deg = dimension(lam)
    ident = identity_type(m)
    return all(
        mu == ident or mn_character(lam, mu) != deg
        for mu in enumerate_partitions(m, cap=max(m, PARTITION_CAP))
    )


def character_table(m: int) -> tuple[list[Partition], list[Partition], list[list[int]]]:
    """Rows indexed by irreps, columns by cycle types, both reverse-lex."""
    parts = enumerate_partitions(m)
    return parts, parts, [[mn_character(lam, mu) for mu in parts] for lam in parts]
