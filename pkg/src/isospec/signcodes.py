"""Diagonal sign subgroups of SO(6) as binary codes of length 6.

A diagonal matrix with entries +-1 is stored as the set of coordinates
carrying -1.  Two such matrices are conjugate in O(6) exactly when they have
the same number of -1 entries, so almost-conjugacy of two groups is equality
of weight enumerators.  Conjugacy of the groups themselves reduces to a
coordinate permutation carrying one code onto the other; with six
coordinates that is a scan over 720 permutations.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .errors import ArgumentError, DomainError

LENGTH = 6


@dataclass(frozen=True, order=True)
class SignVector:
    bits: tuple[int, ...]  # 1 where the diagonal entry is -1

    def __post_init__(self):
        if len(self.bits) != LENGTH or any(b not in (0, 1) for b in self.bits):
            raise ArgumentError(f"expected {LENGTH} bits, got {self.bits!r}")

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> "SignVector":
        if any(s not in (1, -1) for s in signs):
            raise ArgumentError(f"entries must be +1 or -1: {signs!r}")
        return cls(tuple(1 if s == -1 else 0 for s in signs))

    @property
    def weight(self) -> int:
        return sum(self.bits)

    @property
    def determinant(self) -> int:
        return -1 if self.weight % 2 else 1

    def signs(self) -> tuple[int, ...]:
        return tuple(-1 if b else 1 for b in self.bits)

    def __mul__(self, other: "SignVector") -> "SignVector":
        return SignVector(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def permuted(self, perm: Sequence[int]) -> "SignVector":
        """Coordinate ``i`` moves to position ``perm[i]``."""
        out = [0] * LENGTH
        for i, b in enumerate(self.bits):
            out[perm[i]] = b
        return SignVector(tuple(out))

    def render(self) -> str:
        return "(" + ",".join(str(s) for s in self.signs()) + ")"


ZERO = SignVector((0,) * LENGTH)


class SignCodeGroup:
    def __init__(self, codewords: Iterable[SignVector]):
        self.codewords: frozenset[SignVector] = frozenset(codewords)
        if ZERO not in self.codewords:
            raise ArgumentError("group must contain the identity")
        for a in self.codewords:
            for b in self.codewords:
                if a * b not in self.codewords:
                    raise ArgumentError("codewords are not closed under products")

    @classmethod
    def from_signs(cls, rows: Iterable[Sequence[int]]) -> "SignCodeGroup":
        return cls(SignVector.from_signs(r) for r in rows)

    def __len__(self) -> int:
        return len(self.codewords)

    def __eq__(self, other) -> bool:
        return isinstance(other, SignCodeGroup) and self.codewords == other.codewords

    def __hash__(self) -> int:
        return hash(self.codewords)

    @property
    def dimension(self) -> int:
        return len(self.codewords).bit_length() - 1

    def in_so6(self) -> bool:
        return all(c.weight % 2 == 0 for c in self.codewords)

    def permuted(self, perm: Sequence[int]) -> "SignCodeGroup":
        return SignCodeGroup(c.permuted(perm) for c in self.codewords)

    def sorted_codewords(self) -> list[SignVector]:
        return sorted(self.codewords, key=lambda c: (c.weight, c.bits))


def weight_enumerator(group: SignCodeGroup) -> dict[int, int]:
    return dict(sorted(Counter(c.weight for c in group.codewords).items()))


def paper_groups() -> tuple[SignCodeGroup, SignCodeGroup]:
    """Two order-8 codes with equal weight enumerators and no coordinate permutation between them."""
    g1 = SignCodeGroup.from_signs([
        (1, 1, 1, 1, 1, 1), (-1, -1, -1, -1, -1, -1), (-1, -1, 1, 1, 1, 1), (-1, 1, -1, 1, 1, 1),
        (1, -1, -1, 1, 1, 1), (-1, 1, 1, -1, -1, -1), (1, -1, 1, -1, -1, -1), (1, 1, -1, -1, -1, -1),
    ])
    g2 = SignCodeGroup.from_signs([
        (1, 1, 1, 1, 1, 1), (-1, -1, -1, -1, -1, -1), (-1, -1, 1, 1, 1, 1), (1, 1, -1, -1, 1, 1),
        (1, 1, 1, 1, -1, -1), (-1, -1, -1, -1, 1, 1), (-1, -1, 1, 1, -1, -1), (1, 1, -1, -1, -1, -1),
    ])
    return g1, g2


def even_weight_code() -> SignCodeGroup:
    """All 32 even-weight vectors, i.e. the diagonal sign matrices in SO(6)."""
    from itertools import product

    return SignCodeGroup(SignVector(b) for b in product((0, 1), repeat=LENGTH) if sum(b) % 2 == 0)


def so6_almost_conjugate(g1: SignCodeGroup, g2: SignCodeGroup) -> bool:
    for g in (g1, g2):
        if not g.in_so6():
            raise DomainError("codeword of odd weight: the group does not lie in SO(6)")
    return weight_enumerator(g1) == weight_enumerator(g2)


@dataclass(frozen=True)
class EquivalenceResult:
    permutation: tuple[int, ...] | None
    tried: int


def permutation_search(g1: SignCodeGroup, g2: SignCodeGroup) -> EquivalenceResult:
    """Scan Sym(6) in lexicographic order; stop at the first permutation mapping g1 onto g2."""
    tried = 0
    if len(g1) == len(g2):
        target = g2.codewords
        for perm in permutations(range(LENGTH)):
            tried += 1
            if all(c.permuted(perm) in target for c in g1.codewords):
                return EquivalenceResult(perm, tried)
    else:
        tried = 0
    return EquivalenceResult(None, tried)


def permutation_equivalent(g1: SignCodeGroup, g2: SignCodeGroup) -> tuple[int, ...] | None:
    return permutation_search(g1, g2).permutation
