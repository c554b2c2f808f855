"""Subgroups of Spin(4) = SU(2) x SU(2) via Goursat quintuples.

A quintuple (A, A0, B, B0, theta) with A0 normal in A, B0 normal in B and
theta: A/A0 -> B/B0 an isomorphism determines the fiber product
{(a, b) : theta(a A0) = b B0}.  Cosets are named by their smallest element.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _kernels
from .errors import ArgumentError
from .quatgroups import (
    ONE,
    FiniteQuatGroup,
    UnitQuaternion,
    ade_group,
    generate,
)


@dataclass(frozen=True, slots=True)
class QuatPair:
    a: UnitQuaternion
    b: UnitQuaternion

    def __mul__(self, other: "QuatPair") -> "QuatPair":
        return QuatPair(self.a * other.a, self.b * other.b)

    def inverse(self) -> "QuatPair":
        return QuatPair(self.a.inverse(), self.b.inverse())

    def conjugate_by(self, g: "QuatPair") -> "QuatPair":
        return QuatPair(self.a.conjugate_by(g.a), self.b.conjugate_by(g.b))

    @property
    def class_invariant(self):
        """(Re a, Re b); determines the Spin(4) conjugacy class."""
        return (self.a.w, self.b.w)

    def sort_key(self) -> tuple:
        return (self.a.sort_key(), self.b.sort_key())

    def render(self) -> str:
        return f"({self.a.render()}, {self.b.render()})"


IDENTITY = QuatPair(ONE, ONE)


class Spin4Subgroup:
    """A finite subgroup of Spin(4), stored as a set of pairs."""

    def __init__(self, elements: Iterable[QuatPair], check: bool = True):
        self.elements: frozenset[QuatPair] = frozenset(elements)
        if check:
            self._check_group()

    def _check_group(self) -> None:
        if IDENTITY not in self.elements:
            raise ArgumentError("subgroup must contain the identity")
        for p in self.elements:
            if p.inverse() not in self.elements:
                raise ArgumentError("set is not closed under inverses")
            for q in self.elements:
                if p * q not in self.elements:
                    raise ArgumentError(f"set is not closed: {p.render()} * {q.render()}")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, Spin4Subgroup) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"Spin4Subgroup(order={self.order})"

    def conjugated(self, g: QuatPair) -> "Spin4Subgroup":
        return Spin4Subgroup((p.conjugate_by(g) for p in self.elements), check=False)

    def class_multiset(self) -> Counter:
        return Counter(p.class_invariant for p in self.elements)

    def sorted_elements(self) -> list[QuatPair]:
        return sorted(self.elements, key=QuatPair.sort_key)


# -- cosets -------------------------------------------------------------------

def coset_labels(group: FiniteQuatGroup, normal: FiniteQuatGroup) -> dict[UnitQuaternion, UnitQuaternion]:
    """Map every element of ``group`` to the smallest element of its coset mod ``normal``."""
    if not normal.is_normal_in(group):
        raise ArgumentError(f"{normal!r} is not a normal subgroup of {group!r}")
    out: dict[UnitQuaternion, UnitQuaternion] = {}
    for g in group.elements:  # sorted, identity first
        if g in out:
            continue
        coset = [g * h for h in normal.elements]
        rep = min(coset, key=UnitQuaternion.sort_key)
        for c in coset:
            out[c] = rep
    return out


def _as_group(g: FiniteQuatGroup | str) -> FiniteQuatGroup:
    return ade_group(g) if isinstance(g, str) else g


@dataclass
class GoursatQuintuple:
    """(A, A0, B, B0, theta); theta maps coset representatives of A/A0 to those of B/B0."""

    A: FiniteQuatGroup
    A0: FiniteQuatGroup
    B: FiniteQuatGroup
    B0: FiniteQuatGroup
    theta: dict[UnitQuaternion, UnitQuaternion] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.A, self.A0 = _as_group(self.A), _as_group(self.A0)
        self.B, self.B0 = _as_group(self.B), _as_group(self.B0)
        self.validate()

    @cached_property
    def labels_a(self) -> dict[UnitQuaternion, UnitQuaternion]:
        return coset_labels(self.A, self.A0)

    @cached_property
    def labels_b(self) -> dict[UnitQuaternion, UnitQuaternion]:
        return coset_labels(self.B, self.B0)

    def validate(self) -> None:
        la, lb = self.labels_a, self.labels_b
        reps_a, reps_b = set(la.values()), set(lb.values())
        if len(reps_a) != len(reps_b):
            raise ArgumentError(f"quotients have different orders: {len(reps_a)} vs {len(reps_b)}")
        # accept any coset members as keys/values and normalise them
        normalised = {}
        for x, y in self.theta.items():
            if x not in la or y not in lb:
                raise ArgumentError("theta entries must be elements of A and B")
            if normalised.setdefault(la[x], lb[y]) != lb[y]:
                raise ArgumentError("theta is not well defined on cosets")
        if set(normalised) != reps_a:
            raise ArgumentError("theta must be given on every coset of A/A0")
        if set(normalised.values()) != reps_b:
            raise ArgumentError("theta is not a bijection")
        for x in reps_a:
            for y in reps_a:
                if normalised[la[x * y]] != lb[normalised[x] * normalised[y]]:
                    raise ArgumentError("theta is not multiplicative")
        self.theta = normalised

    @classmethod
    def from_generators(cls, A, A0, B, B0, pairs: Sequence[tuple[UnitQuaternion, UnitQuaternion]]) -> "GoursatQuintuple":
        """Extend theta from the images of elements generating A/A0."""
        A, A0, B, B0 = (_as_group(g) for g in (A, A0, B, B0))
        la, lb = coset_labels(A, A0), coset_labels(B, B0)
        theta = {la[ONE]: lb[ONE]}
        frontier = [la[ONE]]
        while frontier:
            nxt = []
            for x in frontier:
                for a, b in pairs:
                    if a not in la or b not in lb:
                        raise ArgumentError("generator pair is not in A x B")
                    key, val = la[x * a], lb[theta[x] * b]
                    if key not in theta:
                        theta[key] = val
                        nxt.append(key)
                    elif theta[key] != val:
                        raise ArgumentError("generator images do not define a homomorphism")
            frontier = nxt
        return cls(A, A0, B, B0, theta)

    def summary(self) -> dict:
        return {
            "A": self.A.label or f"order {self.A.order}",
            "A0": self.A0.label or f"order {self.A0.order}",
            "B": self.B.label or f"order {self.B.order}",
            "B0": self.B0.label or f"order {self.B0.order}",
            "quotient_order": len(self.theta),
            "theta": [[k.render(), v.render()] for k, v in sorted(self.theta.items(), key=lambda kv: kv[0].sort_key())],
        }


def build_subgroup(q: GoursatQuintuple) -> Spin4Subgroup:
    """Fiber product; its order is |A| * |B0|."""
    la, lb = q.labels_a, q.labels_b
    by_coset: dict[UnitQuaternion, list[UnitQuaternion]] = {}
    for b, rep in lb.items():
        by_coset.setdefault(rep, []).append(b)
    elems = [QuatPair(a, b) for a in q.A.elements for b in by_coset[q.theta[la[a]]]]
    return Spin4Subgroup(elems, check=False)


def quintuple_of(c: Spin4Subgroup) -> GoursatQuintuple:
    """Canonical quintuple: projections and the kernels of the opposite projections."""
    if not isinstance(c, Spin4Subgroup):
        raise ArgumentError("expected a Spin4Subgroup")
    A = FiniteQuatGroup({p.a for p in c.elements})
    B = FiniteQuatGroup({p.b for p in c.elements})
    A0 = FiniteQuatGroup({p.a for p in c.elements if p.b == ONE})
    B0 = FiniteQuatGroup({p.b for p in c.elements if p.a == ONE})
    theta = {}
    for p in c.elements:
        theta.setdefault(p.a, p.b)
    return GoursatQuintuple(A, A0, B, B0, theta)


def spin4_almost_conjugate(c1: Spin4Subgroup, c2: Spin4Subgroup) -> bool:
    return c1.class_multiset() == c2.class_multiset()


def conjugate_by_witness(c1: Spin4Subgroup, c2: Spin4Subgroup,
                         witnesses: Iterable[QuatPair]) -> QuatPair | None:
    """First g in ``witnesses`` with g C1 g^-1 = C2."""
    if c1.order != c2.order:
        return None
    target = c2.elements
    for g in witnesses:
        if all(p.conjugate_by(g) in target for p in c1.elements):
            return g
    return None


def witnesses_from(left: Iterable[UnitQuaternion], right: Iterable[UnitQuaternion]) -> list[QuatPair]:
    return [QuatPair(a, b) for a in left for b in right]


# -- the explicit families used in the almost-conjugacy analysis --------------

_s = UnitQuaternion.parse("1/2 + 1/2*i + 1/2*j + 1/2*k")
_s2 = _s * _s  # (-1+i+j+k)/2, order 3


def z3_2t_pair() -> tuple[GoursatQuintuple, GoursatQuintuple]:
    """G(Z3, 1, 2T, 2D4, theta_i): the generator of Z3 goes to s^-1 2D4 or s 2D4.

    Z3 is realised as <(-1+i+j+k)/2> so that every coordinate stays exact.
    """
    z3 = generate([_s2], label="Z3")
    one = generate([ONE], label="Z1")
    q1 = GoursatQuintuple.from_generators(z3, one, "2T", "2D4", [(_s2, _s.inverse())])
    q2 = GoursatQuintuple.from_generators(z3, one, "2T", "2D4", [(_s2, _s)])
    return q1, q2


def z4_2d6_pair() -> tuple[GoursatQuintuple, GoursatQuintuple]:
    """G(Z4, 1, 2D6, Z3, theta_i) with theta_1(i) = b Z3 and theta_2(i) = b^-1 Z3."""
    from .quatgroups import I, _binary_dihedral_generators

    _, b = _binary_dihedral_generators(3)
    z4 = ade_group("Z4")
    one = generate([ONE], label="Z1")
    z3 = generate([_s2], label="Z3")
    q1 = GoursatQuintuple.from_generators(z4, one, "2D6", z3, [(I, b)])
    q2 = GoursatQuintuple.from_generators(z4, one, "2D6", z3, [(I, b.inverse())])
    return q1, q2


def z4_2d6_listed_set() -> set[QuatPair]:
    """The element list (k = k' = 1) written with e^{i pi/3} -> s and j -> b.

    It is not closed under multiplication; see the tests.
    """
    from .quatgroups import I, _binary_dihedral_generators

    _, b = _binary_dihedral_generators(3)
    z3 = [ONE, _s2, _s2 * _s2]
    minus_z3 = [-z for z in z3]
    out = set()
    out |= {QuatPair(ONE, z) for z in z3}
    out |= {QuatPair(I, z) for z in minus_z3}
    out |= {QuatPair(-ONE, b * z) for z in z3}
    out |= {QuatPair(-I, b * z) for z in minus_z3}
    return out


# -- enumeration in a product of two finite groups ----------------------------

def product_table(g1: FiniteQuatGroup, g2: FiniteQuatGroup) -> np.ndarray:
    t1, t2 = g1.table.astype(np.int64), g2.table.astype(np.int64)
    n2 = g2.order
    out = t1[:, None, :, None] * n2 + t2[None, :, None, :]
    n = g1.order * n2
    return out.reshape(n, n).astype(np.int32)


def subgroups_of_product(g1: FiniteQuatGroup, g2: FiniteQuatGroup, max_order: int) -> list[Spin4Subgroup]:
    """All subgroups of g1 x g2 of order <= max_order, via repeated cyclic joins."""
    table = product_table(g1, g2)
    n2 = g2.order
    out = []
    for mask in _kernels.subgroups_up_to(table, max_order):
        idx = np.flatnonzero(mask)
        out.append(Spin4Subgroup(
            (QuatPair(g1.elements[i // n2], g2.elements[i % n2]) for i in idx), check=False))
    return out
