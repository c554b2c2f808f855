"""Exact unit quaternions over Q(sqrt2, sqrt5) and the finite subgroups of SU(2).

Conjugacy in SU(2) is decided by the real part; conjugacy *inside* a finite
group is computed by orbit enumeration on its Cayley table, because the
internal classes can refine the SU(2) ones (2O has two classes with real
part 0).
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _kernels
from .errors import ArgumentError, SizeLimitError
from .exactnum import INV_SQRT2, PHI, PHI_INV, AlgScalar

DEFAULT_CAP = 10_000

_ZERO = AlgScalar()
_ONE = AlgScalar(1)


@dataclass(frozen=True, slots=True)
class UnitQuaternion:
    """w + x i + y j + z k with w^2 + x^2 + y^2 + z^2 == 1."""

    w: AlgScalar
    x: AlgScalar = _ZERO
    y: AlgScalar = _ZERO
    z: AlgScalar = _ZERO

    def __post_init__(self) -> None:
        for name in ("w", "x", "y", "z"):
            object.__setattr__(self, name, AlgScalar.of(getattr(self, name)))
        if self.norm2() != _ONE:
            raise ArgumentError(f"not a unit quaternion: {self.render()} (norm^2 = {self.norm2()})")

    @classmethod
    def _trusted(cls, w, x, y, z) -> "UnitQuaternion":
        obj = object.__new__(cls)
        object.__setattr__(obj, "w", w)
        object.__setattr__(obj, "x", x)
        object.__setattr__(obj, "y", y)
        object.__setattr__(obj, "z", z)
        return obj

    def norm2(self) -> AlgScalar:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    @property
    def real_part(self) -> AlgScalar:
        return self.w

    def __mul__(self, other: "UnitQuaternion") -> "UnitQuaternion":
        if not isinstance(other, UnitQuaternion):
            return NotImplemented
        return _qmul(self, other)

    def __neg__(self) -> "UnitQuaternion":
        return UnitQuaternion._trusted(-self.w, -self.x, -self.y, -self.z)

    def inverse(self) -> "UnitQuaternion":
        return UnitQuaternion._trusted(self.w, -self.x, -self.y, -self.z)

    def conjugate_by(self, g: "UnitQuaternion") -> "UnitQuaternion":
        """g * self * g^-1"""
        return g * self * g.inverse()

    def __pow__(self, k: int) -> "UnitQuaternion":
        base = self if k >= 0 else self.inverse()
        out = ONE
        for _ in range(abs(k)):
            out = out * base
        return out

    def order(self) -> int:
        p, k = self, 1
        while p != ONE:
            p, k = p * self, k + 1
            if k > 10_000:
                raise ArgumentError("element of infinite order")
        return k

    def sort_key(self) -> tuple:
        return (self.w.coeffs, self.x.coeffs, self.y.coeffs, self.z.coeffs)

    def __lt__(self, other: "UnitQuaternion") -> bool:
        return self.sort_key() < other.sort_key()

    def render(self) -> str:
        terms = []
        for coeff, unit in ((self.w, ""), (self.x, "i"), (self.y, "j"), (self.z, "k")):
            if coeff.is_zero():
                continue
            text = coeff.render()
            compound = " " in text
            if not unit:
                terms.append(f"({text})" if compound else text)
            elif coeff == 1:
                terms.append(unit)
            elif coeff == -1:
                terms.append("-" + unit)
            else:
                terms.append(f"({text})*{unit}" if compound else f"{text}*{unit}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    __str__ = render

    def __repr__(self) -> str:
        return f"UnitQuaternion({self.render()!r})"

    @classmethod
    def parse(cls, text: str) -> "UnitQuaternion":
        return cls(*_parse_quaternion(text))


@lru_cache(maxsize=1 << 16)
def _qmul(p: UnitQuaternion, q: UnitQuaternion) -> UnitQuaternion:
    a1, b1, c1, d1 = p.w, p.x, p.y, p.z
    a2, b2, c2, d2 = q.w, q.x, q.y, q.z
    return UnitQuaternion._trusted(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def _split_top_level(src: str) -> list[str]:
    terms, depth, cur = [], 0, ""
    for ch in src:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur and not cur.endswith(("*", "(")):
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    if cur:
        terms.append(cur)
    return terms


def _parse_quaternion(text: str) -> list[AlgScalar]:
    out = [AlgScalar() for _ in range(4)]
    src = text.replace(" ", "")
    if not src:
        raise ArgumentError("empty quaternion")
    for term in _split_top_level(src):
        sign = -1 if term.startswith("-") else 1
        body = term.lstrip("+-")
        m = re.fullmatch(r"(.*?)\*?([ijk])", body)
        slot, scalar = 0, body
        if m and not body.endswith(")"):
            slot = " ijk".index(m.group(2))
            scalar = m.group(1)
        if scalar.startswith("(") and scalar.endswith(")"):
            scalar = scalar[1:-1]
        value = AlgScalar.parse(scalar) if scalar else AlgScalar(1)
        out[slot] = out[slot] + (value if sign > 0 else -value)
    return out


def quat(w=0, x=0, y=0, z=0) -> UnitQuaternion:
    return UnitQuaternion(AlgScalar.of(w), AlgScalar.of(x), AlgScalar.of(y), AlgScalar.of(z))


ONE = quat(1)
I = quat(0, 1)
J = quat(0, 0, 1)
K = quat(0, 0, 0, 1)

_H = Fraction(1, 2)
S_2T = quat(_H, _H, _H, _H)  # (1+i)(1+j)/2
T_2T = quat(_H, _H, _H, -_H)  # (1+j)(1+i)/2
T_2O = UnitQuaternion(INV_SQRT2, INV_SQRT2)  # (1+i)/sqrt2 = e^{i pi/4}
T_2I = UnitQuaternion(PHI * _H, PHI_INV * _H, AlgScalar(_H))  # (phi + phi^-1 i + j)/2
PSI_T_2I = UnitQuaternion(-PHI_INV * _H, -PHI * _H, _ZERO, AlgScalar(_H))


class FiniteQuatGroup:
    """A finite subgroup of SU(2); index 0 is always the identity."""

    def __init__(self, elements: Iterable[UnitQuaternion], label: str | None = None):
        elems = set(elements)
        if ONE not in elems:
            raise ArgumentError("group must contain 1")
        rest = sorted(elems - {ONE}, key=UnitQuaternion.sort_key)
        self.elements: tuple[UnitQuaternion, ...] = (ONE, *rest)
        self.label = label
        self.index: dict[UnitQuaternion, int] = {q: i for i, q in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, q) -> bool:
        return q in self.index

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteQuatGroup) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"FiniteQuatGroup(label={self.label!r}, order={self.order})"

    @cached_property
    def element_set(self) -> frozenset[UnitQuaternion]:
        return frozenset(self.elements)

    @cached_property
    def coords(self) -> np.ndarray:
        return np.array([[float(c) for c in (q.w, q.x, q.y, q.z)] for q in self.elements])

    @cached_property
    def table(self) -> np.ndarray:
        # Products are computed in floating point and matched back to the
        # nearest element; elements of a finite group are far apart compared
        # with rounding error, and a miss means the set is not closed.
        v = self.coords
        w1, x1, y1, z1 = (v[:, None, c] for c in range(4))
        w2, x2, y2, z2 = (v[None, :, c] for c in range(4))
        prod = np.stack([
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        ], axis=-1).reshape(-1, 4)
        # nearest element by maximal inner product (all vectors are unit)
        dots = prod @ v.T
        idx = np.argmax(dots, axis=1)
        if np.any(dots[np.arange(len(idx)), idx] < 1 - 1e-9):
            raise ArgumentError("element set is not closed under multiplication")
        return idx.reshape(len(v), len(v)).astype(np.int32)

    @cached_property
    def inverses(self) -> np.ndarray:
        return _kernels.inverse_indices(self.table)

    def is_subgroup_of(self, other: "FiniteQuatGroup") -> bool:
        return self.element_set <= other.element_set

    def is_normal_in(self, other: "FiniteQuatGroup") -> bool:
        if not self.is_subgroup_of(other):
            return False
        mine = self.element_set
        return all(h.conjugate_by(g) in mine for g in other for h in self)

    def conjugated(self, g: UnitQuaternion) -> "FiniteQuatGroup":
        return FiniteQuatGroup((q.conjugate_by(g) for q in self), self.label)

    def real_parts(self) -> Counter:
        return Counter(q.w for q in self.elements)


def generate(generators: Sequence[UnitQuaternion], cap: int = DEFAULT_CAP, label: str | None = None) -> FiniteQuatGroup:
    """Multiplicative closure of ``generators``."""
    gens = []
    for g in generators:
        if not isinstance(g, UnitQuaternion):
            raise ArgumentError(f"not a quaternion: {g!r}")
        if g.norm2() != _ONE:
            raise ArgumentError(f"generator {g} is not a unit quaternion")
        gens.append(g)
    seen = {ONE}
    frontier = [ONE]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in seen:
                    seen.add(q)
                    if len(seen) > cap:
                        raise SizeLimitError(f"closure exceeds cap {cap}")
                    nxt.append(q)
        frontier = nxt
    return FiniteQuatGroup(seen, label)


# -- the ADE list -------------------------------------------------------------

def _cyclic_generator(n: int) -> UnitQuaternion:
    # an element of order n whose coordinates lie in Q(sqrt2, sqrt5); only the
    # real part cos(2 pi/n) matters for conjugacy in SU(2)
    table = {
        1: ONE,
        2: -ONE,
        4: I,
        8: T_2O,
        6: S_2T,
        3: S_2T * S_2T,
        10: T_2I,
        5: T_2I * T_2I,
    }
    if n not in table:
        raise ArgumentError(f"Z_{n} is not realisable with coordinates in Q(sqrt2, sqrt5); supported n: {sorted(table)}")
    return table[n]


def _binary_dihedral_generators(n: int) -> tuple[UnitQuaternion, UnitQuaternion]:
    # 2D_{2n}: an element of order 2n plus a unit imaginary orthogonal to its axis
    table = {
        2: (I, J),
        4: (T_2O, J),
        3: (S_2T, UnitQuaternion(_ZERO, INV_SQRT2, -INV_SQRT2)),
        5: (T_2I, K),
    }
    if n not in table:
        raise ArgumentError(f"2D_{2 * n} is not realisable with coordinates in Q(sqrt2, sqrt5); supported 2n: {sorted(2 * k for k in table)}")
    return table[n]


_LABEL_RE = re.compile(r"(?:(Z)_?(\d+)|(2D)_?(\d+)|(2T|2O|2I))")


@lru_cache(maxsize=None)
def ade_group(label: str) -> FiniteQuatGroup:
    """Standard copy of Z_n, 2D_{2n} (order 4n), 2T, 2O or 2I.

    Labels: ``Z4``/``Z_4``, ``2D4``/``2D_4`` (binary dihedral of order 8),
    ``2T``, ``2O``, ``2I``.
    """
    m = _LABEL_RE.fullmatch(label.strip().replace("{", "").replace("}", ""))
    if not m:
        raise ArgumentError(f"unknown ADE label {label!r}")
    if m.group(1):
        n = int(m.group(2))
        g = generate([_cyclic_generator(n)], label=f"Z{n}")
        expected = n
    elif m.group(3):
        two_n = int(m.group(4))
        if two_n % 2 or two_n < 4:
            raise ArgumentError("binary dihedral label needs an even index >= 4")
        g = generate(_binary_dihedral_generators(two_n // 2), label=f"2D{two_n}")
        expected = 2 * two_n
    else:
        name = m.group(5)
        gens = {"2T": (S_2T, T_2T), "2O": (S_2T, T_2O), "2I": (S_2T, T_2I)}[name]
        g = generate(gens, label=name)
        expected = {"2T": 24, "2O": 48, "2I": 120}[name]
    if g.order != expected:  # pragma: no cover - guards the generator tables
        raise AssertionError(f"{label}: generated order {g.order}, expected {expected}")
    return g


# -- conjugacy classes --------------------------------------------------------

@dataclass(frozen=True)
class ConjugacyClass:
    representative: UnitQuaternion
    size: int
    real_part: AlgScalar
    members: frozenset[UnitQuaternion]


def conjugacy_classes(group: FiniteQuatGroup) -> list[ConjugacyClass]:
    """Internal classes, each represented by its smallest element; identity first."""
    labels = _kernels.class_labels(group.table, group.inverses)
    buckets: dict[int, list[UnitQuaternion]] = {}
    for idx, lab in enumerate(labels):
        buckets.setdefault(int(lab), []).append(group.elements[idx])
    out = []
    for members in buckets.values():
        rep = members[0]  # elements are pre-sorted, identity first
        out.append(ConjugacyClass(rep, len(members), rep.w, frozenset(members)))
    return out


def class_of(group: FiniteQuatGroup, x: UnitQuaternion) -> ConjugacyClass:
    for c in conjugacy_classes(group):
        if x in c.members:
            return c
    raise ArgumentError(f"{x} is not in {group.label or 'the group'}")


def su2_almost_conjugate(g1: FiniteQuatGroup, g2: FiniteQuatGroup) -> bool:
    """Equal multisets of real parts, i.e. a class-preserving bijection in SU(2)."""
    return g1.real_parts() == g2.real_parts()


# -- named automorphisms ------------------------------------------------------

def extend_homomorphism(group: FiniteQuatGroup, gens: Sequence[UnitQuaternion],
                        images: Sequence[UnitQuaternion]) -> dict[UnitQuaternion, UnitQuaternion]:
    """Extend a generator assignment multiplicatively and check it is well defined."""
    image = {ONE: ONE}
    frontier = [ONE]
    while frontier:
        nxt = []
        for p in frontier:
            for g, h in zip(gens, images):
                q = p * g
                if q not in image:
                    image[q] = image[p] * h
                    nxt.append(q)
        frontier = nxt
    if len(image) != group.order:
        raise ArgumentError("generators do not generate the group")
    for p in group:
        for q in group:
            if image[p * q] != image[p] * image[q]:
                raise ArgumentError("generator images do not define a homomorphism")
    return image


OUTER_GENERATORS = {
    # involution fixing s and sending t to -t
    "2O": ((S_2T, T_2O), (S_2T, -T_2O)),
    # fixes s and sends t to (-phi^-1 - phi i + k)/2; its square is inner
    "2I": ((S_2T, T_2I), (S_2T, PSI_T_2I)),
}

# names used for class representatives, written as words in s and t
CLASS_NAMES = {
    "2O": {"1": (), "-1": ("s",) * 3, "s": ("s",), "t": ("t",), "s^2": ("s", "s"),
           "t^2": ("t", "t"), "t^3": ("t",) * 3, "st": ("s", "t")},
    "2I": {"1": (), "-1": ("s",) * 3, "t": ("t",), "t^2": ("t",) * 2, "t^3": ("t",) * 3,
           "t^4": ("t",) * 4, "s": ("s",), "s^4": ("s",) * 4, "st": ("s", "t")},
}


@lru_cache(maxsize=None)
def outer_automorphism(name: str) -> dict[UnitQuaternion, UnitQuaternion]:
    if name not in OUTER_GENERATORS:
        raise ArgumentError(f"no named outer automorphism for {name!r}")
    gens, images = OUTER_GENERATORS[name]
    return extend_homomorphism(ade_group(name), gens, images)


def outer_action(name: str, element: UnitQuaternion) -> UnitQuaternion:
    auto = outer_automorphism(name)
    if element not in auto:
        raise ArgumentError(f"{element} is not an element of {name}")
    return auto[element]


def named_element(name: str, word: str) -> UnitQuaternion:
    s, t = OUTER_GENERATORS[name][0]
    out = ONE
    for letter in CLASS_NAMES[name][word]:
        out = out * (s if letter == "s" else t)
    return out


@dataclass(frozen=True)
class ClassActionRow:
    source: str
    target: str
    image_real_part: AlgScalar


def class_action(name: str) -> list[ClassActionRow]:
    """For each named class C(x): the class containing the image of x, and Re(image)."""
    group = ade_group(name)
    classes = conjugacy_classes(group)
    by_member = {q: c for c in classes for q in c.members}
    named = {w: by_member[named_element(name, w)] for w in CLASS_NAMES[name]}
    rows = []
    for word in CLASS_NAMES[name]:
        x = named_element(name, word)
        img = outer_action(name, x)
        target = next(w for w, c in named.items() if img in c.members)
        rows.append(ClassActionRow(word, target, img.w))
    return rows


def coset_representative(q: UnitQuaternion) -> UnitQuaternion:
    """Representative of {q, -q}: first nonzero coordinate positive."""
    for c in (q.w, q.x, q.y, q.z):
        if not c.is_zero():
            return q if float(c) > 0 else -q
    raise AssertionError("zero quaternion")


def bo_action_on_bd4() -> dict[UnitQuaternion, tuple[UnitQuaternion, UnitQuaternion, UnitQuaternion]]:
    """Conjugation action of each coset of 2O/{+-1} on (i, j, k)."""
    out = {}
    for q in ade_group("2O"):
        rep = coset_representative(q)
        if rep in out:
            continue
        out[rep] = (I.conjugate_by(rep), J.conjugate_by(rep), K.conjugate_by(rep))
    return dict(sorted(out.items(), key=lambda kv: kv[0].sort_key()))
