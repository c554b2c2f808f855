"""Volumes of compact Lie groups and their homogeneous spaces from root data.

For a compact group G with an Ad-invariant inner product B, rank r and Weyl
group W,

    vol(G) = 2^r |W| pi^((r + dim G)/2) / (sqrt(det) * E),

where det is the Gram determinant of the dual inner product on a basis of
the dual of the integral lattice of the torus, delta is the product of the
squared positive roots, and E = exp(-Delta/4) delta at 0.  Here -Delta is the
constant-coefficient operator sum c[mu][nu] d_mu d_nu with c the dual Gram
matrix in root coordinates, so for delta homogeneous of degree 2k only one
term survives: E = D^k delta / (4^k k!).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence

from .errors import ArgumentError, UnsupportedFormError
from .exactnum import SymReal, SymVolume

Monomial = tuple[int, ...]


class RationalPoly:
    """Sparse polynomial in r variables with Fraction coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction | int] | None = None):
        self.nvars = nvars
        self.terms: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            if len(mono) != nvars:
                raise ArgumentError("monomial has the wrong number of variables")
            c = Fraction(c)
            if c:
                self.terms[tuple(mono)] = self.terms.get(tuple(mono), Fraction(0)) + c
        self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def constant(cls, nvars: int, c: Fraction | int) -> "RationalPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def linear(cls, coeffs: Sequence[Fraction | int]) -> "RationalPoly":
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return RationalPoly(self.nvars, out)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __mul__(self, other) -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            return RationalPoly(self.nvars, {k: v * Fraction(other) for k, v in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return RationalPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalPoly":
        out = RationalPoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self) -> str:
        return f"RationalPoly({self.render()!r})"

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(k) for k in self.terms}) <= 1

    def at_zero(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def partial(self, i: int) -> "RationalPoly":
        out = {}
        for k, v in self.terms.items():
            if k[i]:
                kk = list(k)
                kk[i] -= 1
                out[tuple(kk)] = v * k[i]
        return RationalPoly(self.nvars, out)

    def render(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"e{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, k) if e)
            coef = str(abs(c))
            body = coef if not mono else mono if abs(c) == 1 else f"{coef}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True)
class LaplaceOp:
    """-Delta = sum_{mu,nu} c[mu][nu] d_mu d_nu."""

    coeffs: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        c = tuple(tuple(Fraction(x) for x in row) for row in self.coeffs)
        n = len(c)
        if any(len(row) != n for row in c):
            raise ArgumentError("coefficient matrix must be square")
        if any(c[i][j] != c[j][i] for i in range(n) for j in range(n)):
            raise ArgumentError("coefficient matrix must be symmetric")
        object.__setattr__(self, "coeffs", c)

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def minus_delta(self, p: RationalPoly) -> RationalPoly:
        out = RationalPoly(p.nvars)
        for i, row in enumerate(self.coeffs):
            di = p.partial(i)
            for j, c in enumerate(row):
                if c:
                    out = out + di.partial(j) * c
        return out

    def apply(self, p: RationalPoly) -> RationalPoly:
        """Delta p."""
        return -self.minus_delta(p)

    def form(self, alpha: Sequence[Fraction | int]) -> Fraction:
        """The dual inner product of a linear form with itself."""
        return sum((Fraction(a) * c * Fraction(b) for a, row in zip(alpha, self.coeffs)
                    for b, c in zip(alpha, row)), Fraction(0))


def gaussian_eval(p: RationalPoly, op: LaplaceOp) -> Fraction:
    """exp(-Delta/4) p at 0, i.e. sum_k (-1/4)^k (Delta^k p)(0) / k!."""
    if p.nvars != op.nvars:
        raise ArgumentError("polynomial and operator have different numbers of variables")
    total = Fraction(0)
    term = p
    for k in range(p.degree() // 2 + 1):
        total += term.at_zero() / (4 ** k * factorial(k))
        term = op.minus_delta(term)
    return total


@dataclass(frozen=True)
class GroupDatum:
    """Static data for a compact group with a fixed invariant inner product.

    ``roots`` are the positive roots as real linear forms in root
    coordinates; ``gram_binv`` is the dual inner product in the same
    coordinates; ``lattice_gram_det`` is the dual Gram determinant on a basis
    of the dual of the torus lattice ker(exp)/(2 pi).
    """

    name: str
    rank: int
    dim: int
    weyl_order: int
    roots: tuple[tuple[Fraction, ...], ...]
    gram_binv: tuple[tuple[Fraction, ...], ...]
    lattice_gram_det: Fraction
    metric: str = ""

    def __post_init__(self):
        if 2 * len(self.roots) != self.dim - self.rank:
            raise ArgumentError(f"{self.name}: {2 * len(self.roots)} roots for dim - rank = {self.dim - self.rank}")
        if any(len(a) != self.rank for a in self.roots) or len(self.gram_binv) != self.rank:
            raise ArgumentError(f"{self.name}: coordinate length mismatch")

    @property
    def laplace(self) -> LaplaceOp:
        return LaplaceOp(self.gram_binv)


def _fr(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def delta_poly(g: GroupDatum) -> RationalPoly:
    """Product of the squared positive roots."""
    out = RationalPoly.constant(g.rank, 1)
    for a in g.roots:
        lin = RationalPoly.linear(a)
        out = out * lin * lin
    return out


def _pi_power(num: int, what: str) -> int:
    if num % 2:
        raise UnsupportedFormError(f"{what}: half-integer power of pi")
    return num // 2


def vol_flag_quotient(g: GroupDatum) -> SymVolume:
    """vol(G/T) = |W| pi^((dim - r)/2) / E."""
    e = gaussian_eval(delta_poly(g), g.laplace)
    return SymVolume(SymReal(Fraction(g.weyl_order) / e), _pi_power(g.dim - g.rank, g.name))


def vol_torus(g: GroupDatum) -> SymVolume:
    """(2 pi)^r / sqrt(det)."""
    return SymVolume(SymReal(2 ** g.rank) / SymReal.sqrt_of(g.lattice_gram_det), g.rank)


def vol_group(g: GroupDatum) -> SymVolume:
    e = gaussian_eval(delta_poly(g), g.laplace)
    coeff = SymReal(Fraction(2 ** g.rank * g.weyl_order) / e) / SymReal.sqrt_of(g.lattice_gram_det)
    return SymVolume(coeff, _pi_power(g.rank + g.dim, g.name))


def vol_homogeneous(g: GroupDatum, k: GroupDatum | None) -> SymVolume:
    """vol(G/K) = vol(G) / vol(K); ``None`` stands for the trivial subgroup."""
    if k is None:
        return vol_group(g)
    return vol_group(g) / vol_group(k)


def heat_invariants(vol: SymVolume, kappa: Fraction | int) -> tuple[SymVolume, SymVolume]:
    """(a0, a1) = (vol, vol * kappa / 6) for constant scalar curvature kappa."""
    return vol, vol * SymReal(Fraction(kappa) / 6)


# -- shipped data -------------------------------------------------------------

_T = Fraction(1, 3)

# B = -(1/2) tr on su(3); coordinates e1, e2 with e_j(diag(iX)) = X_j
SU3 = GroupDatum(
    name="SU(3)", rank=2, dim=8, weyl_order=6,
    roots=_fr([(1, -1), (2, 1), (1, 2)]),
    gram_binv=_fr([(2 * (1 - _T), -2 * _T), (-2 * _T, 2 * (1 - _T))]),
    lattice_gram_det=Fraction(4, 3),
    metric="-(1/2) tr",
)

# B = -(1/2) Re tr on sp(2); coordinates theta1, theta2
SP2 = GroupDatum(
    name="Sp(2)", rank=2, dim=10, weyl_order=8,
    roots=_fr([(2, 0), (0, 2), (1, 1), (1, -1)]),
    gram_binv=_fr([(2, 0), (0, 2)]),
    lattice_gram_det=Fraction(4),
    metric="-(1/2) Re tr",
)

# U(1) x Sp(1) in Sp(2), same torus and restricted metric
U1_SP1 = GroupDatum(
    name="U(1)xSp(1)", rank=2, dim=4, weyl_order=2,
    roots=_fr([(0, 2)]),
    gram_binv=_fr([(2, 0), (0, 2)]),
    lattice_gram_det=Fraction(4),
    metric="-(1/2) Re tr, restricted",
)

# one SU(2) factor with B = -(1/3) tr: B(H, H) = 2/3 for H = diag(i, -i)
SU2_THIRD = GroupDatum(
    name="SU(2)", rank=1, dim=3, weyl_order=2,
    roots=_fr([(2,)]),
    gram_binv=_fr([(Fraction(3, 2),)]),
    lattice_gram_det=Fraction(3, 2),
    metric="-(1/3) tr",
)

# SU(2) with B = -(1/2) tr, the round unit 3-sphere
SU2_HALF = GroupDatum(
    name="SU(2)", rank=1, dim=3, weyl_order=2,
    roots=_fr([(2,)]),
    gram_binv=_fr([(1,)]),
    lattice_gram_det=Fraction(1),
    metric="-(1/2) tr",
)

SU2_CUBED = GroupDatum(
    name="SU(2)^3", rank=3, dim=9, weyl_order=8,
    roots=_fr([(2, 0, 0), (0, 2, 0), (0, 0, 2)]),
    gram_binv=_fr([(Fraction(3, 2), 0, 0), (0, Fraction(3, 2), 0), (0, 0, Fraction(3, 2))]),
    lattice_gram_det=Fraction(27, 8),
    metric="-(1/3) tr on each factor",
)

# diagonal SU(2) in SU(2)^3: B(dH, dH) = 2, dual form 1/2
DIAG_SU2 = GroupDatum(
    name="Delta(SU(2))", rank=1, dim=3, weyl_order=2,
    roots=_fr([(2,)]),
    gram_binv=_fr([(Fraction(1, 2),)]),
    lattice_gram_det=Fraction(1, 2),
    metric="-(1/3) tr on each factor, restricted",
)


def torus(rank: int, gram_binv: Sequence[Sequence[Fraction | int]] | None = None,
          lattice_gram_det: Fraction | int = 1) -> GroupDatum:
    gram = gram_binv or [[int(i == j) for j in range(rank)] for i in range(rank)]
    return GroupDatum(name=f"T^{rank}", rank=rank, dim=rank, weyl_order=1, roots=(),
                      gram_binv=_fr(gram), lattice_gram_det=Fraction(lattice_gram_det))


GROUPS: dict[str, GroupDatum] = {
    "SU3": SU3, "Sp2": SP2, "U1xSp1": U1_SP1, "SU2": SU2_THIRD,
    "SU2cubed": SU2_CUBED, "DeltaSU2": DIAG_SU2,
}


@dataclass(frozen=True)
class SpaceVolume:
    key: str
    description: str
    value: SymVolume | None
    quoted: str | None = None
    dim: int = 6

    @property
    def derived(self) -> bool:
        return self.value is not None


def space_volume(key: str) -> SpaceVolume:
    """Volume of a named space; S6 is quoted, never derived."""
    if key == "F12":
        return SpaceVolume(key, "F(1,2) = SU(3)/T, B = -(1/2) tr", vol_flag_quotient(SU3))
    if key == "CP3":
        return SpaceVolume(key, "CP^3 = Sp(2)/(U(1)xSp(1)), B = -(1/2) Re tr", vol_homogeneous(SP2, U1_SP1))
    if key == "S3xS3":
        return SpaceVolume(key, "S^3xS^3 = SU(2)^3/Delta(SU(2)), B = -(1/3) tr", vol_homogeneous(SU2_CUBED, DIAG_SU2))
    if key == "SU3":
        return SpaceVolume(key, "SU(3), B = -(1/2) tr", vol_group(SU3), dim=8)
    if key == "Sp2":
        return SpaceVolume(key, "Sp(2), B = -(1/2) Re tr", vol_group(SP2), dim=10)
    if key == "SU2cubed":
        return SpaceVolume(key, "SU(2)^3, B = -(1/3) tr", vol_group(SU2_CUBED), dim=9)
    if key == "S6":
        return SpaceVolume(key, "S^6 = G2/SU(3); quoted, not derived", None, quoted="16*pi^3/15")
    raise ArgumentError(f"unknown space {key!r}; choose from {', '.join(SPACES)}")


SPACES = ("S6", "CP3", "S3xS3", "F12", "SU3", "Sp2", "SU2cubed")

# the nearly Kaehler table at scalar curvature kappa, as (30/kappa)^3 * base
NEARLY_KAEHLER_TABLE = {
    "S6": "16*pi^3/15",
    "CP3": "pi^3/6",
    "S3xS3": "8*pi^4/(81*sqrt(3))",
    "F12": "pi^3/2",
}
