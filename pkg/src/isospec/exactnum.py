"""Exact scalars: the field Q(sqrt2, sqrt5) and symbolic values q*sqrt(d)*pi**a.

Rationals are :class:`fractions.Fraction` throughout.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ArgumentError, UnsupportedFormError

Rational = Fraction
Number = Union[int, Fraction]

_BASIS = ("1", "sqrt(2)", "sqrt(5)", "sqrt(10)")

# product of basis elements e_i * e_j = coeff * e_k, basis (1, r2, r5, r10)
_MUL = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 1): (2, 0), (1, 2): (1, 3), (1, 3): (2, 2),
    (2, 2): (5, 0), (2, 3): (5, 1),
    (3, 3): (10, 0),
}


def _frac(v: Number) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise ArgumentError(f"expected an exact rational, got {type(v).__name__}")


def render_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, slots=True)
class AlgScalar:
    """a + b*sqrt2 + c*sqrt5 + d*sqrt10 with rational coefficients."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _frac(getattr(self, name)))

    @classmethod
    def of(cls, value: "AlgScalar | Number") -> "AlgScalar":
        return value if isinstance(value, AlgScalar) else cls(_frac(value))

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def __add__(self, other):
        o = AlgScalar.of(other)
        return AlgScalar(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return AlgScalar(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        return self + (-AlgScalar.of(other))

    def __rsub__(self, other):
        return AlgScalar.of(other) - self

    def __mul__(self, other):
        o = AlgScalar.of(other)
        x, y = self.coeffs, o.coeffs
        out = [Fraction(0)] * 4
        for i in range(4):
            if not x[i]:
                continue
            for j in range(4):
                if not y[j]:
                    continue
                k, slot = _MUL[(i, j) if i <= j else (j, i)]
                out[slot] += k * x[i] * y[j]
        return AlgScalar(*out)

    __rmul__ = __mul__

    def _mul_matrix(self) -> list[list[Fraction]]:
        # column j = coefficients of self * e_j
        cols = []
        for j in range(4):
            e = [Fraction(0)] * 4
            e[j] = Fraction(1)
            cols.append((self * AlgScalar(*e)).coeffs)
        return [[cols[j][i] for j in range(4)] for i in range(4)]

    def inverse(self) -> "AlgScalar":
        """Solve (mult-by-self) * v = 1 over Q by Gauss-Jordan elimination."""
        if self.is_zero():
            raise ZeroDivisionError("AlgScalar division by zero")
        m = self._mul_matrix()
        aug = [row + [Fraction(int(i == 0))] for i, row in enumerate(m)]
        for col in range(4):
            piv = next(r for r in range(col, 4) if aug[r][col])
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [v / p for v in aug[col]]
            for r in range(4):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
        return AlgScalar(*(aug[i][4] for i in range(4)))

    def __truediv__(self, other):
        return self * AlgScalar.of(other).inverse()

    def __rtruediv__(self, other):
        return AlgScalar.of(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = AlgScalar(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgScalar(other)
        if not isinstance(other, AlgScalar):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.a)
        return hash(self.coeffs)

    def sort_key(self) -> tuple:
        return self.coeffs

    def __float__(self) -> float:
        # display and sanity checks only; never used in the exact core
        return float(self.a) + float(self.b) * 2 ** 0.5 + float(self.c) * 5 ** 0.5 + float(self.d) * 10 ** 0.5

    def render(self) -> str:
        terms = []
        for coeff, base in zip(self.coeffs, _BASIS):
            if not coeff:
                continue
            if base == "1":
                terms.append(render_rational(coeff))
            elif coeff == 1:
                terms.append(base)
            elif coeff == -1:
                terms.append("-" + base)
            else:
                terms.append(f"{render_rational(coeff)}*{base}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    __str__ = render

    def __repr__(self) -> str:
        return f"AlgScalar({self.render()!r})"

    @classmethod
    def parse(cls, text: str) -> "AlgScalar":
        src = text.replace(" ", "")
        if not src:
            raise ArgumentError("empty scalar")
        out = [Fraction(0)] * 4
        for sign, body in re.findall(r"([+-]?)([^+-]+)", src):
            m = re.fullmatch(r"(?:(\d+(?:/\d+)?)\*?)?(?:sqrt\((\d+)\))?", body)
            if not m or not (m.group(1) or m.group(2)):
                raise ArgumentError(f"cannot parse scalar {text!r}")
            coeff = Fraction(m.group(1)) if m.group(1) else Fraction(1)
            rad = m.group(2) or "1"
            if rad not in ("1", "2", "5", "10"):
                raise ArgumentError(f"radicand {rad} outside Q(sqrt2, sqrt5)")
            out[("1", "2", "5", "10").index(rad)] += -coeff if sign == "-" else coeff
        return cls(*out)


SQRT2 = AlgScalar(0, 1)
SQRT5 = AlgScalar(0, 0, 1)
INV_SQRT2 = AlgScalar(0, Fraction(1, 2))
PHI = AlgScalar(Fraction(1, 2), 0, Fraction(1, 2))
PHI_INV = AlgScalar(Fraction(-1, 2), 0, Fraction(1, 2))


def alg_mul(x: AlgScalar, y: AlgScalar) -> AlgScalar:
    return x * y


# -- q * sqrt(d) * pi**a ------------------------------------------------------

def squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, d) with n == s*s*d and d squarefree."""
    if n <= 0:
        raise ArgumentError("radicand must be positive")
    s, d, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        if n % p == 0:
            n //= p
            d *= p
        p += 1
    return s, d * n


@dataclass(frozen=True, slots=True)
class SymReal:
    """q * sqrt(d), d squarefree positive."""

    q: Fraction
    d: int = 1

    def __post_init__(self) -> None:
        q = _frac(self.q)
        s, d = squarefree_split(int(self.d))
        if q == 0:
            d, s = 1, 1
        object.__setattr__(self, "q", q * s)
        object.__setattr__(self, "d", d)

    @classmethod
    def sqrt_of(cls, x: Number) -> "SymReal":
        """Positive square root of a non-negative rational."""
        x = _frac(x)
        if x < 0:
            raise ArgumentError("square root of a negative rational")
        if x == 0:
            return cls(0)
        # sqrt(p/q) = sqrt(p q) / q
        return cls(Fraction(1, x.denominator), x.numerator * x.denominator)

    def __mul__(self, other):
        o = other if isinstance(other, SymReal) else SymReal(_frac(other))
        return SymReal(self.q * o.q, self.d * o.d)

    __rmul__ = __mul__

    def inverse(self) -> "SymReal":
        if self.q == 0:
            raise ZeroDivisionError("SymReal division by zero")
        # 1/(q sqrt d) = sqrt(d) / (q d)
        return SymReal(1 / (self.q * self.d), self.d)

    def __truediv__(self, other):
        o = other if isinstance(other, SymReal) else SymReal(_frac(other))
        return self * o.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = SymReal(1)
        for _ in range(k):
            out = out * self
        return out

    def __neg__(self):
        return SymReal(-self.q, self.d)

    def is_rational(self) -> bool:
        return self.d == 1

    def __float__(self) -> float:
        return float(self.q) * self.d ** 0.5

    def render(self) -> str:
        return SymVolume(self, 0).render()

    __str__ = render


def symreal_mul(x: SymReal, y: SymReal) -> SymReal:
    return x * y


_SYM_RE = re.compile(
    r"(?P<q>-?\d+(?:/\d+)?)?"
    r"(?:\*?pi(?:\^(?P<a>\d+))?)?"
    r"(?:\*?sqrt\((?P<d>\d+)\))?"
)


@dataclass(frozen=True, slots=True)
class SymVolume:
    """r * pi**a with r a :class:`SymReal`."""

    r: SymReal
    a: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.r, SymReal):
            object.__setattr__(self, "r", SymReal(_frac(self.r)))
        if self.a < 0:
            raise UnsupportedFormError("negative pi exponent")
        if self.r.q == 0:
            object.__setattr__(self, "a", 0)

    @classmethod
    def of(cls, q: Number, d: int = 1, a: int = 0) -> "SymVolume":
        return cls(SymReal(_frac(q), d), a)

    def __mul__(self, other):
        if isinstance(other, SymVolume):
            return SymVolume(self.r * other.r, self.a + other.a)
        return SymVolume(self.r * other, self.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SymVolume):
            if other.a > self.a:
                raise UnsupportedFormError("quotient has a negative power of pi")
            return SymVolume(self.r / other.r, self.a - other.a)
        return SymVolume(self.r / other, self.a)

    def __pow__(self, k: int):
        if k < 0:
            raise UnsupportedFormError("negative power of a pi-valued quantity")
        return SymVolume(self.r ** k, self.a * k)

    def rescaled(self, s: Number, dim: int) -> "SymVolume":
        """Volume after multiplying the metric by ``s`` on a ``dim``-manifold."""
        if dim % 2:
            raise UnsupportedFormError("odd dimension gives a half-integer power of s")
        return SymVolume(self.r * SymReal(_frac(s) ** (dim // 2)), self.a)

    def __float__(self) -> float:
        import math

        return float(self.r) * math.pi ** self.a

    def render(self) -> str:
        q, d, a = self.r.q, self.r.d, self.a
        if q == 0:
            return "0"
        factors = []
        if a:
            factors.append("pi" if a == 1 else f"pi^{a}")
        if d != 1:
            factors.append(f"sqrt({d})")
        if not factors:
            return render_rational(q)
        head = "" if q == 1 else "-" if q == -1 else render_rational(q) + "*"
        return head + "*".join(factors)

    __str__ = render

    def render_fraction(self) -> str:
        """Denominator form, e.g. 32*pi^4/(81*sqrt(3)) or pi^3/12."""
        q, d = self.r.q, self.r.d
        # q sqrt d = (q d) / sqrt d
        num = q * d if d != 1 else q
        if num == 0:
            return "0"
        pi = "" if not self.a else ("pi" if self.a == 1 else f"pi^{self.a}")
        n = abs(num.numerator)
        head = pi if n == 1 and pi else f"{n}*{pi}" if pi else str(n)
        sign = "-" if num < 0 else ""
        den = [str(num.denominator)] if num.denominator != 1 else []
        if d != 1:
            den.append(f"sqrt({d})")
        if not den:
            return sign + head
        return f"{sign}{head}/{den[0]}" if len(den) == 1 else f"{sign}{head}/({'*'.join(den)})"

    @classmethod
    def parse(cls, text: str) -> "SymVolume":
        src = text.replace(" ", "")
        neg = False
        if src.startswith("-") and not re.match(r"-\d", src):
            neg, src = True, src[1:]
        m = _SYM_RE.fullmatch(src)
        if not src or not m:
            raise ArgumentError(f"cannot parse symbolic value {text!r}")
        q = Fraction(m.group("q")) if m.group("q") else Fraction(1)
        a = 0
        if "pi" in src:
            a = int(m.group("a") or 1)
        d = int(m.group("d") or 1)
        if d != squarefree_split(d)[1]:
            raise ArgumentError(f"radicand {d} is not squarefree")
        return cls(SymReal(-q if neg else q, d), a)
