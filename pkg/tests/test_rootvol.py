from fractions import Fraction
from math import pi, prod

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from isospec import rootvol as rv
from isospec.errors import ArgumentError
from isospec.exactnum import SymReal, SymVolume

coef = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polys(draw, nvars=2, max_deg=3):
    terms = {}
    for _ in range(draw(st.integers(0, 4))):
        mono = tuple(draw(st.integers(0, max_deg)) for _ in range(nvars))
        terms[mono] = draw(coef)
    return rv.RationalPoly(nvars, terms)


@given(polys(), polys(), polys())
def test_poly_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert p - p == rv.RationalPoly(2)


@given(polys(), polys())
def test_leibniz(p, q):
    assert (p * q).partial(0) == p.partial(0) * q + p * q.partial(0)


def test_render():
    p = rv.RationalPoly.linear([1, -1]) ** 2
    assert p.render() == "e1^2 - 2*e1*e2 + e2^2"
    assert p.is_homogeneous() and p.degree() == 2
    assert rv.RationalPoly.constant(2, 3).at_zero() == 3


@given(st.lists(coef, min_size=2, max_size=2), st.sampled_from([rv.SU3, rv.SP2, rv.U1_SP1]))
def test_laplacian_of_square(alpha, g):
    op = g.laplace
    sq = rv.RationalPoly.linear(alpha) ** 2
    assert op.minus_delta(sq) == rv.RationalPoly.constant(2, 2 * op.form(alpha))
    # the Gaussian average of a squared linear form is half its dual norm
    assert rv.gaussian_eval(sq, op) == op.form(alpha) / 2


def test_laplace_rejects_bad_matrix():
    with pytest.raises(ArgumentError):
        rv.LaplaceOp(((1, 2), (3, 4)))
    with pytest.raises(ArgumentError):
        rv.gaussian_eval(rv.RationalPoly.constant(3, 1), rv.SU3.laplace)


def _wick_oracle(p: rv.RationalPoly, c) -> sympy.Rational:
    # E[p(X)] for X ~ N(0, c/2), via a Cholesky factor and standard normal moments
    n = len(c)
    cov = sympy.Matrix(c) / 2
    L = cov.cholesky(hermitian=False)
    z = sympy.symbols(f"z0:{n}")
    x = L * sympy.Matrix(z)
    expr = sum(sympy.Rational(v.numerator, v.denominator) * prod(x[i] ** e for i, e in enumerate(m))
               for m, v in p.terms.items())
    poly = sympy.Poly(sympy.expand(expr), *z)
    total = 0
    for monom, cf in poly.terms():
        if all(e % 2 == 0 for e in monom):
            total += cf * prod(sympy.factorial2(e - 1) for e in monom)
    return sympy.nsimplify(sympy.simplify(total))


@pytest.mark.parametrize("g", [rv.SU3, rv.SP2, rv.U1_SP1, rv.SU2_THIRD, rv.SU2_CUBED])
def test_gaussian_eval_against_wick(g):
    e = rv.gaussian_eval(rv.delta_poly(g), g.laplace)
    assert sympy.Rational(e.numerator, e.denominator) == _wick_oracle(rv.delta_poly(g), g.gram_binv)


def test_known_gaussian_constants():
    assert rv.gaussian_eval(rv.delta_poly(rv.SU3), rv.SU3.laplace) == 12
    assert rv.gaussian_eval(rv.delta_poly(rv.SP2), rv.SP2.laplace) == 192


def _product_formula(g) -> float:
    # vol(G/T) = prod over positive roots of 2 pi / b^-1(alpha, rho)
    rho = [sum(a[i] for a in g.roots) / 2 for i in range(g.rank)]
    op = g.laplace
    out = 1.0
    for a in g.roots:
        pair = sum(a[i] * op.coeffs[i][j] * rho[j] for i in range(g.rank) for j in range(g.rank))
        out *= 2 * pi / float(pair)
    return out


@pytest.mark.parametrize("g", [rv.SU3, rv.SP2, rv.U1_SP1, rv.SU2_THIRD, rv.SU2_HALF, rv.SU2_CUBED, rv.DIAG_SU2])
def test_flag_volume_against_product_formula(g):
    assert float(rv.vol_flag_quotient(g)) == pytest.approx(_product_formula(g), rel=1e-12)


@pytest.mark.parametrize("g", [rv.SU3, rv.SP2, rv.U1_SP1, rv.SU2_THIRD, rv.SU2_HALF, rv.SU2_CUBED, rv.DIAG_SU2])
def test_group_volume_factorises(g):
    assert rv.vol_group(g) == rv.vol_flag_quotient(g) * rv.vol_torus(g)


def test_su3_gram_data():
    # B = -(1/2) tr restricted to diag(iX1, iX2, -i(X1+X2))
    x1, x2 = sympy.symbols("x1 x2")
    form = sympy.Rational(1, 2) * (x1 ** 2 + x2 ** 2 + (x1 + x2) ** 2)
    b = sympy.hessian(form, (x1, x2)) / 2
    assert b.inv() == sympy.Matrix(rv.SU3.gram_binv).applyfunc(lambda v: sympy.Rational(v.numerator, v.denominator))
    # the integer lattice {X in Z^3, sum X = 0} has basis e1, e2 in these coordinates
    assert 1 / b.det() == sympy.Rational(4, 3) == rv.SU3.lattice_gram_det


def test_round_three_sphere():
    assert rv.vol_group(rv.SU2_HALF) == SymVolume.of(2, 1, 2)
    assert rv.vol_torus(rv.torus(1)) == SymVolume.of(2, 1, 1)


def test_volumes():
    assert rv.vol_group(rv.SU3) == SymVolume.of(1, 3, 5)
    assert rv.vol_group(rv.SP2) == SymVolume.of(Fraction(1, 12), 1, 6)
    assert rv.space_volume("F12").value == SymVolume.of(Fraction(1, 2), 1, 3)
    assert rv.space_volume("S3xS3").value.render_fraction() == "32*pi^4/(81*sqrt(3))"
    assert float(rv.space_volume("CP3").value) == pytest.approx(pi ** 3 / 12)


def test_s6_is_quoted():
    s = rv.space_volume("S6")
    assert not s.derived and s.quoted == "16*pi^3/15"
    with pytest.raises(ArgumentError):
        rv.space_volume("G2")


def test_datum_validation():
    # two roots per complex root space: 2 * #roots = dim - rank
    with pytest.raises(ArgumentError):
        rv.GroupDatum("bad", 1, 4, 2, ((Fraction(2),),), ((Fraction(1),),), Fraction(1))
    with pytest.raises(ArgumentError):
        rv.GroupDatum("bad", 2, 4, 2, ((Fraction(2),),), ((Fraction(1),),), Fraction(1))


@settings(max_examples=30)
@given(st.fractions(min_value=Fraction(1, 5), max_value=20, max_denominator=6))
def test_heat_invariants(kappa):
    v = rv.space_volume("F12").value
    a0, a1 = rv.heat_invariants(v, kappa)
    assert a0 == v
    assert a1 == v * SymReal(kappa / 6)
    # rescaling the metric by s scales kappa by 1/s and a0 by s^3
    s = Fraction(2)
    b0, b1 = rv.heat_invariants(v.rescaled(s, 6), kappa / s)
    assert b0 == a0 * SymReal(8) and b1 == a1 * SymReal(4)


@pytest.mark.parametrize("k", range(7))
@pytest.mark.parametrize("c", [Fraction(1), Fraction(3, 2), Fraction(1, 2), Fraction(7, 3)])
def test_rank_one_closed_form(k, c):
    from math import factorial

    p = rv.RationalPoly(1, {(2 * k,): 1})
    op = rv.LaplaceOp(((c,),))
    assert rv.gaussian_eval(p, op) == Fraction(factorial(2 * k)) * c ** k / (4 ** k * factorial(k))
    # odd moments vanish
    assert rv.gaussian_eval(rv.RationalPoly(1, {(2 * k + 1,): 1}), op) == 0
