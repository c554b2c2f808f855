from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from isospec import quatgroups as qg
from isospec.errors import ArgumentError, SizeLimitError
from isospec.exactnum import AlgScalar

ORDERS = {"Z1": 1, "Z2": 2, "Z3": 3, "Z4": 4, "Z5": 5, "Z6": 6, "Z8": 8, "Z10": 10,
          "2D4": 8, "2D6": 12, "2D8": 16, "2D10": 20, "2T": 24, "2O": 48, "2I": 120}

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def rational_units(draw):
    # inverse stereographic projection gives unit quaternions with rational coordinates
    a, b, c = draw(rationals), draw(rationals), draw(rationals)
    s = a * a + b * b + c * c
    return qg.quat((1 - s) / (1 + s), 2 * a / (1 + s), 2 * b / (1 + s), 2 * c / (1 + s))


def test_quaternion_units():
    assert qg.I * qg.J == qg.K
    assert qg.J * qg.I == -qg.K
    assert qg.I * qg.I == -qg.ONE
    assert qg.S_2T.order() == 6
    assert qg.T_2O.order() == 8
    assert qg.T_2I.order() == 10
    with pytest.raises(ArgumentError):
        qg.quat(1, 1)


def test_render_parse():
    q = qg.quat(Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2))
    assert q.render() == "1/2 - 1/2*i + 1/2*j + 1/2*k"
    assert qg.UnitQuaternion.parse(q.render()) == q
    assert qg.UnitQuaternion.parse(qg.T_2I.render()) == qg.T_2I
    assert qg.ONE.render() == "1"
    assert qg.K.render() == "k"
    with pytest.raises(ArgumentError):
        qg.UnitQuaternion.parse("1 + i")


@given(rational_units(), rational_units(), rational_units())
def test_group_laws(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * p.inverse() == qg.ONE
    assert (p * q).norm2() == AlgScalar(1)
    assert qg.UnitQuaternion.parse(p.render()) == p


@given(rational_units(), rational_units())
def test_conjugation_preserves_real_part(p, g):
    assert p.conjugate_by(g).w == p.w


@pytest.mark.parametrize("label,order", sorted(ORDERS.items()))
def test_ade_orders(label, order):
    g = qg.ade_group(label)
    assert g.order == order
    assert g.elements[0] == qg.ONE
    # closure and inverses, checked exactly
    s = g.element_set
    assert all(p * q in s for p in g for q in g)
    assert all(p.inverse() in s for p in g)


def test_label_forms():
    assert qg.ade_group("Z_4") == qg.ade_group("Z4")
    assert qg.ade_group("2D_{4}") == qg.ade_group("2D4")
    for bad in ("Z7", "2D14", "2D3", "E8", ""):
        with pytest.raises(ArgumentError):
            qg.ade_group(bad)


def test_binary_tetrahedral_elements():
    half = Fraction(1, 2)
    expected = {qg.quat(*v) for v in [(1, 0, 0, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, -1, 0, 0),
                                      (0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, 0, 0, -1)]}
    expected |= {qg.quat(a * half, b * half, c * half, d * half)
                 for a in (1, -1) for b in (1, -1) for c in (1, -1) for d in (1, -1)}
    assert qg.ade_group("2T").element_set == expected
    assert qg.ade_group("2D4").element_set == {q for q in expected if q.w in (AlgScalar(0), AlgScalar(1), AlgScalar(-1))}


def _brute_classes(group):
    seen, sizes = set(), []
    for x in group:
        if x in seen:
            continue
        orbit = {x.conjugate_by(g) for g in group}
        seen |= orbit
        sizes.append(len(orbit))
    return sorted(sizes)


@pytest.mark.parametrize("label", ["2D4", "2D6", "2D8", "2D10", "2T", "2O", "2I", "Z6"])
def test_class_sizes_match_brute_force(label):
    g = qg.ade_group(label)
    classes = qg.conjugacy_classes(g)
    assert sorted(c.size for c in classes) == _brute_classes(g)
    assert classes[0].representative == qg.ONE
    for c in classes:
        assert all(m.w == c.real_part for m in c.members)
        assert c.representative == min(c.members, key=qg.UnitQuaternion.sort_key) or c.representative == qg.ONE


def test_class_counts():
    assert len(qg.conjugacy_classes(qg.ade_group("2T"))) == 7
    assert len(qg.conjugacy_classes(qg.ade_group("2O"))) == 8
    assert len(qg.conjugacy_classes(qg.ade_group("2I"))) == 9


def test_class_of():
    g = qg.ade_group("2O")
    assert qg.class_of(g, qg.I).size == 6
    with pytest.raises(ArgumentError):
        qg.class_of(qg.ade_group("2T"), qg.T_2O)


def test_su2_almost_conjugacy_separates_standard_groups():
    groups = [qg.ade_group(l) for l in ORDERS]
    for a in groups:
        for b in groups:
            assert qg.su2_almost_conjugate(a, b) == (a is b)


@settings(max_examples=20, deadline=None)
@given(rational_units(), st.sampled_from(["2D4", "2T", "Z8", "2D6"]))
def test_conjugate_group_is_almost_conjugate(g, label):
    h = qg.ade_group(label)
    c = h.conjugated(g)
    assert c.order == h.order
    assert qg.su2_almost_conjugate(h, c)


def test_self_conjugation_fixes_group():
    g = qg.ade_group("2I")
    for x in list(g)[:10]:
        assert g.conjugated(x) == g


def test_normality():
    assert qg.ade_group("2D4").is_normal_in(qg.ade_group("2T"))
    assert qg.ade_group("Z3").is_subgroup_of(qg.ade_group("2T"))
    assert not qg.ade_group("Z4").is_normal_in(qg.ade_group("2T"))


def test_generate_cap():
    with pytest.raises(SizeLimitError):
        qg.generate([qg.S_2T, qg.T_2I], cap=50)
    with pytest.raises(ArgumentError):
        qg.generate([1])


def test_table_rejects_non_group():
    with pytest.raises(ArgumentError):
        qg.FiniteQuatGroup([qg.ONE, qg.I]).table


@pytest.mark.parametrize("name", ["2O", "2I"])
def test_outer_automorphism(name):
    auto = qg.outer_automorphism(name)
    g = qg.ade_group(name)
    assert set(auto) == g.element_set and set(auto.values()) == g.element_set
    # the square is inner
    assert any(all(auto[auto[x]] == x.conjugate_by(h) for x in g) for h in g)
    assert all(auto[p * q] == auto[p] * auto[q] for p in g for q in g)
    # not inner: some class is moved
    classes = qg.conjugacy_classes(g)
    by_member = {m: c for c in classes for m in c.members}
    assert any(by_member[auto[x]] is not by_member[x] for x in g)
    with pytest.raises(ArgumentError):
        qg.outer_action(name, qg.T_2O * qg.T_2I)


def test_outer_action_rows_are_consistent():
    for name in ("2O", "2I"):
        rows = qg.class_action(name)
        assert len(rows) == len(qg.CLASS_NAMES[name])
        targets = Counter(r.target for r in rows)
        assert all(v == 1 for v in targets.values())  # the induced map on classes is a bijection
        for r in rows:
            assert qg.named_element(name, r.target).w == r.image_real_part


def test_unknown_outer():
    with pytest.raises(ArgumentError):
        qg.outer_automorphism("2T")


def test_bo_on_bd4():
    table = qg.bo_action_on_bd4()
    assert len(table) == 24
    q8 = qg.ade_group("2D4").element_set
    for rep, (a, b, c) in table.items():
        assert {a, b, c} <= q8 and a * b == c
