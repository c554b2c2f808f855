from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from isospec import signcodes as sc
from isospec.errors import ArgumentError, DomainError

bits = st.tuples(*[st.integers(0, 1)] * 6).map(sc.SignVector)


@given(bits, bits)
def test_sign_vector_group_law(a, b):
    assert a * b == b * a
    assert a * a == sc.ZERO
    assert (a * b).determinant == a.determinant * b.determinant
    assert sc.SignVector.from_signs(a.signs()) == a


@given(bits, st.permutations(range(6)), st.permutations(range(6)))
def test_permutation_action(v, p, q):
    composed = tuple(q[p[i]] for i in range(6))
    assert v.permuted(p).permuted(q) == v.permuted(composed)
    assert v.permuted(p).weight == v.weight


def test_validation():
    with pytest.raises(ArgumentError):
        sc.SignVector((0, 1))
    with pytest.raises(ArgumentError):
        sc.SignVector.from_signs((1, 1, 1, 1, 1, 0))
    with pytest.raises(ArgumentError):
        sc.SignCodeGroup.from_signs([(1,) * 6, (-1, 1, 1, 1, 1, 1), (1, -1, 1, 1, 1, 1)])
    with pytest.raises(ArgumentError):
        sc.SignCodeGroup([sc.SignVector((1, 0, 0, 0, 0, 0))])


def test_the_two_codes():
    g1, g2 = sc.paper_groups()
    assert len(g1) == len(g2) == 8 and g1.dimension == 3
    assert g1.in_so6() and g2.in_so6()
    assert sc.weight_enumerator(g1) == sc.weight_enumerator(g2) == {0: 1, 2: 3, 4: 3, 6: 1}
    assert sc.so6_almost_conjugate(g1, g2)
    res = sc.permutation_search(g1, g2)
    assert res.permutation is None and res.tried == 720
    assert sc.permutation_search(g1, g1).permutation == tuple(range(6))


def _support_union_of_weight_two(g):
    return len({i for c in g.codewords if c.weight == 2 for i, b in enumerate(c.bits) if b})


def test_non_equivalence_by_invariant():
    # a permutation-invariant that differs: weight-2 supports overlap in one code and not the other
    g1, g2 = sc.paper_groups()
    assert _support_union_of_weight_two(g1) == 3
    assert _support_union_of_weight_two(g2) == 6


@given(st.permutations(range(6)))
def test_search_finds_permuted_copies(p):
    _, g2 = sc.paper_groups()
    h = g2.permuted(p)
    perm = sc.permutation_equivalent(g2, h)
    assert perm is not None and g2.permuted(perm) == h
    # the first hit in lexicographic order
    first = next(q for q in permutations(range(6)) if g2.permuted(q) == h)
    assert perm == first


def test_odd_weight_rejected():
    odd = sc.SignCodeGroup([sc.ZERO, sc.SignVector((1, 0, 0, 0, 0, 0))])
    g1, _ = sc.paper_groups()
    assert not odd.in_so6()
    with pytest.raises(DomainError):
        sc.so6_almost_conjugate(odd, g1)


def test_even_weight_code():
    e = sc.even_weight_code()
    assert len(e) == 32 and e.in_so6()
    g1, g2 = sc.paper_groups()
    assert g1.codewords <= e.codewords and g2.codewords <= e.codewords


def test_render():
    assert sc.SignVector.from_signs((-1, 1, 1, 1, 1, -1)).render() == "(-1,1,1,1,1,-1)"
