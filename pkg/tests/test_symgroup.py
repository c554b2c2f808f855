from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st
from sympy.combinatorics import Permutation
from sympy.functions.combinatorial.numbers import partition as npartitions

from isospec import symgroup as sg
from isospec.errors import ArgumentError, SizeLimitError


def test_partitions_counts_match_sympy():
    for m in range(1, 16):
        parts = sg.enumerate_partitions(m)
        assert len(parts) == int(npartitions(m))
        assert len(set(parts)) == len(parts)
        assert parts == sorted(parts, reverse=True)


def test_partition_cap():
    with pytest.raises(SizeLimitError):
        sg.enumerate_partitions(70)


def test_partition_text():
    assert sg.render_partition((4, 1, 1, 1, 1)) == "(4,1,1,1,1)"
    assert sg.parse_partition("(3,2,1)") == (3, 2, 1)
    assert sg.parse_partition("1,2,3") == (3, 2, 1)
    with pytest.raises(ArgumentError):
        sg.parse_partition("3,-1")
    with pytest.raises(ArgumentError):
        sg.as_partition([])


def _random_cycle_type(draw_perm):
    return tuple(sorted((len(c) for c in draw_perm.full_cyclic_form), reverse=True))


@given(st.permutations(list(range(7))), st.integers(min_value=1, max_value=20))
def test_power_cycle_type_matches_sympy(arr, k):
    p = Permutation(arr)
    mu = _random_cycle_type(p)
    assert sg.power_cycle_type(mu, k) == _random_cycle_type(p ** k)
    assert sg.order(mu) == p.order()
    assert sg.parity(mu) == p.parity()


def test_class_sizes_sum():
    for m in range(1, 10):
        assert sum(sg.class_size(mu) for mu in sg.enumerate_partitions(m)) == factorial(m)


def test_known_values():
    assert sg.mn_character((3, 2, 1), (1,) * 6) == 16
    assert sg.dimension((4, 1, 1, 1, 1)) == 35
    assert sg.dimension((5, 2, 1)) == 64
    assert sg.mn_character((2, 1), (3,)) == -1
    assert sg.mn_character((1, 1, 1), (2, 1)) == -1
    with pytest.raises(ArgumentError):
        sg.mn_character((2, 1), (2, 2))


def test_rim_hook_removal():
    # (3,2,1) has no rim hook of length 2; the 3-hooks leave (3) and (1,1,1)
    assert sg.remove_rim_hooks((3, 2, 1), 2) == []
    assert sorted(sg.remove_rim_hooks((3, 2, 1), 3)) == [((1, 1, 1), -1), ((3,), -1)]


@pytest.mark.parametrize("m", range(1, 9))
def test_orthogonality(m):
    parts, classes, table = sg.character_table(m)
    assert sum(sg.dimension(l) ** 2 for l in parts) == factorial(m)
    z = [sg.centralizer_order(mu) for mu in classes]
    for i, ri in enumerate(table):
        for j, rj in enumerate(table):
            s = sum(a * b * factorial(m) // zz for a, b, zz in zip(ri, rj, z))
            assert s == (factorial(m) if i == j else 0)
    # column orthogonality
    for a in range(len(classes)):
        for b in range(len(classes)):
            s = sum(table[i][a] * table[i][b] for i in range(len(parts)))
            assert s == (z[a] if a == b else 0)


def test_identity_column_is_dimension():
    for m in range(1, 10):
        for lam in sg.enumerate_partitions(m):
            assert sg.mn_character(lam, (1,) * m) == sg.dimension(lam)


def test_conjugate_partition_twists_by_sign():
    for m in range(2, 9):
        for lam in sg.enumerate_partitions(m):
            for mu in sg.enumerate_partitions(m):
                sign = -1 if sg.parity(mu) else 1
                assert sg.mn_character(sg.conjugate(lam), mu) == sign * sg.mn_character(lam, mu)


# -- brute-force oracle -------------------------------------------------------
# permutation characters of the tabloid modules, then the determinantal formula

def _tabloid_fixed_points(comp: tuple[int, ...], perm: Permutation) -> int:
    m = perm.size
    labels = [i for i, c in enumerate(comp) for _ in range(c)]
    count = 0
    for assignment in set(permutations(labels)):
        if all(assignment[perm(i)] == assignment[i] for i in range(m)):
            count += 1
    return count


def _oracle_character(lam, perm: Permutation) -> int:
    l = len(lam)
    total = 0
    for sigma in permutations(range(l)):
        comp = [lam[i] - i + sigma[i] for i in range(l)]
        if any(c < 0 for c in comp):
            continue
        sign = Permutation(list(sigma)).signature()
        total += sign * _tabloid_fixed_points(tuple(c for c in comp if c), perm)
    return total


def _representative(mu) -> Permutation:
    cycles, start = [], 0
    for c in mu:
        cycles.append(list(range(start, start + c)))
        start += c
    return Permutation(cycles, size=sum(mu))


@pytest.mark.parametrize("m", range(1, 6))
def test_against_tabloid_oracle(m):
    for lam in sg.enumerate_partitions(m):
        for mu in sg.enumerate_partitions(m):
            assert sg.mn_character(lam, mu) == _oracle_character(lam, _representative(mu)), (lam, mu)


def test_faithfulness():
    assert not sg.is_faithful((5,))
    assert not sg.is_faithful((1, 1, 1, 1, 1))
    assert not sg.is_faithful((2, 2))  # factors through Sym(3)
    assert sg.is_faithful((3, 1))
    assert sg.is_faithful((4, 1, 1, 1, 1))


def test_cache_clear_is_harmless():
    a = sg.mn_character((4, 3, 1), (3, 3, 2))
    sg.character_cache_clear()
    assert sg.mn_character((4, 3, 1), (3, 3, 2)) == a
