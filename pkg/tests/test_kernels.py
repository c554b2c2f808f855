import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from isospec import _kernels
from isospec import goursat as gs
from isospec import quatgroups as qg


def _table(label):
    return qg.ade_group(label).table


@pytest.mark.parametrize("label", ["2T", "2O", "2I", "2D10"])
def test_table_is_a_group_table(label):
    g = qg.ade_group(label)
    t = g.table
    n = g.order
    assert (t[0] == np.arange(n)).all() and (t[:, 0] == np.arange(n)).all()
    for row in t:
        assert sorted(row) == list(range(n))
    # exact products agree with the float-matched table
    for a in range(0, n, 7):
        for b in range(0, n, 5):
            assert g.elements[t[a, b]] == g.elements[a] * g.elements[b]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 119), min_size=1, max_size=3), st.integers(1, 130))
def test_closure_paths_agree(gens, limit):
    t = _table("2I")
    a = _kernels._closure_impl(t, np.zeros(120, dtype=np.bool_), np.array(gens, dtype=np.int32), 120)
    b = _kernels._closure_numpy(t, np.zeros(120, dtype=np.bool_), np.array(gens, dtype=np.int32), 120)
    assert (a == b).all()
    # with a limit, the result is either the full subgroup or a partial set past the limit
    c = _kernels.closure(t, gens, limit=limit)
    assert (c == a).all() or (c.sum() > limit and (c <= a).all())


@pytest.mark.parametrize("label", ["2T", "2O", "2I"])
def test_class_label_paths_agree(label):
    t = _table(label)
    inv = _kernels.inverse_indices(t)
    a = _kernels._class_labels_loop(t, inv)
    b = _kernels._class_labels_numpy(t, inv)
    assert (a == b).all()
    assert (a == _kernels.class_labels(t, inv)).all()


def test_inverse_indices():
    t = _table("2O")
    inv = _kernels.inverse_indices(t)
    assert (t[np.arange(48), inv] == 0).all()


def test_subgroups_up_to_respects_bound():
    t = gs.product_table(qg.ade_group("2D4"), qg.ade_group("Z4"))
    allsub = _kernels.subgroups_up_to(t, 32)
    small = _kernels.subgroups_up_to(t, 8)
    assert {m.tobytes() for m in small} == {m.tobytes() for m in allsub if m.sum() <= 8}
    for m in allsub:
        idx = np.flatnonzero(m)
        assert m[t[np.ix_(idx, idx)]].all()


def test_env_flag_selects_numpy():
    env = dict(os.environ, ISOSPEC_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", "from isospec import _kernels; print(_kernels.USING_NUMBA)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"


def test_numpy_path_end_to_end():
    env = dict(os.environ, ISOSPEC_DISABLE_NUMBA="1")
    code = ("from isospec import goursat as gs, quatgroups as qg;"
            "t = qg.ade_group('2T'); print(len(gs.subgroups_of_product(t, t, 24)))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    t = qg.ade_group("2T")
    assert int(out.stdout) == len(gs.subgroups_of_product(t, t, 24))
