"""Time the numba and numpy kernel paths against each other.

Each path runs in its own interpreter because the choice is made at import
time from ISOSPEC_DISABLE_NUMBA.  The first numba call includes compilation
(or a cache load), so it is reported separately from the steady-state runs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from isospec import _kernels, goursat as gs, quatgroups as qg

repeat = int(sys.argv[1])
t = qg.ade_group("2T")
i = qg.ade_group("2I")
tt = gs.product_table(t, t)
it = gs.product_table(i, qg.ade_group("Z2"))
inv = _kernels.inverse_indices(it)

def timed(fn):
    start = time.perf_counter()
    fn()
    first = time.perf_counter() - start
    runs = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        runs.append(time.perf_counter() - start)
    return first, min(runs), out

res = {"numba": _kernels.USING_NUMBA}
f, best, subs = timed(lambda: _kernels.subgroups_up_to(tt, 24))
res["subgroups 2Tx2T (<=24)"] = (f, best, len(subs))
f, best, labels = timed(lambda: _kernels.class_labels(it, inv))
res["class labels 2Ix2"] = (f, best, int(labels.max()) + 1)
gens = list(range(0, 240, 17))
f, best, mask = timed(lambda: [_kernels.closure(it, [a, b]) for a in gens for b in gens])
res["closure 2Ix2 (pairs)"] = (f, best, len(mask))
print(json.dumps(res))
"""


def run(disable: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("ISOSPEC_DISABLE_NUMBA", None)
    if disable:
        env["ISOSPEC_DISABLE_NUMBA"] = "1"
    out = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    if not fast.pop("numba"):
        print("numba is not importable; both columns use numpy")
    slow.pop("numba")
    print(f"{'kernel':28} {'numba first':>12} {'numba best':>11} {'numpy best':>11} {'speedup':>8}  result")
    for key, (f1, b1, r1) in fast.items():
        _, b2, r2 = slow[key]
        assert r1 == r2, f"{key}: paths disagree ({r1} vs {r2})"
        print(f"{key:28} {f1:12.3f} {b1:11.4f} {b2:11.4f} {b2 / b1:8.1f}x  {r1}")


if __name__ == "__main__":
    main()
