"""Character tests for irreducible representations of Sym(m) in O(n).

For an irrep with character chi and degree n:

* it factors through SO(n) iff chi(x) = n mod 4 for a transposition x;
* the image of an element of cycle type mu with chi(mu) = n mod 4 lifts to
  an element of order 2 in Spin(n) iff chi(mu) = n mod 8, and of order 4
  otherwise;
* M(z) = (1/l) sum_{k<l} (-1)^k chi(z^k), l = ord(z), is the multiplicity of
  the eigenvalue -1 of an odd permutation z.

An irrep is *admissible* when it is faithful, both lifts (of a transposition
and of a double transposition) have order 2, and M(z) > 0 for every odd z.
Such irreps give pairs of almost conjugate, non-conjugate subgroups of
Spin(n).
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Sequence

from . import symgroup as sg
from .errors import ArgumentError, DomainError, SizeLimitError

SEARCH_CAP = 14


class Which(str, Enum):
    TRANSPOSITION = "transposition"
    DOUBLE_TRANSPOSITION = "double_transposition"


class ExtensionType(str, Enum):
    TRIVIAL = "trivial"
    PLUS = "plus"
    MINUS = "minus"
    L = "L"


# (order of lifted x, order of lifted xy) -> extension type
_EXTENSION_TABLE = {
    (2, 2): ExtensionType.TRIVIAL,
    (2, 4): ExtensionType.PLUS,
    (4, 4): ExtensionType.MINUS,
    (4, 2): ExtensionType.L,
}


@dataclass(frozen=True)
class LiftReport:
    lands_in_so: bool
    lift_order_transposition: int | None
    lift_order_double_transposition: int | None
    extension_type: ExtensionType | None


@dataclass(frozen=True)
class AdmissibilityReport:
    partition: sg.Partition
    n: int
    cond_mod8_x: bool
    cond_mod8_xy: bool
    cond_M_positive: bool
    faithful: bool
    admissible: bool
    m6_caveat: bool
    scale: int = 1

    @property
    def m(self) -> int:
        return sum(self.partition)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["partition"] = sg.render_partition(self.partition)
        d["m"] = self.m
        return d


def _need_m(lam: sg.Partition, least: int) -> int:
    m = sum(lam)
    if m < least:
        raise ArgumentError(f"need m >= {least}, got m = {m}")
    return m


def _type_for(which: Which | str, m: int) -> sg.Partition:
    which = Which(which)
    return sg.transposition_type(m) if which is Which.TRANSPOSITION else sg.double_transposition_type(m)


def lands_in_so(lam: Sequence[int]) -> bool:
    lam = sg.as_partition(lam)
    m = _need_m(lam, 2)
    return (sg.mn_character(lam, sg.transposition_type(m)) - sg.dimension(lam)) % 4 == 0


def _order_from(chi: int, n: int) -> int:
    return 2 if (chi - n) % 8 == 0 else 4


def lift_order(lam: Sequence[int], which: Which | str) -> int:
    lam = sg.as_partition(lam)
    if not lands_in_so(lam):
        raise DomainError(f"{sg.render_partition(lam)} does not factor through SO(n)")
    m = sum(lam)
    mu = _type_for(which, m)
    return _order_from(sg.mn_character(lam, mu), sg.dimension(lam))


def extension_type(lam: Sequence[int]) -> ExtensionType:
    lam = sg.as_partition(lam)
    _need_m(lam, 4)
    key = (lift_order(lam, Which.TRANSPOSITION), lift_order(lam, Which.DOUBLE_TRANSPOSITION))
    return _EXTENSION_TABLE[key]


def lift_report(lam: Sequence[int]) -> LiftReport:
    lam = sg.as_partition(lam)
    if not lands_in_so(lam):
        return LiftReport(False, None, None, None)
    ox = lift_order(lam, Which.TRANSPOSITION)
    if sum(lam) < 4:
        return LiftReport(True, ox, None, None)
    oxy = lift_order(lam, Which.DOUBLE_TRANSPOSITION)
    return LiftReport(True, ox, oxy, _EXTENSION_TABLE[(ox, oxy)])


def _alternating_sum(lam: sg.Partition, z: sg.Partition) -> tuple[int, int]:
    l = sg.order(z)
    total = sum((-1) ** k * sg.mn_character(lam, sg.power_cycle_type(z, k)) for k in range(l))
    return total, l


def multiplicity_M(lam: Sequence[int], z: Sequence[int]) -> int:
    """Multiplicity of the eigenvalue -1 of rho_lam(z) for an odd permutation z."""
    lam, z = sg.as_partition(lam), sg.as_partition(z)
    if sum(lam) != sum(z):
        raise ArgumentError("partition and cycle type have different sizes")
    if sg.parity(z) != 1:
        raise ArgumentError(f"cycle type {sg.render_partition(z)} is even")
    total, l = _alternating_sum(lam, z)
    if total % l:  # pragma: no cover - impossible for a genuine character
        raise AssertionError("non-integral multiplicity")
    return total // l


def odd_cycle_types(m: int) -> list[sg.Partition]:
    return [mu for mu in sg.enumerate_partitions(m, cap=max(m, sg.PARTITION_CAP)) if sg.parity(mu) == 1]


def _report(lam: sg.Partition, scale: int = 1) -> AdmissibilityReport:
    m = sum(lam)
    n = scale * sg.dimension(lam)
    chi_x = scale * sg.mn_character(lam, sg.transposition_type(m))
    chi_xy = scale * sg.mn_character(lam, sg.double_transposition_type(m))
    c8x = (chi_x - n) % 8 == 0
    c8xy = (chi_xy - n) % 8 == 0
    cm = all(scale * multiplicity_M(lam, z) > 0 for z in odd_cycle_types(m))
    faithful = sg.is_faithful(lam)
    return AdmissibilityReport(
        partition=lam, n=n, cond_mod8_x=c8x, cond_mod8_xy=c8xy, cond_M_positive=cm,
        faithful=faithful, admissible=c8x and c8xy and cm and faithful,
        m6_caveat=(m == 6), scale=scale,
    )


def admissibility(lam: Sequence[int]) -> AdmissibilityReport:
    lam = sg.as_partition(lam)
    _need_m(lam, 4)
    return _report(lam)


def tensor_scale_check(lam: Sequence[int], k: int) -> AdmissibilityReport:
    """Recheck every condition for rho tensored with the trivial k-dimensional representation."""
    lam = sg.as_partition(lam)
    if not isinstance(k, int) or k < 1 or k % 2 == 0:
        raise ArgumentError("k must be an odd positive integer")
    if not admissibility(lam).admissible:
        raise DomainError(f"{sg.render_partition(lam)} is not admissible")
    return _report(lam, k)


def sort_key(report: AdmissibilityReport) -> tuple:
    return (report.n, tuple(-p for p in report.partition))


def search(m: int, cap: int = SEARCH_CAP, jobs: int = 1) -> list[AdmissibilityReport]:
    """All admissible irreps of Sym(m), ordered by degree then reverse-lex partition."""
    if not isinstance(m, int) or m < 4:
        raise ArgumentError("m must be an integer >= 4")
    if m > cap:
        raise SizeLimitError(f"m={m} exceeds the search cap {cap}")
    parts = sg.enumerate_partitions(m, cap=max(cap, sg.PARTITION_CAP))
    jobs = max(1, int(jobs or 1))
    if jobs == 1:
        reports = [_report(lam) for lam in parts]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, os.cpu_count() or 1)) as pool:
            reports = list(pool.map(_report, parts, chunksize=4))
    return sorted((r for r in reports if r.admissible), key=sort_key)
