"""Deterministic, index-addressable enumeration of small finite structures.

Each function returns an immutable sequence in a canonical order, so the
same (kind, n, index) always resolves to the same object and any index
partition of a sweep can run in parallel.  Topologies are enumerated
labeled (not up to homeomorphism): the theorem sweeps quantify over
labeled structures.

Two independent routes produce topologies: a brute filter of all families
containing the empty set and the carrier (used up to 4 points) and a
generator of consistent minimal-neighborhood tables, i.e. preorders (used
at 5 points, and as a cross-check below that).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    FiniteTopology,
    Ideal,
    TopoidealError,
    _topology_from_min_nbhd,
    full_mask,
    make_topology,
)

MAX_TOPOLOGY_POINTS = 5
DEFAULT_MAP_BUDGET = 1_000_000


class CarrierTooLarge(TopoidealError):
    pass


class BudgetExceeded(TopoidealError):
    pass


def subsets(n: int) -> tuple[int, ...]:
    """All 2^n subset masks, ascending."""
    if not 0 <= n <= 16:
        raise CarrierTooLarge(f"subsets need 0 <= n <= 16, got {n}")
    return tuple(range(1 << n))


@lru_cache(maxsize=None)
def ideals(n: int) -> tuple[Ideal, ...]:
    """All 2^n principal ideals, by generator ascending."""
    if not 1 <= n <= 16:
        raise CarrierTooLarge(f"ideals need 1 <= n <= 16, got {n}")
    return tuple(Ideal(n, gen) for gen in range(1 << n))


def maps(dom_n: int, cod_n: int, budget: int = DEFAULT_MAP_BUDGET) -> tuple[tuple[int, ...], ...]:
    """All total point tables dom -> cod in mixed-radix order (last point fastest)."""
    if dom_n < 1 or cod_n < 1:
        raise TopoidealError("map enumeration needs nonempty carriers")
    if cod_n ** dom_n > budget:
        raise BudgetExceeded(f"{cod_n}^{dom_n} maps exceed budget {budget}")
    return tuple(itertools.product(range(cod_n), repeat=dom_n))


def _topologies_by_family_filter(n: int) -> list[FiniteTopology]:
    top = full_mask(n)
    middles = [m for m in range(1 << n) if m not in (0, top)]
    out = []
    for picks in itertools.chain.from_iterable(
            itertools.combinations(middles, k) for k in range(len(middles) + 1)):
        fam = (0, top) + picks
        fam_set = frozenset(fam)
        ok = True
        for i, a in enumerate(picks):
            for b in picks[i + 1:]:
                if (a | b) not in fam_set or (a & b) not in fam_set:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(make_topology(n, fam))
    return out


def _min_nbhd_tables(n: int) -> list[tuple[int, ...]]:
    """All consistent minimal-neighborhood tables: rows with x in row[x] such
    that membership implies row containment (a preorder, row = up-set)."""
    results: list[tuple[int, ...]] = []
    rows: list[int] = []

    def extend(x: int) -> None:
        if x == n:
            results.append(tuple(rows))
            return
        for cand in range(1 << n):
            if not cand >> x & 1:
                continue
            ok = True
            for y in range(x):
                if cand >> y & 1 and rows[y] & ~cand:
                    ok = False
                    break
                if rows[y] >> x & 1 and cand & ~rows[y]:
                    ok = False
                    break
            if ok:
                rows.append(cand)
                extend(x + 1)
                rows.pop()

    extend(0)
    return results


def topologies_by_preorder(n: int) -> tuple[FiniteTopology, ...]:
    """Second enumeration route: Alexandrov topologies of all preorders."""
    if not 1 <= n <= MAX_TOPOLOGY_POINTS:
        raise CarrierTooLarge(f"topologies need 1 <= n <= {MAX_TOPOLOGY_POINTS}, got {n}")
    out = [_topology_from_min_nbhd(n, rows) for rows in _min_nbhd_tables(n)]
    out.sort(key=lambda t: t.opens)
    return tuple(out)


@lru_cache(maxsize=None)
def topologies(n: int) -> tuple[FiniteTopology, ...]:
    """Every labeled topology on n points exactly once, sorted by opens."""
    if not 1 <= n <= MAX_TOPOLOGY_POINTS:
        raise CarrierTooLarge(f"topologies need 1 <= n <= {MAX_TOPOLOGY_POINTS}, got {n}")
    if n <= 4:
        out = _topologies_by_family_filter(n)
        out.sort(key=lambda t: t.opens)
        return tuple(out)
    return topologies_by_preorder(n)


@dataclass(frozen=True)
class EnumCursor:
    """Stable address of one enumerated structure."""

    kind: str
    n: int | tuple[int, int]
    index: int

    def fetch(self):
        if self.kind == "topologies":
            return topologies(self.n)[self.index]
        if self.kind == "ideals":
            return ideals(self.n)[self.index]
        if self.kind == "subsets":
            return subsets(self.n)[self.index]
        if self.kind == "maps":
            dom_n, cod_n = self.n
            return maps(dom_n, cod_n)[self.index]
        raise TopoidealError(f"unknown enumeration kind {self.kind!r}")
