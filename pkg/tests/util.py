"""Shared fixtures and independent brute-force oracles for the test suite.

The oracles here deliberately avoid the minimal-neighborhood tables the
package computes through: interiors scan the open family, local functions
quantify over every open neighborhood, and tau_star is built from its
explicit base.  Worked spaces S1..S4 are the small examples used across
the suite.
"""

from __future__ import annotations

import itertools

import hypothesis.strategies as st

from topoideal.core import (
    FiniteTopology,
    IdealSpace,
    full_mask,
    make_ideal,
    make_topology,
    principal_ideal,
    submasks,
)


def mask(letters: str) -> int:
    """Mask from point letters, a=0, b=1, ...  mask('acd') == 0b1101."""
    return sum(1 << (ord(c) - ord("a")) for c in letters)


def letters(m: int) -> str:
    return "".join(chr(ord("a") + i) for i in range(16) if m >> i & 1)


# Worked spaces.
def s1_space() -> IdealSpace:
    topo = make_topology(4, [0, mask("ac"), mask("d"), mask("acd"), mask("abcd")])
    return IdealSpace(topo, make_ideal(4, [0, mask("c"), mask("d"), mask("cd")]))


def s2_space() -> IdealSpace:
    topo = make_topology(3, [0, mask("ab"), mask("abc")])
    return IdealSpace(topo, principal_ideal(3, mask("c")))


def s3_topologies() -> tuple[FiniteTopology, FiniteTopology, FiniteTopology]:
    tau = make_topology(3, [0, mask("b"), mask("abc")])
    sigma = make_topology(3, [0, mask("c"), mask("abc")])
    nu = make_topology(3, [0, mask("a"), mask("abc")])
    return tau, sigma, nu


def s3_ideal():
    return principal_ideal(3, mask("c"))


def s4_topology() -> FiniteTopology:
    return make_topology(4, [0, mask("acd"), mask("abcd")])


def discrete(n: int) -> FiniteTopology:
    return make_topology(n, list(range(1 << n)))


def indiscrete(n: int) -> FiniteTopology:
    return make_topology(n, [0, full_mask(n)])


# Brute-force enumeration of every topology on n points (filter all families
# containing the empty set and the carrier for closure under union and
# intersection).  Usable up to n = 4.
def all_topologies_bruteforce(n: int) -> list[FiniteTopology]:
    top = full_mask(n)
    middles = [m for m in range(1 << n) if m not in (0, top)]
    found = []
    for picks in itertools.chain.from_iterable(
            itertools.combinations(middles, k) for k in range(len(middles) + 1)):
        fam = frozenset(picks) | {0, top}
        ok = True
        for a in fam:
            for b in fam:
                if (a | b) not in fam or (a & b) not in fam:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(make_topology(n, fam))
    found.sort(key=lambda t: t.opens)
    return found


def all_spaces_bruteforce(n: int) -> list[IdealSpace]:
    return [IdealSpace(t, principal_ideal(n, g))
            for t in all_topologies_bruteforce(n)
            for g in range(1 << n)]


# Independent operator oracles.
def interior_oracle(topo: FiniteTopology, a: int) -> int:
    out = 0
    for u in topo.opens:
        if u & ~a == 0:
            out |= u
    return out


def closure_oracle(topo: FiniteTopology, a: int) -> int:
    out = topo.full
    for c in topo.closed_sets():
        if a & ~c == 0:
            out &= c
    return out


def local_function_oracle(sp: IdealSpace, a: int) -> int:
    """Literal definition: every open neighborhood meets a outside the ideal."""
    out = 0
    for x in range(sp.topo.n):
        bit = 1 << x
        if all(u & a & ~sp.ideal.gen for u in sp.topo.opens if u & bit):
            out |= bit
    return out


def tau_star_oracle(sp: IdealSpace) -> frozenset[int]:
    """Opens of tau_star from the explicit base, closed under union by fixpoint."""
    base = {u & ~e for u in sp.topo.opens for e in submasks(sp.ideal.gen)}
    opens = set(base)
    while True:
        new = {a | b for a in opens for b in opens} - opens
        if not new:
            return frozenset(opens)
        opens |= new


# Random valid spaces for hypothesis: a random reflexive relation row set,
# forced transitive by fixpoint, gives a consistent min-neighborhood table.
@st.composite
def spaces(draw, min_n: int = 1, max_n: int = 4):
    n = draw(st.integers(min_n, max_n))
    rows = [draw(st.integers(0, full_mask(n))) | (1 << x) for x in range(n)]
    changed = True
    while changed:
        changed = False
        for x in range(n):
            acc = rows[x]
            for y in range(n):
                if rows[x] >> y & 1:
                    acc |= rows[y]
            if acc != rows[x]:
                rows[x] = acc
                changed = True
    opens = [m for m in range(1 << n)
             if all(rows[x] & ~m == 0 for x in range(n) if m >> x & 1)]
    topo = make_topology(n, opens)
    gen = draw(st.integers(0, full_mask(n)))
    return IdealSpace(topo, principal_ideal(n, gen))
