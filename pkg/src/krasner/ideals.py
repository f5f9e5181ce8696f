"""Hyperideals, their sums, maximal hyperideals and the hyperideal lattice.

A hyperideal is passed around as the bitmask of its members.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .bits import canonical_key, full, is_subset, iter_bits, members
from .core import Hyperring, _sadd
from .errors import ConsistencyError, PreconditionError

EXHAUSTIVE_LATTICE = 12


@dataclass(frozen=True)
class IdealCheck:
    ok: bool
    clause: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def is_hyperideal(R: Hyperring, S: int) -> IdealCheck:
    """Check the subhypergroup clauses (zero, sums, negatives) then absorption.

    The first violated clause is reported, scanning elements in increasing
    order.  Witnesses: ``zero -> (zero,)``, ``add -> (a, b, x)`` with
    ``x in a+b`` outside S, ``neg -> (a, -a)``, ``absorb -> (r, a, ra)``.
    """
    if S & ~R.carrier:
        raise PreconditionError("subset outside the carrier")
    if not S >> R.zero & 1:
        return IdealCheck(False, "zero", (R.zero,))
    elems = members(S)
    for a in elems:
        for b in elems:
            stray = R.add[a][b] & ~S
            if stray:
                return IdealCheck(False, "add", (a, b, next(iter_bits(stray))))
    for a in elems:
        if not S >> R.neg[a] & 1:
            return IdealCheck(False, "neg", (a, R.neg[a]))
    for a in elems:
        for r in range(R.n):
            if not S >> R.mul[r][a] & 1:
                return IdealCheck(False, "absorb", (r, a, R.mul[r][a]))
    return IdealCheck(True)


def generated_ideal(R: Hyperring, S: int) -> int:
    """Least hyperideal containing S, as a closure fixpoint."""
    cur = S | 1 << R.zero
    while True:
        nxt = cur | _sadd(R.add, cur, cur)
        for a in iter_bits(cur):
            nxt |= 1 << R.neg[a]
            for r in range(R.n):
                nxt |= 1 << R.mul[r][a]
        if nxt == cur:
            return cur
        cur = nxt


def _additive_closure(R: Hyperring, S: int) -> int:
    cur = S | 1 << R.zero
    while True:
        nxt = cur | _sadd(R.add, cur, cur)
        if nxt == cur:
            return cur
        cur = nxt


def ideal_sum(R: Hyperring, family: Sequence[int]) -> int:
    """All x lying in some finite sum ``a1 + ... + ak`` with each ``ai`` from a member.

    Computed as the closure of the union under hyperaddition; no negation or
    absorption step is applied, so the result being a hyperideal is a fact
    about the input, not an artefact of the construction.
    """
    family = list(family)
    if not family:
        raise PreconditionError("ideal_sum needs a nonempty family")
    union = 0
    for I in family:
        check = is_hyperideal(R, I)
        if not check:
            raise PreconditionError(
                f"{members(I)} is not a hyperideal ({check.clause} at {check.witness})")
        union |= I
    return _additive_closure(R, union)


@dataclass(frozen=True)
class IdealLattice:
    """All hyperideals of a hyperring, in canonical order (size, then members)."""
    ring: Hyperring
    ideals: tuple
    leq: tuple
    top: int
    bottom: int
    proper: tuple
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._index.update({I: i for i, I in enumerate(self.ideals)})

    def __len__(self):
        return len(self.ideals)

    def index(self, ideal: int) -> int:
        return self._index[ideal]

    def join(self, i: int, j: int) -> int:
        return self.index(_additive_closure(self.ring, self.ideals[i] | self.ideals[j]))

    def maximal(self) -> list:
        """Indices of the maximal hyperideals, in canonical order."""
        out = []
        for i in self.proper:
            if not any(self.leq[i][j] and j != i for j in self.proper):
                out.append(i)
        return out


def _principal_closure(R: Hyperring) -> set:
    family = {1 << R.zero}
    family.update(generated_ideal(R, 1 << a) for a in range(R.n))
    frontier = list(family)
    while frontier:
        new = []
        current = list(family)
        for I in frontier:
            for J in current:
                K = _additive_closure(R, I | J)
                if K not in family:
                    family.add(K)
                    new.append(K)
        frontier = new
    return family


@lru_cache(maxsize=64)
def all_hyperideals(R: Hyperring) -> IdealLattice:
    ideals = tuple(sorted(_principal_closure(R), key=canonical_key))
    leq = tuple(tuple(is_subset(I, J) for J in ideals) for I in ideals)
    top = ideals.index(R.carrier)
    bottom = ideals.index(1 << R.zero)
    proper = tuple(i for i in range(len(ideals)) if i != top)
    return IdealLattice(R, ideals, leq, top, bottom, proper)


def hyperideals_by_subset_filter(R: Hyperring) -> list:
    """Every zero-containing subset that passes is_hyperideal (exponential oracle)."""
    others = [a for a in range(R.n) if a != R.zero]
    out = []
    for k in range(1 << len(others)):
        S = 1 << R.zero
        for i, a in enumerate(others):
            if k >> i & 1:
                S |= 1 << a
        if is_hyperideal(R, S):
            out.append(S)
    return sorted(out, key=canonical_key)


def maximal_above(R: Hyperring, I: int, lattice: Optional[IdealLattice] = None) -> int:
    if I == R.carrier:
        raise PreconditionError("maximal_above needs a proper hyperideal")
    check = is_hyperideal(R, I)
    if not check:
        raise PreconditionError(f"{members(I)} is not a hyperideal ({check.clause})")
    L = lattice or all_hyperideals(R)
    for m in L.maximal():
        if is_subset(I, L.ideals[m]):
            return L.ideals[m]
    raise ConsistencyError(f"no maximal hyperideal above {members(I)}")


@dataclass(frozen=True)
class LatticeReport:
    is_complete_lattice: bool
    compact_elements: tuple
    is_algebraic: bool
    exhaustive: bool
    witnesses: dict = field(default_factory=dict)


def _lub(L: IdealLattice, i: int, j: int) -> Optional[int]:
    uppers = [k for k in range(len(L)) if L.leq[i][k] and L.leq[j][k]]
    least = [k for k in uppers if all(L.leq[k][u] for u in uppers)]
    return least[0] if len(least) == 1 else None


def _glb(L: IdealLattice, i: int, j: int) -> Optional[int]:
    lowers = [k for k in range(len(L)) if L.leq[k][i] and L.leq[k][j]]
    great = [k for k in lowers if all(L.leq[u][k] for u in lowers)]
    return great[0] if len(great) == 1 else None


def lattice_report(L: IdealLattice, cap: int = EXHAUSTIVE_LATTICE,
                   samples: int = 256, seed: int = 0) -> LatticeReport:
    """Completeness, compact elements and algebraicity, checked from the definitions.

    Covers of an element are subfamilies of the lattice; all of them are
    examined when the lattice has at most ``cap`` elements, otherwise
    ``samples`` random ones plus the whole lattice.
    """
    size = len(L)
    witnesses = {}
    complete = all(L.leq[L.bottom][k] and L.leq[k][L.top] for k in range(size))
    if not complete:
        witnesses["bounds"] = (L.bottom, L.top)
    join = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            lub = _lub(L, i, j)
            if lub is None or _glb(L, i, j) is None or lub != L.join(i, j):
                complete = False
                witnesses.setdefault("join", (i, j))
                lub = L.join(i, j)
            join[i][j] = lub

    def join_of(fam: int) -> int:
        acc = L.bottom
        for k in iter_bits(fam):
            acc = join[acc][k]
        return acc

    exhaustive = size <= cap
    if exhaustive:
        families = range(1 << size)
    else:
        rng = random.Random(seed)
        families = [full(size)] + [rng.getrandbits(size) for _ in range(samples)]

    compact = []
    for x in range(size):
        ok = True
        for fam in families:
            if not L.leq[x][join_of(fam)]:
                continue
            # prune the cover one member at a time; what remains is a finite subcover
            sub = fam
            for k in iter_bits(fam):
                if L.leq[x][join_of(sub & ~(1 << k))]:
                    sub &= ~(1 << k)
            if not L.leq[x][join_of(sub)] or not is_subset(sub, fam):
                ok = False
                witnesses.setdefault("compact", (x, fam))
                break
        if ok:
            compact.append(x)

    algebraic = True
    for x in range(size):
        below = 0
        for c in compact:
            if L.leq[c][x]:
                below |= 1 << c
        if join_of(below) != x:
            algebraic = False
            witnesses.setdefault("algebraic", (x,))
    return LatticeReport(complete, tuple(compact), algebraic, exhaustive, witnesses)


def hasse_edges(L: IdealLattice) -> list:
    """Covering pairs ``(i, j)``: ideal i is strictly below j with nothing in between."""
    size = len(L)
    edges = []
    for i in range(size):
        for j in range(size):
            if i == j or not L.leq[i][j]:
                continue
            if not any(k not in (i, j) and L.leq[i][k] and L.leq[k][j] for k in range(size)):
                edges.append((i, j))
    return edges

