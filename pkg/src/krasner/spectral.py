"""Lower topology on hyperideals and step-by-step verification of its spectrality.

Points of a lower-topology space are hyperideals; the closed subbasis is the
family of up-sets ``V(J) = {I : J ⊆ I}`` for every hyperideal J.  The
``proper`` variant drops the whole ring from the points but keeps ``J = R``
in the index set, where it contributes the empty closed set.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .bits import is_subset, iter_bits, members
from .core import Hyperring, fold_sum
from .errors import ConsistencyError, PreconditionError
from .ideals import (EXHAUSTIVE_LATTICE, IdealLattice, all_hyperideals, ideal_sum,
                     is_hyperideal)
from .topology import (FiniteSpace, SpectralVerdict, closure_of, irreducible_closed_sets,
                       is_quasi_compact_subset, is_sober, is_T0, open_subspace, point_closures,
                       space_from_closed_subbasis, spectral_verdict)

FULL = "full"
PROPER = "proper"
RANDOM_SUBFAMILIES = 1000
SMALL_SUBFAMILY = 3


@dataclass(frozen=True)
class LowerTopologySpace:
    base: FiniteSpace
    points_are: tuple
    variant: str
    subbasis_index: dict
    lattice: IdealLattice = field(compare=False, repr=False)

    @property
    def ring(self) -> Hyperring:
        return self.lattice.ring

    def point_of(self, ideal: int) -> int:
        return self.points_are.index(ideal)


def _up_set(points: Sequence[int], J: int) -> int:
    return sum(1 << p for p, I in enumerate(points) if is_subset(J, I))


def v_set(space: LowerTopologySpace, J: int) -> int:
    """Points whose ideal contains J."""
    check = is_hyperideal(space.ring, J)
    if not check:
        raise PreconditionError(f"{members(J)} is not a hyperideal ({check.clause})")
    return _up_set(space.points_are, J)


def build_lower_topology(L: IdealLattice, variant: str = PROPER) -> LowerTopologySpace:
    if variant not in (FULL, PROPER):
        raise ValueError(f"variant must be {FULL!r} or {PROPER!r}")
    idx = range(len(L)) if variant == FULL else L.proper
    points = tuple(L.ideals[i] for i in idx)
    subbasis = {J: _up_set(points, J) for J in L.ideals}
    labels = tuple(members(I) for I in points)
    base = space_from_closed_subbasis(len(points), list(subbasis.values()), labels)
    return LowerTopologySpace(base, points, variant, subbasis, L)


def _subfamilies(size: int, cap: int, seed: int):
    """Index tuples: all of them for small lattices, otherwise small ones plus a sample."""
    if size <= cap:
        for k in range(size + 1):
            yield from combinations(range(size), k)
        return
    for k in range(min(SMALL_SUBFAMILY, size) + 1):
        yield from combinations(range(size), k)
    rng = random.Random(seed)
    for _ in range(RANDOM_SUBFAMILIES):
        k = rng.randint(SMALL_SUBFAMILY + 1, size)
        yield tuple(sorted(rng.sample(range(size), k)))


def _sum_of(space: LowerTopologySpace, family: Sequence[int]) -> int:
    R = space.ring
    if not family:
        return 1 << R.zero
    return ideal_sum(R, family)


def verify_intersection_identity(space: LowerTopologySpace, cap: int = EXHAUSTIVE_LATTICE,
                                 seed: int = 0) -> tuple:
    """Check that intersecting V over a family equals V of the family's sum.

    Returns ``(True, None)`` or ``(False, family)`` with the first failing
    family of ideals.  The empty family intersects to every point.
    """
    L = space.lattice
    for fam in _subfamilies(len(L), cap, seed):
        ideals = [L.ideals[i] for i in fam]
        meet = space.base.points
        for J in ideals:
            meet &= v_set(space, J)
        if meet != v_set(space, _sum_of(space, ideals)):
            return False, tuple(ideals)
    return True, None


@dataclass(frozen=True)
class QCWitness:
    family: tuple
    indices: tuple
    elements: tuple

    @property
    def size(self) -> int:
        return len(self.indices)


def _lex_least_decomposition(R: Hyperring, ideals: Sequence[int]) -> Optional[tuple]:
    """Lexicographically least (n1, ..., nk), ni in ideals[i], with one in n1 + ... + nk."""
    k = len(ideals)
    if k == 0:
        return () if R.one == R.zero else None
    # good[i]: partial sums from which ideals[i:] can still reach one
    good = [0] * (k + 1)
    good[k] = 1 << R.one
    for i in range(k - 1, -1, -1):
        g = 0
        for y in range(R.n):
            if any(R.add[y][b] & good[i + 1] for b in iter_bits(ideals[i])):
                g |= 1 << y
        good[i] = g
    # a lone first term must itself lie in good[1]
    chosen = []
    current = None
    for i in range(k):
        for b in iter_bits(ideals[i]):
            nxt = 1 << b if current is None else _step(R, current, b)
            if nxt & good[i + 1]:
                chosen.append(b)
                current = nxt
                break
        else:
            return None
    return tuple(chosen)


def _step(R: Hyperring, current: int, b: int) -> int:
    out = 0
    for y in iter_bits(current):
        out |= R.add[y][b]
    return out


def quasicompact_witness(space: LowerTopologySpace, family: Sequence[int]) -> QCWitness:
    """Finite subfamily generating the ring, with an explicit decomposition of one.

    ``family`` lists hyperideals whose up-sets have empty intersection on the
    proper space.  Subfamilies are tried by size, then lexicographically by
    position; the elements are the lexicographically least valid choice.
    """
    if space.variant != PROPER:
        raise PreconditionError("quasicompact_witness works on the proper space")
    family = tuple(family)
    meet = space.base.points
    for J in family:
        meet &= v_set(space, J)
    if meet:
        raise PreconditionError("the up-sets of the family have a common point")
    R = space.ring
    for k in range(len(family) + 1):
        for idx in combinations(range(len(family)), k):
            ideals = [family[i] for i in idx]
            if _sum_of(space, ideals) != R.carrier:
                continue
            elems = _lex_least_decomposition(R, ideals)
            if elems is None:
                raise ConsistencyError(
                    f"sum of {[members(I) for I in ideals]} is R but no decomposition of one")
            witness = QCWitness(family, idx, elems)
            if not recheck_witness(space, witness):
                raise ConsistencyError(f"witness {witness} does not re-verify")
            return witness
    raise ConsistencyError("empty intersection but no subfamily sums to R")


def recheck_witness(space: LowerTopologySpace, w: QCWitness) -> bool:
    """Independent re-verification by folding the chosen elements with set addition."""
    R = space.ring
    if len(w.elements) != len(w.indices):
        return False
    for i, e in zip(w.indices, w.elements):
        if not w.family[i] >> e & 1:
            return False
    if not fold_sum(R, w.elements) >> R.one & 1:
        return False
    meet = space.base.points
    for i in w.indices:
        meet &= _up_set(space.points_are, w.family[i])
    return meet == 0


def verify_closure_identity(space: LowerTopologySpace) -> tuple:
    """Closure of each point I equals V(I); returns ``(ok, first failing ideal)``."""
    cl = point_closures(space.base)
    for p, I in enumerate(space.points_are):
        if cl[p] != v_set(space, I):
            return False, I
    return True, None


@dataclass(frozen=True)
class TheoremReport:
    ring_name: str
    n_ideals: int
    n_proper: int
    empty_space: bool
    step1_full_space_spectral: SpectralVerdict
    step2_quasi_compact: bool
    step2_empty_v_iff_r: bool
    step2_witnesses: tuple
    step2_families_checked: int
    step3_sober: bool
    step3_t0: bool
    step3_generic_points: tuple
    step4_open: bool
    step4_subspace_agrees: bool
    identity_intersection: bool
    identity_intersection_witness: Optional[tuple]
    identity_closure: bool
    identity_closure_witness: Optional[int]
    proper_space_verdict: SpectralVerdict
    failures: tuple = ()

    @property
    def overall(self) -> bool:
        return not self.failures


def verify_theorem(R: Hyperring, cap: int = EXHAUSTIVE_LATTICE, seed: int = 0) -> TheoremReport:
    """Run every step of the spectrality argument for the proper space of R.

    Nothing is assumed: each step is computed and compared, and any step that
    comes out false is listed in ``failures`` with its witness data.
    """
    L = all_hyperideals(R)
    full_space = build_lower_topology(L, FULL)
    proper = build_lower_topology(L, PROPER)
    failures = []

    step1 = spectral_verdict(full_space.base)
    if not step1.spectral:
        failures.append("step1")

    # (2) V(J) is empty on the proper space exactly when J = R, and every
    # family of subbasic sets with empty intersection has a finite witness
    empty_iff = all((v_set(proper, J) == 0) == (J == R.carrier) for J in L.ideals)
    qc = is_quasi_compact_subset(proper.base, proper.base.points)
    witnesses = []
    checked = 0
    for fam in _subfamilies(len(L), cap, seed):
        ideals = tuple(L.ideals[i] for i in fam)
        meet = proper.base.points
        for J in ideals:
            meet &= v_set(proper, J)
        if meet:
            continue
        checked += 1
        w = quasicompact_witness(proper, ideals)
        if not recheck_witness(proper, w):
            failures.append("step2-witness")
            break
        witnesses.append(w)
    if not (qc and empty_iff):
        failures.append("step2")

    # (3) sober with unique generic points, via T0 and C(I) = V(I)
    sober, _ = is_sober(proper.base)
    t0, _ = is_T0(proper.base)
    cl = point_closures(proper.base)
    table = []
    for K in irreducible_closed_sets(proper.base):
        generic = [p for p in iter_bits(K) if cl[p] == K]
        if len(generic) != 1 or v_set(proper, proper.points_are[generic[0]]) != K:
            failures.append("step3-generic")
            break
        table.append((K, proper.points_are[generic[0]]))
    if not (sober and t0):
        failures.append("step3")

    # (4) the complement of the proper points in the full space is {R} = V(R) = C(R)
    top_point = full_space.point_of(R.carrier)
    complement = 1 << top_point
    step4 = (full_space.base.is_closed(complement)
             and v_set(full_space, R.carrier) == complement
             and closure_of(full_space.base, complement) == complement)
    if not step4:
        failures.append("step4")
    sub = open_subspace(full_space.base, full_space.base.points & ~complement)
    agrees = sub.closed_sets == proper.base.closed_sets
    if not agrees:
        failures.append("step4-subspace")

    inter_ok, inter_w = verify_intersection_identity(full_space, cap, seed)
    if inter_ok:
        inter_ok, inter_w = verify_intersection_identity(proper, cap, seed)
    if not inter_ok:
        failures.append("identity-intersection")
    clos_ok, clos_w = verify_closure_identity(proper)
    if clos_ok:
        clos_ok, clos_w = verify_closure_identity(full_space)
    if not clos_ok:
        failures.append("identity-closure")

    conclusion = spectral_verdict(proper.base)
    if not conclusion.spectral:
        failures.append("conclusion")
    if not (step1.consistent and conclusion.consistent):
        failures.append("spectral-vs-t0")

    return TheoremReport(
        ring_name=R.name, n_ideals=len(L), n_proper=len(L.proper),
        empty_space=proper.base.is_empty,
        step1_full_space_spectral=step1,
        step2_quasi_compact=qc, step2_empty_v_iff_r=empty_iff,
        step2_witnesses=tuple(witnesses), step2_families_checked=checked,
        step3_sober=sober, step3_t0=t0, step3_generic_points=tuple(table),
        step4_open=step4, step4_subspace_agrees=agrees,
        identity_intersection=inter_ok, identity_intersection_witness=inter_w,
        identity_closure=clos_ok, identity_closure_witness=clos_w,
        proper_space_verdict=conclusion, failures=tuple(failures))

