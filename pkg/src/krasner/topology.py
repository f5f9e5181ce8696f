"""Finite topological spaces presented by their closed sets.

Points are ``0..n-1`` and every subset is a bitmask.  The checkers follow
the textbook definitions literally, even where finiteness makes them
automatic, so that each one doubles as an oracle for the others.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .bits import canonical_key, full, is_subset, iter_bits, members
from .errors import ConsistencyError, FormatError, PreconditionError

# cover / FIP families are enumerated exhaustively up to this many candidates
EXHAUSTIVE_FAMILIES = 6
SAMPLED_FAMILIES = 12


@dataclass(frozen=True)
class FiniteSpace:
    n_points: int
    point_labels: tuple
    closed_sets: tuple
    provenance: dict = field(default_factory=dict, compare=False)
    _closed: frozenset = field(default=frozenset(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "closed_sets",
                           tuple(sorted(set(self.closed_sets), key=canonical_key)))
        object.__setattr__(self, "_closed", frozenset(self.closed_sets))

    @property
    def points(self) -> int:
        return full(self.n_points)

    @property
    def is_empty(self) -> bool:
        return self.n_points == 0

    def is_closed(self, A: int) -> bool:
        return A in self._closed

    def is_open(self, U: int) -> bool:
        return (self.points & ~U) in self._closed

    @property
    def open_sets(self) -> tuple:
        return tuple(sorted((self.points & ~K for K in self.closed_sets), key=canonical_key))


def _check_members(n: int, family: Sequence[int], what: str):
    for A in family:
        if A < 0 or A & ~full(n):
            raise FormatError("OUT_OF_RANGE", f"{what} {A:#b} has a point outside 0..{n - 1}")


def space_from_closed_subbasis(n: int, subbasis: Sequence[int],
                               labels: Optional[Sequence] = None) -> FiniteSpace:
    """Least family containing the subbasis, empty set and whole space that is
    closed under finite unions and intersections."""
    subbasis = tuple(subbasis)
    _check_members(n, subbasis, "subbasis member")
    top = full(n)
    # finite intersections first, then finite unions of those
    meets = {top}
    for S in subbasis:
        meets |= {S & M for M in meets}
    closed = {0}
    for M in meets:
        closed |= {M | C for C in closed}
    labels = tuple(labels) if labels is not None else tuple(range(n))
    return FiniteSpace(n, labels, tuple(closed),
                       {"kind": "closed-subbasis", "subbasis": subbasis})


def closure_of(S: FiniteSpace, A: int) -> int:
    _check_members(S.n_points, [A], "subset")
    out = S.points
    for K in S.closed_sets:
        if is_subset(A, K):
            out &= K
    return out


def point_closures(S: FiniteSpace) -> tuple:
    return tuple(closure_of(S, 1 << x) for x in range(S.n_points))


def is_T0(S: FiniteSpace) -> tuple:
    """``(True, None)`` or ``(False, (x, y))`` for the least pair with equal closures."""
    cl = point_closures(S)
    seen = {}
    for x in range(S.n_points):
        if cl[x] in seen:
            return False, (seen[cl[x]], x)
        seen[cl[x]] = x
    return True, None


def _maximal_proper_closed(S: FiniteSpace, K: int) -> list:
    proper = [C for C in S.closed_sets if C != K and is_subset(C, K)]
    return [C for C in proper if not any(D != C and is_subset(C, D) for D in proper)]


def is_irreducible(S: FiniteSpace, K: int) -> bool:
    if K == 0 or not S.is_closed(K):
        raise PreconditionError("is_irreducible needs a nonempty closed set")
    # any decomposition into proper closed parts enlarges to one into maximal parts
    tops = _maximal_proper_closed(S, K)
    for A, B in combinations(tops, 2):
        if A | B == K:
            return False
    return True


def irreducible_closed_sets(S: FiniteSpace) -> list:
    return [K for K in S.closed_sets if K and is_irreducible(S, K)]


def is_sober(S: FiniteSpace) -> tuple:
    """``(True, None)`` or ``(False, (K, number_of_generic_points))``."""
    cl = point_closures(S)
    for K in irreducible_closed_sets(S):
        generic = sum(1 for x in iter_bits(K) if cl[x] == K)
        if generic != 1:
            return False, (K, generic)
    return True, None


def _families(candidates: list, seed: int):
    if len(candidates) <= EXHAUSTIVE_FAMILIES:
        for k in range(1 << len(candidates)):
            yield [c for i, c in enumerate(candidates) if k >> i & 1]
        return
    rng = random.Random(seed)
    yield list(candidates)
    for _ in range(SAMPLED_FAMILIES):
        yield [c for c in candidates if rng.random() < 0.5]


def _qc_by_covers(S: FiniteSpace, U: int) -> bool:
    traces = sorted({O & U for O in S.open_sets} - {0})
    for cover in _families(traces, seed=U):
        union = 0
        for O in cover:
            union |= O
        if not is_subset(U, union):
            continue
        sub = list(cover)
        for O in list(sub):
            rest = [P for P in sub if P is not O]
            u = 0
            for P in rest:
                u |= P
            if is_subset(U, u):
                sub = rest
        u = 0
        for P in sub:
            u |= P
        if not is_subset(U, u):
            return False
    return True


def _has_fip(fam: list, U: int) -> bool:
    if len(fam) <= EXHAUSTIVE_FAMILIES:
        for k in range(1, len(fam) + 1):
            for sub in combinations(fam, k):
                m = U
                for K in sub:
                    m &= K
                if not m:
                    return False
        return True
    # intersections only shrink as the subfamily grows; the whole family is the hardest case
    m = U
    for K in fam:
        m &= K
    return m != 0


def _qc_by_fip(S: FiniteSpace, U: int) -> bool:
    # closed sets of the subspace U are traces of closed sets of S
    traces = sorted({K & U for K in S.closed_sets})
    for fam in _families(traces, seed=~U):
        if not _has_fip(fam, U):
            continue
        meet = U
        for K in fam:
            meet &= K
        if U and meet == 0:
            return False
    return True


def is_quasi_compact_subset(S: FiniteSpace, U: int) -> bool:
    """Every open cover of U has a finite subcover.

    The finite-intersection-property formulation is evaluated as well and
    must agree.
    """
    if not S.is_open(U):
        raise PreconditionError("is_quasi_compact_subset needs an open set")
    by_covers = _qc_by_covers(S, U)
    by_fip = _qc_by_fip(S, U)
    if by_covers != by_fip:
        raise ConsistencyError(f"cover and FIP formulations disagree on {members(U)}")
    return by_covers


@dataclass(frozen=True)
class SpectralVerdict:
    t0: bool
    t0_witness: Optional[tuple]
    quasi_compact: bool
    sober: bool
    sober_witness: Optional[tuple]
    qc_open_basis: bool
    qc_basis_witness: Optional[tuple]
    spectral: bool
    consistent: bool
    n_points: int = 0

    @property
    def empty(self) -> bool:
        return self.n_points == 0


def spectral_verdict(S: FiniteSpace) -> SpectralVerdict:
    t0, t0_w = is_T0(S)
    qc = is_quasi_compact_subset(S, S.points)
    sober, sober_w = is_sober(S)

    opens = S.open_sets
    qc_opens = [U for U in opens if is_quasi_compact_subset(S, U)]
    qc_set = set(qc_opens)
    basis, basis_w = True, None
    for U in opens:
        union = 0
        for V in qc_opens:
            if is_subset(V, U):
                union |= V
        if union != U:
            basis, basis_w = False, ("not-a-union", U)
            break
    if basis:
        for U, V in combinations(qc_opens, 2):
            if U & V not in qc_set:
                basis, basis_w = False, ("intersection", U, V)
                break
    spectral = t0 and qc and sober and basis
    return SpectralVerdict(t0, t0_w, qc, sober, sober_w, basis, basis_w,
                           spectral, spectral == t0, S.n_points)


def open_subspace(S: FiniteSpace, U: int) -> FiniteSpace:
    """Subspace on the open set U; point i of the result is the i-th member of U."""
    if not S.is_open(U):
        raise PreconditionError("open_subspace needs an open set")
    pts = members(U)

    def compress(A):
        return sum(1 << i for i, p in enumerate(pts) if A >> p & 1)
    closed = {compress(K & U) for K in S.closed_sets}
    return FiniteSpace(len(pts), tuple(S.point_labels[p] for p in pts), tuple(closed),
                       {"kind": "open-subspace", "parent_points": pts,
                        "parent": S.provenance})


def random_space(rng: random.Random, n_points: int, k: Optional[int] = None) -> FiniteSpace:
    if k is None:
        k = rng.randint(0, 2 * n_points)
    subbasis = [rng.getrandbits(n_points) if n_points else 0 for _ in range(k)]
    return space_from_closed_subbasis(n_points, subbasis)
