"""Hyperring instances: rings with singleton sums, Krasner quotients, catalogue."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .bits import mask
from .core import HyperringSpec
from .errors import KrasnerError, PreconditionError


class RingAxiomError(PreconditionError):
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"ring axiom {axiom} fails at {witness}")


@dataclass(frozen=True)
class RingSpec:
    """A finite commutative unital ring given by single-valued tables."""
    name: str
    add: tuple
    mul: tuple
    zero: int = 0
    one: int = 1

    def __post_init__(self):
        object.__setattr__(self, "add", tuple(tuple(r) for r in self.add))
        object.__setattr__(self, "mul", tuple(tuple(r) for r in self.mul))

    @property
    def n(self) -> int:
        return len(self.add)

    @classmethod
    def integers_mod(cls, m: int) -> "RingSpec":
        if m < 1:
            raise PreconditionError(f"modulus must be positive, got {m}")
        r = range(m)
        return cls(f"Z{m}", [[(a + b) % m for b in r] for a in r],
                   [[(a * b) % m for b in r] for a in r], 0, 1 % m)

    @classmethod
    def product(cls, left: "RingSpec", right: "RingSpec") -> "RingSpec":
        """Direct product; element (x, y) has index ``x * right.n + y``."""
        m = right.n
        pairs = [(x, y) for x in range(left.n) for y in range(m)]

        def idx(x, y):
            return x * m + y
        add = [[idx(left.add[a][c], right.add[b][d]) for c, d in pairs] for a, b in pairs]
        mul = [[idx(left.mul[a][c], right.mul[b][d]) for c, d in pairs] for a, b in pairs]
        return cls(f"{left.name}x{right.name}", add, mul,
                   idx(left.zero, right.zero), idx(left.one, right.one))


def check_ring(ring: RingSpec) -> Optional[tuple]:
    """Return ``(axiom, witness)`` for the first failing ring axiom, else None."""
    n, add, mul, z, one = ring.n, ring.add, ring.mul, ring.zero, ring.one
    r = range(n)
    if any(len(row) != n for row in add) or len(mul) != n or any(len(row) != n for row in mul):
        return ("shape", ())
    for a in r:
        for b in r:
            if not (0 <= add[a][b] < n and 0 <= mul[a][b] < n):
                return ("range", (a, b))
    checks = [
        ("add-comm", ((a, b) for a in r for b in r if add[a][b] != add[b][a])),
        ("add-assoc", ((a, b, c) for a in r for b in r for c in r
                       if add[add[a][b]][c] != add[a][add[b][c]])),
        ("add-zero", ((a,) for a in r if add[a][z] != a)),
        ("add-inverse", ((a,) for a in r if all(add[a][x] != z for x in r))),
        ("mul-comm", ((a, b) for a in r for b in r if mul[a][b] != mul[b][a])),
        ("mul-assoc", ((a, b, c) for a in r for b in r for c in r
                       if mul[mul[a][b]][c] != mul[a][mul[b][c]])),
        ("mul-one", ((a,) for a in r if mul[a][one] != a)),
        ("distrib", ((a, b, c) for a in r for b in r for c in r
                     if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])),
    ]
    for axiom, violations in checks:
        w = next(violations, None)
        if w is not None:
            return (axiom, w)
    return None


def ring_to_hyperring(ring: RingSpec) -> HyperringSpec:
    bad = check_ring(ring)
    if bad:
        raise RingAxiomError(*bad)
    return HyperringSpec(ring.name, ring.n, ring.zero, ring.one,
                         [[1 << c for c in row] for row in ring.add], ring.mul)


@dataclass(frozen=True)
class QuotientSpec:
    ring: RingSpec
    G: tuple

    def __post_init__(self):
        object.__setattr__(self, "G", tuple(sorted(set(self.G))))


def check_unit_subgroup(ring: RingSpec, G: Sequence[int]) -> Optional[tuple]:
    """Return ``(reason, witness)`` if G is not a subgroup of the unit group."""
    Gs = set(G)
    if ring.one not in Gs:
        return ("missing-one", (ring.one,))
    for g in sorted(Gs):
        if not 0 <= g < ring.n:
            return ("range", (g,))
        if not any(ring.mul[g][h] == ring.one for h in Gs):
            return ("inverse", (g,))
    for g in sorted(Gs):
        for h in sorted(Gs):
            if ring.mul[g][h] not in Gs:
                return ("product", (g, h))
    return None


def quotient_hyperring(spec: QuotientSpec, name: Optional[str] = None) -> HyperringSpec:
    """Krasner quotient R/G on the orbits ``aG``.

    Classes are named by their least element and sorted, so ``0G`` is index 0.
    """
    ring, G = spec.ring, spec.G
    bad = check_ring(ring)
    if bad:
        raise RingAxiomError(*bad)
    bad = check_unit_subgroup(ring, G)
    if bad:
        raise PreconditionError(f"G={list(G)} is not a unit subgroup ({bad[0]} at {bad[1]})")
    orbit_of = {}
    reps = []
    for a in range(ring.n):
        if a in orbit_of:
            continue
        orbit = sorted({ring.mul[a][g] for g in G})
        reps.append(orbit[0])
        for x in orbit:
            orbit_of[x] = orbit[0]
    reps.sort(key=lambda r: (r != ring.zero, r))
    index = {r: i for i, r in enumerate(reps)}
    cls_of = {x: index[orbit_of[x]] for x in range(ring.n)}
    classes = [[x for x in range(ring.n) if cls_of[x] == i] for i in range(len(reps))]
    k = len(reps)
    add = [[mask(cls_of[ring.add[x][y]] for x in classes[i] for y in classes[j])
            for j in range(k)] for i in range(k)]
    mul = [[cls_of[ring.mul[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    if name is None:
        name = f"{ring.name}/{{{','.join(map(str, G))}}}"
    return HyperringSpec(name, k, cls_of[ring.zero], cls_of[ring.one], add, mul)


def unit_subgroups(ring: RingSpec) -> list:
    """Every subgroup of the unit group, as sorted tuples (brute force over subsets)."""
    units = [u for u in range(ring.n) if any(ring.mul[u][v] == ring.one for v in range(ring.n))]
    out = []
    for k in range(1 << len(units)):
        G = tuple(u for i, u in enumerate(units) if k >> i & 1)
        if G and check_unit_subgroup(ring, G) is None:
            out.append(G)
    return sorted(out, key=lambda g: (len(g), g))


def quotient_corpus(max_modulus: int = 12) -> list:
    """``Z_m / G`` for every modulus 2..max_modulus and every unit subgroup G."""
    out = []
    for m in range(2, max_modulus + 1):
        ring = RingSpec.integers_mod(m)
        for G in unit_subgroups(ring):
            out.append(quotient_hyperring(QuotientSpec(ring, G)))
    return out


def _k2() -> HyperringSpec:
    return HyperringSpec.from_tables("K2", 0, 1,
                                     [[{0}, {1}], [{1}, {0, 1}]],
                                     [[0, 0], [0, 1]])


def _sign(name="sign", neg_neg=1) -> HyperringSpec:
    # 0, 1, 2 stands for -1
    return HyperringSpec.from_tables(name, 0, 1,
                                     [[{0}, {1}, {2}],
                                      [{1}, {1}, {0, 1, 2}],
                                      [{2}, {0, 1, 2}, {2}]],
                                     [[0, 0, 0], [0, 1, 2], [0, 2, neg_neg]])


def _field4() -> RingSpec:
    # 0, 1, 2=x, 3=x+1 over F2[x]/(x^2+x+1)
    add = [[a ^ b for b in range(4)] for a in range(4)]
    log = {1: 0, 2: 1, 3: 2}
    exp = [1, 2, 3]
    mul = [[0 if 0 in (a, b) else exp[(log[a] + log[b]) % 3] for b in range(4)]
           for a in range(4)]
    return RingSpec("F4", add, mul)


def _broken_a4() -> HyperringSpec:
    return HyperringSpec.from_tables("broken-A4", 0, 1,
                                     [[{0}, {1}], [{1}, {1}]],
                                     [[0, 0], [0, 1]])


def _broken_unital() -> HyperringSpec:
    # K2 addition with the zero multiplication: everything else holds
    return HyperringSpec.from_tables("broken-unital", 0, 1,
                                     [[{0}, {1}], [{1}, {0, 1}]],
                                     [[0, 0], [0, 0]])


def _broken_mcomm() -> HyperringSpec:
    # upper triangular 2x2 matrices over F2; [[a, b], [0, d]] has index 4a + 2b + d
    def unpack(x):
        return x >> 2 & 1, x >> 1 & 1, x & 1

    def times(x, y):
        a, b, d = unpack(x)
        a2, b2, d2 = unpack(y)
        return 4 * (a & a2) + 2 * ((a & b2) ^ (b & d2)) + (d & d2)
    add = [[{x ^ y} for y in range(8)] for x in range(8)]
    mul = [[times(x, y) for y in range(8)] for x in range(8)]
    return HyperringSpec.from_tables("broken-mcomm", 0, 5, add, mul)


_CATALOGUE = {
    "K2": _k2,
    "sign": _sign,
    "Z4": lambda: ring_to_hyperring(RingSpec.integers_mod(4)),
    "Z6": lambda: ring_to_hyperring(RingSpec.integers_mod(6)),
    "Z8": lambda: ring_to_hyperring(RingSpec.integers_mod(8)),
    "Z12": lambda: ring_to_hyperring(RingSpec.integers_mod(12)),
    "Z2xZ2": lambda: ring_to_hyperring(RingSpec.product(RingSpec.integers_mod(2),
                                                        RingSpec.integers_mod(2))),
    "F4": lambda: ring_to_hyperring(_field4()),
    "Z5modG": lambda: quotient_hyperring(QuotientSpec(RingSpec.integers_mod(5), (1, 4)),
                                         "Z5modG"),
    "Z7modG": lambda: quotient_hyperring(QuotientSpec(RingSpec.integers_mod(7), (1, 2, 4)),
                                         "Z7modG"),
    "Z9modG": lambda: quotient_hyperring(QuotientSpec(RingSpec.integers_mod(9), (1, 8)),
                                         "Z9modG"),
    "Z12modG": lambda: quotient_hyperring(QuotientSpec(RingSpec.integers_mod(12), (1, 5)),
                                          "Z12modG"),
    "degenerate1": lambda: ring_to_hyperring(RingSpec.integers_mod(1)),
    "broken-A4": _broken_a4,
    "broken-distrib": lambda: _sign("broken-distrib", neg_neg=2),
    "broken-unital": _broken_unital,
    "broken-mcomm": _broken_mcomm,
}

# axiom each broken instance is built to violate, and nothing else
BROKEN_TARGETS = {
    "broken-A4": "A4",
    "broken-distrib": "Distrib",
    "broken-unital": "Unital",
    "broken-mcomm": "M-comm",
}


class UnknownBuiltin(KrasnerError, KeyError):
    pass


def catalogue() -> list:
    return list(_CATALOGUE)


def valid_catalogue() -> list:
    return [name for name in _CATALOGUE if name not in BROKEN_TARGETS]


def builtin(name: str) -> HyperringSpec:
    try:
        factory = _CATALOGUE[name]
    except KeyError:
        raise UnknownBuiltin(f"unknown builtin {name!r}; choose from {', '.join(_CATALOGUE)}")
    return factory()
