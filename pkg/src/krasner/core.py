"""Finite commutative unital Krasner hyperrings.

Elements are indices ``0..n-1``; subsets of the carrier are int bitmasks
(bit ``i`` set means element ``i`` is a member).  ``add[a][b]`` is a bitmask,
``mul[a][b]`` a plain index.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .bits import full, iter_bits, mask, members
from .errors import AxiomFailure, FormatError, NegationError, PreconditionError

DEFAULT_MAX_SIZE = 24

AXIOMS = ("A1", "A2", "A3", "A4", "A5",
          "M-assoc", "M-comm", "Zero-absorb", "Distrib", "Unital")

AXIOM_TITLES = {
    "A1": "commutativity of hyperaddition",
    "A2": "associativity of hyperaddition",
    "A3": "scalar identity a+0={a}",
    "A4": "unique additive inverse",
    "A5": "reversibility",
    "M-assoc": "associativity of multiplication",
    "M-comm": "commutativity of multiplication",
    "Zero-absorb": "a*0=0",
    "Distrib": "a(b+c)=ab+ac",
    "Unital": "a*1=a",
}


@dataclass(frozen=True)
class HyperringSpec:
    """Unvalidated hyperring tables.

    ``labels[i]`` is the index element ``i`` had in its source file; reports
    render witnesses through it.
    """
    name: str
    n: int
    zero: int
    one: int
    add: tuple
    mul: tuple
    labels: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "add", tuple(tuple(row) for row in self.add))
        object.__setattr__(self, "mul", tuple(tuple(row) for row in self.mul))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        else:
            object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def from_tables(cls, name: str, zero: int, one: int,
                    add: Sequence[Sequence[Iterable[int]]],
                    mul: Sequence[Sequence[int]]) -> "HyperringSpec":
        """Build from an addition table whose cells are iterables of indices."""
        return cls(name=name, n=len(add), zero=zero, one=one,
                   add=[[mask(cell) for cell in row] for row in add],
                   mul=mul)

    @property
    def carrier(self) -> int:
        return full(self.n)

    def label(self, a: int) -> int:
        return self.labels[a]

    def add_members(self, a: int, b: int) -> tuple[int, ...]:
        return members(self.add[a][b])

    def canonical(self) -> "HyperringSpec":
        """Relabel so that zero sits at index 0; other elements keep their order."""
        if self.zero == 0:
            return self
        order = [self.zero] + [i for i in range(self.n) if i != self.zero]
        pos = {old: new for new, old in enumerate(order)}

        def remap(m):
            return mask(pos[x] for x in iter_bits(m))

        add = [[remap(self.add[a][b]) for b in order] for a in order]
        mul = [[pos[self.mul[a][b]] for b in order] for a in order]
        return HyperringSpec(self.name, self.n, 0, pos[self.one], add, mul,
                             tuple(self.labels[i] for i in order))


@dataclass(frozen=True)
class Hyperring(HyperringSpec):
    """A spec that passed every axiom check, with its negation table."""
    neg: tuple = ()

    @property
    def spec(self) -> HyperringSpec:
        return HyperringSpec(self.name, self.n, self.zero, self.one,
                             self.add, self.mul, self.labels)


@dataclass(frozen=True)
class AxiomEntry:
    axiom: str
    passed: bool
    witness: Optional[tuple] = None
    detail: str = ""

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("fail entries need a witness, pass entries must not have one")

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass(frozen=True)
class AxiomReport:
    name: str
    entries: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list:
        return [e for e in self.entries if not e.passed]

    def entry(self, axiom: str) -> AxiomEntry:
        for e in self.entries:
            if e.axiom == axiom:
                return e
        raise KeyError(axiom)


def check_format(spec: HyperringSpec, max_size: Optional[int] = DEFAULT_MAX_SIZE) -> None:
    """Raise FormatError on the first structural problem.

    ``max_size=None`` disables the carrier cap.
    """
    n = spec.n
    if not isinstance(n, int) or n < 1:
        raise FormatError("SHAPE_MISMATCH", f"carrier size must be >= 1, got {n!r}", "size")
    if max_size is not None and n > max_size:
        raise FormatError("TOO_LARGE", f"carrier size {n} exceeds cap {max_size}", "size")
    for key in ("zero", "one"):
        v = getattr(spec, key)
        if not isinstance(v, int) or not 0 <= v < n:
            raise FormatError("OUT_OF_RANGE", f"{key}={v!r} not in [0,{n})", key)
    if len(spec.labels) != n:
        raise FormatError("SHAPE_MISMATCH", "labels length differs from size", "labels")
    for key, table in (("add", spec.add), ("mul", spec.mul)):
        if len(table) != n:
            raise FormatError("SHAPE_MISMATCH", f"{key} has {len(table)} rows, expected {n}", key)
        for i, row in enumerate(table):
            if len(row) != n:
                raise FormatError("SHAPE_MISMATCH",
                                  f"{key} row {i} has {len(row)} cells, expected {n}", (key, i))
    top = full(n)
    for i in range(n):
        for j in range(n):
            cell = spec.add[i][j]
            if cell == 0:
                raise FormatError("EMPTY_HYPERSUM", f"add[{i}][{j}] is empty", ("add", i, j))
            if cell & ~top or cell < 0:
                raise FormatError("OUT_OF_RANGE", f"add[{i}][{j}] has a member >= {n}",
                                  ("add", i, j))
            v = spec.mul[i][j]
            if not isinstance(v, int) or not 0 <= v < n:
                raise FormatError("OUT_OF_RANGE", f"mul[{i}][{j}]={v!r} not in [0,{n})",
                                  ("mul", i, j))


def _sadd(add, A: int, B: int) -> int:
    out = 0
    for a in iter_bits(A):
        row = add[a]
        for b in iter_bits(B):
            out |= row[b]
    return out


def set_add(R: HyperringSpec, A: int, B: int) -> int:
    """Union of ``add(a, b)`` over ``a in A``, ``b in B``."""
    if A == 0 or B == 0:
        raise PreconditionError("set_add needs nonempty operands")
    if (A | B) & ~R.carrier or A < 0 or B < 0:
        raise FormatError("OUT_OF_RANGE", f"operand outside carrier of size {R.n}")
    return _sadd(R.add, A, B)


def fold_sum(R: HyperringSpec, elements: Sequence[int]) -> int:
    """``e1 + e2 + ... + ek`` as a set; the empty sum is ``{zero}``."""
    acc = 1 << R.zero
    for e in elements:
        acc = _sadd(R.add, acc, 1 << e)
    return acc


def neg_of(R: HyperringSpec, a: int) -> int:
    zbit = 1 << R.zero
    found = [x for x in range(R.n) if R.add[a][x] & zbit]
    if not found:
        raise NegationError("existence", (a,), f"no x with 0 in {a}+x")
    if len(found) > 1:
        raise NegationError("uniqueness", (a, found[0], found[1]),
                            f"{a} has several inverses: {found}")
    return found[0]


def _first(violations):
    """First violating tuple from a lexicographic generator, or None."""
    return next(violations, None)


def check_axioms(spec: HyperringSpec) -> AxiomReport:
    """Exhaustively check every axiom; each failure carries its lex-least witness."""
    check_format(spec, max_size=None)
    n, add, mul, z, one = spec.n, spec.add, spec.mul, spec.zero, spec.one
    rng = range(n)
    entries = []

    def entry(axiom, witness, detail=""):
        entries.append(AxiomEntry(axiom, witness is None, witness, detail if witness else ""))

    entry("A1", _first((a, b) for a in rng for b in rng if add[a][b] != add[b][a]))
    entry("A2", _first((a, b, c) for a in rng for b in rng for c in rng
                       if _sadd(add, 1 << a, add[b][c]) != _sadd(add, add[a][b], 1 << c)))
    entry("A3", _first((a,) for a in rng if add[a][z] != 1 << a))

    neg = {}
    a4 = None
    a4_detail = ""
    for a in rng:
        try:
            neg[a] = neg_of(spec, a)
        except NegationError as exc:
            if a4 is None:
                a4, a4_detail = exc.witness, f"{exc.kind} failure"
    entry("A4", a4, a4_detail)

    # a in b+c  =>  c in -b+a  and  b in a-c.  Pairs involving an element
    # without a unique inverse are skipped; A4 already reports those.
    def reversibility():
        for a in rng:
            for b in rng:
                if b not in neg:
                    continue
                for c in rng:
                    if c not in neg or not add[b][c] >> a & 1:
                        continue
                    if not (add[neg[b]][a] >> c & 1) or not (add[a][neg[c]] >> b & 1):
                        yield (a, b, c)
    entry("A5", _first(reversibility()))

    entry("M-assoc", _first((a, b, c) for a in rng for b in rng for c in rng
                            if mul[mul[a][b]][c] != mul[a][mul[b][c]]))
    entry("M-comm", _first((a, b) for a in rng for b in rng if mul[a][b] != mul[b][a]))
    entry("Zero-absorb", _first((a,) for a in rng if mul[a][z] != z))

    distrib, direction = None, ""
    for a in rng:
        for b in rng:
            for c in rng:
                lhs = mask(mul[a][x] for x in iter_bits(add[b][c]))
                rhs = add[mul[a][b]][mul[a][c]]
                if lhs != rhs:
                    distrib = (a, b, c)
                    if lhs & ~rhs == 0:
                        direction = "a(b+c) strictly contained in ab+ac"
                    elif rhs & ~lhs == 0:
                        direction = "ab+ac strictly contained in a(b+c)"
                    else:
                        direction = "a(b+c) and ab+ac incomparable"
                    break
            if distrib:
                break
        if distrib:
            break
    entry("Distrib", distrib, direction)
    entry("Unital", _first((a,) for a in rng if mul[a][one] != a))
    return AxiomReport(spec.name, tuple(entries))


def validate(spec: HyperringSpec, max_size: int = DEFAULT_MAX_SIZE) -> Hyperring:
    """Promote a spec to a Hyperring, or raise FormatError / AxiomFailure."""
    check_format(spec, max_size)
    spec = spec.canonical()
    report = check_axioms(spec)
    if not report.ok:
        raise AxiomFailure(report)
    neg = tuple(neg_of(spec, a) for a in range(spec.n))
    return Hyperring(spec.name, spec.n, spec.zero, spec.one, spec.add, spec.mul,
                     spec.labels, neg)
