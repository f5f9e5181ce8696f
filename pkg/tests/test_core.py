import itertools

import pytest
from hypothesis import given, settings, strategies as st

from krasner.bits import mask, members
from krasner.constructions import builtin
from krasner.core import (AXIOMS, AxiomEntry, HyperringSpec, check_axioms, neg_of, set_add,
                          validate)
from krasner.errors import AxiomFailure, FormatError, NegationError, PreconditionError

from corpus import CORPUS, SMALL, ids
from oracles import axiom_violations


def k2_spec(changes):
    add = [[{0}, {1}], [{1}, {0, 1}]]
    for (a, b), cell in changes.items():
        add[a][b] = cell
    return HyperringSpec.from_tables("K2*", 0, 1, add, [[0, 0], [0, 1]])


# -- set_add ---------------------------------------------------------------

def test_set_add_k2_single_cell(K2):
    assert set_add(K2, mask([1]), mask([1])) == mask([0, 1])


def test_set_add_zero_is_neutral_for_every_subset(K2, sign, Z6):
    for R in (K2, sign, Z6):
        for A in range(1, 1 << R.n):
            assert set_add(R, A, mask([R.zero])) == A


def test_set_add_union_of_cells(K2):
    # {0,1} + {1} = (0+1) u (1+1) = {1} u {0,1}
    assert set_add(K2, mask([0, 1]), mask([1])) == mask([0, 1])


def test_set_add_rejects_empty_and_out_of_range(K2):
    with pytest.raises(PreconditionError):
        set_add(K2, 0, mask([1]))
    with pytest.raises(FormatError) as exc:
        set_add(K2, mask([2]), mask([1]))
    assert exc.value.code == "OUT_OF_RANGE"


@pytest.mark.parametrize("R", [R for R in SMALL if R.n <= 5], ids=lambda R: R.name)
def test_set_add_commutative_and_associative_on_all_subsets(R):
    subsets = range(1, 1 << R.n)
    for A, B in itertools.product(subsets, subsets):
        assert set_add(R, A, B) == set_add(R, B, A)
    for A, B, C in itertools.product(subsets, repeat=3):
        if R.n > 3:
            break
        assert set_add(R, set_add(R, A, B), C) == set_add(R, A, set_add(R, B, C))


# -- neg_of ----------------------------------------------------------------

def test_neg_of_k2():
    assert neg_of(builtin("K2"), 1) == 1


@pytest.mark.parametrize("R", CORPUS, ids=ids(CORPUS))
def test_neg_of_zero_is_zero(R):
    assert neg_of(R, R.zero) == R.zero


def test_neg_of_reports_missing_inverse():
    with pytest.raises(NegationError) as exc:
        neg_of(k2_spec({(1, 1): {1}}), 1)
    assert exc.value.kind == "existence"
    assert exc.value.witness == (1,)


def test_neg_of_reports_duplicate_inverse():
    spec = HyperringSpec.from_tables("dup", 0, 1, [[{0}, {1}, {2}],
                                                  [{1}, {0}, {0}],
                                                  [{2}, {0}, {0}]],
                                     [[0, 0, 0], [0, 1, 2], [0, 2, 1]])
    with pytest.raises(NegationError) as exc:
        neg_of(spec, 1)
    assert exc.value.kind == "uniqueness"
    assert exc.value.witness == (1, 1, 2)


# -- check_axioms ----------------------------------------------------------

def test_k2_passes_every_axiom():
    rep = check_axioms(builtin("K2"))
    assert rep.ok
    assert [e.axiom for e in rep.entries] == list(AXIOMS)


def test_z4_with_singleton_sums_passes():
    assert check_axioms(builtin("Z4")).ok


def test_scalar_identity_violation_has_witness():
    rep = check_axioms(k2_spec({(0, 1): {0}, (1, 0): {0}}))
    assert rep.entry("A3").witness == (1,)
    assert not rep.entry("A3").passed


def test_distributivity_failure_reports_direction():
    e = check_axioms(builtin("broken-distrib")).entry("Distrib")
    assert e.witness == (2, 1, 2)
    # 2*(1+2) = 2*{0,1,2} = {0,2} strictly contains 2*1 + 2*2 = 2 + 2 = {2}
    assert "ab+ac strictly contained" in e.detail


def test_entries_enforce_witness_rule():
    with pytest.raises(ValueError):
        AxiomEntry("A1", True, (0, 1))
    with pytest.raises(ValueError):
        AxiomEntry("A1", False, None)


@pytest.mark.parametrize("R", CORPUS, ids=ids(CORPUS))
def test_checker_agrees_with_naive_oracle_on_corpus(R):
    expected = axiom_violations(R)
    rep = check_axioms(R)
    for e in rep.entries:
        assert e.witness == expected[e.axiom], e.axiom


def _mutants():
    """Single-cell mutations of small catalogue tables."""
    out = []
    for name in ("K2", "sign", "Z5modG"):
        base = builtin(name)
        n = base.n
        for a, b in itertools.product(range(n), repeat=2):
            for cell in range(1, 1 << n):
                add = [list(r) for r in base.add]
                add[a][b] = cell
                out.append(HyperringSpec(f"{name}[{a},{b}]={cell}", n, 0, base.one, add, base.mul))
            for v in range(n):
                mul = [list(r) for r in base.mul]
                mul[a][b] = v
                out.append(HyperringSpec(f"{name}*[{a},{b}]={v}", n, 0, base.one, base.add, mul))
    return out


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(_mutants()))
def test_checker_agrees_with_naive_oracle_on_mutants(spec):
    expected = axiom_violations(spec)
    for e in check_axioms(spec).entries:
        assert e.witness == expected[e.axiom], e.axiom


@pytest.mark.parametrize("name", ["broken-A4", "broken-distrib", "broken-unital",
                                  "broken-mcomm"])
def test_broken_instances_fail_validation(name):
    with pytest.raises(AxiomFailure) as exc:
        validate(builtin(name))
    assert not exc.value.report.ok


# -- validate --------------------------------------------------------------

def test_validate_k2_negation_is_identity():
    assert validate(builtin("K2")).neg == (0, 1)


def test_validate_sign_hyperfield():
    R = validate(builtin("sign"))
    assert R.neg == (0, 2, 1)


def test_validate_names_empty_cell():
    with pytest.raises(FormatError) as exc:
        validate(k2_spec({(1, 0): set()}))
    assert exc.value.code == "EMPTY_HYPERSUM"
    assert exc.value.location == ("add", 1, 0)


@pytest.mark.parametrize("bad, code", [
    (dict(zero=5), "OUT_OF_RANGE"),
    (dict(one=-1), "OUT_OF_RANGE"),
    (dict(mul=[[0, 0], [0, 7]]), "OUT_OF_RANGE"),
    (dict(mul=[[0, 0]]), "SHAPE_MISMATCH"),
    (dict(add=[[1, 2], [2, 4]]), "OUT_OF_RANGE"),
])
def test_validate_format_failures(bad, code):
    base = dict(name="x", n=2, zero=0, one=1, add=[[1, 2], [2, 3]], mul=[[0, 0], [0, 1]])
    base.update(bad)
    with pytest.raises(FormatError) as exc:
        validate(HyperringSpec(**base))
    assert exc.value.code == code


def test_validate_enforces_carrier_cap():
    with pytest.raises(FormatError) as exc:
        validate(builtin("Z12"), max_size=10)
    assert exc.value.code == "TOO_LARGE"


def test_zero_is_moved_to_index_zero():
    # K2 written with zero at index 1
    spec = HyperringSpec.from_tables("K2-swapped", 1, 0, [[{0, 1}, {0}], [{0}, {1}]],
                                     [[0, 1], [1, 1]])
    R = validate(spec)
    assert R.zero == 0 and R.one == 1
    assert R.labels == (1, 0)
    assert R.add == builtin("K2").add


# -- invariants of validated rings -----------------------------------------

@pytest.mark.parametrize("R", CORPUS, ids=ids(CORPUS))
def test_validated_invariants(R):
    r = range(R.n)
    for a in r:
        assert R.add[a][R.zero] == 1 << a
        assert R.neg[R.neg[a]] == a
        assert R.mul[a][R.zero] == R.zero
        for b in r:
            assert R.add[a][b] == R.add[b][a]
            for c in r:
                assert set_add(R, 1 << a, R.add[b][c]) == set_add(R, R.add[a][b], 1 << c)
                lhs = R.add[b][c] >> a & 1
                assert lhs == set_add(R, 1 << R.neg[b], 1 << a) >> c & 1
                assert lhs == set_add(R, 1 << a, 1 << R.neg[c]) >> b & 1
                assert mask(R.mul[a][x] for x in members(R.add[b][c])) == \
                    R.add[R.mul[a][b]][R.mul[a][c]]
    assert R.neg[R.zero] == R.zero
