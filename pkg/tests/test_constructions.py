from dataclasses import replace

import pytest

from krasner.bits import mask
from krasner.constructions import (BROKEN_TARGETS, QuotientSpec, RingAxiomError, RingSpec,
                                   UnknownBuiltin, builtin, catalogue, check_ring,
                                   check_unit_subgroup, quotient_corpus, quotient_hyperring,
                                   ring_to_hyperring, unit_subgroups, valid_catalogue)
from krasner.core import check_axioms, validate
from krasner.errors import PreconditionError
from krasner.ideals import all_hyperideals


def test_integers_mod_tables():
    Z3 = RingSpec.integers_mod(3)
    assert Z3.add == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert Z3.one == 1 and check_ring(Z3) is None
    assert RingSpec.integers_mod(1).one == 0
    with pytest.raises(PreconditionError):
        RingSpec.integers_mod(0)


def test_ring_to_hyperring_has_singleton_sums():
    H = ring_to_hyperring(RingSpec.integers_mod(4))
    assert H.add[1][3] == mask([0])
    assert all(bin(c).count("1") == 1 for row in H.add for c in row)


def test_ring_axioms_are_checked():
    bad = RingSpec("bad", [[0, 1], [1, 1]], [[0, 0], [0, 1]])
    with pytest.raises(RingAxiomError) as exc:
        ring_to_hyperring(bad)
    assert exc.value.axiom == "add-inverse" and exc.value.witness == (1,)


def test_product_ring():
    P = RingSpec.product(RingSpec.integers_mod(2), RingSpec.integers_mod(3))
    assert P.n == 6 and check_ring(P) is None
    assert P.zero == 0 and P.one == 1 * 3 + 1


def test_z5_quotient_tables():
    H = quotient_hyperring(QuotientSpec(RingSpec.integers_mod(5), (4, 1)))
    assert H.name == "Z5/{1,4}"
    # classes: 0 -> {0}, 1 -> {1,4}, 2 -> {2,3}
    assert H.n == 3 and H.zero == 0 and H.one == 1
    assert H.add[1][1] == mask([0, 2])
    assert H.add[1][2] == mask([1, 2])
    assert H.mul[2][2] == 1
    assert check_axioms(H).ok


@pytest.mark.parametrize("m", range(1, 13))
def test_trivial_subgroup_gives_the_ring(m):
    ring = RingSpec.integers_mod(m)
    H = quotient_hyperring(QuotientSpec(ring, (1 % m,)))
    assert replace(H, name=ring.name) == ring_to_hyperring(ring)


def test_non_subgroup_is_rejected():
    ring = RingSpec.integers_mod(7)
    assert check_unit_subgroup(ring, (1, 3)) == ("inverse", (3,))
    assert check_unit_subgroup(RingSpec.integers_mod(8), (1, 3, 5)) == ("product", (3, 5))
    assert check_unit_subgroup(ring, (2,)) == ("missing-one", (1,))
    assert check_unit_subgroup(RingSpec.integers_mod(6), (1, 2)) == ("inverse", (2,))
    with pytest.raises(PreconditionError):
        quotient_hyperring(QuotientSpec(ring, (1, 3)))


def test_unit_subgroups_of_z7():
    assert unit_subgroups(RingSpec.integers_mod(7)) == [
        (1,), (1, 6), (1, 2, 4), (1, 2, 3, 4, 5, 6)]


@pytest.mark.parametrize("m", range(1, 13))
def test_ideals_of_integers_mod_match_divisors(m):
    R = validate(ring_to_hyperring(RingSpec.integers_mod(m)))
    assert len(all_hyperideals(R)) == sum(1 for d in range(1, m + 1) if m % d == 0)


def test_quotient_corpus_validates():
    corpus = quotient_corpus()
    assert len(corpus) == 35
    for spec in corpus:
        validate(spec)


def test_catalogue_contents():
    assert set(valid_catalogue()) | set(BROKEN_TARGETS) == set(catalogue())
    for name in ("K2", "sign", "Z4", "Z6", "Z5modG", "Z7modG", "degenerate1"):
        assert name in valid_catalogue()


@pytest.mark.parametrize("name", sorted(BROKEN_TARGETS))
def test_broken_instances_fail_only_their_target(name):
    failed = [e.axiom for e in check_axioms(builtin(name)).failures()]
    assert failed == [BROKEN_TARGETS[name]]


def test_unknown_builtin():
    with pytest.raises(UnknownBuiltin) as exc:
        builtin("nope")
    assert "K2" in str(exc.value)
