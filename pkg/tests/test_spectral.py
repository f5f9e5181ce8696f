import io

import pytest

from krasner import cli, spectral
from krasner.bits import is_subset, mask
from krasner.constructions import builtin
from krasner.core import validate
from krasner.errors import PreconditionError
from krasner.ideals import all_hyperideals
from krasner.spectral import (FULL, PROPER, QCWitness, build_lower_topology,
                              quasicompact_witness, recheck_witness, verify_closure_identity,
                              verify_intersection_identity, verify_theorem, v_set)
from krasner.topology import open_subspace

from corpus import CORPUS, ids
from oracles import up_sets


def spaces_of(R):
    L = all_hyperideals(R)
    return build_lower_topology(L, FULL), build_lower_topology(L, PROPER)


def test_k2_full_space_is_sierpinski(K2):
    full, proper = spaces_of(K2)
    assert full.points_are == (mask([0]), mask([0, 1]))
    assert full.base.closed_sets == (0, 0b10, 0b11)
    assert proper.points_are == (mask([0]),)
    assert proper.base.closed_sets == (0, 1)


def test_v_set_examples(Z6):
    _, proper = spaces_of(Z6)
    assert v_set(proper, mask([0])) == 0b111
    assert v_set(proper, mask([0, 3])) == 0b010
    assert v_set(proper, Z6.carrier) == 0


def test_v_set_rejects_non_ideal(Z6):
    _, proper = spaces_of(Z6)
    with pytest.raises(PreconditionError):
        v_set(proper, mask([0, 2]))


def test_variant_is_checked(K2):
    with pytest.raises(ValueError):
        build_lower_topology(all_hyperideals(K2), "both")


@pytest.mark.parametrize("R", CORPUS, ids=ids(CORPUS))
def test_v_is_antitone(R):
    full, proper = spaces_of(R)
    for I in full.points_are:
        for J in full.points_are:
            if is_subset(I, J):
                for space in (full, proper):
                    assert is_subset(v_set(space, J), v_set(space, I))


@pytest.mark.parametrize("R", [R for R in CORPUS if R.n <= 12], ids=lambda R: R.name)
def test_proper_closed_sets_are_up_sets(R):
    _, proper = spaces_of(R)
    expected = up_sets(proper.points_are, is_subset)
    assert set(proper.base.closed_sets) == expected


@pytest.mark.parametrize("R", CORPUS, ids=ids(CORPUS))
def test_proper_space_is_open_subspace_of_full(R):
    full, proper = spaces_of(R)
    U = full.base.points & ~(1 << full.point_of(R.carrier))
    assert open_subspace(full.base, U).closed_sets == proper.base.closed_sets


@pytest.mark.parametrize("R", CORPUS, ids=ids(CORPUS))
def test_identities(R):
    for space in spaces_of(R):
        assert verify_intersection_identity(space) == (True, None)
        assert verify_closure_identity(space) == (True, None)


def test_z6_witness(Z6):
    _, proper = spaces_of(Z6)
    w = quasicompact_witness(proper, [mask([0, 2, 4]), mask([0, 3])])
    assert w.indices == (0, 1) and w.elements == (4, 3) and w.size == 2
    assert recheck_witness(proper, w)


def test_witness_prefers_smallest_subfamily(Z6):
    _, proper = spaces_of(Z6)
    w = quasicompact_witness(proper, [mask([0, 3]), Z6.carrier])
    assert w.indices == (1,) and w.elements == (1,)


def test_recheck_rejects_forged_witness(Z6):
    _, proper = spaces_of(Z6)
    fam = (mask([0, 2, 4]), mask([0, 3]))
    assert not recheck_witness(proper, QCWitness(fam, (0, 1), (2, 3)))
    assert not recheck_witness(proper, QCWitness(fam, (0, 1), (4, 2)))
    assert not recheck_witness(proper, QCWitness(fam, (0,), (4, 3)))


def test_witness_preconditions(Z6):
    full, proper = spaces_of(Z6)
    with pytest.raises(PreconditionError):
        quasicompact_witness(proper, [mask([0, 3])])
    with pytest.raises(PreconditionError):
        quasicompact_witness(full, [Z6.carrier])


@pytest.mark.parametrize("name", ["K2", "Z6", "degenerate1", "sign", "Z7modG"])
def test_theorem_holds(name):
    R = validate(builtin(name))
    rep = verify_theorem(R)
    assert rep.overall and rep.failures == ()
    assert rep.step1_full_space_spectral.spectral
    assert rep.step2_quasi_compact and rep.step2_empty_v_iff_r
    assert rep.step3_sober and rep.step3_t0 and rep.step4_open
    assert rep.proper_space_verdict.spectral


def test_theorem_generic_points_z6(Z6):
    rep = verify_theorem(Z6)
    assert rep.n_ideals == 4 and rep.n_proper == 3
    # every point is the generic point of its own closure
    assert sorted(I for _, I in rep.step3_generic_points) == sorted(
        [mask([0]), mask([0, 3]), mask([0, 2, 4])])
    assert rep.step2_families_checked == len(rep.step2_witnesses) > 0


def test_degenerate_ring_has_empty_proper_space():
    rep = verify_theorem(validate(builtin("degenerate1")))
    assert rep.empty_space and rep.n_proper == 0 and rep.overall


def test_sampled_subfamilies_are_seeded(Z6):
    a = verify_theorem(Z6, cap=1, seed=5)
    b = verify_theorem(Z6, cap=1, seed=5)
    assert a == b and a.overall


def test_broken_identity_is_reported(monkeypatch):
    monkeypatch.setattr(spectral, "verify_closure_identity", lambda space: (False, 1))
    rep = verify_theorem(validate(builtin("Z6")))
    assert "identity-closure" in rep.failures and not rep.overall
    out, err = io.StringIO(), io.StringIO()
    assert cli.main(["theorem", "--builtin", "Z6"], stdout=out, stderr=err) == 1
