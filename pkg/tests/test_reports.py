import json

import pytest

from krasner import reports
from krasner.constructions import builtin, catalogue
from krasner.core import check_axioms, validate
from krasner.fileio import parse_hyperring
from krasner.ideals import all_hyperideals, lattice_report
from krasner.spectral import FULL, PROPER, build_lower_topology, verify_theorem
from krasner.topology import space_from_closed_subbasis, spectral_verdict

from corpus import CORPUS, ids


@pytest.mark.parametrize("name", catalogue())
def test_axiom_report_round_trip(name):
    spec = builtin(name).canonical()
    rep = check_axioms(spec)
    doc = json.loads(reports.dumps(reports.axiom_report_doc(rep, spec)))
    assert doc["schema_version"] == 1 and doc["ok"] == rep.ok
    assert reports.decode_axiom_report(doc, spec) == rep


def test_witness_uses_file_labels():
    # K2 with zero stored at index 1 and 1+1 = {1}: no element cancels file element 0
    doc = {"name": "k", "size": 2, "zero": 1, "one": 0,
           "add": [[[0]], [[0], [1]]], "mul": [[0, 1], [1, 1]]}
    doc["add"][0].append([0])
    spec = parse_hyperring(json.dumps(doc))
    out = reports.axiom_report_doc(check_axioms(spec), spec)
    a4 = next(a for a in out["axioms"] if a["id"] == "A4")
    assert a4["status"] == "fail" and a4["witness"] == [0]
    assert "witness=(0,)" in reports.render_axioms(check_axioms(spec), spec)


def test_render_axioms_summary():
    text = reports.render_axioms(check_axioms(builtin("broken-A4")), builtin("broken-A4"))
    assert "RESULT: 1 axiom(s) violated" in text
    assert "RESULT: all axioms hold" in reports.render_axioms(check_axioms(builtin("K2")),
                                                              builtin("K2"))


def test_lattice_doc_z6(Z6):
    L = all_hyperideals(Z6)
    doc = reports.lattice_doc(L, lattice_report(L))
    assert [i["members"] for i in doc["ideals"]] == [[0], [0, 3], [0, 2, 4],
                                                     [0, 1, 2, 3, 4, 5]]
    assert [i["maximal"] for i in doc["ideals"]] == [False, True, True, False]
    assert "I1 < I3" in reports.render_lattice(L, lattice_report(L))


@pytest.mark.parametrize("R", CORPUS, ids=ids(CORPUS))
def test_verdict_round_trip(R):
    for variant in (FULL, PROPER):
        space = build_lower_topology(all_hyperideals(R), variant)
        v = spectral_verdict(space.base)
        doc = json.loads(reports.dumps(
            reports.verdict_doc(v, reports.space_labels(space), variant)))
        assert reports.decode_verdict(doc) == v


def test_failing_verdict_round_trip():
    S = space_from_closed_subbasis(3, [0b100])
    v = spectral_verdict(S)
    assert not v.spectral
    doc = json.loads(reports.dumps(reports.verdict_doc(v, list(range(3)))))
    assert doc["t0"]["witness"] == [0, 1]
    assert doc["sober"]["witness"] == {"closed_set": [0, 1, 2], "generic_points": 2}
    assert reports.decode_verdict(doc) == v
    assert "indistinguishable: 0, 1" in reports.render_verdict(v, list(range(3)))


def test_theorem_doc_z6(Z6):
    rep = verify_theorem(Z6)
    L = all_hyperideals(Z6)
    full = reports.space_labels(build_lower_topology(L, FULL))
    proper = reports.space_labels(build_lower_topology(L, PROPER))
    doc = json.loads(reports.dumps(reports.theorem_doc(rep, Z6, full, proper)))
    assert doc["overall"] and not doc["falsification_candidate"]
    assert {"subfamily": [[0, 3], [0, 2, 4]], "elements": [3, 4],
            "family": [[0, 3], [0, 2, 4]]} in doc["step2"]["witnesses"]
    text = reports.render_theorem(rep, Z6, proper)
    assert "1 in 3 + 4  from {0,3}, {0,2,4}" in text
    assert text.endswith("RESULT: verified")


def test_theorem_empty_space_note():
    R = validate(builtin("degenerate1"))
    text = reports.render_theorem(verify_theorem(R), R, [])
    assert "proper space is empty" in text
