"""Machine (JSON) and human renderings of the verification reports.

Witnesses are written with the element indices of the source file, so a
user can check them by hand against their own tables.
"""
from __future__ import annotations

import json

from .bits import iter_bits
from .core import AXIOM_TITLES, AxiomEntry, AxiomReport, HyperringSpec
from .ideals import IdealLattice, LatticeReport, hasse_edges
from .spectral import LowerTopologySpace, TheoremReport
from .topology import SpectralVerdict

SCHEMA_VERSION = 1


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


def ideal_labels(R: HyperringSpec, I: int) -> list:
    return sorted(R.labels[x] for x in iter_bits(I))


def _plain(label):
    return list(label) if isinstance(label, tuple) else label


def _key(label):
    return tuple(label) if isinstance(label, list) else label


# -- axioms -----------------------------------------------------------------

def axiom_report_doc(report: AxiomReport, spec: HyperringSpec) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "axiom-report",
        "ring": report.name,
        "ok": report.ok,
        "axioms": [{
            "id": e.axiom,
            "title": AXIOM_TITLES[e.axiom],
            "status": e.status,
            "witness": None if e.witness is None else [spec.labels[x] for x in e.witness],
            "detail": e.detail,
        } for e in report.entries],
    }


def decode_axiom_report(doc: dict, spec: HyperringSpec) -> AxiomReport:
    index = {lab: i for i, lab in enumerate(spec.labels)}
    entries = []
    for e in doc["axioms"]:
        w = e["witness"]
        entries.append(AxiomEntry(e["id"], e["status"] == "pass",
                                  None if w is None else tuple(index[x] for x in w),
                                  e["detail"]))
    return AxiomReport(doc["ring"], tuple(entries))


def render_axioms(report: AxiomReport, spec: HyperringSpec) -> str:
    lines = [f"axioms for {report.name} (n={spec.n})"]
    for e in report.entries:
        line = f"  {e.axiom:<12} {e.status.upper():<5} {AXIOM_TITLES[e.axiom]}"
        if e.witness is not None:
            line += f"  witness={tuple(spec.labels[x] for x in e.witness)}"
            if e.detail:
                line += f" ({e.detail})"
        lines.append(line)
    lines.append("RESULT: " + ("all axioms hold" if report.ok else
                               f"{len(report.failures())} axiom(s) violated"))
    return "\n".join(lines)


# -- ideal lattice ------------------------------------------------------------

def lattice_doc(L: IdealLattice, report: LatticeReport) -> dict:
    R = L.ring
    maximal = set(L.maximal())
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "ideal-lattice",
        "ring": R.name,
        "ideals": [{"index": i, "members": ideal_labels(R, I), "proper": i != L.top,
                    "maximal": i in maximal} for i, I in enumerate(L.ideals)],
        "hasse": [list(e) for e in hasse_edges(L)],
        "top": L.top,
        "bottom": L.bottom,
        "report": {
            "is_complete_lattice": report.is_complete_lattice,
            "compact_elements": list(report.compact_elements),
            "is_algebraic": report.is_algebraic,
            "exhaustive": report.exhaustive,
            "witnesses": {k: list(v) for k, v in report.witnesses.items()},
        },
    }


def render_lattice(L: IdealLattice, report: LatticeReport) -> str:
    R = L.ring
    maximal = set(L.maximal())
    lines = [f"hyperideals of {R.name}: {len(L)} ({len(L.proper)} proper)"]
    for i, I in enumerate(L.ideals):
        tags = []
        if i == L.top:
            tags.append("R")
        if i == L.bottom:
            tags.append("zero")
        if i in maximal:
            tags.append("maximal")
        suffix = f"  [{', '.join(tags)}]" if tags else ""
        lines.append(f"  I{i}: {{{', '.join(map(str, ideal_labels(R, I)))}}}{suffix}")
    lines.append("inclusion (Hasse): " + (", ".join(f"I{a} < I{b}" for a, b in hasse_edges(L))
                                           or "none"))
    lines.append(f"complete lattice: {report.is_complete_lattice}; "
                 f"compact: {len(report.compact_elements)}/{len(L)}; "
                 f"algebraic: {report.is_algebraic}"
                 + ("" if report.exhaustive else " (covers sampled)"))
    return "\n".join(lines)


# -- spectral verdicts --------------------------------------------------------

def space_labels(space: LowerTopologySpace) -> list:
    return [ideal_labels(space.ring, I) for I in space.points_are]


def _points(m: int, labels: list) -> list:
    return [_plain(labels[p]) for p in iter_bits(m)]


def verdict_doc(v: SpectralVerdict, labels: list, space: str = "") -> dict:
    labels = [_plain(x) for x in labels]
    basis_w = None
    if v.qc_basis_witness is not None:
        reason, *sets = v.qc_basis_witness
        basis_w = {"reason": reason, "sets": [_points(s, labels) for s in sets]}
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "spectral-verdict",
        "space": space,
        "n_points": v.n_points,
        "points": labels,
        "empty": v.empty,
        "t0": {"ok": v.t0, "witness": None if v.t0_witness is None
               else [labels[p] for p in v.t0_witness]},
        "quasi_compact": v.quasi_compact,
        "sober": {"ok": v.sober, "witness": None if v.sober_witness is None else
                  {"closed_set": _points(v.sober_witness[0], labels),
                   "generic_points": v.sober_witness[1]}},
        "qc_open_basis": {"ok": v.qc_open_basis, "witness": basis_w},
        "spectral": v.spectral,
        "consistent_with_t0": v.consistent,
    }


def decode_verdict(doc: dict) -> SpectralVerdict:
    """Inverse of verdict_doc; point labels in the document are resolved against its own list."""
    index = {_key(lab): i for i, lab in enumerate(doc["points"])}

    def to_mask(labels):
        return sum(1 << index[_key(x)] for x in labels)
    t0w = doc["t0"]["witness"]
    sw = doc["sober"]["witness"]
    bw = doc["qc_open_basis"]["witness"]
    return SpectralVerdict(
        t0=doc["t0"]["ok"],
        t0_witness=None if t0w is None else tuple(index[_key(x)] for x in t0w),
        quasi_compact=doc["quasi_compact"],
        sober=doc["sober"]["ok"],
        sober_witness=None if sw is None else (to_mask(sw["closed_set"]), sw["generic_points"]),
        qc_open_basis=doc["qc_open_basis"]["ok"],
        qc_basis_witness=None if bw is None else
        (bw["reason"], *(to_mask(s) for s in bw["sets"])),
        spectral=doc["spectral"],
        consistent=doc["consistent_with_t0"],
        n_points=doc["n_points"],
    )


def _fmt_point(label) -> str:
    if isinstance(label, (list, tuple)):
        return "{" + ",".join(map(str, label)) + "}"
    return str(label)


def render_verdict(v: SpectralVerdict, labels: list, space: str = "") -> str:
    head = f"{space} space" if space else "space"
    lines = [f"{head}: {v.n_points} point(s)" + (" (empty)" if v.empty else "")]
    if v.n_points:
        lines.append("  points: " + " ".join(_fmt_point(x) for x in labels))
    lines.append(f"  T0              {v.t0}" + (
        "" if v.t0_witness is None else
        f"  indistinguishable: {', '.join(_fmt_point(labels[p]) for p in v.t0_witness)}"))
    lines.append(f"  quasi-compact   {v.quasi_compact}")
    lines.append(f"  sober           {v.sober}" + (
        "" if v.sober_witness is None else
        f"  closed set {[_fmt_point(labels[p]) for p in iter_bits(v.sober_witness[0])]} "
        f"has {v.sober_witness[1]} generic point(s)"))
    lines.append(f"  qc open basis   {v.qc_open_basis}")
    lines.append(f"  SPECTRAL        {v.spectral}")
    if not v.consistent:
        lines.append("  INTERNAL INCONSISTENCY: spectral differs from T0 on a finite space")
    return "\n".join(lines)


# -- theorem ------------------------------------------------------------------

def theorem_doc(rep: TheoremReport, R: HyperringSpec, full_labels: list,
                proper_labels: list) -> dict:
    def ideal(I):
        return ideal_labels(R, I)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "theorem-report",
        "ring": rep.ring_name,
        "overall": rep.overall,
        "falsification_candidate": not rep.overall,
        "failures": list(rep.failures),
        "n_ideals": rep.n_ideals,
        "n_proper": rep.n_proper,
        "empty_space": rep.empty_space,
        "step1_full_space_spectral": verdict_doc(rep.step1_full_space_spectral,
                                                 full_labels, "full"),
        "step2": {
            "quasi_compact": rep.step2_quasi_compact,
            "empty_v_iff_whole_ring": rep.step2_empty_v_iff_r,
            "families_checked": rep.step2_families_checked,
            "witnesses": [{
                "family": [ideal(I) for I in w.family],
                "subfamily": [ideal(w.family[i]) for i in w.indices],
                "elements": [R.labels[e] for e in w.elements],
            } for w in rep.step2_witnesses],
        },
        "step3": {
            "sober": rep.step3_sober,
            "t0": rep.step3_t0,
            "generic_points": [{"closed_set": _points(K, proper_labels), "generic": ideal(I)}
                               for K, I in rep.step3_generic_points],
        },
        "step4": {"open": rep.step4_open, "subspace_agrees": rep.step4_subspace_agrees},
        "identity_intersection": {
            "ok": rep.identity_intersection,
            "witness": None if rep.identity_intersection_witness is None
            else [ideal(I) for I in rep.identity_intersection_witness]},
        "identity_closure": {
            "ok": rep.identity_closure,
            "witness": None if rep.identity_closure_witness is None
            else ideal(rep.identity_closure_witness)},
        "proper_space_verdict": verdict_doc(rep.proper_space_verdict, proper_labels, "proper"),
    }


def render_theorem(rep: TheoremReport, R: HyperringSpec, proper_labels: list) -> str:
    def ok(flag):
        return "PASS" if flag else "FAIL"

    def ideal(I):
        return "{" + ",".join(map(str, ideal_labels(R, I))) + "}"
    lines = [f"spectrality of the proper-hyperideal space of {rep.ring_name}",
             f"  hyperideals: {rep.n_ideals}, proper: {rep.n_proper}"
             + ("  (proper space is empty; verdicts hold vacuously)" if rep.empty_space else "")]
    lines.append(f"  [{ok(rep.step1_full_space_spectral.spectral)}] (1) space of all "
                 "hyperideals is spectral")
    lines.append(f"  [{ok(rep.step2_quasi_compact and rep.step2_empty_v_iff_r)}] (2) proper space "
                 f"is quasi-compact; {rep.step2_families_checked} empty-intersection families, "
                 f"{len(rep.step2_witnesses)} witnesses")
    seen = set()
    for w in rep.step2_witnesses:
        key = (tuple(w.family[i] for i in w.indices), w.elements)
        if not w.indices or key in seen:
            continue
        seen.add(key)
        if len(seen) > 6:
            lines.append("        ...")
            break
        terms = " + ".join(str(R.labels[e]) for e in w.elements)
        ideals = ", ".join(ideal(w.family[i]) for i in w.indices)
        lines.append(f"        1 in {terms}  from {ideals}")
    lines.append(f"  [{ok(rep.step3_sober and rep.step3_t0)}] (3) proper space is sober "
                 f"(T0: {rep.step3_t0}); generic points:")
    for K, I in rep.step3_generic_points:
        pts = " ".join(_fmt_point(proper_labels[p]) for p in iter_bits(K))
        lines.append(f"        {{{pts}}} <- {ideal(I)}")
    lines.append(f"  [{ok(rep.step4_open and rep.step4_subspace_agrees)}] (4) proper space is "
                 "open: complement is the closed point {R}")
    lines.append(f"  [{ok(rep.identity_intersection)}] intersection of V(I) equals V(sum of I)")
    lines.append(f"  [{ok(rep.identity_closure)}] closure of each point I equals V(I)")
    lines.append(f"  [{ok(rep.proper_space_verdict.spectral)}] proper space is spectral")
    lines.append("RESULT: " + ("verified" if rep.overall else
                               "FALSIFICATION CANDIDATE: " + ", ".join(rep.failures)))
    return "\n".join(lines)

