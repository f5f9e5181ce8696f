"""Finite Krasner hyperrings, their hyperideal lattices and the lower topology."""
from .constructions import (QuotientSpec, RingSpec, builtin, catalogue, quotient_hyperring,
                            ring_to_hyperring)
from .core import (AxiomReport, Hyperring, HyperringSpec, check_axioms, neg_of, set_add,
                   validate)
from .fileio import emit_hyperring, parse_hyperring
from .ideals import (IdealLattice, all_hyperideals, generated_ideal, ideal_sum, is_hyperideal,
                     lattice_report, maximal_above)
from .spectral import (TheoremReport, build_lower_topology, quasicompact_witness,
                       verify_closure_identity, verify_intersection_identity, verify_theorem,
                       v_set)
from .topology import (FiniteSpace, SpectralVerdict, closure_of, is_irreducible,
                       is_quasi_compact_subset, is_sober, is_T0, open_subspace,
                       space_from_closed_subbasis, spectral_verdict)

__version__ = "0.1.0"
