"""Extremal Hamiltonicity toolkit: exact deciders, parameters, extremal
families, Kelmans reduction certificates and exhaustive verification sweeps."""
from ._backend import BACKEND
from .errors import ConvergenceError, PreconditionError
from .families import (FamilyMax, FamilyRangeError, FamilySpec, alt_clique_formula, build_family, erdos_threshold,
                       family_clique_count, family_edge_count, family_max, family_value, legal_range,
                       min_degree_range, quotient_spectral_radius)
from .graph import (Graph, Graph6Error, GraphError, are_isomorphic, build, complete, cycle, empty, from_graph6,
                    from_mask, join, kelmans, path, petersen, star, to_graph6)
from .hamilton import (DeficiencySet, HamProperty, closure, find_deficiency_set, has_hamilton_cycle,
                       has_hamilton_path, has_property, is_hamilton_connected)
from .parameters import (FeasibilityReport, ParameterId, check_feasibility, clique_count, edge_count,
                         signless_laplacian_radius, spectral_radius)
from .reduction import (KelmansStep, ReductionCertificate, ReductionError, algorithm1, algorithm2, reduce,
                        verify_certificate)
from .sweep import (SweepError, SweepReport, SweepSpec, enumerate_labeled, ingest_graph6, verify_erdos,
                    verify_theorem, verify_weak_bound)

__version__ = "0.1.0"
