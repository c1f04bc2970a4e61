"""Continuous colorings and injective continuous homomorphisms of countable
compact systems of Cantor-Bendixson rank at most two."""

from .analysis import cb_rank, fixed_point_set, n0_bound, remove_removables, truncate
from .basis import BasisElement, basis_below, canon_p, enumerate_Fp, extract_p
from .coloring import (
    ALEPH0,
    ColoringDecision,
    constrained_truncation_colorable,
    decide_continuous_coloring,
    finite_two_colorable,
    verify_obstruction,
    verify_witness,
)
from .graphs import FiniteGraph
from .order import ComparisonVerdict, compare_canonical, sigma_p_equivalent, truncation_refutes
from .presentation import (
    Connector,
    Family,
    Kind,
    Mode,
    PeriodicOrbit,
    PTuple,
    SystemPresentation,
    make_n_sigma,
    make_odd_cycle,
    make_sigma_p,
    make_x1,
    parse,
    parse_ptuple,
    serialize,
    validate,
)

__version__ = "0.1.0"
