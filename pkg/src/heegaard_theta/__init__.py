"""Exact Theta-invariant of rational homology spheres from rectangular Heegaard diagrams."""

from .diagram import (
    ALPHA,
    BETA,
    BasepointChoice,
    CombinatorialDiagram,
    Crossing,
    Matching,
    all_basepoints,
    arc_closed_half,
    arc_half_half,
    check_matching,
    cycle_check,
    default_basepoints,
    enumerate_matchings,
    intersection_matrix,
    j_matrix,
    make_diagram,
    pair,
    validate_diagram,
)
from .errors import HeegaardError
from .invariants import (
    EllPairing,
    ThetaReport,
    de_crossing,
    ell,
    ell_two,
    euler_term,
    evaluate_cycle,
    lk_parallel,
    theta,
)
from .layout import (
    RectLayout,
    de_arc,
    de_beta,
    de_chain,
    derive_combinatorics,
    parse_layout,
    validate_layout,
)
from .linalg import RatMatrix, mat_det, mat_inverse, parse_rational
from .render import SvgOptions, render_svg
from .source import load_corpus, parse_source, read_source

__version__ = "0.1.0"
