"""Higgs-de Rham flow periodicity over elliptic curves in characteristic p,
supersingular-reduction scanning, mass-formula verification, and isogeny
clump checks, with exact arithmetic throughout."""

__version__ = "0.1.0"

from .curves import (
    Curve,
    Point,
    automorphism_order,
    count_points,
    curve_from_j,
    hasse_invariant,
    is_supersingular_trace,
    point_order,
)
from .errors import HiggsflowError
from .fields import FieldDescriptor, FqElement, make_field, sqrt_opt
from .flow import (
    ExtBlock,
    FlowTrace,
    HiggsState,
    LineBlock,
    NBlock,
    UnifBlock,
    Verdict,
    classify_higgs,
    decide_periodicity,
    flow_step,
)
from .isogeny import build_isogeny_graph, modular_polynomial, velu_isogenous_j, verify_clump
from .polys import Poly, roots_in_fq
from .scan import RationalCurve, density_summary, parse_rational_curve, reduce_mod_p, scan
from .sslocus import (
    deuring_polynomial,
    enumerate_supersingular,
    hasse_witt_divisor_check,
    mass_check,
    shimura_mass,
)

__all__ = [
    "Curve",
    "ExtBlock",
    "FieldDescriptor",
    "FlowTrace",
    "FqElement",
    "HiggsState",
    "HiggsflowError",
    "LineBlock",
    "NBlock",
    "Point",
    "Poly",
    "RationalCurve",
    "UnifBlock",
    "Verdict",
    "automorphism_order",
    "build_isogeny_graph",
    "classify_higgs",
    "count_points",
    "curve_from_j",
    "decide_periodicity",
    "density_summary",
    "deuring_polynomial",
    "enumerate_supersingular",
    "flow_step",
    "hasse_invariant",
    "hasse_witt_divisor_check",
    "is_supersingular_trace",
    "make_field",
    "mass_check",
    "modular_polynomial",
    "parse_rational_curve",
    "point_order",
    "reduce_mod_p",
    "roots_in_fq",
    "scan",
    "shimura_mass",
    "sqrt_opt",
    "velu_isogenous_j",
    "verify_clump",
]
