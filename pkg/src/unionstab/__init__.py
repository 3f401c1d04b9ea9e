"""Union stabilization experiments for two-bridge knots with unknotting tunnels.

Build plat diagrams and put tunnels on them, compute Wirtinger presentations,
then test whether knot-plus-tunnel exteriors can be handlebodies by counting
homomorphisms to small finite groups.
"""
from .casestudy import run_case_study_63
from .diagram import emit_diagram, parse_diagram, perturb, validate
from .plat import attach_tunnels, cf_to_fraction, default_tunnels, two_bridge_plat
from .wirtinger import wirtinger

__version__ = "0.1.0"

__all__ = ["attach_tunnels", "cf_to_fraction", "default_tunnels", "emit_diagram",
           "parse_diagram", "perturb", "run_case_study_63", "two_bridge_plat", "validate",
           "wirtinger"]
