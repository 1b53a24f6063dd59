"""Generalized Langton's ants on a sparse grid, with Truchet contours and symmetry checks."""

from .engine import AntPose, Universe, home_return_times, new_universe
from .rules import RuleString, from_code, parse_rule, rule_from_text

__all__ = [
    "AntPose",
    "RuleString",
    "Universe",
    "from_code",
    "home_return_times",
    "new_universe",
    "parse_rule",
    "rule_from_text",
]
