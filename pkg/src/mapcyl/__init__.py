"""Strong deformation retraction of a mapping cylinder onto its top.

Three evaluators of the same retraction are provided: the composed
construction (``compositional``), the published unfolded formula
(``printed``) and a repaired unfolded formula (``corrected``).
"""

from .closed_form import GammaImpl, gamma
from .cylinder import Base, Cyl, canonicalize, is_on_top, quotient_distance
from .homotopy_data import FIXTURE_NAMES, HtpyEquivalence, fixture, validate_equivalence

__all__ = [
    "Base",
    "Cyl",
    "FIXTURE_NAMES",
    "GammaImpl",
    "HtpyEquivalence",
    "canonicalize",
    "fixture",
    "gamma",
    "is_on_top",
    "quotient_distance",
    "validate_equivalence",
]
