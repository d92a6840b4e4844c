"""Exact arithmetic in Iwahori-Hecke algebras of extended affine Weyl groups."""

from .affine import AffineWall, ExtElt, ExtendedWeylGroup, ParamSys, TranslationGroup
from .config import AlgebraConfig, fixture_names, load_config
from .errors import (
    BoundExceeded, ContextMismatch, NotATranslationRequired, NotCentral, NotFound, ParseError,
    ResidueNonzero, SchemaVersionMismatch, ValidationFailed, WindowExceeded,
)
from .hecke import BernsteinElt, HeckeAlgebra, HeckeElt
from .laurent import LaurentInt
from .oracle import VerificationReport, group_algebra_oracle, run_relation_suite
from .roots import RootSystem, WeylGroup, build_root_system, reflect, weyl_enumerate

__all__ = [
    "AffineWall", "AlgebraConfig", "BernsteinElt", "BoundExceeded", "ContextMismatch", "ExtElt",
    "ExtendedWeylGroup", "HeckeAlgebra", "HeckeElt", "LaurentInt", "NotATranslationRequired",
    "NotCentral", "NotFound", "ParamSys", "ParseError", "ResidueNonzero", "RootSystem",
    "SchemaVersionMismatch", "TranslationGroup", "ValidationFailed", "VerificationReport",
    "WeylGroup", "WindowExceeded", "build_root_system", "fixture_names", "group_algebra_oracle",
    "load_config", "reflect", "run_relation_suite", "weyl_enumerate",
]
