"""Radial homeomorphisms between convex bodies with non-linear recession cones and half-spaces."""
from . import kernels
from .body import Case, ConvexBody, PolyhedralBody, SmoothBody, bessaga_pelczynski_body
from .errors import (CaseMismatchError, InconsistentFrameError, InternalConsistencyError,
                     InvalidInputError, PreconditionError, RadialHomeoError, RootBracketError)
from .frame import Frame, LinearFunctional, build_frame, supporting_functional
from .maps import (IDENTITY, Covered, MapVariant, decompose, forward, forward_many, inverse,
                   inverse_many, transfer_F, transfer_G)
from .verify import Report

__all__ = [
    "kernels", "Case", "ConvexBody", "PolyhedralBody", "SmoothBody", "bessaga_pelczynski_body",
    "RadialHomeoError", "InvalidInputError", "PreconditionError", "CaseMismatchError",
    "InconsistentFrameError", "InternalConsistencyError", "RootBracketError",
    "Frame", "LinearFunctional", "build_frame", "supporting_functional",
    "IDENTITY", "Covered", "MapVariant", "decompose", "forward", "inverse",
    "forward_many", "inverse_many", "transfer_F", "transfer_G", "Report",
]
