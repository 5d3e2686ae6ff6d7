"""Efficient refinements of the boundary equivalence and their class-count bounds."""
from .bounds import (PowerBound, dw_bound, frame_boundary_bound, frame_class_bound, ft_cover_bound,
                     ft_signature_bound, linear_bound, uniform_bound)
from .classes import bound_for, class_count, kind_of, refinement_for, within
from .frame import FrameSignature, frame_boundary, frame_refinement, frame_signature, nu_identity_holds
from .linear import LinearSignature, linear_refinement, linear_signature
from .transversal import (FTCertificate, FTSignatureSet, ft_boundary_cover, ft_certificate_test,
                          ft_compatible, ft_refinement, ft_signature)
from .uniform import DEPENDENT, uniform_refinement

__all__ = [
    "PowerBound", "dw_bound", "frame_boundary_bound", "frame_class_bound", "ft_cover_bound",
    "ft_signature_bound", "linear_bound", "uniform_bound", "bound_for", "class_count", "kind_of",
    "refinement_for", "within", "FrameSignature", "frame_boundary", "frame_refinement",
    "frame_signature", "nu_identity_holds", "LinearSignature", "linear_refinement",
    "linear_signature", "FTCertificate", "FTSignatureSet", "ft_boundary_cover",
    "ft_certificate_test", "ft_compatible", "ft_refinement", "ft_signature", "DEPENDENT",
    "uniform_refinement",
]
