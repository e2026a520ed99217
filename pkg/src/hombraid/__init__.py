"""Exact construction and verification of Hom-Yang-Baxter solutions."""
from .braid import (BraidRep, BraidWord, build_braid_generators, check_braid_relations,
                    evaluate_braid_word, specialize_candidate, specialize_rep)
from .hybe import (HomModule, HybeCandidate, check_hybe, check_morphism, check_ybe, invert_solution,
                   scale_solution, tau_alpha)
from .linalg import Matrix, Tensor3, kron
from .report import Check, InvariantError, Report
from .scalar import RationalFunction, eval_at, format_scalar, lam, parse_scalar

__all__ = [
    "BraidRep", "BraidWord", "build_braid_generators", "check_braid_relations",
    "evaluate_braid_word", "specialize_candidate", "specialize_rep",
    "HomModule", "HybeCandidate", "check_hybe", "check_morphism", "check_ybe",
    "invert_solution", "scale_solution", "tau_alpha",
    "Matrix", "Tensor3", "kron", "Check", "InvariantError", "Report",
    "RationalFunction", "eval_at", "format_scalar", "lam", "parse_scalar",
]
