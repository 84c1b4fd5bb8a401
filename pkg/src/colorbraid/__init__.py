"""Colored braids, 4-fold simple branched covers and their lifting groupoids."""
from __future__ import annotations

from .action import apply, bw_generator_set, is_liftable, orbit
from .braid import BraidWord, delta4, delta6, gen, parse_word, words_equal
from .covering import Coloring, coloring_arg, rho_I, rho_tilde_I
from .homlift import homology_action, is_homology_trivial
from .kernels import BACKEND
from .perm import Permutation, T, Transposition, kappa
from .rewrite import Budget, ColoredBraid, RewriteCertificate, Unknown, equivalent, replay

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BraidWord", "Budget", "Coloring", "ColoredBraid", "Permutation", "RewriteCertificate",
    "T", "Transposition", "Unknown", "apply", "bw_generator_set", "coloring_arg", "delta4", "delta6",
    "equivalent", "gen", "homology_action", "is_homology_trivial", "is_liftable", "kappa", "orbit",
    "parse_word", "replay", "rho_I", "rho_tilde_I", "words_equal",
]
