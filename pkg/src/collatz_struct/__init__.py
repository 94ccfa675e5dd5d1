"""Exact structural analysis of Syracuse (shortcut Collatz) sequences.

Parity words, complete arrangement tables, A/B type counting and the inverse
map from parity words to generators.
"""
from .kernel import (AffineMap, Dyadic, ElementaryEffects, cumulative_affine, elementary_effects,
                     generated_affine, generated_imparity_count, imparity_count, parity_indicator,
                     shifted_step, syracuse_iter, syracuse_step)
from .structure import (Convention, GeneratedSequence, ParityWord, generate_sequence, is_isoform,
                        parity_vector, render_chromatic, shift_image, word_affine)

__all__ = [
    "AffineMap", "Dyadic", "ElementaryEffects", "cumulative_affine", "elementary_effects",
    "generated_affine", "generated_imparity_count", "imparity_count", "parity_indicator",
    "shifted_step", "syracuse_iter", "syracuse_step",
    "Convention", "GeneratedSequence", "ParityWord", "generate_sequence", "is_isoform",
    "parity_vector", "render_chromatic", "shift_image", "word_affine",
]
