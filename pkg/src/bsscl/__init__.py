"""Exact scl computations in Baumslag-Solitar groups BS(m, l), m != l."""

from .words import (
    AbelianImage,
    CyclicWord,
    GroupParams,
    Word,
    abelianize,
    britton_reduce,
    conjugacy_canonical,
    cyclically_reduce,
    is_alternating,
    is_conjugate,
    is_elliptic,
    make_word,
    parse,
    t_exponent,
    t_length,
    word_to_str,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianImage",
    "CyclicWord",
    "GroupParams",
    "Word",
    "abelianize",
    "britton_reduce",
    "conjugacy_canonical",
    "cyclically_reduce",
    "is_alternating",
    "is_conjugate",
    "is_elliptic",
    "make_word",
    "parse",
    "t_exponent",
    "t_length",
    "word_to_str",
    "__version__",
]
