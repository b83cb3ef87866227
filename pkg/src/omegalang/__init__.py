"""Balanced tree-word languages over {x, y, z, p} and unary dissection.

Layers, bottom up:

- core_words: alphabet, occurrence counting, replace, height, the z-erasing
  homomorphism.
- grammar_engine: generic context-free grammars plus a chart recognizer,
  the independent membership oracle.
- recognizers: direct linear-time recognizers for the tree-word and
  balanced languages, tree parsing, Catalan enumeration.
- omega: the intersection of the two languages, perfect-tree normal form,
  construction and enumeration by z-count.
- dissection: growth specs, the residue-window dissector, and the pipeline
  splitting geometrically growing unary languages into two infinite parts.
- cli / service: command-line and HTTP surfaces over the same calls.
"""

from .core_words import (
    ALPHABET,
    UnaryWord,
    WordError,
    factors,
    height,
    occur,
    parse_word,
    pi,
    prefixes,
    replace,
    suffixes,
)
from .dissection import (
    ConstantGrowth,
    DissectionReport,
    GeometricGrowth,
    GrowthCheck,
    GrowthError,
    ResidueDissector,
    ThetaRegular,
    UnaryLanguage,
    alpha_for,
    check_growth,
    dissect_geometric,
    image_membership,
    lift_to_theta,
    residue_dissector,
    witness,
)
from .grammar_engine import (
    Cfg,
    ChartRecognition,
    GrammarError,
    accepted_words,
    balanced_grammar,
    bnf_text,
    enumerate_derivations,
    enw_grammar,
    oracle_diff,
    recognize,
)
from .omega import (
    PerfectTreeSpec,
    construct_omega,
    count_omega,
    enumerate_omega,
    feasible_heights,
    is_omega,
    iter_omega,
    verify_height_law,
)
from .recognizers import (
    EnwParseError,
    Leaf,
    Node,
    catalan,
    check_balanced_factors,
    enumerate_enw,
    is_balanced,
    is_enw,
    parse_enw,
    serialize_tree,
    tree_leaves,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHABET",
    "Cfg",
    "ChartRecognition",
    "ConstantGrowth",
    "DissectionReport",
    "EnwParseError",
    "GeometricGrowth",
    "GrammarError",
    "GrowthCheck",
    "GrowthError",
    "Leaf",
    "Node",
    "PerfectTreeSpec",
    "ResidueDissector",
    "ThetaRegular",
    "UnaryLanguage",
    "UnaryWord",
    "WordError",
    "accepted_words",
    "alpha_for",
    "balanced_grammar",
    "bnf_text",
    "catalan",
    "check_balanced_factors",
    "check_growth",
    "construct_omega",
    "count_omega",
    "dissect_geometric",
    "enumerate_derivations",
    "enumerate_enw",
    "enumerate_omega",
    "enw_grammar",
    "factors",
    "feasible_heights",
    "height",
    "image_membership",
    "is_balanced",
    "is_enw",
    "is_omega",
    "iter_omega",
    "lift_to_theta",
    "occur",
    "oracle_diff",
    "parse_enw",
    "parse_word",
    "pi",
    "prefixes",
    "recognize",
    "replace",
    "residue_dissector",
    "serialize_tree",
    "suffixes",
    "tree_leaves",
    "verify_height_law",
    "witness",
]
