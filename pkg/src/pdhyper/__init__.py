"""Projective dimension of string and cycle hypergraphs.

Quick use::

    >>> from pdhyper import parse_pattern, pd
    >>> pd(parse_pattern("ccoococ")).value
    5
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .engine import CmVerdict, Method, PdResult, Step, cycle_split, grade, is_cohen_macaulay, pd
from .engine import pd_algorithm, pd_cycle_algorithm, pd_formula, pd_string_algorithm
from .errors import (
    BadIdeal,
    BadPattern,
    CoverageBroken,
    EmptyIdeal,
    InternalMismatch,
    InvalidHypergraph,
    NonMinimalGenerators,
    NotSeparated,
    PdHyperError,
    PreconditionViolated,
    SingleGenerator,
    TooLarge,
    UnsupportedShape,
)
from .hypergraph import (
    CycleShape,
    DisjointStrings,
    Hypergraph,
    OtherShape,
    StringShape,
    classify_shape,
    is_separated,
    load_hypergraph,
    parse_pattern,
    remove_face,
    remove_vertices,
    render_pattern,
)
from .ideal import (
    MonomialIdeal,
    canonical_ideal,
    colon_by_generator,
    hypergraph_of_ideal,
    minimalize,
    parse_ideal,
    random_ideal,
    restrict_to,
)
from .invariants import enumerate_two_special, modularity, profile
from .oracle import BettiTable, betti_mod_p, betti_numbers, build_taylor, grade_oracle, minimize, pd_oracle

__version__ = "0.1.0"
