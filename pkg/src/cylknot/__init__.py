"""Sliceness obstruction calculator for knots in the solid torus.

Pipeline: parse a Gauss code, read off the letter word, reduce it in the
letter group, canonicalize modulo reference-point change, and report a
verdict (a nontrivial value certifies the knot is not slice).
"""

from .gauss import (
    EVEN,
    ODD,
    OVER,
    UNDER,
    Endpoint,
    GaussCodeError,
    GaussDiagram,
    IndexOutOfRange,
    UnknownChord,
    chord_parity,
    connected_sum,
    even_link_parity,
    linked,
    parse_gauss_code,
    position_parity,
    serialize,
)
from .group import (
    IDENTITY,
    BPart,
    CanonicalClass,
    Element,
    InvariantValue,
    RELATORS,
    SPart,
    UnsupportedAFlag,
    Verdict,
    Z2Coords,
    canon_class,
    equal,
    invariant,
    invariant_of_word,
    invert,
    is_trivial,
    multiply,
    psi,
    reduce_word,
    theta,
    verdict,
    word_inverse,
    word_of_basis_element,
    z2_coords,
)
from .moves import (
    ANTIPARALLEL,
    FIRST,
    PARALLEL,
    SECOND,
    Move,
    NotApplicable,
    R1Delete,
    R1Insert,
    R2Delete,
    R2Insert,
    R3,
    apply,
    enumerate_moves,
    random_diagram,
    random_walk,
    random_walk_trace,
)
from .oracle import ProofResult, ProofStep, apply_step, bfs_prove_equal
from .words import (
    ALPHABET,
    BadLetter,
    FreeWord,
    Letter,
    build_word,
    build_word_at,
    format_word,
    parse_word,
    phi_word,
)

__version__ = "0.1.0"
