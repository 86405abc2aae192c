"""Equality, canonical forms, and the sliceness verdict for letter words.

The letter group is generated by ``a, b, b', B, B'`` subject to the five
relators in :data:`RELATORS`.  The engine never rewrites words against the
relators directly; it works in an explicit normal form instead.  Put

    s = b B^-1,    t = b' b^-1.

The relators make ``s`` and ``t`` commute, and the subgroup generated by the
four non-involution letters is the free product of the rank-2 commutative
block on (s, t) and the infinite cyclic block on b.  The involution ``a``
acts on that subgroup by

    s -> b^-1 s b,    t -> b^-1 t b,    b -> b^-1 t^-1,

so every group element is uniquely an alternating sequence of nonzero
syllables ``S(k,l) = s^k t^l`` and ``B(m) = b^m`` together with one
involution bit.  Generator images:

    a  -> (empty, bit 1)          b  -> B(1)
    b' -> S(0,1)  B(1)            B  -> S(-1,0) B(1)
    B' -> S(1,1)  B(1)

That this model satisfies all five relators, that the twist is an
involution, and that the coordinate change round-trips are all shipped as
tests, cross-checked against the bounded search prover in
:mod:`cylknot.oracle` which knows nothing but the relators.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .gauss import GaussDiagram
from .words import FreeWord, Letter, build_word, parse_word


class UnsupportedAFlag(ValueError):
    """Conjugacy canonicalization is only defined for elements with bit 0."""


class SPart(NamedTuple):
    """Syllable s^k t^l of the commutative block; (k, l) != (0, 0) when stored."""

    k: int
    l: int


class BPart(NamedTuple):
    """Syllable b^m of the cyclic block; m != 0 when stored."""

    m: int


Syllable = SPart | BPart


def _syllable_text(part) -> str:
    if isinstance(part, SPart):
        return f"S({part.k},{part.l})"
    return f"B({part.m})"


def _syllable_key(part) -> tuple:
    if isinstance(part, SPart):
        return ("S", part.k, part.l)
    return ("B", part.m)


def _sequence_key(parts) -> tuple:
    return tuple(_syllable_key(p) for p in parts)


def _push(parts: list, syl) -> None:
    # Maintains alternation: merge into a same-block tail, drop zeros.
    if parts and type(parts[-1]) is type(syl):
        last = parts.pop()
        if isinstance(syl, SPart):
            merged = SPart(last.k + syl.k, last.l + syl.l)
            if merged.k or merged.l:
                parts.append(merged)
        else:
            merged = BPart(last.m + syl.m)
            if merged.m:
                parts.append(merged)
    elif isinstance(syl, SPart):
        if syl.k or syl.l:
            parts.append(syl)
    elif syl.m:
        parts.append(syl)


def _theta_parts(parts) -> list:
    """Image of a syllable sequence under the involution twist."""
    out: list = []
    for part in parts:
        if isinstance(part, SPart):
            _push(out, BPart(-1))
            _push(out, part)
            _push(out, BPart(1))
        elif part.m > 0:
            for _ in range(part.m):
                _push(out, BPart(-1))
                _push(out, SPart(0, -1))
        else:
            for _ in range(-part.m):
                _push(out, SPart(0, 1))
                _push(out, BPart(1))
    return out


@dataclass(frozen=True)
class Element:
    """Normal form: alternating nonzero syllables plus the involution bit."""

    parts: tuple = ()
    a_flag: int = 0

    @property
    def is_identity(self) -> bool:
        return not self.parts and not self.a_flag

    @property
    def text(self) -> str:
        body = ".".join(_syllable_text(p) for p in self.parts)
        if self.a_flag:
            return f"{body}.a" if body else "a"
        return body or "1"

    def __repr__(self) -> str:
        return f"Element({self.text})"


IDENTITY = Element()

# Images of the non-involution letters as syllable sequences.
_GEN_PARTS: dict[Letter, tuple] = {
    Letter("b", 1): (BPart(1),),
    Letter("b", -1): (BPart(-1),),
    Letter("b'", 1): (SPart(0, 1), BPart(1)),
    Letter("b'", -1): (BPart(-1), SPart(0, -1)),
    Letter("B", 1): (SPart(-1, 0), BPart(1)),
    Letter("B", -1): (BPart(-1), SPart(1, 0)),
    Letter("B'", 1): (SPart(1, 1), BPart(1)),
    Letter("B'", -1): (BPart(-1), SPart(-1, -1)),
}

RELATOR_TEXTS = (
    "a a",
    "a b a b'",
    "a B a B'",
    "b B^-1 b' B'^-1",
    "b^-1 B b'^-1 B'",
)
RELATORS: tuple[FreeWord, ...] = tuple(parse_word(t) for t in RELATOR_TEXTS)


def reduce_word(word: FreeWord) -> Element:
    """Normal form of a free word; homomorphic with :func:`multiply`."""
    parts: list = []
    flag = 0
    for letter in word:
        if letter.sym == "a":
            flag ^= 1
            continue
        image = _GEN_PARTS[letter]
        for part in _theta_parts(image) if flag else image:
            _push(parts, part)
    return Element(tuple(parts), flag)


def multiply(x: Element, y: Element) -> Element:
    parts = list(x.parts)
    tail = _theta_parts(y.parts) if x.a_flag else y.parts
    for part in tail:
        _push(parts, part)
    return Element(tuple(parts), x.a_flag ^ y.a_flag)


def invert(x: Element) -> Element:
    reversed_parts = [
        SPart(-p.k, -p.l) if isinstance(p, SPart) else BPart(-p.m)
        for p in reversed(x.parts)
    ]
    if x.a_flag:
        reversed_parts = _theta_parts(reversed_parts)
    return Element(tuple(reversed_parts), x.a_flag)


def theta(x: Element) -> Element:
    """Conjugation by the involution letter."""
    return Element(tuple(_theta_parts(x.parts)), x.a_flag)


def equal(w1: FreeWord, w2: FreeWord) -> bool:
    return reduce_word(w1) == reduce_word(w2)


def is_trivial(word: FreeWord) -> bool:
    return reduce_word(word) == IDENTITY


def psi(word: FreeWord) -> FreeWord:
    """Letterwise exponent flip; an involution, and well defined on the group."""
    return tuple(Letter(lt.sym, -lt.exp) for lt in word)


@dataclass(frozen=True)
class CanonicalClass:
    """Canonical representative of a conjugacy orbit united with its twist orbit."""

    parts: tuple = ()

    @property
    def text(self) -> str:
        return ".".join(_syllable_text(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"CanonicalClass({self.text!r})"


def _cyclic_reduce(parts) -> tuple:
    items = list(parts)
    while len(items) >= 2 and type(items[0]) is type(items[-1]):
        last = items.pop()
        first = items.pop(0)
        merged: list = []
        _push(merged, last)
        _push(merged, first)
        items = merged + items
    return tuple(items)


def canon_class(x: Element) -> CanonicalClass:
    """Deterministic representative among all whole-syllable rotations of the
    cyclically reduced forms of ``x`` and of its twist image."""
    if x.a_flag:
        raise UnsupportedAFlag(
            "UnsupportedAFlag: canonicalization with involution bit 1 is not provided"
        )
    best_key = None
    best_parts: tuple = ()
    for candidate in (x.parts, tuple(_theta_parts(x.parts))):
        cycle = _cyclic_reduce(candidate)
        for r in range(max(len(cycle), 1)):
            rotation = cycle[r:] + cycle[:r]
            key = _sequence_key(rotation)
            if best_key is None or key < best_key:
                best_key = key
                best_parts = rotation
    return CanonicalClass(best_parts)


@dataclass(frozen=True)
class InvariantValue:
    """Unordered pair of canonical classes of a word and its exponent flip."""

    pair: tuple[CanonicalClass, CanonicalClass]

    @classmethod
    def of(cls, c1: CanonicalClass, c2: CanonicalClass) -> "InvariantValue":
        first, second = sorted((c1, c2), key=lambda c: c.text)
        return cls((first, second))

    @property
    def texts(self) -> tuple[str, str]:
        return (self.pair[0].text, self.pair[1].text)

    @property
    def is_trivial(self) -> bool:
        return not self.pair[0].parts and not self.pair[1].parts


def invariant(diagram: GaussDiagram) -> InvariantValue:
    """Obstruction value of a diagram; independent of the reference arc."""
    word = build_word(diagram)
    return invariant_of_word(word)


def invariant_of_word(word: FreeWord) -> InvariantValue:
    return InvariantValue.of(
        canon_class(reduce_word(word)),
        canon_class(reduce_word(psi(word))),
    )


@dataclass(frozen=True)
class Z2Coords:
    """Coordinates in the rank-2 commutative block.

    ``raw`` is the (s, t) exponent pair.  ``basis`` expresses the element in
    the (B'B^-1, b'b^-1) basis and exists iff the s-exponent is even.
    """

    raw: tuple[int, int]
    basis: tuple[int, int] | None


def z2_coords(cls: CanonicalClass) -> Z2Coords | None:
    """Coordinates of a canonical class inside the commutative block.

    Returns None when the class does not lie in the block.
    """
    parts = cls.parts
    if not parts:
        return Z2Coords((0, 0), (0, 0))
    if len(parts) == 1 and isinstance(parts[0], SPart):
        k_raw, l_raw = parts[0]
        basis = (k_raw // 2, l_raw - k_raw // 2) if k_raw % 2 == 0 else None
        return Z2Coords((k_raw, l_raw), basis)
    return None


class Verdict(str, Enum):
    NOT_SLICE = "not_slice"
    INCONCLUSIVE = "inconclusive"


def verdict(value: InvariantValue) -> Verdict:
    """Nontrivial obstruction certifies the knot is not slice; trivial says nothing."""
    return Verdict.INCONCLUSIVE if value.is_trivial else Verdict.NOT_SLICE


def word_inverse(word: FreeWord) -> FreeWord:
    """Formal inverse of a free word (reverse, flip every exponent)."""
    return tuple(Letter(lt.sym, -lt.exp) for lt in reversed(word))


def word_of_basis_element(k: int, l: int) -> FreeWord:
    """The word (B'B^-1)^k (b'b^-1)^l in the commutative block."""
    s_pair = parse_word("B' B^-1")
    t_pair = parse_word("b' b^-1")
    out: list[Letter] = []
    out.extend((s_pair if k >= 0 else word_inverse(s_pair)) * abs(k))
    out.extend((t_pair if l >= 0 else word_inverse(t_pair)) * abs(l))
    return tuple(out)
