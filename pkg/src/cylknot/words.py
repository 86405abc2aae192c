"""Letter words read off a Gauss diagram.

Walking the diagram from a reference arc, every endpoint contributes one
letter over the five-symbol alphabet ``a, b, b', B, B'``:

* an endpoint of an even chord contributes ``a``;
* an endpoint of an odd chord contributes a ``b``-family letter at an
  undercrossing and a ``B``-family letter at an overcrossing, primed when
  the chord is linked with oddly many even chords, with exponent +1 at odd
  positions and -1 at even positions.

``a`` is an involution in the letter group, so the builder always emits it
with exponent +1.  Reduction and equality live in :mod:`cylknot.group`;
words here are free objects.
"""

from __future__ import annotations

from typing import NamedTuple

from . import gauss
from .gauss import EVEN, ODD, UNDER, GaussDiagram

ALPHABET = ("a", "b", "b'", "B", "B'")


class BadLetter(ValueError):
    pass


class Letter(NamedTuple):
    sym: str
    exp: int  # +1 or -1

    @property
    def text(self) -> str:
        return self.sym if self.exp == 1 else self.sym + "^-1"


FreeWord = tuple[Letter, ...]


def parse_word(text: str) -> FreeWord:
    """Parse whitespace-separated letters, each optionally suffixed ``^-1``."""
    out: list[Letter] = []
    for token in text.split():
        if "^" in token:
            base, _, suffix = token.partition("^")
            if base not in ALPHABET or suffix != "-1":
                raise BadLetter(f"BadLetter({token!r})")
            out.append(Letter(base, -1))
        elif token in ALPHABET:
            out.append(Letter(token, 1))
        else:
            raise BadLetter(f"BadLetter({token!r})")
    return tuple(out)


def format_word(word: FreeWord) -> str:
    return " ".join(letter.text for letter in word)


def build_word(diagram: GaussDiagram) -> FreeWord:
    """Word of the diagram read from the reference arc (arc 1)."""
    return build_word_at(diagram, 1)


def build_word_at(diagram: GaussDiagram, ref: int) -> FreeWord:
    """Word read from arc ``ref``; length is always twice the chord count."""
    gauss.check_arc(diagram, ref)
    total = len(diagram.endpoints)
    par, elp = gauss.parity_tables(diagram)
    out: list[Letter] = []
    for offset in range(total):
        ep = diagram.endpoints[(ref - 1 + offset) % total]
        if par[ep.chord] == EVEN:
            out.append(Letter("a", 1))
            continue
        base = "b" if ep.passage == UNDER else "B"
        if elp[ep.chord] == ODD:
            base += "'"
        out.append(Letter(base, 1 if offset % 2 == 0 else -1))
    return tuple(out)


def phi_word(word: FreeWord) -> FreeWord:
    """Reference-shift action on a built word.

    Moves the first letter to the end and flips every exponent, except that
    ``a`` letters stay at exponent +1, matching what the builder emits.
    Satisfies ``build_word_at(d, ref + 1) == phi_word(build_word_at(d, ref))``
    letter for letter.
    """
    if not word:
        return word
    rotated = word[1:] + word[:1]
    return tuple(
        Letter(lt.sym, 1) if lt.sym == "a" else Letter(lt.sym, -lt.exp)
        for lt in rotated
    )
