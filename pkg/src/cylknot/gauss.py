"""Gauss diagrams of knot diagrams in the thickened cylinder.

A diagram is the cyclic sequence of chord endpoints met while walking the
knot once, each endpoint marked with an over/under passage and a crossing
sign.  Endpoints are indexed 1..2n; arc ``k`` is the gap just before
endpoint ``k``, and arc 1 carries the implicit reference point.

Whether a code is realizable by an actual curve in the cylinder is not
checked: every structurally valid code is accepted.  The winding-number-0
hypothesis on the knot is likewise a caller contract; it cannot be read off
a Gauss code.

All values are immutable and every operation is a pure function, so the
module is safe for unrestricted concurrent use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

OVER = "O"
UNDER = "U"
EVEN = "even"
ODD = "odd"


class GaussCodeError(ValueError):
    """Malformed Gauss code or endpoint sequence; collects all issues found."""

    def __init__(self, issues: Iterable[str]):
        self.issues = tuple(issues)
        super().__init__("; ".join(self.issues))


class UnknownChord(KeyError):
    pass


class IndexOutOfRange(IndexError):
    pass


class Endpoint(NamedTuple):
    chord: str
    passage: str  # OVER or UNDER
    sign: int  # +1 or -1


@dataclass(frozen=True)
class GaussDiagram:
    """Validated cyclic endpoint sequence.  Empty sequence = unknot."""

    endpoints: tuple[Endpoint, ...] = ()

    def __post_init__(self):
        issues = _structural_issues(self.endpoints)
        if issues:
            raise GaussCodeError(issues)

    @property
    def size(self) -> int:
        """Number of chords."""
        return len(self.endpoints) // 2

    @property
    def arc_count(self) -> int:
        return max(len(self.endpoints), 1)

    @cached_property
    def chords(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for ep in self.endpoints:
            seen.setdefault(ep.chord)
        return tuple(seen)

    @cached_property
    def chord_positions(self) -> dict[str, tuple[int, int]]:
        """Chord label -> its two 1-based endpoint indices, ascending."""
        found: dict[str, list[int]] = {}
        for idx, ep in enumerate(self.endpoints, 1):
            found.setdefault(ep.chord, []).append(idx)
        return {label: (pos[0], pos[1]) for label, pos in found.items()}

    def __len__(self) -> int:
        return len(self.endpoints)

    def __repr__(self) -> str:
        return f"GaussDiagram({serialize(self)!r})"


def _structural_issues(endpoints: tuple[Endpoint, ...]) -> list[str]:
    issues: list[str] = []
    order: list[str] = []
    occurrences: dict[str, list[Endpoint]] = {}
    for ep in endpoints:
        if ep.passage not in (OVER, UNDER):
            issues.append(f"BadPassage({ep.chord})")
        if ep.sign not in (1, -1):
            issues.append(f"BadSign({ep.chord})")
        if ep.chord not in occurrences:
            order.append(ep.chord)
        occurrences.setdefault(ep.chord, []).append(ep)
    for label in order:
        occ = occurrences[label]
        if len(occ) != 2:
            issues.append(f"UnmatchedChord({label})")
        overs = sum(1 for ep in occ if ep.passage == OVER)
        unders = sum(1 for ep in occ if ep.passage == UNDER)
        if overs > 1 or unders > 1:
            issues.append(f"DuplicatePassage({label})")
        if len(occ) == 2 and occ[0].sign != occ[1].sign:
            issues.append(f"SignMismatch({label})")
    return issues


_TOKEN_RE = re.compile(r"([OU])([0-9A-Za-z]+)([+-])")
_SEPARATOR_RE = re.compile(r"[\s,]+")


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse a Gauss code.

    Tokens are ``O``/``U`` + alphanumeric label + ``+``/``-``, separated by
    optional whitespace or commas.  Raises :class:`GaussCodeError` listing
    every structural problem (unmatched chords, duplicated passages,
    mismatched signs) at once.
    """
    endpoints: list[Endpoint] = []
    pos = 0
    while pos < len(text):
        sep = _SEPARATOR_RE.match(text, pos)
        if sep:
            pos = sep.end()
            continue
        tok = _TOKEN_RE.match(text, pos)
        if tok is None:
            fragment = text[pos : pos + 12]
            raise GaussCodeError([f"BadToken({fragment!r}) at offset {pos}"])
        passage, label, sign = tok.groups()
        endpoints.append(Endpoint(label, passage, 1 if sign == "+" else -1))
        pos = tok.end()
    return GaussDiagram(tuple(endpoints))


def serialize(diagram: GaussDiagram) -> str:
    """Canonical text form: tokens with no separators, original labels."""
    return "".join(
        f"{ep.passage}{ep.chord}{'+' if ep.sign > 0 else '-'}"
        for ep in diagram.endpoints
    )


def _positions(diagram: GaussDiagram, chord: str) -> tuple[int, int]:
    try:
        return diagram.chord_positions[chord]
    except KeyError:
        raise UnknownChord(f"UnknownChord({chord})") from None


def check_arc(diagram: GaussDiagram, arc: int) -> None:
    if not 1 <= arc <= diagram.arc_count:
        raise IndexOutOfRange(
            f"IndexOutOfRange: arc {arc} (diagram has {diagram.arc_count} arcs)"
        )


def linked(diagram: GaussDiagram, c: str, e: str) -> bool:
    """True iff the endpoints of chords ``c`` and ``e`` alternate around the circle."""
    if c == e:
        return False
    i1, i2 = _positions(diagram, c)
    j1, j2 = _positions(diagram, e)
    return (i1 < j1 < i2) != (i1 < j2 < i2)


def chord_parity(diagram: GaussDiagram, c: str) -> str:
    """EVEN iff ``c`` is linked with an even number of chords."""
    _positions(diagram, c)
    count = sum(1 for e in diagram.chords if linked(diagram, c, e))
    return EVEN if count % 2 == 0 else ODD


def even_link_parity(diagram: GaussDiagram, c: str) -> str:
    """Parity of the number of even chords linked with ``c``."""
    _positions(diagram, c)
    count = sum(
        1
        for e in diagram.chords
        if linked(diagram, c, e) and chord_parity(diagram, e) == EVEN
    )
    return EVEN if count % 2 == 0 else ODD


def parity_tables(diagram: GaussDiagram) -> tuple[dict[str, str], dict[str, str]]:
    """Chord parity and even-link parity for every chord, in one O(n^2) pass."""
    par = {c: chord_parity(diagram, c) for c in diagram.chords}
    elp: dict[str, str] = {}
    for c in diagram.chords:
        count = sum(
            1 for e in diagram.chords if par[e] == EVEN and linked(diagram, c, e)
        )
        elp[c] = EVEN if count % 2 == 0 else ODD
    return par, elp


def position_parity(diagram: GaussDiagram, k: int, ref: int = 1) -> str:
    """Parity of the 1-based count of endpoints from arc ``ref`` up to endpoint ``k``."""
    total = len(diagram.endpoints)
    if not 1 <= k <= total:
        raise IndexOutOfRange(
            f"IndexOutOfRange: endpoint {k} (diagram has {total} endpoints)"
        )
    check_arc(diagram, ref)
    count = (k - ref) % total + 1
    return ODD if count % 2 == 1 else EVEN


def fresh_labels(diagram: GaussDiagram, count: int) -> list[str]:
    """Smallest positive-integer labels unused by ``diagram``, in order."""
    used = set(diagram.chords)
    out: list[str] = []
    candidate = 1
    while len(out) < count:
        label = str(candidate)
        if label not in used:
            out.append(label)
            used.add(label)
        candidate += 1
    return out


def connected_sum(d1: GaussDiagram, d2: GaussDiagram) -> GaussDiagram:
    """Concatenate the two codes at their reference arcs.

    Chords of ``d2`` that collide with labels of ``d1`` are relabeled to the
    smallest unused positive integers; non-colliding labels are kept.
    """
    used = set(d1.chords)
    relabel: dict[str, str] = {}
    taken = used | set(d2.chords)
    candidate = 1
    for ep in d2.endpoints:
        if ep.chord in relabel:
            continue
        if ep.chord not in used:
            relabel[ep.chord] = ep.chord
            continue
        while str(candidate) in taken:
            candidate += 1
        relabel[ep.chord] = str(candidate)
        taken.add(str(candidate))
    moved = tuple(
        Endpoint(relabel[ep.chord], ep.passage, ep.sign) for ep in d2.endpoints
    )
    return GaussDiagram(d1.endpoints + moved)
