"""Reidemeister moves on Gauss diagrams, plus seeded fuzzing support.

Move descriptors name positions in the diagram they apply to:

* R1 inserts/deletes a chord with two adjacent endpoints on one arc.
* R2 inserts/deletes a pair of chords whose endpoints form two adjacent
  pairs, one pair carrying both overcrossings, with opposite signs
  (the sign check can be dropped with ``loose=True``).  The second site
  repeats the chord order for the parallel interleaving and reverses it
  for the antiparallel one.
* R3 acts on three disjoint adjacent endpoint pairs (sites) occupied by
  three chords x, y, z as (x,y | x,z | y,z), where x is over at the first
  site and under at the second, y over at the first and under at the third,
  z over at the second and under at the third; the move swaps the two
  endpoints within each site.  It is an involution.

All moves preserve the obstruction value; the fuzz suite asserts this.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Union

from .gauss import (
    OVER,
    UNDER,
    Endpoint,
    GaussDiagram,
    check_arc,
    fresh_labels,
)

PARALLEL = "parallel"
ANTIPARALLEL = "antiparallel"
FIRST = "first"
SECOND = "second"


class NotApplicable(ValueError):
    pass


@dataclass(frozen=True)
class R1Insert:
    arc: int
    passage: str
    sign: int

    def __str__(self):
        return f"R1Insert(arc={self.arc}, passage={self.passage}, sign={self.sign:+d})"


@dataclass(frozen=True)
class R1Delete:
    chord: str

    def __str__(self):
        return f"R1Delete(chord={self.chord})"


@dataclass(frozen=True)
class R2Insert:
    arc1: int
    arc2: int
    interleaving: str  # PARALLEL or ANTIPARALLEL
    over_strand: str  # FIRST or SECOND
    sign: int

    def __str__(self):
        return (
            f"R2Insert(arc1={self.arc1}, arc2={self.arc2}, "
            f"interleaving={self.interleaving}, over={self.over_strand}, "
            f"sign={self.sign:+d})"
        )


@dataclass(frozen=True)
class R2Delete:
    chord1: str
    chord2: str

    def __str__(self):
        return f"R2Delete(chords=({self.chord1},{self.chord2}))"


@dataclass(frozen=True)
class R3:
    site_a: int  # each site is the adjacent pair (site, site + 1 cyclically)
    site_b: int
    site_c: int

    def __str__(self):
        return f"R3(sites=({self.site_a},{self.site_b},{self.site_c}))"


Move = Union[R1Insert, R1Delete, R2Insert, R2Delete, R3]


def _flip(passage: str) -> str:
    return UNDER if passage == OVER else OVER


def _cyclically_adjacent(i: int, j: int, total: int) -> bool:
    if total < 2:
        return False
    lo, hi = min(i, j), max(i, j)
    return hi - lo == 1 or (lo == 1 and hi == total)


def _insert_pairs(diagram: GaussDiagram, inserts) -> GaussDiagram:
    """Insert endpoint pairs just before the endpoint opening each named arc.

    Pairs aimed at the same arc land in list order.
    """
    if not diagram.endpoints:
        flat = [ep for _, pair in inserts for ep in pair]
        return GaussDiagram(tuple(flat))
    out: list[Endpoint] = []
    for k in range(1, len(diagram.endpoints) + 1):
        for arc, pair in inserts:
            if arc == k:
                out.extend(pair)
        out.append(diagram.endpoints[k - 1])
    return GaussDiagram(tuple(out))


def _positions_or_fail(diagram: GaussDiagram, chord: str) -> tuple[int, int]:
    try:
        return diagram.chord_positions[chord]
    except KeyError:
        raise NotApplicable(f"UnknownChord({chord})") from None


def _apply_r1_insert(diagram: GaussDiagram, move: R1Insert) -> GaussDiagram:
    _require_arc(diagram, move.arc)
    if move.passage not in (OVER, UNDER):
        raise NotApplicable(f"BadPassage({move.passage!r})")
    if move.sign not in (1, -1):
        raise NotApplicable(f"BadSign({move.sign!r})")
    (label,) = fresh_labels(diagram, 1)
    pair = (
        Endpoint(label, move.passage, move.sign),
        Endpoint(label, _flip(move.passage), move.sign),
    )
    return _insert_pairs(diagram, [(move.arc, pair)])


def _apply_r1_delete(diagram: GaussDiagram, move: R1Delete) -> GaussDiagram:
    i, j = _positions_or_fail(diagram, move.chord)
    total = len(diagram.endpoints)
    if not _cyclically_adjacent(i, j, total):
        raise NotApplicable(
            f"NotAdjacent: chord {move.chord} has endpoints at {i} and {j}"
        )
    keep = [ep for idx, ep in enumerate(diagram.endpoints, 1) if idx not in (i, j)]
    return GaussDiagram(tuple(keep))


def _apply_r2_insert(diagram: GaussDiagram, move: R2Insert) -> GaussDiagram:
    _require_arc(diagram, move.arc1)
    _require_arc(diagram, move.arc2)
    if move.interleaving not in (PARALLEL, ANTIPARALLEL):
        raise NotApplicable(f"BadInterleaving({move.interleaving!r})")
    if move.over_strand not in (FIRST, SECOND):
        raise NotApplicable(f"BadOverStrand({move.over_strand!r})")
    if move.sign not in (1, -1):
        raise NotApplicable(f"BadSign({move.sign!r})")
    c, d = fresh_labels(diagram, 2)
    signs = {c: move.sign, d: -move.sign}
    p1 = OVER if move.over_strand == FIRST else UNDER
    p2 = _flip(p1)
    pair1 = (Endpoint(c, p1, signs[c]), Endpoint(d, p1, signs[d]))
    second_order = (c, d) if move.interleaving == PARALLEL else (d, c)
    pair2 = tuple(Endpoint(lbl, p2, signs[lbl]) for lbl in second_order)
    return _insert_pairs(diagram, [(move.arc1, pair1), (move.arc2, pair2)])


def _apply_r2_delete(
    diagram: GaussDiagram, move: R2Delete, loose: bool
) -> GaussDiagram:
    c, d = move.chord1, move.chord2
    if c == d:
        raise NotApplicable(f"SameChord({c})")
    c1, c2 = _positions_or_fail(diagram, c)
    d1, d2 = _positions_or_fail(diagram, d)
    total = len(diagram.endpoints)
    if _cyclically_adjacent(c1, d1, total) and _cyclically_adjacent(c2, d2, total):
        sites = ((c1, d1), (c2, d2))
    elif _cyclically_adjacent(c1, d2, total) and _cyclically_adjacent(c2, d1, total):
        sites = ((c1, d2), (c2, d1))
    else:
        raise NotApplicable(f"SitesNotAdjacent: chords {c} and {d}")
    passages = []
    for site in sites:
        pa, pb = (diagram.endpoints[p - 1].passage for p in site)
        if pa != pb:
            raise NotApplicable(f"PassagePattern: chords {c} and {d}")
        passages.append(pa)
    if passages[0] == passages[1]:
        raise NotApplicable(f"PassagePattern: chords {c} and {d}")
    if not loose:
        sc = diagram.endpoints[c1 - 1].sign
        sd = diagram.endpoints[d1 - 1].sign
        if sc != -sd:
            raise NotApplicable(f"SignPattern: chords {c} and {d}")
    drop = {c1, c2, d1, d2}
    keep = [ep for idx, ep in enumerate(diagram.endpoints, 1) if idx not in drop]
    return GaussDiagram(tuple(keep))


def _r3_sites(diagram: GaussDiagram, move: R3) -> list[tuple[int, int]]:
    total = len(diagram.endpoints)
    sites = []
    for start in (move.site_a, move.site_b, move.site_c):
        if not 1 <= start <= total:
            raise NotApplicable(f"IndexOutOfRange: site {start}")
        sites.append((start, start % total + 1))
    return sites


def _apply_r3(diagram: GaussDiagram, move: R3) -> GaussDiagram:
    sites = _r3_sites(diagram, move)
    flat = [p for site in sites for p in site]
    if len(set(flat)) != 6:
        raise NotApplicable(f"SitesOverlap: {sites}")
    chord_at = lambda p: diagram.endpoints[p - 1].chord
    pair_sets = [frozenset((chord_at(p), chord_at(q))) for p, q in sites]
    if any(len(ps) != 2 for ps in pair_sets):
        raise NotApplicable(f"SiteSameChord: {sites}")
    x = pair_sets[0] & pair_sets[1]
    y = pair_sets[0] & pair_sets[2]
    z = pair_sets[1] & pair_sets[2]
    if len(x) != 1 or len(y) != 1 or len(z) != 1 or len(x | y | z) != 3:
        raise NotApplicable(f"TrianglePattern: {sites}")
    (x,), (y,), (z,) = x, y, z

    def passage_of(chord: str, site) -> str:
        for p in site:
            if chord_at(p) == chord:
                return diagram.endpoints[p - 1].passage
        raise NotApplicable(f"TrianglePattern: {sites}")

    required = (
        (x, sites[0], OVER),
        (x, sites[1], UNDER),
        (y, sites[0], OVER),
        (y, sites[2], UNDER),
        (z, sites[1], OVER),
        (z, sites[2], UNDER),
    )
    for chord, site, want in required:
        if passage_of(chord, site) != want:
            raise NotApplicable(f"PassagePattern: {sites}")
    out = list(diagram.endpoints)
    for p, q in sites:
        out[p - 1], out[q - 1] = out[q - 1], out[p - 1]
    return GaussDiagram(tuple(out))


def _require_arc(diagram: GaussDiagram, arc: int) -> None:
    try:
        check_arc(diagram, arc)
    except IndexError as exc:
        raise NotApplicable(str(exc)) from None


def apply(diagram: GaussDiagram, move: Move, *, loose: bool = False) -> GaussDiagram:
    """Apply a move; raises :class:`NotApplicable` naming the failed condition."""
    if isinstance(move, R1Insert):
        return _apply_r1_insert(diagram, move)
    if isinstance(move, R1Delete):
        return _apply_r1_delete(diagram, move)
    if isinstance(move, R2Insert):
        return _apply_r2_insert(diagram, move)
    if isinstance(move, R2Delete):
        return _apply_r2_delete(diagram, move, loose)
    if isinstance(move, R3):
        return _apply_r3(diagram, move)
    raise NotApplicable(f"UnknownMove({move!r})")


def _r1_deletes(diagram: GaussDiagram) -> list[R1Delete]:
    total = len(diagram.endpoints)
    out = []
    for chord in diagram.chords:
        i, j = diagram.chord_positions[chord]
        if _cyclically_adjacent(i, j, total):
            out.append(R1Delete(chord))
    return out


def _adjacent_sites(diagram: GaussDiagram) -> list[tuple[int, int]]:
    """All cyclically adjacent endpoint pairs carrying two distinct chords."""
    total = len(diagram.endpoints)
    if total < 2:
        return []
    sites = []
    for p in range(1, total + 1):
        q = p % total + 1
        if p == q:
            continue
        if diagram.endpoints[p - 1].chord != diagram.endpoints[q - 1].chord:
            sites.append((p, q))
    return sites


def _r2_deletes(diagram: GaussDiagram, loose: bool) -> list[R2Delete]:
    # Canonical descriptor order: the chords as met at the all-over site.
    out = []
    for p, q in _adjacent_sites(diagram):
        ep, eq = diagram.endpoints[p - 1], diagram.endpoints[q - 1]
        if ep.passage != OVER or eq.passage != OVER:
            continue
        move = R2Delete(ep.chord, eq.chord)
        try:
            _apply_r2_delete(diagram, move, loose)
        except NotApplicable:
            continue
        out.append(move)
    return out


def _r3_moves(diagram: GaussDiagram) -> list[R3]:
    sites = _adjacent_sites(diagram)
    by_pair: dict[frozenset, list[tuple[int, int]]] = {}
    by_chord: dict[str, list[tuple[int, int]]] = {}
    for site in sites:
        chords = frozenset(diagram.endpoints[p - 1].chord for p in site)
        by_pair.setdefault(chords, []).append(site)
        for c in chords:
            by_chord.setdefault(c, []).append(site)
    found = []
    seen = set()
    for s1 in sites:
        c1 = {diagram.endpoints[p - 1].chord for p in s1}
        for shared in c1:
            for s2 in by_chord.get(shared, []):
                if s2 == s1:
                    continue
                c2 = {diagram.endpoints[p - 1].chord for p in s2}
                third_pair = frozenset(c1 ^ c2)
                if len(third_pair) != 2:
                    continue
                for s3 in by_pair.get(third_pair, []):
                    triple = frozenset((s1, s2, s3))
                    if len(triple) != 3 or triple in seen:
                        continue
                    if len({p for site in triple for p in site}) != 6:
                        continue
                    seen.add(triple)
                    move = _orient_r3(diagram, tuple(triple))
                    if move is not None:
                        found.append(move)
    return found


def _orient_r3(diagram: GaussDiagram, triple) -> R3 | None:
    """Order three candidate sites by over-count (2, 1, 0) and validate."""

    def over_count(site):
        return sum(
            1 for p in site if diagram.endpoints[p - 1].passage == OVER
        )

    ranked = sorted(triple, key=over_count, reverse=True)
    if [over_count(s) for s in ranked] != [2, 1, 0]:
        return None
    move = R3(ranked[0][0], ranked[1][0], ranked[2][0])
    try:
        _apply_r3(diagram, move)
    except NotApplicable:
        return None
    return move


def enumerate_moves(
    diagram: GaussDiagram,
    *,
    include_inserts: bool = True,
    insert_arc_cap: int | None = None,
    loose: bool = False,
) -> list[Move]:
    """Every applicable move descriptor, deterministically ordered.

    Insert moves range over all arcs unless ``insert_arc_cap`` limits how
    many arcs are considered.
    """
    out: list[Move] = []
    out.extend(_r1_deletes(diagram))
    out.extend(_r2_deletes(diagram, loose))
    out.extend(_r3_moves(diagram))
    if include_inserts:
        arc_limit = diagram.arc_count
        if insert_arc_cap is not None:
            arc_limit = min(arc_limit, insert_arc_cap)
        arcs = range(1, arc_limit + 1)
        for arc in arcs:
            for passage in (OVER, UNDER):
                for sign in (1, -1):
                    out.append(R1Insert(arc, passage, sign))
        for arc1 in arcs:
            for arc2 in arcs:
                for inter in (PARALLEL, ANTIPARALLEL):
                    for over in (FIRST, SECOND):
                        for sign in (1, -1):
                            out.append(R2Insert(arc1, arc2, inter, over, sign))
    return out


def random_diagram(max_chords: int, rng: random.Random, *, exact: bool = False) -> GaussDiagram:
    """Uniformly random chord matching with random passages and signs."""
    n = max_chords if exact else rng.randint(0, max_chords)
    slots = list(range(2 * n))
    rng.shuffle(slots)
    endpoints: list[Endpoint | None] = [None] * (2 * n)
    for c in range(n):
        first, second = slots[2 * c], slots[2 * c + 1]
        sign = rng.choice((1, -1))
        over_first = rng.random() < 0.5
        endpoints[first] = Endpoint(str(c + 1), OVER if over_first else UNDER, sign)
        endpoints[second] = Endpoint(str(c + 1), UNDER if over_first else OVER, sign)
    return GaussDiagram(tuple(endpoints))


def _sample_move(diagram: GaussDiagram, rng: random.Random, loose: bool) -> Move:
    kinds = ["r1_insert", "r2_insert"]
    r1d = _r1_deletes(diagram)
    r2d = _r2_deletes(diagram, loose)
    r3s = _r3_moves(diagram)
    if r1d:
        kinds.append("r1_delete")
    if r2d:
        kinds.append("r2_delete")
    if r3s:
        kinds.append("r3")
    kind = rng.choice(kinds)
    arcs = diagram.arc_count
    if kind == "r1_insert":
        return R1Insert(
            rng.randint(1, arcs), rng.choice((OVER, UNDER)), rng.choice((1, -1))
        )
    if kind == "r2_insert":
        return R2Insert(
            rng.randint(1, arcs),
            rng.randint(1, arcs),
            rng.choice((PARALLEL, ANTIPARALLEL)),
            rng.choice((FIRST, SECOND)),
            rng.choice((1, -1)),
        )
    if kind == "r1_delete":
        return rng.choice(r1d)
    if kind == "r2_delete":
        return rng.choice(r2d)
    return rng.choice(r3s)


def random_walk_trace(
    diagram: GaussDiagram, steps: int, seed: int, *, loose: bool = False
) -> tuple[GaussDiagram, list[Move]]:
    """Deterministic seeded walk; returns the final diagram and moves taken."""
    rng = random.Random(seed)
    current = diagram
    taken: list[Move] = []
    for _ in range(steps):
        move = _sample_move(current, rng, loose)
        current = apply(current, move, loose=loose)
        taken.append(move)
    return current, taken


def random_walk(
    diagram: GaussDiagram, steps: int, seed: int, *, loose: bool = False
) -> GaussDiagram:
    final, _ = random_walk_trace(diagram, steps, seed, loose=loose)
    return final
