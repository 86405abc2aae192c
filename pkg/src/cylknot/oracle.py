"""Bounded breadth-first equality prover over the raw relator presentation.

The search knows nothing about the normal-form model: states are exact
letter words, and the only moves are free insertion/deletion of inverse
pairs and replacement of either side of one of the five defining relations
by the other.  A ``Proved`` result is therefore unconditionally sound and
carries a replayable trace; ``Unknown`` carries no information (the search
is bounded, and completeness is out of scope).

Tight ``max_len`` bounds make the search exact and fast: every reachable
state represents the same group element, so the state space is the set of
equal words no longer than the bound.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .words import FreeWord, Letter

# Letters encoded as ints; inverse = index ^ 1.
_LETTERS: tuple[Letter, ...] = (
    Letter("a", 1),
    Letter("a", -1),
    Letter("b", 1),
    Letter("b", -1),
    Letter("b'", 1),
    Letter("b'", -1),
    Letter("B", 1),
    Letter("B", -1),
    Letter("B'", 1),
    Letter("B'", -1),
)
_CODE = {letter: idx for idx, letter in enumerate(_LETTERS)}


def _encode(word: FreeWord) -> tuple[int, ...]:
    return tuple(_CODE[letter] for letter in word)


def _decode(codes: tuple[int, ...]) -> FreeWord:
    return tuple(_LETTERS[c] for c in codes)


def _enc_text(text_pairs: tuple[tuple[str, int], ...]) -> tuple[int, ...]:
    return tuple(_CODE[Letter(sym, exp)] for sym, exp in text_pairs)


# The five defining relations, as (name, left side, right side).
_RELATIONS: tuple[tuple[str, tuple[int, ...], tuple[int, ...]], ...] = (
    ("r1", _enc_text((("a", 1), ("a", 1))), ()),
    ("r2", _enc_text((("a", 1), ("b", 1))), _enc_text((("b'", -1), ("a", 1)))),
    ("r3", _enc_text((("a", 1), ("B", 1))), _enc_text((("B'", -1), ("a", 1)))),
    ("r4", _enc_text((("b", 1), ("B", -1))), _enc_text((("B'", 1), ("b'", -1)))),
    ("r5", _enc_text((("b", -1), ("B", 1))), _enc_text((("B'", -1), ("b'", 1)))),
)


@dataclass(frozen=True)
class ProofStep:
    position: int
    rule: str  # "r1".."r5" or "inv:<letter>"
    direction: str  # "fwd"/"bwd" for relations, "insert"/"delete" for pairs

    def __str__(self):
        return f"{self.rule}@{self.position}({self.direction})"


@dataclass(frozen=True)
class ProofResult:
    proved: bool
    trace: tuple[ProofStep, ...] = ()
    expanded: int = 0


UNKNOWN = ProofResult(False)


def apply_step(word: FreeWord, step: ProofStep) -> FreeWord:
    """Replay one trace step; raises ValueError if it does not fit."""
    codes = _encode(word)
    if step.rule.startswith("inv:"):
        letter_text = step.rule[4:]
        base, _, suffix = letter_text.partition("^")
        x = _CODE[Letter(base, -1 if suffix else 1)]
        pair = (x, x ^ 1)
        if step.direction == "insert":
            new = codes[: step.position] + pair + codes[step.position :]
        else:
            if codes[step.position : step.position + 2] != pair:
                raise ValueError(f"trace step {step} does not match {word}")
            new = codes[: step.position] + codes[step.position + 2 :]
        return _decode(new)
    for name, lhs, rhs in _RELATIONS:
        if name != step.rule:
            continue
        src, dst = (lhs, rhs) if step.direction == "fwd" else (rhs, lhs)
        if codes[step.position : step.position + len(src)] != src:
            raise ValueError(f"trace step {step} does not match {word}")
        return _decode(codes[: step.position] + dst + codes[step.position + len(src) :])
    raise ValueError(f"unknown rule {step.rule}")


def _neighbors(codes: tuple[int, ...], max_len: int):
    length = len(codes)
    for name, lhs, rhs in _RELATIONS:
        for direction, src, dst in (("fwd", lhs, rhs), ("bwd", rhs, lhs)):
            if length - len(src) + len(dst) > max_len:
                continue
            if len(src) == 0:
                for i in range(length + 1):
                    yield codes[:i] + dst + codes[i:], ProofStep(i, name, direction)
            else:
                for i in range(length - len(src) + 1):
                    if codes[i : i + len(src)] == src:
                        yield (
                            codes[:i] + dst + codes[i + len(src) :],
                            ProofStep(i, name, direction),
                        )
    for i in range(length - 1):
        if codes[i] ^ 1 == codes[i + 1]:
            yield (
                codes[:i] + codes[i + 2 :],
                ProofStep(i, f"inv:{_LETTERS[codes[i]].text}", "delete"),
            )
    if length + 2 <= max_len:
        for i in range(length + 1):
            for x in range(len(_LETTERS)):
                yield (
                    codes[:i] + (x, x ^ 1) + codes[i:],
                    ProofStep(i, f"inv:{_LETTERS[x].text}", "insert"),
                )


def bfs_prove_equal(
    w1: FreeWord, w2: FreeWord, max_len: int = 16, budget: int = 200000
) -> ProofResult:
    """Search for a rewrite path from ``w1`` to ``w2``.

    ``max_len`` prunes longer intermediate words and must be at least the
    length of both inputs; at most ``budget`` words are expanded.
    """
    if max_len < max(len(w1), len(w2)):
        raise ValueError("max_len must cover both input words")
    start = _encode(w1)
    target = _encode(w2)
    if start == target:
        return ProofResult(True, (), 0)
    parents: dict[tuple[int, ...], tuple[tuple[int, ...], ProofStep] | None] = {
        start: None
    }
    queue = deque([start])
    expanded = 0
    while queue and expanded < budget:
        current = queue.popleft()
        expanded += 1
        for neighbor, step in _neighbors(current, max_len):
            if neighbor in parents:
                continue
            parents[neighbor] = (current, step)
            if neighbor == target:
                trace: list[ProofStep] = []
                node = neighbor
                while parents[node] is not None:
                    node, back = parents[node]
                    trace.append(back)
                trace.reverse()
                return ProofResult(True, tuple(trace), expanded)
            queue.append(neighbor)
    return ProofResult(False, (), expanded)
