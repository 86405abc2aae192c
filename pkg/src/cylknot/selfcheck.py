"""Internal consistency battery: relator suite, involution laws, the
derivation of the normal-form model from the raw relations, and agreement
between the engine and the bounded prover."""

from __future__ import annotations

import random

from . import group, oracle
from .words import Letter, parse_word

# Derived facts the prover must establish from the relators alone.  Each
# entry is (name, left word, right word, max_len for the search).
DERIVED_FACTS = (
    ("commutation", "b B^-1 b' b^-1", "b' b^-1 b B^-1", 6),
    ("twist_of_b", "a b a", "b'^-1", 5),
    ("twist_of_B", "a B a", "B'^-1", 5),
    ("twist_of_b_prime", "a b' a", "b^-1", 6),
    ("roundtrip_b_prime", "b'", "b' b^-1 b", 5),
    ("roundtrip_B", "B", "B b^-1 b", 5),
    ("roundtrip_B_prime", "B'", "b B^-1 b' b^-1 b", 7),
)

_LETTER_POOL = tuple(
    Letter(sym, exp) for sym in ("a", "b", "b'", "B", "B'") for exp in (1, -1)
)


def _random_word(rng: random.Random, max_len: int):
    return tuple(rng.choice(_LETTER_POOL) for _ in range(rng.randint(0, max_len)))


def _check_relators() -> tuple[bool, str]:
    for relator in group.RELATORS:
        for variant in (relator, group.word_inverse(relator), group.psi(relator)):
            if not group.is_trivial(variant):
                return False, f"relator variant not trivial: {variant}"
    return True, f"{len(group.RELATORS)} relators, inverses and flips all trivial"


def _check_psi_involution() -> tuple[bool, str]:
    rng = random.Random(7)
    for _ in range(100):
        word = _random_word(rng, 12)
        if group.psi(group.psi(word)) != word:
            return False, "flip twice is not the identity"
    return True, "exponent flip is an involution on 100 random words"


def _check_theta() -> tuple[bool, str]:
    rng = random.Random(11)
    a = (Letter("a", 1),)
    for _ in range(100):
        word = _random_word(rng, 12)
        x = group.reduce_word(word)
        if group.theta(group.theta(x)) != x:
            return False, "twist twice is not the identity"
        if group.reduce_word(a + word + a) != group.theta(x):
            return False, "twist disagrees with conjugation by the involution letter"
    return True, "twist involution and conjugation law hold on 100 random words"


def _check_derivations(budget: int) -> tuple[bool, str]:
    for name, left, right, max_len in DERIVED_FACTS:
        w1, w2 = parse_word(left), parse_word(right)
        result = oracle.bfs_prove_equal(w1, w2, max_len=max_len, budget=budget)
        if not result.proved:
            return False, f"prover could not derive {name}"
        replayed = w1
        for step in result.trace:
            replayed = oracle.apply_step(replayed, step)
        if replayed != w2:
            return False, f"trace for {name} does not replay"
        if not group.equal(w1, w2):
            return False, f"engine disagrees with proved fact {name}"
    return True, f"all {len(DERIVED_FACTS)} derived facts proved and replayed"


def perturb_word(word, rng: random.Random, steps: int = 1):
    """Rewrite ``word`` with random moves that preserve its group element."""
    current = word
    for _ in range(steps):
        choices = []
        for i in range(len(current) + 1):
            letter = rng.choice(_LETTER_POOL)
            choices.append(current[:i] + (letter, Letter(letter.sym, -letter.exp)) + current[i:])
        for i in range(len(current) - 1):
            first, second = current[i], current[i + 1]
            if first.sym == second.sym and first.exp == -second.exp:
                choices.append(current[:i] + current[i + 2 :])
        current = rng.choice(choices)
    return current


def _check_oracle_agreement(budget: int) -> tuple[bool, str]:
    rng = random.Random(13)
    proved = 0
    for _ in range(120):
        w1 = _random_word(rng, 6)
        w2 = _random_word(rng, 6)
        result = oracle.bfs_prove_equal(w1, w2, max_len=10, budget=min(budget, 300))
        if result.proved:
            proved += 1
            if not group.equal(w1, w2):
                return False, "prover and engine disagree on a random pair"
    for _ in range(30):
        w1 = _random_word(rng, 5)
        w2 = perturb_word(w1, rng, steps=2)
        result = oracle.bfs_prove_equal(
            w1, w2, max_len=max(len(w1), len(w2)) + 4, budget=budget
        )
        if not result.proved:
            return False, "prover missed a perturbation-equal pair"
        if not group.equal(w1, w2):
            return False, "engine rejects a perturbation-equal pair"
        proved += 1
    return True, f"{proved} proved pairs, engine agreed on every one"


def run_selfcheck(budget: int = 200000) -> dict:
    """Run every check; returns a report dict with per-check outcomes."""
    checks = []
    for name, fn in (
        ("relators", _check_relators),
        ("exponent_flip", _check_psi_involution),
        ("twist", _check_theta),
        ("model_derivation", lambda: _check_derivations(budget)),
        ("oracle_agreement", lambda: _check_oracle_agreement(budget)),
    ):
        passed, detail = fn()
        checks.append({"name": name, "passed": passed, "detail": detail})
    return {"passed": all(c["passed"] for c in checks), "checks": checks}
