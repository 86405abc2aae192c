"""Acceptance battery: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import random
import time
from pathlib import Path

from cylknot import (
    Element,
    IDENTITY,
    RELATORS,
    SPart,
    bfs_prove_equal,
    build_word,
    build_word_at,
    canon_class,
    connected_sum,
    equal,
    format_word,
    invariant,
    invariant_of_word,
    invert,
    parse_gauss_code,
    parse_word,
    phi_word,
    psi,
    reduce_word,
    verdict,
    word_inverse,
    word_of_basis_element,
    z2_coords,
)
from cylknot.cli import main
from cylknot.group import Verdict
from cylknot.moves import random_diagram, random_walk_trace
from cylknot.oracle import apply_step
from cylknot.selfcheck import perturb_word

from conftest import (
    ACCEPTANCE_LINES,
    FIGURE_EIGHT,
    KNOWN_NONSLICE_REDUCED,
    KNOWN_NONSLICE_WORD,
    TREFOIL,
    random_word,
)

GOLDEN_DIR = Path(__file__).parent / "goldens"


def _report(line):
    message = f"ACCEPTANCE {line}: PASS"
    print(message)
    ACCEPTANCE_LINES.append(message)


def test_01_exact_reduction_of_known_word():
    started = time.perf_counter()
    word = parse_word(KNOWN_NONSLICE_WORD)
    assert len(word) == 34
    element = reduce_word(word)
    assert element == Element((SPart(4, 4),), 0)
    assert equal(word, parse_word(KNOWN_NONSLICE_REDUCED))
    cls = canon_class(element)
    coords = z2_coords(cls)
    assert coords.raw == (4, 4)
    assert coords.basis == (2, 2)
    value = invariant_of_word(word)
    assert not value.is_trivial
    assert verdict(value) == Verdict.NOT_SLICE
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    _report(f"01 exact-reduction ({elapsed:.3f}s)")


def test_02_relator_suite():
    started = time.perf_counter()
    for relator in RELATORS:
        assert reduce_word(relator) == IDENTITY
        assert reduce_word(word_inverse(relator)) == IDENTITY
        assert reduce_word(psi(relator)) == IDENTITY
    rng = random.Random(2024)
    variants = []
    for relator in RELATORS:
        variants += [relator, word_inverse(relator), psi(relator)]
    for _ in range(1000):
        product = ()
        for _ in range(rng.randint(1, 6)):
            g = random_word(rng, 5)
            r = rng.choice(variants)
            product += g + r + word_inverse(g)
        assert reduce_word(product) == IDENTITY
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0
    _report(f"02 relator-suite ({elapsed:.2f}s)")


def test_03_model_derivation_proofs():
    started = time.perf_counter()
    facts = (
        ("commutation", "b B^-1 b' b^-1", "b' b^-1 b B^-1", 6),
        ("twist_of_b", "a b a", "b'^-1", 5),
        ("twist_of_B", "a B a", "B'^-1", 5),
        ("twist_of_b_prime", "a b' a", "b^-1", 6),
    )
    for name, left, right, max_len in facts:
        w1, w2 = parse_word(left), parse_word(right)
        result = bfs_prove_equal(w1, w2, max_len=max_len)
        assert result.proved, name
        current = w1
        for step in result.trace:
            current = apply_step(current, step)
        assert current == w2, name
        assert equal(w1, w2), name
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0
    _report(f"03 derivation-proofs ({elapsed:.2f}s)")


def test_04_move_invariance_fuzz():
    started = time.perf_counter()
    trials = 1000
    failures = []
    for index in range(trials):
        seed = 40_000 + index
        rng = random.Random(seed)
        diagram = random_diagram(12, rng)
        steps = rng.randint(1, 20)
        before = invariant(diagram)
        final, _ = random_walk_trace(diagram, steps, seed)
        if invariant(final) != before:
            failures.append(seed)
    assert failures == []
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    _report(f"04 move-invariance ({trials} trials, {elapsed:.1f}s)")


def test_05_reference_independence():
    rng = random.Random(555)
    checked = 0
    for _ in range(200):
        diagram = random_diagram(7, rng)
        base = invariant(diagram)
        total = len(diagram.endpoints)
        for ref in range(1, total + 1):
            word = build_word_at(diagram, ref)
            assert invariant_of_word(word) == base
            shifted = ref % total + 1
            assert build_word_at(diagram, shifted) == phi_word(word)
        checked += 1
    assert checked == 200
    _report("05 reference-independence (200 diagrams, every arc)")


def test_06_classical_vanishing():
    for code, length in ((TREFOIL, 6), (FIGURE_EIGHT, 8)):
        diagram = parse_gauss_code(code)
        word = build_word(diagram)
        assert format_word(word) == " ".join(["a"] * length)
        value = invariant(diagram)
        assert value.is_trivial
        assert verdict(value) == Verdict.INCONCLUSIVE
    _report("06 classical-vanishing (trefoil, figure-eight)")


def test_07_lattice_law():
    for k in range(-5, 6):
        for l in range(-5, 6):
            word = word_of_basis_element(k, l)
            expected = (
                IDENTITY if (k, l) == (0, 0) else Element((SPart(2 * k, k + l),), 0)
            )
            assert reduce_word(word) == expected
            flipped_class = canon_class(reduce_word(psi(word)))
            inverse_class = canon_class(invert(reduce_word(word)))
            assert flipped_class == inverse_class
    _report("07 lattice-law (121 exponent pairs)")


def test_08_connected_sum_law():
    rng = random.Random(888)
    for _ in range(200):
        d1 = random_diagram(6, rng)
        d2 = random_diagram(6, rng)
        total = connected_sum(d1, d2)
        concatenated = build_word(d1) + build_word(d2)
        assert invariant(total) == invariant_of_word(concatenated)
    _report("08 connected-sum (200 random pairs)")


def test_09_oracle_agreement():
    started = time.perf_counter()
    rng = random.Random(999)
    pairs = []
    for _ in range(4600):
        pairs.append((random_word(rng, 8), random_word(rng, 8)))
    for _ in range(400):
        base = random_word(rng, 4)
        pairs.append((base, perturb_word(base, rng, steps=rng.randint(1, 2))))
    assert len(pairs) >= 5000

    equal_short = []
    for w1, w2 in pairs:
        result = bfs_prove_equal(w1, w2, max_len=12, budget=150)
        if result.proved:
            assert equal(w1, w2), (w1, w2)
        if len(w1) <= 6 and len(w2) <= 6 and equal(w1, w2):
            equal_short.append((w1, w2))

    assert equal_short, "sample contained no short equal pairs"
    for w1, w2 in equal_short:
        # Default budget; the length bound is the caller's to pick, and a
        # tight one keeps the breadth-first frontier searchable.  Escalate
        # it a little in case the shortest path needs longer intermediates.
        tight = max(len(w1), len(w2), 1)
        result = None
        for max_len in (tight, tight + 2, tight + 4):
            result = bfs_prove_equal(w1, w2, max_len=max_len)
            if result.proved:
                break
        assert result is not None and result.proved, (w1, w2)
        current = w1
        for step in result.trace:
            current = apply_step(current, step)
        assert current == w2
    elapsed = time.perf_counter() - started
    assert elapsed < 300.0
    _report(
        f"09 oracle-agreement ({len(pairs)} pairs, "
        f"{len(equal_short)} equal short pairs proved, {elapsed:.1f}s)"
    )


def test_10_cli_goldens(capsys):
    cases = (
        ("reduce_nonslice_word.json", ["reduce", KNOWN_NONSLICE_WORD]),
        ("invariant_trefoil.json", ["invariant", TREFOIL]),
        ("invariant_figure_eight.json", ["invariant", FIGURE_EIGHT]),
    )
    for filename, argv in cases:
        expected = (GOLDEN_DIR / filename).read_text()
        assert main(argv + ["--format", "machine"]) == 0
        out = capsys.readouterr().out
        assert out == expected, f"golden mismatch for {filename}"
    with capsys.disabled():
        _report("10 cli-goldens (3 files bit-identical)")
