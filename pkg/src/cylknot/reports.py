"""Report assembly shared by the CLI and the HTTP service.

Every command produces one plain dict.  Machine rendering is canonical
JSON (sorted keys, two-space indent, trailing newline) so that identical
inputs and seeds give bit-identical output.
"""

from __future__ import annotations

import json
import random

from . import gauss, group, moves, oracle, selfcheck
from .words import build_word_at, format_word, parse_word


def _word_fields(word) -> dict:
    element = group.reduce_word(word)
    value = group.invariant_of_word(word)
    own_class = group.canon_class(element) if element.a_flag == 0 else None
    z2 = group.z2_coords(own_class) if own_class is not None else None
    return {
        "word": format_word(word),
        "normal_form": element.text,
        "canonical_pair": list(value.texts),
        "z2": None
        if z2 is None
        else {
            "raw": list(z2.raw),
            "basis": None if z2.basis is None else list(z2.basis),
        },
        "trivial": value.is_trivial,
        "verdict": group.verdict(value).value,
    }


def invariant_report(code: str, ref: int = 1) -> dict:
    diagram = gauss.parse_gauss_code(code)
    word = build_word_at(diagram, ref)
    report = {"command": "invariant", "input": {"gauss_code": code, "ref": ref}}
    report.update(_word_fields(word))
    return report


def reduce_report(word_text: str) -> dict:
    word = parse_word(word_text)
    report = {"command": "reduce", "input": {"word": word_text}}
    report.update(_word_fields(word))
    return report


def equal_report(
    word_text1: str,
    word_text2: str,
    *,
    use_oracle: bool = False,
    max_len: int = 16,
    budget: int = 200000,
) -> dict:
    w1, w2 = parse_word(word_text1), parse_word(word_text2)
    report = {
        "command": "equal",
        "input": {"word1": word_text1, "word2": word_text2},
        "equal": group.equal(w1, w2),
        "normal_form1": group.reduce_word(w1).text,
        "normal_form2": group.reduce_word(w2).text,
    }
    if use_oracle:
        bound = max(max_len, len(w1), len(w2))
        result = oracle.bfs_prove_equal(w1, w2, max_len=bound, budget=budget)
        report["oracle"] = {
            "proved": result.proved,
            "trace": [str(step) for step in result.trace],
            "expanded": result.expanded,
        }
    return report


def orbit_report(code1: str, code2: str) -> dict:
    d1 = gauss.parse_gauss_code(code1)
    d2 = gauss.parse_gauss_code(code2)
    v1, v2 = group.invariant(d1), group.invariant(d2)
    return {
        "command": "orbit",
        "input": {"code1": code1, "code2": code2},
        "equal": v1 == v2,
        "pair1": list(v1.texts),
        "pair2": list(v2.texts),
    }


def fuzz_report(
    trials: int, max_chords: int, steps: int, seed: int, loose: bool = False
) -> dict:
    """Run seeded invariance trials; one record per trial, ordered by index."""
    records = []
    for index in range(trials):
        trial_seed = seed * 1000003 + index
        rng = random.Random(trial_seed)
        diagram = moves.random_diagram(max_chords, rng)
        walk_steps = rng.randint(1, max(steps, 1))
        before = group.invariant(diagram)
        final, taken = moves.random_walk_trace(
            diagram, walk_steps, trial_seed, loose=loose
        )
        after = group.invariant(final)
        records.append(
            {
                "trial": index,
                "seed": trial_seed,
                "initial_code": gauss.serialize(diagram),
                "moves": [str(m) for m in taken],
                "initial_pair": list(before.texts),
                "final_pair": list(after.texts),
                "pass": before == after,
            }
        )
    return {
        "command": "fuzz",
        "input": {
            "trials": trials,
            "max_chords": max_chords,
            "steps": steps,
            "seed": seed,
            "loose": loose,
        },
        "passed": all(r["pass"] for r in records),
        "records": records,
    }


def selfcheck_report(budget: int = 200000) -> dict:
    report = {"command": "selfcheck", "input": {"budget": budget}}
    report.update(selfcheck.run_selfcheck(budget))
    return report


def render_machine(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _human_value(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, str):
        return value if value else "1"
    return str(value)


def render_human(report: dict) -> str:
    """Line-oriented rendering; empty class serializations print as 1."""
    lines = [f"command: {report['command']}"]
    for key, value in report.get("input", {}).items():
        lines.append(f"{key}: {value}")
    if "word" in report:
        lines.append(f"word: {report['word']}")
    for key in ("normal_form", "equal"):
        if key in report:
            lines.append(f"{key.replace('_', ' ')}: {_human_value(report[key])}")
    for key in ("canonical_pair", "pair1", "pair2"):
        if key in report:
            pair = ", ".join(_human_value(v) for v in report[key])
            lines.append(f"{key.replace('_', ' ')}: ({pair})")
    if "z2" in report:
        z2 = report["z2"]
        if z2 is None:
            lines.append("z2: not in the commutative block")
        else:
            raw = tuple(z2["raw"])
            basis = "none" if z2["basis"] is None else tuple(z2["basis"])
            lines.append(f"z2: raw={raw} basis={basis}")
    for key in ("trivial", "verdict", "passed"):
        if key in report:
            lines.append(f"{key}: {_human_value(report[key])}")
    if "oracle" in report:
        proof = report["oracle"]
        status = "proved" if proof["proved"] else "unknown"
        lines.append(f"oracle: {status} (expanded {proof['expanded']})")
        if proof["trace"]:
            lines.append("trace: " + " ".join(proof["trace"]))
    for check in report.get("checks", []):
        status = "ok" if check["passed"] else "FAIL"
        lines.append(f"check {check['name']}: {status} ({check['detail']})")
    if "records" in report:
        failed = [r for r in report["records"] if not r["pass"]]
        lines.append(f"trials: {len(report['records'])}, failed: {len(failed)}")
        for record in failed:
            lines.append(
                f"FAIL trial {record['trial']} seed {record['seed']} "
                f"code {record['initial_code']}"
            )
    return "\n".join(lines) + "\n"
