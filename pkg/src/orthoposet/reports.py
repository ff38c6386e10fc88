"""Report values shared by the structural checks and the law suites.

Reports are plain frozen dataclasses; JSON rendering is deterministic
(stable field and witness order, no timestamps) so identical inputs give
byte-identical documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

TOOL_VERSION = "0.1.0"


@dataclass(frozen=True)
class Witness:
    """A counterexample: the elements involved plus the violating cone sets."""

    elements: tuple[str, ...]
    clause: str = ""
    cones: tuple[tuple[str, tuple[str, ...]], ...] = ()


@dataclass(frozen=True)
class CheckReport:
    """Verdict of one structural axiom check.

    ``holds`` is true exactly when ``witnesses`` is empty; witnesses are
    emitted in canonical element-index order.  ``elapsed`` is measured for
    the human-readable output and deliberately left out of JSON.
    """

    property_id: str
    holds: bool
    witnesses: tuple[Witness, ...]
    mode: str = ""
    elapsed: float = 0.0


@dataclass(frozen=True)
class LawReport:
    """Verdict of one quantified law over a single orthoposet.

    ``applicable`` is false when the law's hypothesis fails on the model;
    the verdict is then vacuously true and any witnesses carry the
    ``outside-hypothesis`` clause from an informational run.
    """

    law_id: str
    applicable: bool
    holds: bool
    witnesses: tuple[Witness, ...]
    reading: str = ""


def witness_to_dict(w: Witness) -> dict:
    return {
        "elements": list(w.elements),
        "clause": w.clause,
        "cones": {name: list(labels) for name, labels in w.cones},
    }


def check_to_dict(r: CheckReport) -> dict:
    return {
        "property_id": r.property_id,
        "holds": r.holds,
        "mode": r.mode,
        "witnesses": [witness_to_dict(w) for w in r.witnesses],
    }


def law_to_dict(r: LawReport) -> dict:
    return {
        "law_id": r.law_id,
        "applicable": r.applicable,
        "holds": r.holds,
        "reading": r.reading,
        "witnesses": [witness_to_dict(w) for w in r.witnesses],
    }


def report_document(poset_name: str, checks=(), laws=()) -> dict:
    return {
        "poset": poset_name,
        "tool_version": TOOL_VERSION,
        "checks": [check_to_dict(c) for c in checks],
        "laws": [law_to_dict(l) for l in laws],
    }


def render_json(document: dict) -> str:
    return json.dumps(document, indent=2) + "\n"


def format_witness(w: Witness) -> str:
    parts = [f"({', '.join(w.elements)})"]
    if w.clause:
        parts.append(f"[{w.clause}]")
    for name, labels in w.cones:
        parts.append(f"{name}={{{', '.join(labels)}}}")
    return " ".join(parts)
