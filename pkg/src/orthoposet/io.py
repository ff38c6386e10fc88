"""Line-oriented text format for orthoposets, plus DOT export.

A document looks like::

    # optional comments
    poset benzene
    elements: a b b' a'
    covers: 0 < a, a < b, b < 1
    covers: 0 < b', b' < a', a' < 1
    involution: a = a', b = b'
    end

Labels are whitespace-free tokens excluding ``#``, ``<``, ``=`` and ``,``;
``0`` and ``1`` are reserved for the bounds and never listed.  Parsing
takes the reflexive-transitive closure of the covers (with the bounds
added implicitly) and validates the result; serialization emits the
transitive reduction, one cover per line, in index order.
"""

from __future__ import annotations

import graphlib
import re

from .core import (
    BOTTOM_LABEL,
    TOP_LABEL,
    OposetError,
    OrthoPoset,
    from_covers,
    iter_bits,
)

_FORBIDDEN = set("#<=,")
_NAME_RE = re.compile(r"^\S+$")


class DocumentError(OposetError):
    """Malformed poset document: syntax, labels, or cover cycles."""

    def __init__(self, code: str, message: str, line: int | None = None):
        self.code = code
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{code}: {message}{where}")


def _valid_label(tok: str) -> bool:
    return bool(_NAME_RE.match(tok)) and not (_FORBIDDEN & set(tok))


def parse_poset(text: str) -> OrthoPoset:
    """Parse and validate one poset document.

    Raises :class:`DocumentError` for syntax problems, unknown or
    duplicate labels and cover cycles; axiom failures propagate as
    :class:`~orthoposet.core.ValidationError`.
    """
    name = None
    elements: list[str] = []
    covers: list[tuple[str, str]] = []
    involution: list[tuple[str, str]] = []
    ended = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ended:
            raise DocumentError("syntax", "content after 'end'", lineno)
        if line == "end":
            ended = True
            continue
        if line.startswith("poset"):
            parts = line.split()
            if len(parts) != 2 or name is not None:
                raise DocumentError("syntax", "expected a single 'poset <name>' header", lineno)
            name = parts[1]
            continue
        if name is None:
            raise DocumentError("syntax", "document must start with 'poset <name>'", lineno)
        if line.startswith("elements:"):
            for tok in line[len("elements:"):].split():
                if tok in (BOTTOM_LABEL, TOP_LABEL):
                    raise DocumentError("reserved-label", f"{tok!r} is implicit", lineno)
                if not _valid_label(tok):
                    raise DocumentError("syntax", f"invalid label {tok!r}", lineno)
                if tok in elements:
                    raise DocumentError("duplicate-label", tok, lineno)
                elements.append(tok)
            continue
        if line.startswith("covers:"):
            body = line[len("covers:"):].strip()
            if body:
                for entry in body.split(","):
                    parts = entry.split("<")
                    if len(parts) != 2:
                        raise DocumentError("syntax", f"expected 'x < y', got {entry.strip()!r}", lineno)
                    covers.append((parts[0].strip(), parts[1].strip()))
            continue
        if line.startswith("involution:"):
            body = line[len("involution:"):].strip()
            if body:
                for entry in body.split(","):
                    parts = entry.split("=")
                    if len(parts) != 2:
                        raise DocumentError("syntax", f"expected 'x = y', got {entry.strip()!r}", lineno)
                    involution.append((parts[0].strip(), parts[1].strip()))
            continue
        raise DocumentError("syntax", f"unrecognized line {line!r}", lineno)

    if name is None:
        raise DocumentError("syntax", "empty document")
    if not ended:
        raise DocumentError("syntax", "missing 'end'")

    known = {BOTTOM_LABEL, TOP_LABEL, *elements}
    for a, b in covers:
        for tok in (a, b):
            if tok not in known:
                raise DocumentError("unknown-label", tok)
    paired: set[str] = set()
    for a, b in involution:
        for tok in (a, b):
            if tok not in known:
                raise DocumentError("unknown-label", tok)
            if tok in (BOTTOM_LABEL, TOP_LABEL):
                raise DocumentError("reserved-label", f"{tok!r} is paired implicitly")
            if tok in paired:
                raise DocumentError("duplicate-label", f"{tok!r} paired twice")
            paired.add(tok)
    missing = [e for e in elements if e not in paired]
    if missing:
        raise DocumentError("involution-not-total", ", ".join(missing))

    # cycle pre-check on the cover digraph, bounds included
    graph: dict[str, set[str]] = {tok: set() for tok in known}
    for a, b in covers:
        graph[b].add(a)
    for e in elements:
        graph[e].add(BOTTOM_LABEL)
        graph[TOP_LABEL].add(e)
    try:
        tuple(graphlib.TopologicalSorter(graph).static_order())
    except graphlib.CycleError as exc:
        cycle = " < ".join(exc.args[1])
        raise DocumentError("cycle", cycle) from None

    return from_covers(elements, covers, involution, name)


def serialize_poset(o: OrthoPoset) -> str:
    """Canonical document: covers as the transitive reduction, index order."""
    middles = [o.names[i] for i in range(o.n) if i not in (o.bottom, o.top)]
    lines = [f"poset {o.name or 'unnamed'}"]
    lines.append("elements: " + " ".join(middles) if middles else "elements:")
    for x, y in o.covers():
        lines.append(f"covers: {o.names[x]} < {o.names[y]}")
    for x in range(o.n):
        px = o.prime[x]
        if x < px and x != o.bottom:
            lines.append(f"involution: {o.names[x]} = {o.names[px]}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def export_dot(o: OrthoPoset) -> str:
    """Hasse diagram in DOT syntax: nodes, cover edges, one rank group per
    longest-chain height."""
    heights = o.heights()
    lines = [f'digraph "{o.name or "poset"}" {{', "  rankdir=BT;"]
    for h in range(max(heights) + 1):
        level = [i for i in range(o.n) if heights[i] == h]
        if level:
            names = " ".join(f'"{o.names[i]}";' for i in level)
            lines.append(f"  {{ rank=same; {names} }}")
    for x, y in o.covers():
        lines.append(f'  "{o.names[x]}" -> "{o.names[y]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
