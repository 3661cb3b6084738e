# positroid/diagram/parser.py
"""
Reading and writing Le-diagrams.

The ``.led`` format is line oriented::

    # comment
    7 3
    HVVHVHH
    2 6
    3 4

Line one holds ``n r``, line two the lattice path read from the Northeast
corner, and every further line one dot as ``sink source``. The JSON mirror
is ``{"n": 7, "r": 3, "path": "HVVHVHH", "dots": [[2, 6], [3, 4]]}``.
"""

import json
import logging
from typing import Any, Dict, List, Tuple

from pydantic import ValidationError

from positroid.core.exceptions import DiagramError, LePropertyError
from positroid.models.diagram import LeDiagram, LeViolation

logger = logging.getLogger(__name__)


def _strip_comments(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _ints(line: str, count: int, what: str) -> Tuple[int, ...]:
    parts = line.split()
    if len(parts) != count:
        raise DiagramError(f"{what}: expected {count} integers, got {line!r}")
    try:
        return tuple(int(part) for part in parts)
    except ValueError:
        raise DiagramError(f"{what}: expected integers, got {line!r}")


def build_diagram(
    n: int, r: int, path: str, dots: List[Tuple[int, int]]
) -> LeDiagram:
    """Construct and fully validate a diagram from its parts."""
    seen = set()
    for dot in dots:
        if dot in seen:
            raise DiagramError(f"duplicate dot ({dot[0]},{dot[1]})")
        seen.add(dot)
    if len(path) != n:
        raise DiagramError(
            f"path length mismatch: path has {len(path)} steps but n = {n}"
        )
    try:
        diagram = LeDiagram(n=n, r=r, path=path, dots=dots)
    except ValidationError as e:
        first = e.errors()[0]
        raise DiagramError(str(first.get("msg", e)).removeprefix("Value error, "))

    violations = validate_le_property(diagram)
    if violations:
        box = violations[0].box
        raise LePropertyError(
            f"Le-property violated at empty box ({box[0]},{box[1]})",
            violations=violations,
        )
    return diagram


def parse_le_diagram(text: str) -> LeDiagram:
    """
    Parse ``.led`` text into a validated LeDiagram.

    Raises:
        DiagramError: malformed header, path or dot lines, labels that do not
            fit the path, duplicate dots
        LePropertyError: an empty box has a dot above it and a dot to its left
    """
    lines = _strip_comments(text)
    if len(lines) < 2:
        raise DiagramError("expected a header line 'n r' and a path line")
    n, r = _ints(lines[0], 2, "header")
    path = lines[1].upper()
    dots = [_ints(line, 2, "dot") for line in lines[2:]]
    return build_diagram(n, r, path, [(dot[0], dot[1]) for dot in dots])


def validate_le_property(d: LeDiagram) -> List[LeViolation]:
    """
    List every empty box with a dot above it in its column and a dot to its left in its row.

    The witnesses are the nearest such dots. Total on structurally valid
    diagrams; an empty list means the Le-property holds.
    """
    dots = d.dot_set()
    violations = []
    for s, h in sorted(d.boxes()):
        if (s, h) in dots:
            continue
        above = [s2 for s2, h2 in dots if h2 == h and s2 < s]
        left = [h2 for s2, h2 in dots if s2 == s and h2 > h]
        if above and left:
            violations.append(LeViolation((s, h), (max(above), h), (s, min(left))))
    return violations


def format_le_diagram(d: LeDiagram) -> str:
    lines = [f"{d.n} {d.r}", d.path]
    lines.extend(f"{s} {h}" for s, h in d.dots)
    return "\n".join(lines) + "\n"


def le_to_dict(d: LeDiagram) -> Dict[str, Any]:
    return {"n": d.n, "r": d.r, "path": d.path, "dots": [[s, h] for s, h in d.dots]}


def dump_le_json(d: LeDiagram) -> str:
    return json.dumps(le_to_dict(d))


def load_le_json(text: str) -> LeDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DiagramError(f"invalid JSON: {e}")
    if not isinstance(data, dict):
        raise DiagramError("JSON diagram must be an object")
    missing = [key for key in ("n", "r", "path") if key not in data]
    if missing:
        raise DiagramError(f"JSON diagram missing keys: {', '.join(missing)}")
    try:
        dots = [(int(s), int(h)) for s, h in data.get("dots", [])]
        n, r = int(data["n"]), int(data["r"])
    except (TypeError, ValueError):
        raise DiagramError("JSON diagram fields must be integers and [s, h] pairs")
    return build_diagram(n, r, str(data["path"]).upper(), dots)


def load_diagram(text: str) -> LeDiagram:
    """Accept either format; JSON is recognised by a leading brace."""
    if text.lstrip().startswith("{"):
        logger.debug("Reading diagram as JSON")
        return load_le_json(text)
    return parse_le_diagram(text)
