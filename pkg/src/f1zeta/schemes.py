"""JSON scheme documents and the built-in corpus.

A document looks like::

    {"name": "Gm", "points": [{"name": "p0", "rank": 1, "torsion": []}]}

Torsion lists are normalized to invariant factors on load, so ``[1, 6]``
becomes ``[6]`` and ``[4, 6]`` becomes ``[2, 12]``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .abelian import F1Scheme, FgAbelianGroup, Point, normalize_torsion
from .errors import InvalidModulusError, ParseError, ValidationError


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def scheme_from_dict(doc) -> F1Scheme:
    if not isinstance(doc, dict):
        raise ValidationError("scheme document must be a JSON object")
    unknown = set(doc) - {"name", "points"}
    if unknown:
        raise ValidationError(f"unknown top-level fields: {sorted(unknown)}")
    name = doc.get("name", "X")
    if not isinstance(name, str):
        raise ValidationError("'name' must be a string")
    points = doc.get("points")
    if not isinstance(points, list):
        raise ValidationError("'points' must be an array")
    out = []
    for i, pt in enumerate(points):
        where = f"points[{i}]"
        if not isinstance(pt, dict):
            raise ValidationError(f"{where} must be an object")
        extra = set(pt) - {"name", "rank", "torsion"}
        if extra:
            raise ValidationError(f"{where}: unknown fields {sorted(extra)}")
        pname = pt.get("name")
        if not isinstance(pname, str) or not pname:
            raise ValidationError(f"{where}: 'name' must be a non-empty string")
        rank = pt.get("rank", 0)
        if not _is_int(rank) or rank < 0:
            raise ValidationError(f"{where}: 'rank' must be a nonnegative integer")
        torsion = pt.get("torsion", [])
        if not isinstance(torsion, list) or not all(_is_int(t) for t in torsion):
            raise ValidationError(f"{where}: 'torsion' must be an array of integers")
        try:
            group = normalize_torsion(torsion)
        except InvalidModulusError as exc:
            raise ValidationError(f"{where}: {exc}") from exc
        out.append(Point(pname, FgAbelianGroup(rank, group)))
    return F1Scheme(tuple(out), name)


def parse_scheme(text: str) -> F1Scheme:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    return scheme_from_dict(doc)


def load_scheme(path) -> F1Scheme:
    return parse_scheme(Path(path).read_text(encoding="utf-8"))


def scheme_to_dict(scheme: F1Scheme) -> dict:
    return {
        "name": scheme.name,
        "points": [
            {"name": p.name, "rank": p.units.rank, "torsion": list(p.units.torsion.moduli)}
            for p in scheme.points
        ],
    }


def emit_scheme(scheme: F1Scheme) -> str:
    """Canonical text: fixed key order, one point per line, trailing newline."""
    d = scheme_to_dict(scheme)
    lines = [_dump(p) for p in d["points"]]
    points = "[\n    " + ",\n    ".join(lines) + "\n  ]" if lines else "[]"
    return f'{{\n  "name": {_dump(d["name"])},\n  "points": {points}\n}}\n'


def _dump(x) -> str:
    return json.dumps(x, ensure_ascii=False, separators=(", ", ": "))


def _single(name: str, rank: int = 0, torsion=()) -> F1Scheme:
    return F1Scheme((Point("p0", FgAbelianGroup.of(rank, torsion)),), name)


def builtin_corpus() -> dict[str, F1Scheme]:
    """Small schemes exercised by ``verify`` and the test-suite."""
    corpus = {
        "point": _single("point"),
        "Gm": _single("Gm", 1),
        "spec_Z2": _single("spec_Z2", 0, [2]),
        "spec_Z3": _single("spec_Z3", 0, [3]),
        "spec_Z4": _single("spec_Z4", 0, [4]),
        "rank2": _single("rank2", 2),
        "Gm_plus_Z2": F1Scheme(
            (Point("gm", FgAbelianGroup.of(1)), Point("z2", FgAbelianGroup.of(0, [2]))),
            "Gm_plus_Z2",
        ),
        "mixed": F1Scheme(
            (
                Point("a", FgAbelianGroup.of(2, [2, 4])),
                Point("b", FgAbelianGroup.of(1, [6])),
                Point("c", FgAbelianGroup.of(0)),
            ),
            "mixed",
        ),
    }
    return corpus
