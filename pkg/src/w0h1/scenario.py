"""JSON scenario files: schema, parameter templates and bundled examples.

Every scenario is a JSON object with a ``kind`` field.  Rationals are written
as strings ``"p/q"`` (integers are accepted too); permutations as image
arrays.  A scenario may declare integer ``params`` with defaults; any string
value of the exact form ``"${name}"`` is replaced by that parameter.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema

from .covers import (
    BranchGermParam,
    Component,
    CoveringSpec,
    SpecialPoint,
    intersection_multiplicity_oracle,
)
from .exactlin import QMatrix, as_rational
from .kunneth import CyclicAction
from .strata import Adjacency, StratifiedBranchData, Stratum
from .weights import CurveDualGraph

KINDS = ("stratified", "covering", "spectrum", "kunneth", "curve_graph")


class ScenarioError(ValueError):
    """Unreadable or invalid scenario input."""


_count = {"type": "integer", "minimum": 0}
_pos = {"type": "integer", "minimum": 1}
_rat = {"type": ["string", "integer"]}
_meta = {
    "kind": {"enum": list(KINDS)},
    "name": {"type": "string"},
    "description": {"type": "string"},
    "reference": {"type": "string"},
    "params": {"type": "object", "additionalProperties": {"type": "integer"}},
}


def _obj(props: dict, required: list[str]) -> dict:
    return {"type": "object", "properties": props, "required": required,
            "additionalProperties": False}


SCHEMAS: dict[str, dict] = {
    "stratified": _obj({
        **_meta,
        "strata": {"type": "array", "items": _obj({
            "id": {"type": "string"},
            "branches": _pos,
            "monodromy": {"type": "array", "items": {"type": "array", "items": _count}},
            "closed": {"type": "boolean"},
        }, ["id", "branches"])},
        "adjacencies": {"type": "array", "items": _obj({
            "deep": {"type": "string"},
            "generic": {"type": "string"},
            "branch_map": {"type": "array", "items": _count},
        }, ["deep", "generic", "branch_map"])},
    }, ["kind", "strata"]),
    "covering": _obj({
        **_meta,
        "degree": {"type": "integer", "minimum": 2},
        "generic_components": _pos,
        "components": {"type": "array", "minItems": 1, "items": _obj({
            "id": {"type": "string"},
            "multiplicity": _pos,
            "h1_is_zero": {"type": "boolean"},
            "explicit_shifts": {"type": "array", "items": _count},
        }, ["id", "multiplicity"])},
        "special_points": {"type": "array", "items": _obj({
            "id": {"type": "string"},
            "branches": {"type": "array", "minItems": 1, "items": _obj({
                "component": {"type": "string"},
                "branch": _count,
            }, ["component"])},
            "removed": {"type": "boolean"},
        }, ["id", "branches"])},
        "intersections": {"type": "array", "items": {
            "type": "object",
            "properties": {
                "point": {"type": "string"},
                "component": {"type": "string"},
                "branch": _count,
                "other": {"type": "string"},
                "number": _pos,
                "germ": _obj({
                    "x": {"type": "array", "items": _rat},
                    "y": {"type": "array", "items": _rat},
                    "truncation": _pos,
                }, ["x", "y"]),
                "poly": {"type": "array", "items": _obj({
                    "coeff": _rat, "x": _count, "y": _count,
                }, ["coeff", "x", "y"])},
            },
            "required": ["point", "component", "other"],
            "additionalProperties": False,
            "oneOf": [{"required": ["number"]}, {"required": ["germ", "poly"]}],
        }},
    }, ["kind", "degree", "components"]),
    "spectrum": _obj({
        **_meta,
        "a": {"type": "integer", "minimum": 2},
        "b": {"type": "integer", "minimum": 2},
        "c": {"type": "integer", "minimum": 2},
    }, ["kind", "a", "b", "c"]),
    "kunneth": _obj({
        **_meta,
        "order": _pos,
        "degree": {"type": "integer", "minimum": 2},
        "z_quotient_smooth": {"type": "boolean"},
        "x": _obj({"generator": {"type": "array", "items": {"type": "array", "items": _rat}}},
                  ["generator"]),
        "z": _obj({"generator": {"type": "array", "items": {"type": "array", "items": _rat}}},
                  ["generator"]),
    }, ["kind", "order", "x", "z"]),
    "curve_graph": _obj({
        **_meta,
        "vertices": _count,
        "edges": {"type": "array", "items": {
            "type": "array", "items": _count, "minItems": 2, "maxItems": 2}},
    }, ["kind", "vertices"]),
}


@dataclass(frozen=True)
class Scenario:
    kind: str
    payload: Any
    name: str | None = None
    description: str = ""
    reference: str = ""
    params: tuple[tuple[str, int], ...] = ()


_TEMPLATE = re.compile(r"^\$\{([A-Za-z_][A-Za-z0-9_]*)\}$")


def substitute(data: Any, params: dict[str, int]) -> Any:
    if isinstance(data, dict):
        return {k: substitute(v, params) for k, v in data.items()}
    if isinstance(data, list):
        return [substitute(v, params) for v in data]
    if isinstance(data, str):
        m = _TEMPLATE.match(data)
        if m:
            if m.group(1) not in params:
                raise ScenarioError(f"template refers to undeclared parameter {m.group(1)!r}")
            return params[m.group(1)]
    return data


def _path(err: jsonschema.ValidationError) -> str:
    out = "$"
    for p in err.absolute_path:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def _matrix(rows: list, where: str) -> QMatrix:
    try:
        return QMatrix.from_rows(rows)
    except (ValueError, ZeroDivisionError) as exc:
        raise ScenarioError(f"{where}: {exc}") from exc


def _build(kind: str, data: dict) -> Any:
    if kind == "stratified":
        strata = [Stratum(s["id"], s["branches"], tuple(s.get("monodromy", ())),
                          s.get("closed", False)) for s in data["strata"]]
        adjs = [Adjacency(a["deep"], a["generic"], tuple(a["branch_map"]))
                for a in data.get("adjacencies", ())]
        return StratifiedBranchData(strata, adjs)
    if kind == "covering":
        comps = [Component(c["id"], c["multiplicity"], c.get("h1_is_zero", True),
                           tuple(c.get("explicit_shifts", ()))) for c in data["components"]]
        points = [SpecialPoint(p["id"], tuple((b["component"], b.get("branch", 0))
                                              for b in p["branches"]), p.get("removed", False))
                  for p in data.get("special_points", ())]
        table = {}
        for k, e in enumerate(data.get("intersections", ())):
            key = (e["point"], e["component"], e.get("branch", 0), e["other"])
            if key in table:
                raise ScenarioError(f"$.intersections[{k}]: duplicate entry {key}")
            if "number" in e:
                table[key] = e["number"]
            else:
                germ = BranchGermParam(tuple(e["germ"]["x"]), tuple(e["germ"]["y"]),
                                       e["germ"].get("truncation", 64))
                poly = {}
                for t in e["poly"]:
                    mono = (t["x"], t["y"])
                    poly[mono] = poly.get(mono, 0) + as_rational(t["coeff"])
                table[key] = intersection_multiplicity_oracle(germ, poly)
        spec = CoveringSpec(data["degree"], comps, points, table,
                            data.get("generic_components"))
        missing = spec.missing_intersections()
        if missing:
            i, j, y, b = missing[0]
            raise ScenarioError(
                f"$.intersections: missing intersection number (i={i}, j={j}, y={y}) "
                f"for branch {b} of {i} at {y}"
            )
        return spec
    if kind == "spectrum":
        return (data["a"], data["b"], data["c"])
    if kind == "kunneth":
        x = CyclicAction(data["order"], _matrix(data["x"]["generator"], "$.x.generator"))
        z = CyclicAction(data["order"], _matrix(data["z"]["generator"], "$.z.generator"))
        return {"x": x, "z": z, "degree": data.get("degree"),
                "z_quotient_smooth": data.get("z_quotient_smooth", False)}
    if kind == "curve_graph":
        return CurveDualGraph(data["vertices"], tuple(tuple(e) for e in data.get("edges", ())))
    raise ScenarioError(f"unknown kind {kind!r}")


def parse_scenario(data: Any, params: dict[str, int] | None = None) -> Scenario:
    """Validate a decoded JSON document and build the payload for its kind."""
    if not isinstance(data, dict):
        raise ScenarioError("$: scenario must be a JSON object")
    kind = data.get("kind")
    if kind not in SCHEMAS:
        raise ScenarioError(f"$.kind: expected one of {', '.join(KINDS)}, got {kind!r}")
    declared = dict(data.get("params", {}))
    for k in params or {}:
        if k not in declared:
            raise ScenarioError(f"unknown parameter {k!r}; scenario declares "
                                f"{sorted(declared) or 'none'}")
    declared.update(params or {})
    data = substitute(data, declared)
    validator = jsonschema.Draft202012Validator(SCHEMAS[kind])
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise ScenarioError(f"{_path(err)}: {err.message}")
    try:
        payload = _build(kind, data)
    except ScenarioError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise ScenarioError(f"{kind} scenario: {exc}") from exc
    return Scenario(kind, payload, data.get("name"), data.get("description", ""),
                    data.get("reference", ""), tuple(sorted(declared.items())))


def loads_scenario(text: str, params: dict[str, int] | None = None) -> Scenario:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(
            f"invalid JSON at line {exc.lineno} column {exc.colno} "
            f"(char offset {exc.pos}): {exc.msg}"
        ) from exc
    return parse_scenario(data, params)


def load_scenario(path: str | Path, params: dict[str, int] | None = None) -> Scenario:
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise ScenarioError(f"{path}: {exc.strerror}") from exc
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ScenarioError(f"{path}: not UTF-8 (byte offset {exc.start})") from exc
    try:
        return loads_scenario(text, params)
    except ScenarioError as exc:
        raise ScenarioError(f"{path}: {exc}") from exc


def example_names() -> list[str]:
    files = resources.files("w0h1") / "examples"
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def example_text(name: str) -> str:
    res = resources.files("w0h1") / "examples" / f"{name}.json"
    if not res.is_file():
        raise ScenarioError(f"no bundled example {name!r}; try one of {', '.join(example_names())}")
    return res.read_text(encoding="utf-8")


def load_example(name: str, params: dict[str, int] | None = None) -> Scenario:
    try:
        return loads_scenario(example_text(name), params)
    except ScenarioError as exc:
        raise ScenarioError(f"example {name}: {exc}") from exc
