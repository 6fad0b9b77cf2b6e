"""JSON poset files.

Schema: {"elements": [str], "covers": [[str, str]], "labeling": either
{"omega": {name: int}} or {"epsilon": [[x, y, sign]]}, or absent}.
Canonical serialization sorts keys and lists so round-trips are
byte-identical.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .poset import LabeledPoset, Poset, from_cover_relations


def parse(text: str) -> Poset | LabeledPoset:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: "
                         f"{exc.msg}") from None
    if not isinstance(data, dict) or "elements" not in data:
        raise ParseError("expected an object with an 'elements' list")
    try:
        poset = from_cover_relations(data["elements"], data.get("covers", []))
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None
    labeling = data.get("labeling")
    if labeling is None:
        return poset
    if "omega" in labeling:
        return LabeledPoset.with_omega(poset, labeling["omega"])
    if "epsilon" in labeling:
        return LabeledPoset.with_epsilon(poset, [tuple(t) for t in labeling["epsilon"]])
    raise ParseError("labeling must contain 'omega' or 'epsilon'")


def load(path) -> Poset | LabeledPoset:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def to_dict(obj: Poset | LabeledPoset) -> dict:
    poset = obj.poset if isinstance(obj, LabeledPoset) else obj
    data = {
        "elements": sorted(poset.elements),
        "covers": sorted([x, y] for (x, y) in poset.cover_names()),
    }
    if isinstance(obj, LabeledPoset):
        if obj.has_omega:
            data["labeling"] = {"omega": {e: w for e, w in sorted(obj.omega_map().items())}}
        else:
            data["labeling"] = {"epsilon": [[x, y, s] for (x, y, s) in obj.sign_items()]}
    return data


def dumps(obj: Poset | LabeledPoset) -> str:
    return json.dumps(to_dict(obj), sort_keys=True, indent=2) + "\n"


def save(obj: Poset | LabeledPoset, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
