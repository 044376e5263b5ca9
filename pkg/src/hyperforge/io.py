"""The structure file format: a single self-describing JSON document.

Keys: ``n`` (carrier size), ``elements`` (unique names), ``op`` (n x n array
of name lists), optional ``le`` (strict name pairs, reflexivity implied; the
key's presence distinguishes "discrete order" from "no order"), optional
``grades`` (named fuzzy subsets as exact "p/q" strings).

Documents are human-auditable and diff-friendly; ``dumps_structure`` emits a
canonical rendering so the parse/print round trip is byte-stable.
"""

from __future__ import annotations

import json
import string
from fractions import Fraction
from importlib import resources
from typing import Optional, Sequence

from .core import HyperOp, HyperStructure, PartialOrder, mask_of, members
from .errors import HyperforgeError
from .fuzzy import FuzzySubset


class FormatError(HyperforgeError):
    """A structure document is malformed."""


def default_names(n: int) -> list[str]:
    return list(string.ascii_lowercase[:n])


def structure_to_doc(s: HyperStructure, names: Optional[Sequence[str]] = None,
                     grades: Optional[dict[str, FuzzySubset]] = None) -> dict:
    names = list(names) if names is not None else default_names(s.n)
    doc: dict = {
        "n": s.n,
        "elements": names,
        "op": [[[names[x] for x in members(cell)] for cell in row]
               for row in s.op.table],
    }
    if s.order is not None:
        doc["le"] = [[names[a], names[b]] for a, b in s.order.strict_pairs()]
    if grades:
        doc["grades"] = {key: f.as_strings() for key, f in sorted(grades.items())}
    return doc


def structure_from_doc(doc: dict) -> tuple[HyperStructure, list[str],
                                           dict[str, FuzzySubset]]:
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    try:
        n = doc["n"]
        names = doc["elements"]
        op_rows = doc["op"]
    except KeyError as e:
        raise FormatError(f"missing key {e.args[0]!r}") from None
    if not isinstance(n, int) or n < 1:
        raise FormatError("n must be a positive integer")
    if (not isinstance(names, list) or len(names) != n
            or len(set(names)) != n
            or not all(isinstance(x, str) for x in names)):
        raise FormatError("elements must be n unique names")
    index = {name: i for i, name in enumerate(names)}

    def to_mask(cell) -> int:
        if not isinstance(cell, list):
            raise FormatError("op cells must be lists of element names")
        try:
            return mask_of(index[x] for x in cell)
        except KeyError as e:
            raise FormatError(f"unknown element {e.args[0]!r}") from None

    if not isinstance(op_rows, list) or len(op_rows) != n or \
            any(not isinstance(r, list) or len(r) != n for r in op_rows):
        raise FormatError("op must be an n x n array")
    table = [[to_mask(cell) for cell in row] for row in op_rows]
    op = HyperOp(n, table)

    order = None
    if "le" in doc:
        pairs = doc["le"]
        if not isinstance(pairs, list) or any(
                not isinstance(p, list) or len(p) != 2 for p in pairs):
            raise FormatError("le must be a list of [name, name] pairs")
        try:
            order = PartialOrder.from_pairs(
                n, [(index[a], index[b]) for a, b in pairs])
        except KeyError as e:
            raise FormatError(f"unknown element {e.args[0]!r}") from None

    grades: dict[str, FuzzySubset] = {}
    for key, raw in (doc.get("grades") or {}).items():
        if not isinstance(raw, list) or len(raw) != n:
            raise FormatError(f"grade vector {key!r} must list n values")
        try:
            grades[key] = FuzzySubset(Fraction(v) for v in raw)
        except (ValueError, ZeroDivisionError, HyperforgeError) as e:
            raise FormatError(f"bad grade in {key!r}: {e}") from None

    return HyperStructure(op, order), list(names), grades


def _render(value, indent: int) -> str:
    """JSON with leaf lists kept inline, so op tables read row by row."""
    pad = " " * indent
    if isinstance(value, dict):
        items = [f'{pad}  {json.dumps(k)}: {_render(v, indent + 2)}'
                 for k, v in value.items()]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value) or all(
                isinstance(v, list) and
                all(not isinstance(x, (dict, list)) for x in v)
                for v in value):
            return json.dumps(value)
        items = [f"{pad}  {_render(v, indent + 2)}" for v in value]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    return json.dumps(value)


def dumps_structure(s: HyperStructure, names: Optional[Sequence[str]] = None,
                    grades: Optional[dict[str, FuzzySubset]] = None) -> str:
    return _render(structure_to_doc(s, names, grades), 0) + "\n"


def loads_structure(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from None
    return structure_from_doc(doc)


def load_structure_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from None
    return loads_structure(text)


def fixture_text(name: str) -> str:
    ref = resources.files("hyperforge").joinpath("fixtures", f"{name}.json")
    try:
        return ref.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise FormatError(f"no shipped fixture named {name!r}") from None
