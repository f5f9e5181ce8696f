"""The hyperring file format.

A hyperring file is a JSON object::

    {
      "name": "K2",
      "size": 2,
      "zero": 0,
      "one": 1,
      "add": [[[0], [1]],
              [[1], [0, 1]]],
      "mul": [[0, 0],
              [0, 1]]
    }

``add[i][j]`` lists the members of ``i + j``.  Zero may be any element; the
parser relabels so that it becomes index 0 internally and remembers the
original indices for reporting.
"""
from __future__ import annotations

import json
from typing import Union

from .bits import mask, members
from .core import DEFAULT_MAX_SIZE, HyperringSpec
from .errors import FormatError

REQUIRED_KEYS = ("name", "size", "zero", "one", "add", "mul")

# diagnostic codes
MALFORMED = "MALFORMED"
MISSING_KEY = "MISSING_KEY"
BAD_TYPE = "BAD_TYPE"
SHAPE_MISMATCH = "SHAPE_MISMATCH"
EMPTY_HYPERSUM = "EMPTY_HYPERSUM"
OUT_OF_RANGE = "OUT_OF_RANGE"
TOO_LARGE = "TOO_LARGE"


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def parse_hyperring(data: Union[bytes, str], max_size: int = DEFAULT_MAX_SIZE) -> HyperringSpec:
    """Parse a hyperring document, raising FormatError at the first problem."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(MALFORMED, f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise FormatError(MALFORMED, f"invalid JSON at line {exc.lineno} column {exc.colno}: "
                          f"{exc.msg}", (exc.lineno, exc.colno)) from None
    if not isinstance(doc, dict):
        raise FormatError(MALFORMED, "top level must be an object")
    for key in REQUIRED_KEYS:
        if key not in doc:
            raise FormatError(MISSING_KEY, f"missing key {key!r}", key)

    name = doc["name"]
    if not isinstance(name, str):
        raise FormatError(BAD_TYPE, "name must be a string", "name")
    n = doc["size"]
    if not _is_int(n):
        raise FormatError(BAD_TYPE, "size must be an integer", "size")
    if n < 1:
        raise FormatError(OUT_OF_RANGE, f"size must be >= 1, got {n}", "size")
    if n > max_size:
        raise FormatError(TOO_LARGE, f"size {n} exceeds the carrier cap {max_size}", "size")
    for key in ("zero", "one"):
        v = doc[key]
        if not _is_int(v):
            raise FormatError(BAD_TYPE, f"{key} must be an integer", key)
        if not 0 <= v < n:
            raise FormatError(OUT_OF_RANGE, f"{key}={v} not in [0,{n})", key)

    add, mul = doc["add"], doc["mul"]
    for key, table in (("add", add), ("mul", mul)):
        if not isinstance(table, list) or len(table) != n:
            raise FormatError(SHAPE_MISMATCH, f"{key} must be a list of {n} rows", key)
        for i, row in enumerate(table):
            if not isinstance(row, list) or len(row) != n:
                raise FormatError(SHAPE_MISMATCH, f"{key} row {i} must have {n} cells", (key, i))

    add_masks = []
    for i, row in enumerate(add):
        out = []
        for j, cell in enumerate(row):
            loc = ("add", i, j)
            if not isinstance(cell, list):
                raise FormatError(BAD_TYPE, f"add[{i}][{j}] must be a list", loc)
            if not cell:
                raise FormatError(EMPTY_HYPERSUM, f"add[{i}][{j}] is empty", loc)
            for v in cell:
                if not _is_int(v):
                    raise FormatError(BAD_TYPE, f"add[{i}][{j}] holds a non-integer", loc)
                if not 0 <= v < n:
                    raise FormatError(OUT_OF_RANGE, f"add[{i}][{j}] holds {v}", loc)
            out.append(mask(cell))
        add_masks.append(out)
    for i, row in enumerate(mul):
        for j, v in enumerate(row):
            loc = ("mul", i, j)
            if not _is_int(v):
                raise FormatError(BAD_TYPE, f"mul[{i}][{j}] must be an integer", loc)
            if not 0 <= v < n:
                raise FormatError(OUT_OF_RANGE, f"mul[{i}][{j}]={v}", loc)

    spec = HyperringSpec(name, n, doc["zero"], doc["one"], add_masks, mul)
    return spec.canonical()


def spec_to_document(spec: HyperringSpec) -> dict:
    """Tables in the file's own element indexing (inverse of the parser's relabelling)."""
    lab = spec.labels
    if sorted(lab) != list(range(spec.n)):
        raise FormatError(SHAPE_MISMATCH, "labels are not a permutation of the carrier")
    pos = {lab[i]: i for i in range(spec.n)}
    rng = range(spec.n)
    add = [[sorted(lab[x] for x in members(spec.add[pos[a]][pos[b]])) for b in rng]
           for a in rng]
    mul = [[lab[spec.mul[pos[a]][pos[b]]] for b in rng] for a in rng]
    return {"name": spec.name, "size": spec.n, "zero": lab[spec.zero],
            "one": lab[spec.one], "add": add, "mul": mul}


def emit_hyperring(spec: HyperringSpec) -> str:
    doc = spec_to_document(spec)
    rows_add = ",\n    ".join(json.dumps(r) for r in doc["add"])
    rows_mul = ",\n    ".join(json.dumps(r) for r in doc["mul"])
    return (
        "{\n"
        f'  "name": {json.dumps(doc["name"])},\n'
        f'  "size": {doc["size"]},\n'
        f'  "zero": {doc["zero"]},\n'
        f'  "one": {doc["one"]},\n'
        f'  "add": [\n    {rows_add}\n  ],\n'
        f'  "mul": [\n    {rows_mul}\n  ]\n'
        "}\n"
    )
