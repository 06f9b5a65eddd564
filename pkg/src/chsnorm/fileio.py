"""On-disk formats for matrices and graphs.

Matrix files are JSON documents with two fields::

    {"n": 2, "entries": [[re, im], [re, im], ...]}   # n*n pairs, row-major

Each pair holds the real and imaginary components of one entry, either both
as decimal numbers (floating-point path) or both as rational strings such as
``"3"`` or ``"-2/7"`` (exact path).  Any rational string selects the exact
path for the whole matrix; mixing numbers and strings in one file is an
error.

Graph files are plain text: the vertex count on the first line, then one
``u v`` edge per line, 0-indexed.  Loops and duplicate edges are rejected.
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .graphs import Graph, graph
from .matrices import Matrix
from .scalars import GaussianRational


class FormatError(ValueError):
    """Malformed matrix or graph file."""


def _classify(component) -> str:
    if isinstance(component, str):
        return "exact"
    if isinstance(component, (int, float)) and not isinstance(component, bool):
        return "approx"
    raise FormatError(f"entry component {component!r} is neither a number nor a rational string")


def parse_matrix(text: str) -> Matrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"not valid JSON: {e}") from e
    if not isinstance(doc, dict) or "n" not in doc or "entries" not in doc:
        raise FormatError("matrix document needs fields 'n' and 'entries'")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise FormatError(f"'n' must be a positive integer, got {n!r}")
    entries = doc["entries"]
    if not isinstance(entries, list) or len(entries) != n * n:
        raise FormatError(f"'entries' must list n*n={n * n} pairs")
    kinds = set()
    pairs = []
    for e in entries:
        if not isinstance(e, list) or len(e) != 2:
            raise FormatError(f"each entry must be a [re, im] pair, got {e!r}")
        kinds.add(_classify(e[0]))
        kinds.add(_classify(e[1]))
        pairs.append((e[0], e[1]))
    if len(kinds) != 1:
        raise FormatError("file mixes rational strings and floats; use one kind throughout")
    exact = kinds.pop() == "exact"
    if exact:
        arr = np.empty((n, n), dtype=object)
        for idx, (re, im) in enumerate(pairs):
            try:
                arr[idx // n, idx % n] = GaussianRational(Fraction(re), Fraction(im))
            except (ValueError, ZeroDivisionError) as err:
                raise FormatError(f"bad rational string in entry {idx}: {err}") from err
        return Matrix(arr, exact=True)
    arr = np.empty((n, n), dtype=np.complex128)
    for idx, (re, im) in enumerate(pairs):
        arr[idx // n, idx % n] = complex(float(re), float(im))
    return Matrix(arr, exact=False)


def read_matrix(path) -> Matrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def format_matrix(M: Matrix) -> str:
    entries = []
    if M.exact:
        for i in range(M.n):
            for j in range(M.n):
                e = M.data[i, j]
                entries.append([str(e.re), str(e.im)])
    else:
        for i in range(M.n):
            for j in range(M.n):
                e = M.data[i, j]
                entries.append([float(e.real), float(e.imag)])
    return json.dumps({"n": M.n, "entries": entries})


def write_matrix(path, M: Matrix) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(M))
        fh.write("\n")


def parse_graph(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty graph file")
    try:
        n = int(lines[0])
    except ValueError as e:
        raise FormatError(f"first line must be the vertex count: {e}") from e
    edges = []
    seen = set()
    for ln in lines[1:]:
        fields = ln.split()
        if len(fields) != 2:
            raise FormatError(f"edge lines must be 'u v', got {ln!r}")
        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise FormatError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) out of range for {n} vertices")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append(key)
    return graph(n, edges)


def read_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())
