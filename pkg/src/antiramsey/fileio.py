"""Plain-text interchange formats.

Hypergraph files::

    n k m
    v1 v2 ... vk        (m lines, each edge ascending, edges in colex order)

Coloring files::

    n k c
    v1 v2 ... vk color  (C(n,k) lines, edges in colex order)

Serialization always emits the canonical colex order, so parsing a file
this module wrote and re-serializing it reproduces the bytes exactly.
Parsers accept edge lines in any order but insist on ascending vertices
within a line, no duplicates, and (for colorings) exactly one line per
edge of the complete k-graph.  Errors carry 1-based line numbers.
"""

from __future__ import annotations

from math import comb
from pathlib import Path
from typing import Union

from .hypergraph import UniformHypergraph, colex_rank
from .rainbow import EdgeColoring

__all__ = [
    "ParseError",
    "format_hypergraph",
    "parse_hypergraph",
    "load_hypergraph",
    "save_hypergraph",
    "format_coloring",
    "parse_coloring",
    "load_coloring",
    "save_coloring",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


def _ints(raw: str, lineno: int, expect: int, what: str) -> list[int]:
    parts = raw.split()
    if len(parts) != expect:
        raise ParseError(f"expected {expect} {what}, got {len(parts)}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer token in {what}", lineno) from None


def _parse_edge(nums: list[int], n: int, k: int, lineno: int) -> tuple[int, ...]:
    edge = tuple(nums)
    for v in edge:
        if v < 1 or v > n:
            raise ParseError(f"vertex {v} out of range [1, {n}]", lineno)
    if any(edge[i] >= edge[i + 1] for i in range(k - 1)):
        raise ParseError(f"vertices must be strictly ascending, got {edge}", lineno)
    return edge


def format_hypergraph(H: UniformHypergraph) -> str:
    lines = [f"{H.n} {H.k} {H.edge_count}"]
    lines.extend(" ".join(str(v) for v in e) for e in H.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> UniformHypergraph:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", 1)
    n, k, m = _ints(lines[0], 1, 3, "header fields (n k m)")
    if len(lines) - 1 != m:
        raise ParseError(
            f"header announces {m} edges but {len(lines) - 1} edge lines follow", 1
        )
    edges = []
    seen = set()
    for lineno, raw in enumerate(lines[1:], start=2):
        edge = _parse_edge(_ints(raw, lineno, k, "vertices"), n, k, lineno)
        if edge in seen:
            raise ParseError(f"duplicate edge {edge}", lineno)
        seen.add(edge)
        edges.append(edge)
    try:
        return UniformHypergraph.from_edges(n, k, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_coloring(coloring: EdgeColoring) -> str:
    lines = [f"{coloring.n} {coloring.k} {coloring.palette_size}"]
    lines.extend(
        " ".join(str(v) for v in edge) + f" {color}"
        for edge, color in coloring.items()
    )
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", 1)
    n, k, c = _ints(lines[0], 1, 3, "header fields (n k c)")
    if n < 0 or k < 2 or k > max(n, 2):
        raise ParseError(f"invalid dimensions n={n}, k={k}", 1)
    want = comb(n, k)
    if len(lines) - 1 != want:
        raise ParseError(
            f"a coloring of K({n},{k}) needs all {want} edge lines, "
            f"got {len(lines) - 1}",
            1,
        )
    colors: list = [None] * want
    for lineno, raw in enumerate(lines[1:], start=2):
        nums = _ints(raw, lineno, k + 1, "fields (k vertices + color)")
        edge = _parse_edge(nums[:k], n, k, lineno)
        color = nums[k]
        if color < 0:
            raise ParseError(f"color must be non-negative, got {color}", lineno)
        rank = colex_rank(edge)
        if colors[rank] is not None:
            raise ParseError(f"edge {edge} colored twice", lineno)
        colors[rank] = color
    # every slot filled exactly once given the line count and no repeats
    palette = len(set(colors))
    if palette != c:
        raise ParseError(
            f"header announces {c} colors but {palette} distinct colors appear", 1
        )
    return EdgeColoring(n, k, tuple(colors))


def load_hypergraph(path: Union[str, Path]) -> UniformHypergraph:
    return parse_hypergraph(Path(path).read_text())


def save_hypergraph(H: UniformHypergraph, path: Union[str, Path]) -> None:
    Path(path).write_text(format_hypergraph(H))


def load_coloring(path: Union[str, Path]) -> EdgeColoring:
    return parse_coloring(Path(path).read_text())


def save_coloring(coloring: EdgeColoring, path: Union[str, Path]) -> None:
    Path(path).write_text(format_coloring(coloring))
