"""Plain-text matrix format for tournaments, graphs and their colored versions.

    tournament K            graph K             (optionally: tournament colored K P)
    -011                    -110
    0-01                    1-10
    00-1                    11-0
    000-                    000-
                                                colors c1 ... cK

Entry (i, j) of a tournament is 1 iff i -> j; entry (j, i) must then be 0.
Graph matrices must be symmetric. The diagonal is always '-'.
"""

from __future__ import annotations

import re

from .structures import ColoredGraph, ColoredTournament, Coloring, Graph, Tournament


class ParseError(ValueError):
    """Malformed input, with 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


def _lines(text: str) -> list[str]:
    lines = text.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    return [ln.rstrip("\r") for ln in lines]


def _int(token: str, line: int, column: int, what: str) -> int:
    if not token.isdigit():
        raise ParseError(f"{what} must be a positive integer, got {token!r}", line, column)
    value = int(token)
    if value < 1:
        raise ParseError(f"{what} must be positive", line, column)
    return value


def _tokens(line: str) -> list[tuple[str, int]]:
    """Whitespace-separated words with their 1-based columns."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _header(line: str):
    words = _tokens(line)
    if not words or words[0][0] not in ("tournament", "graph"):
        raise ParseError("header must start with 'tournament' or 'graph'", 1)
    kind = words[0][0]
    if len(words) == 2:
        return kind, _int(words[1][0], 1, words[1][1], "order"), None
    if len(words) == 4 and words[1][0] == "colored":
        k = _int(words[2][0], 1, words[2][1], "order")
        p = _int(words[3][0], 1, words[3][1], "palette")
        return kind, k, p
    raise ParseError("header must be 'KIND K' or 'KIND colored K P'", 1)


def _matrix(lines: list[str], k: int) -> list[str]:
    if len(lines) < 1 + k:
        raise ParseError(f"expected {k} matrix rows, found {len(lines) - 1}", len(lines) + 1)
    rows = []
    for i in range(k):
        ln = lines[1 + i]
        if len(ln) != k:
            raise ParseError(f"matrix row has {len(ln)} entries, expected {k}", i + 2, min(len(ln), k) + 1)
        for j, ch in enumerate(ln):
            if ch not in "01-":
                raise ParseError(f"unexpected character {ch!r}", i + 2, j + 1)
            if (ch == "-") != (i == j):
                what = "diagonal entry must be '-'" if i == j else "'-' is only allowed on the diagonal"
                raise ParseError(what, i + 2, j + 1)
        rows.append(ln)
    return rows


def _tournament_rows(m: list[str]) -> list[int]:
    k = len(m)
    rows = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            a, b = m[i][j], m[j][i]
            if a == b:
                what = "two orientations" if a == "1" else "no orientation"
                raise ParseError(f"pair ({i + 1}, {j + 1}) has {what}", j + 2, i + 1)
            if a == "1":
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
    return rows


def _graph_rows(m: list[str]) -> list[int]:
    k = len(m)
    rows = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if m[i][j] != m[j][i]:
                raise ParseError(f"pair ({i + 1}, {j + 1}) is not symmetric", j + 2, i + 1)
            if m[i][j] == "1":
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def _colors(lines: list[str], k: int, p: int) -> Coloring:
    idx = 1 + k
    if len(lines) <= idx:
        raise ParseError("missing 'colors' line", idx + 1)
    words = _tokens(lines[idx])
    if not words or words[0][0] != "colors":
        raise ParseError("expected 'colors c1 ... cK'", idx + 1)
    if len(words) - 1 != k:
        raise ParseError(f"colors line has {len(words) - 1} entries, expected {k}", idx + 1)
    out = []
    for w, col in words[1:]:
        c = _int(w, idx + 1, col, "color")
        if c > p:
            raise ParseError(f"color {c} outside [1, {p}]", idx + 1, col)
        out.append(c)
    return Coloring(p, tuple(out))


def parse(text: str):
    """Parse any of the four kinds; returns Tournament, Graph, ColoredTournament or ColoredGraph."""
    lines = _lines(text)
    if not lines:
        raise ParseError("empty input", 1)
    kind, k, p = _header(lines[0])
    m = _matrix(lines, k)
    expected = 1 + k + (1 if p is not None else 0)
    rows = _tournament_rows(m) if kind == "tournament" else _graph_rows(m)
    base = Tournament.from_rows(rows) if kind == "tournament" else Graph.from_rows(rows)
    if p is None:
        if len(lines) > expected:
            raise ParseError("unexpected trailing content", expected + 1)
        return base
    coloring = _colors(lines, k, p)
    if len(lines) > expected:
        raise ParseError("unexpected trailing content", expected + 1)
    return ColoredTournament(base, coloring) if kind == "tournament" else ColoredGraph(base, coloring)


def _expect(obj, types, what: str):
    if not isinstance(obj, types):
        raise ParseError(f"expected {what}, found {type(obj).__name__}", 1)
    return obj


def parse_tournament(text: str) -> Tournament:
    return _expect(parse(text), Tournament, "an uncolored tournament")


def parse_graph(text: str) -> Graph:
    return _expect(parse(text), Graph, "an uncolored graph")


def parse_colored(text: str) -> ColoredTournament | ColoredGraph:
    return _expect(parse(text), (ColoredTournament, ColoredGraph), "a colored structure")


def _matrix_lines(rows, k: int) -> list[str]:
    out = []
    for i in range(k):
        out.append("".join("-" if i == j else ("1" if (rows[i] >> j) & 1 else "0") for j in range(k)))
    return out


def serialize(obj) -> str:
    if isinstance(obj, Tournament):
        return "\n".join([f"tournament {obj.order}"] + _matrix_lines(obj.out_rows, obj.order)) + "\n"
    if isinstance(obj, Graph):
        return "\n".join([f"graph {obj.order}"] + _matrix_lines(obj.rows, obj.order)) + "\n"
    if isinstance(obj, (ColoredTournament, ColoredGraph)):
        inner = obj.tournament if isinstance(obj, ColoredTournament) else obj.graph
        body = serialize(inner).split("\n")
        kind, k = body[0].split()
        body[0] = f"{kind} colored {k} {obj.palette}"
        colors = "colors " + " ".join(str(c) for c in obj.coloring.colors)
        return "\n".join(body[:-1] + [colors]) + "\n"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def read_file(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write_file(path: str, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(obj))


__all__ = [
    "ParseError",
    "parse",
    "parse_tournament",
    "parse_graph",
    "parse_colored",
    "serialize",
    "read_file",
    "write_file",
]
