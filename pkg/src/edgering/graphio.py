"""Text format for graphs: optional "n <d>" header, one edge per line
as two 1-based vertex indices, comment lines starting with '#'."""

from __future__ import annotations

from .errors import GraphFileError
from .graph import Graph, build_graph


def parse_graph(text: str) -> Graph:
    header_d = None
    raw_edges: list[tuple[int, int, int]] = []  # (i, j, line_no), 1-based
    saw_content = False
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if not saw_content and parts[0] == "n":
            if len(parts) != 2:
                raise GraphFileError("header must be 'n <vertex count>'", line_no)
            try:
                header_d = int(parts[1])
            except ValueError:
                raise GraphFileError(f"bad vertex count {parts[1]!r}", line_no) from None
            if header_d < 0:
                raise GraphFileError("vertex count must be non-negative", line_no)
            saw_content = True
            continue
        saw_content = True
        if len(parts) != 2:
            raise GraphFileError(f"expected two vertex indices, got {stripped!r}", line_no)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFileError(f"non-integer vertex in {stripped!r}", line_no) from None
        if i < 1 or j < 1:
            raise GraphFileError("vertex indices are 1-based", line_no)
        if i == j:
            raise GraphFileError(f"self-loop at vertex {i}", line_no)
        raw_edges.append((i, j, line_no))

    inferred = max((max(i, j) for i, j, _ in raw_edges), default=0)
    d = header_d if header_d is not None else inferred
    for i, j, line_no in raw_edges:
        if max(i, j) > d:
            raise GraphFileError(f"vertex {max(i, j)} exceeds declared count {d}", line_no)
    return build_graph(d, [(i - 1, j - 1) for i, j, _ in raw_edges])


def read_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphFileError(f"cannot read {path}: {exc}") from None
    return parse_graph(text)


def serialize_graph(g: Graph) -> str:
    lines = [f"n {g.d}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
