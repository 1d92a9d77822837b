"""Edge-list text format, label remapping, and DOT export.

Format: optional `# key=value` comment lines, then a header `n m`, then m
lines `u v`.  Labels may be arbitrary whitespace-free tokens; they are
remapped to dense 0-based ids at ingestion and the mapping is retained so
reports can speak the caller's vocabulary.  Canonical output sorts edges
lexicographically by id.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import FormatError
from .graph import Graph

_RESERVED_KEYS = {"family", "params", "seed"}


@dataclass
class LoadedGraph:
    """A parsed graph plus its label table and any designated roles."""

    graph: Graph
    labels: Optional[list] = None  # id -> original token; None means identity
    roles: dict = field(default_factory=dict)

    def label(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def resolve(self, token: str) -> int:
        """Map an input token back to a vertex id."""
        if self.labels is not None:
            try:
                return self.labels.index(token)
            except ValueError:
                pass
        try:
            v = int(token)
        except ValueError:
            raise FormatError(f"unknown vertex label {token!r}")
        if not (0 <= v < self.graph.n):
            raise FormatError(f"vertex {v} outside 0..{self.graph.n - 1}")
        return v


def parse_edgelist(text: str) -> LoadedGraph:
    """Parse the edge-list format; raises FormatError on malformed input."""
    comments = []
    data_lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
        else:
            data_lines.append(line)
    if not data_lines:
        raise FormatError("missing 'n m' header line")
    head = data_lines[0].split()
    if len(head) != 2:
        raise FormatError(f"header must be 'n m', got {data_lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"header must be two integers, got {data_lines[0]!r}")
    if n < 0 or m < 0:
        raise FormatError("header counts must be nonnegative")
    if len(data_lines) - 1 != m:
        raise FormatError(f"header declares {m} edges but {len(data_lines) - 1} lines follow")
    raw_edges = []
    for line in data_lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"edge line must be 'u v', got {line!r}")
        raw_edges.append((parts[0], parts[1]))

    labels, id_edges = _map_labels(n, raw_edges)
    graph = Graph(n, id_edges)
    roles = _parse_roles(comments, labels, n)
    return LoadedGraph(graph=graph, labels=labels, roles=roles)


def _map_labels(n: int, raw_edges):
    """Identity mapping when all tokens are canonical ids, else first-seen order."""
    canonical = True
    for a, b in raw_edges:
        for tok in (a, b):
            try:
                v = int(tok)
            except ValueError:
                canonical = False
                break
            if not (0 <= v < n) or str(v) != tok:
                canonical = False
                break
        if not canonical:
            break
    if canonical:
        return None, [(int(a), int(b)) for a, b in raw_edges]
    table: dict = {}
    for a, b in raw_edges:
        for tok in (a, b):
            if tok not in table:
                if len(table) == n:
                    raise FormatError(f"more than {n} distinct labels in edge list")
                table[tok] = len(table)
    labels = [None] * n
    for tok, idx in table.items():
        labels[idx] = tok
    # Unreferenced (isolated) vertices get synthetic labels.
    for idx in range(n):
        if labels[idx] is None:
            labels[idx] = f"_isolated{idx}"
    return labels, [(table[a], table[b]) for a, b in raw_edges]


def _parse_roles(comments, labels, n):
    roles = {}
    for c in comments:
        if "=" not in c:
            continue
        key, _, value = c.partition("=")
        key = key.strip()
        value = value.strip()
        if not key or key in _RESERVED_KEYS or " " in key:
            continue
        if labels is not None:
            if value in labels:
                roles[key] = labels.index(value)
            continue
        try:
            v = int(value)
        except ValueError:
            continue
        if 0 <= v < n:
            roles[key] = v
    return roles


def load_edgelist(path) -> LoadedGraph:
    with open(path, "r", encoding="utf-8") as fp:
        return parse_edgelist(fp.read())


def format_edgelist(g: Graph, labels=None, header_comments=(), roles=None) -> str:
    """Canonical serialization: comments, roles, 'n m', edges in id order."""
    def name(v: int) -> str:
        return str(labels[v]) if labels is not None else str(v)

    lines = [f"# {c}" for c in header_comments]
    for role in sorted(roles or {}):
        lines.append(f"# {role}={name((roles or {})[role])}")
    lines.append(f"{g.n} {g.m}")
    for u, v in g.edges():
        lines.append(f"{name(u)} {name(v)}")
    return "\n".join(lines) + "\n"


def write_edgelist(path, g: Graph, labels=None, header_comments=(), roles=None) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(format_edgelist(g, labels, header_comments, roles))


def to_dot(
    g: Graph,
    labels=None,
    monitors=(),
    highlight_edges=(),
    uncovered_edges=(),
) -> str:
    """Graphviz output with monitor vertices filled and uncovered edges dashed."""
    def name(v: int) -> str:
        return str(labels[v]) if labels is not None else str(v)

    monitors = set(monitors)
    highlight = {tuple(sorted(e)) for e in highlight_edges}
    uncovered = {tuple(sorted(e)) for e in uncovered_edges}
    lines = ["graph G {"]
    for v in range(g.n):
        attrs = []
        if v in monitors:
            attrs.append('style=filled fillcolor="lightblue"')
        label = name(v)
        attr_str = f" [{' '.join(attrs)}]" if attrs else ""
        lines.append(f'  "{label}"{attr_str};')
    for e in g.edges():
        attrs = []
        if e in uncovered:
            attrs.append('color="red" style=dashed')
        elif e in highlight:
            attrs.append("penwidth=2")
        attr_str = f" [{' '.join(attrs)}]" if attrs else ""
        lines.append(f'  "{name(e[0])}" -- "{name(e[1])}"{attr_str};')
    lines.append("}")
    return "\n".join(lines) + "\n"
