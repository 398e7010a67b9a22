import re
import logging
from typing import Dict, List, Tuple, Union

from core.graph import Graph, GraphError, Orientation

logger = logging.getLogger(__name__)

TextInput = Union[bytes, str]


class GraphFormatError(GraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class StructuralMismatchError(GraphError):
    """An orientation line does not match the corresponding graph edge."""


class GraphTextParser:
    def __init__(self):
        self.line_patterns = self._initialize_patterns()

    def _initialize_patterns(self) -> Dict[str, "re.Pattern[str]"]:
        return {
            # "n m"
            "header": re.compile(r"^([0-9]+) ([0-9]+)$"),
            # "u v"
            "edge": re.compile(r"^([0-9]+) ([0-9]+)$"),
            # "u v w", arc u->v of weight w
            "arc": re.compile(r"^([0-9]+) ([0-9]+) ([0-9]+)$"),
        }

    def parse_graph(self, text: TextInput) -> Graph:
        """Parse the edge-list format into a Graph, reporting errors by line number."""
        lines = self._split_lines(text)
        n, m = self._parse_header(lines)
        self._check_line_count(lines, m)

        edges: List[Tuple[int, int]] = []
        seen: Dict[Tuple[int, int], int] = {}
        for offset in range(m):
            line_no = offset + 2
            match = self.line_patterns["edge"].match(lines[offset + 1])
            if not match:
                raise GraphFormatError(line_no, f"expected 'u v', got {lines[offset + 1]!r}")
            u, v = int(match.group(1)), int(match.group(2))
            if u >= n or v >= n:
                raise GraphFormatError(line_no, f"endpoint out of range for {n} vertices: {u} {v}")
            if u == v:
                raise GraphFormatError(line_no, f"self-loop on vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(line_no, f"duplicate edge {u} {v} (first on line {seen[key]})")
            seen[key] = line_no
            edges.append((u, v))

        logger.debug(f"Parsed graph with {n} vertices and {m} edges")
        return Graph(n, tuple(edges))

    def parse_orientation(self, text: TextInput, graph: Graph) -> Orientation:
        """Parse an orientation file whose lines follow ``graph``'s edge order."""
        lines = self._split_lines(text)
        n, m = self._parse_header(lines)
        if n != graph.vertex_count or m != graph.edge_count:
            raise StructuralMismatchError(
                f"orientation header '{n} {m}' does not match graph "
                f"'{graph.vertex_count} {graph.edge_count}'"
            )
        self._check_line_count(lines, m)

        heads: List[int] = []
        weights: List[int] = []
        for index in range(m):
            line_no = index + 2
            match = self.line_patterns["arc"].match(lines[index + 1])
            if not match:
                raise GraphFormatError(line_no, f"expected 'u v w', got {lines[index + 1]!r}")
            tail, head, weight = (int(match.group(k)) for k in (1, 2, 3))
            u, v = graph.edges[index]
            if {tail, head} != {u, v}:
                raise StructuralMismatchError(
                    f"line {line_no}: arc {tail}->{head} is not edge {index} ({u}, {v})"
                )
            if weight < 1:
                raise GraphFormatError(line_no, f"arc weight must be positive, got {weight}")
            heads.append(head)
            weights.append(weight)

        return Orientation(graph, tuple(heads), tuple(weights))

    def serialize_graph(self, g: Graph) -> bytes:
        canonical = g.canonical()
        body = [f"{canonical.vertex_count} {canonical.edge_count}"]
        body.extend(f"{u} {v}" for u, v in canonical.edges)
        return ("\n".join(body) + "\n").encode("ascii")

    def serialize_orientation(self, o: Orientation) -> bytes:
        body = [f"{o.graph.vertex_count} {o.graph.edge_count}"]
        body.extend(f"{tail} {head} {weight}" for tail, head, weight in o.arcs())
        return ("\n".join(body) + "\n").encode("ascii")

    def _split_lines(self, text: TextInput) -> List[str]:
        if isinstance(text, bytes):
            try:
                text = text.decode("ascii")
            except UnicodeDecodeError as e:
                raise GraphFormatError(1, f"input is not ASCII: {e}") from None
        lines = text.split("\n")
        # A single trailing LF terminates the last line
        while lines and lines[-1] == "":
            lines.pop()
        return lines

    def _parse_header(self, lines: List[str]) -> Tuple[int, int]:
        if not lines:
            raise GraphFormatError(1, "missing header 'n m'")
        match = self.line_patterns["header"].match(lines[0])
        if not match:
            raise GraphFormatError(1, f"malformed header {lines[0]!r}, expected 'n m'")
        return int(match.group(1)), int(match.group(2))

    def _check_line_count(self, lines: List[str], m: int):
        if len(lines) - 1 < m:
            raise GraphFormatError(len(lines) + 1, f"expected {m} edge lines, found {len(lines) - 1}")
        if len(lines) - 1 > m:
            raise GraphFormatError(m + 2, f"unexpected line after {m} edge lines: {lines[m + 1]!r}")


_parser = GraphTextParser()


def parse_graph(text: TextInput) -> Graph:
    return _parser.parse_graph(text)


def serialize_graph(g: Graph) -> bytes:
    return _parser.serialize_graph(g)


def parse_orientation(text: TextInput, graph: Graph) -> Orientation:
    return _parser.parse_orientation(text, graph)


def serialize_orientation(o: Orientation) -> bytes:
    return _parser.serialize_orientation(o)
