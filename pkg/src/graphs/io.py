"""
Graph text format.

Line 1 holds "n m", then m lines "u v" with 0-based vertices and u < v.
Blank lines and "#" comments are ignored. Emission is bit-exact with edges sorted.
"""

from pathlib import Path
from typing import List, Tuple, Union

from loguru import logger

from src.core.errors import InputError
from src.graphs.graph import Graph


def parse_graph(text: str) -> Graph:
    """
    Parse the graph text format.

    Graph files describe graphs on 1..64 vertices.

    Raises:
        InputError: on malformed headers, edge lines, or counts, or n = 0
    """
    rows: List[Tuple[int, List[str]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((number, line.split()))
    if not rows:
        raise InputError("graph text is empty")

    header_line, header = rows[0]
    if len(header) != 2:
        raise InputError(f"line {header_line}: expected 'n m' header")
    n, m = _ints(header, header_line)
    if n < 1:
        raise InputError(f"line {header_line}: a graph file needs at least one vertex, got n = {n}")

    edges = []
    for number, fields in rows[1:]:
        if len(fields) != 2:
            raise InputError(f"line {number}: expected 'u v'")
        u, v = _ints(fields, number)
        if not u < v:
            raise InputError(f"line {number}: edge endpoints must satisfy u < v")
        edges.append((u, v))
    if len(edges) != m:
        raise InputError(f"header declares {m} edges but {len(edges)} were given")
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_graph(path: Union[str, Path]) -> Graph:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read graph file {path}: {e}") from e
    graph = parse_graph(text)
    logger.debug(f"Loaded {graph} from {path}")
    return graph


def save_graph(g: Graph, path: Union[str, Path]) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8")


def _ints(fields: List[str], line: int) -> Tuple[int, int]:
    try:
        first, second = int(fields[0]), int(fields[1])
    except ValueError:
        raise InputError(f"line {line}: expected integers, got {' '.join(fields)}") from None
    if first < 0 or second < 0:
        raise InputError(f"line {line}: negative value")
    return first, second
