"""Text formats: edge lists, colorings, DOT."""
from .edgecolor import EdgeColoring
from .errors import GraphError
from .graph import Graph

# cycles after twelve colours
PALETTE = (
    "red", "blue", "forestgreen", "orange", "purple", "brown",
    "magenta", "cyan", "gold", "gray40", "navy", "olivedrab",
)


class ParseError(GraphError):
    def __init__(self, source, lineno, msg):
        super().__init__(f"{source}:{lineno}: {msg}")
        self.source = source
        self.lineno = lineno


def _records(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(fields, want, source, lineno):
    if len(fields) != want:
        raise ParseError(source, lineno, f"expected {want} integers, got {len(fields)} fields")
    try:
        vals = [int(x) for x in fields]
    except ValueError:
        raise ParseError(source, lineno, f"not an integer in {' '.join(fields)!r}") from None
    return vals


def parse_edge_list(text, source="<string>"):
    """Header ``n m`` then m lines ``u v``; ``#`` starts a comment."""
    rows = _records(text)
    try:
        lineno, fields = next(rows)
    except StopIteration:
        raise ParseError(source, 1, "missing 'n m' header") from None
    n, m = _ints(fields, 2, source, lineno)
    if n < 0 or m < 0:
        raise ParseError(source, lineno, "n and m must be non-negative")
    edges, seen = [], {}
    last = lineno
    for lineno, fields in rows:
        u, v = _ints(fields, 2, source, lineno)
        last = lineno
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(source, lineno, f"vertex out of range [0, {n}) in edge ({u}, {v})")
        if u == v:
            raise ParseError(source, lineno, f"self-loop ({u}, {v})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(source, lineno, f"duplicate edge {key} (first on line {seen[key]})")
        seen[key] = lineno
        edges.append(key)
    if len(edges) != m:
        raise ParseError(source, last, f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def read_edge_list(path):
    with open(path) as fh:
        return parse_edge_list(fh.read(), str(path))


def format_edge_list(G):
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in G.edge_list]
    return "\n".join(lines) + "\n"


def parse_coloring(G, text, source="<string>"):
    """Lines ``u v c``; must colour every edge of G exactly once."""
    mapping, where = {}, {}
    for lineno, fields in _records(text):
        u, v, c = _ints(fields, 3, source, lineno)
        if c < 1:
            raise ParseError(source, lineno, f"colour must be positive, got {c}")
        key = (min(u, v), max(u, v))
        if key not in G.edge_index:
            raise ParseError(source, lineno, f"{key} is not an edge of the graph")
        if key in mapping:
            raise ParseError(source, lineno, f"edge {key} coloured twice (first on line {where[key]})")
        mapping[key] = c
        where[key] = lineno
    missing = [e for e in G.edge_list if e not in mapping]
    if missing:
        raise ParseError(source, max(1, len(text.splitlines())),
                         f"{len(missing)} uncoloured edges, first {missing[0]}")
    return EdgeColoring.from_mapping(G, mapping)


def read_coloring(G, path):
    with open(path) as fh:
        return parse_coloring(G, fh.read(), str(path))


def format_coloring(c):
    # edge_list is already sorted by u then v
    return "".join(f"{u} {v} {k}\n" for (u, v), k in zip(c.graph.edge_list, c.colors.tolist()))


def to_dot(G, c=None, name="G"):
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        lines.append(f"  {v};")
    for i, (u, v) in enumerate(G.edge_list):
        if c is None:
            lines.append(f"  {u} -- {v};")
        else:
            k = int(c.colors[i])
            lines.append(f'  {u} -- {v} [color="{PALETTE[(k - 1) % len(PALETTE)]}", label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
