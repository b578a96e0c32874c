import numpy as np

from .errors import GraphError


class EdgeColoring:
    """Total assignment of colours 1..k to the edges of a host graph.

    ``colors[i]`` is the colour of ``graph.edge_list[i]``. Gaps in the colour
    range are closed up on construction (relative order kept), so every
    colour in 1..k is used. Equality compares the induced edge partitions.
    """

    __slots__ = ("graph", "colors", "k")

    def __init__(self, graph, colors):
        arr = np.asarray(colors, dtype=np.int64).reshape(-1)
        if arr.shape[0] != graph.m:
            raise GraphError(f"coloring has {arr.shape[0]} entries for {graph.m} edges")
        if arr.size and arr.min() < 1:
            raise GraphError("colours must be positive integers")
        top = int(arr.max()) if arr.size else 0
        if top <= 4 * arr.size + 16:
            # linear: a presence table instead of a sort
            present = np.bincount(arr, minlength=top + 1)[1:] > 0
            k = int(present.sum())
            if k != top:
                arr = np.cumsum(present)[arr - 1]
        else:
            used = np.unique(arr)
            k = int(used.size)
            arr = np.searchsorted(used, arr) + 1
        arr = arr.astype(np.int64)
        arr.setflags(write=False)
        self.graph = graph
        self.colors = arr
        self.k = k

    @classmethod
    def from_mapping(cls, graph, mapping):
        """Build from ``{(u, v): colour}``; must cover the edge set exactly."""
        colors = np.zeros(graph.m, np.int64)
        for (u, v), c in mapping.items():
            e = (min(u, v), max(u, v))
            i = graph.edge_index.get(e)
            if i is None:
                raise GraphError(f"coloured pair {e} is not an edge")
            if colors[i]:
                raise GraphError(f"edge {e} coloured twice")
            colors[i] = c
        missing = np.nonzero(colors == 0)[0]
        if missing.size:
            raise GraphError(f"uncoloured edge {graph.edge_list[missing[0]]}")
        return cls(graph, colors)

    @classmethod
    def from_classes(cls, graph, classes):
        """Colour ``i + 1`` for every edge listed in ``classes[i]``."""
        mapping = {}
        for i, cls_edges in enumerate(classes):
            for u, v in cls_edges:
                e = (min(u, v), max(u, v))
                if e in mapping:
                    raise GraphError(f"edge {e} coloured twice")
                mapping[e] = i + 1
        return cls.from_mapping(graph, mapping)

    @classmethod
    def from_masks(cls, graph, masks):
        colors = np.zeros(graph.m, np.int64)
        for c, mask in enumerate(masks, start=1):
            for i in range(graph.m):
                if (mask >> i) & 1:
                    colors[i] = c
        return cls(graph, colors)

    def classes(self):
        out = [[] for _ in range(self.k)]
        for e, c in zip(self.graph.edge_list, self.colors.tolist()):
            out[c - 1].append(e)
        return out

    def class_masks(self):
        out = [0] * self.k
        for i, c in enumerate(self.colors.tolist()):
            out[c - 1] |= 1 << i
        return out

    def color_of(self, u, v):
        return int(self.colors[self.graph.edge_index[(min(u, v), max(u, v))]])

    def normalized(self):
        """Colours relabelled by first appearance in edge order."""
        if self.k == 0:
            return self
        _, first = np.unique(self.colors, return_index=True)
        rank = np.empty(self.k, np.int64)
        rank[np.argsort(first)] = np.arange(1, self.k + 1)
        return EdgeColoring(self.graph, rank[self.colors - 1])

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.graph == other.graph and np.array_equal(
            self.normalized().colors, other.normalized().colors)

    def __hash__(self):
        return hash((self.graph, self.normalized().colors.tobytes()))

    def __repr__(self):
        if self.graph.m <= 12:
            return f"EdgeColoring(k={self.k}, classes={self.classes()})"
        return f"EdgeColoring(k={self.k}, m={self.graph.m})"
