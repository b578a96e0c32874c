class GraphError(ValueError):
    """Invalid graph, coloring, or precondition violation."""


class SizeBoundError(GraphError):
    """The input exceeds a documented exact-computation bound."""

    def __init__(self, what, value, bound):
        self.what = what
        self.value = value
        self.bound = bound
        super().__init__(f"{what}={value} exceeds the supported bound {bound}")
