"""Decomposing graphs into unigraphs: recognition, unigraphic edge
colorings, exact unigraph numbers for small graphs and a linear-time
algorithm for trees."""
from .errors import GraphError, SizeBoundError
from .graph import Graph, degree_set, is_connected
from .edgecolor import EdgeColoring
from .recognize import fast_filter, is_unigraph
from .coloring import (is_strongly_unigraphic_coloring, is_unigraphic_coloring,
                       minimum_vertex_cover, star_coloring_from_vertex_cover)
from .trees import tree_unigraph_number
from .search import bounds, strong_unigraph_number, unigraph_number

__version__ = "0.1.0"
