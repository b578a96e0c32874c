"""Canonical forms and isomorphism by individualisation-refinement.

Graphs are handled as a stack of adjacency "layers" (one bitmask row per
vertex per layer), so the same search labels plain graphs (one layer) and
edge-coloured graphs (one layer per colour).

The search refines an ordered vertex partition until it is equitable, then
branches on the vertices of the first non-singleton cell. Vertices that are
twins in every layer are interchangeable by an automorphism fixing the current
node, so only one representative per twin class is branched on. The code is
the lexicographically least relabelled adjacency over all leaves.
"""
from .errors import SizeBoundError

MAX_CANON_N = 12


def _mask(cell):
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(layers, cells):
    while True:
        masks = [_mask(c) for c in cells]
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups = {}
            for v in cell:
                sig = tuple((layer[v] & cm).bit_count() for layer in layers for cm in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                out.extend(groups[s] for s in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _twins(layers, u, w):
    bu, bw = ~(1 << w), ~(1 << u)
    return all((layer[u] & bu) == (layer[w] & bw) for layer in layers)


def _leaf_code(layers, order):
    pos = {v: i for i, v in enumerate(order)}
    code = []
    for layer in layers:
        for v in order:
            row, r = layer[v], 0
            while row:
                low = row & -row
                r |= 1 << pos[low.bit_length() - 1]
                row ^= low
            code.append(r)
    return tuple(code)


def canonical_form(n, layers, labels=None):
    """Return ``(code, order)``: the canonical code and a canonical ordering
    (``order[i]`` is the vertex placed at position i).

    ``labels`` optionally assigns an orderable label per vertex that any
    isomorphism must preserve.
    """
    if n == 0:
        return ((), ()), ()
    if labels is None:
        cells = [list(range(n))]
        header = ()
    else:
        groups = {}
        for v in range(n):
            groups.setdefault(labels[v], []).append(v)
        cells = [groups[k] for k in sorted(groups)]
        header = tuple(sorted(labels))
    best = [None, None]

    def search(cells):
        cells = _refine(layers, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _leaf_code(layers, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        ci = next(i for i, c in enumerate(cells) if len(c) > 1)
        reps = []
        for v in cells[ci]:
            if not any(_twins(layers, r, v) for r in reps):
                reps.append(v)
        for v in reps:
            rest = [w for w in cells[ci] if w != v]
            search(cells[:ci] + [[v], rest] + cells[ci + 1:])

    search(cells)
    return (header, best[0]), tuple(best[1])


def _check_bound(n):
    if n > MAX_CANON_N:
        raise SizeBoundError("n", n, MAX_CANON_N)


def canonical_labeling(G):
    _check_bound(G.n)
    return canonical_form(G.n, (G.adj,))


def _encode(n, code):
    width = max(1, (n + 7) // 8)
    out = bytearray([n])
    for row in code[1]:
        out += row.to_bytes(width, "big")
    return bytes(out)


def canonical_code(G):
    """Bytes shared by two graphs on at most ``MAX_CANON_N`` vertices exactly
    when they are isomorphic."""
    code, _ = canonical_labeling(G)
    return _encode(G.n, code)


def colored_layers(G, colors, k):
    layers = [[0] * G.n for _ in range(k)]
    for (u, v), c in zip(G.edge_list, colors):
        layers[c - 1][u] |= 1 << v
        layers[c - 1][v] |= 1 << u
    return tuple(tuple(layer) for layer in layers)


def colored_canonical_code(G, colors, k):
    """Canonical code of an edge-coloured graph under colour-preserving
    isomorphism. ``colors`` is aligned with ``G.edge_list``, values 1..k."""
    _check_bound(G.n)
    code, _ = canonical_form(G.n, colored_layers(G, colors, k))
    return bytes([G.n, k]) + b"".join(_encode(G.n, ((), code[1][i * G.n:(i + 1) * G.n]))[1:] for i in range(k))


def are_isomorphic(G, H):
    """``(True, bijection)`` with ``bijection[v]`` the image of v in H, or
    ``(False, None)``."""
    if G.n != H.n or G.m != H.m:
        return False, None
    if sorted(G.degrees.tolist()) != sorted(H.degrees.tolist()):
        return False, None
    _check_bound(G.n)
    cg, og = canonical_form(G.n, (G.adj,))
    ch, oh = canonical_form(H.n, (H.adj,))
    if cg != ch:
        return False, None
    f = [0] * G.n
    for a, b in zip(og, oh):
        f[a] = b
    return True, tuple(f)
