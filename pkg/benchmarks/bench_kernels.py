"""Compare the numba kernels with the pure-numpy fallback.

Each backend runs in its own interpreter, because UNIGRAPH_DISABLE_NUMBA is
read once at import time. Cases go through the public functions that wrap
the kernels, and sizes are kept small enough for the fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--only tree,profiles]
"""
import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def _cases():
    from unigraph.coloring import brute_force_vertex_cover
    from unigraph.generate import complete, random_graph, random_tree
    from unigraph.graph import contains_induced_p5, diameter, is_connected
    from unigraph.search import unigraph_number, valid_class_table
    from unigraph.trees import brute_force_min_edge_dominating_set, tree_unigraph_number

    rng = np.random.default_rng(1)

    def connected(n, p, m=None):
        while True:
            G = random_graph(n, p, rng)
            if is_connected(G) and (m is None or G.m == m):
                return G

    g16 = connected(9, 0.45, 16)
    g12 = connected(7, 0.6, 12)
    vc = random_graph(18, 0.3, rng)
    apsp = connected(150, 0.05)
    k12 = complete(12)
    tree = random_tree(20000, rng)
    return {
        "profiles": ("edge-subset profiles, m=16", lambda: valid_class_table(g16)),
        "w-search": ("unigraph number, n=7 m=12", lambda: unigraph_number(g12)),
        "cover": ("brute-force vertex cover, n=18", lambda: brute_force_vertex_cover(vc)),
        "eds": ("brute-force edge domination, m=16", lambda: brute_force_min_edge_dominating_set(g16)),
        "apsp": ("all-pairs BFS, n=150", lambda: diameter(apsp)),
        "p5": ("induced P5 scan, K12", lambda: contains_induced_p5(k12)),
        "tree": ("tree unigraph number, n=20000", lambda: tree_unigraph_number(tree)),
    }


def worker(repeat, only):
    from unigraph import kernels

    out = {"backend": kernels.BACKEND, "cases": {}}
    for key, (label, fn) in _cases().items():
        if only and key not in only:
            continue
        fn()  # compile / warm caches
        runs = []
        for _ in range(repeat):
            t = time.perf_counter()
            fn()
            runs.append(time.perf_counter() - t)
        out["cases"][key] = {"label": label, "seconds": float(np.median(runs))}
    json.dump(out, sys.stdout)


def run_backend(disable, repeat, only):
    env = dict(os.environ)
    env.pop("UNIGRAPH_DISABLE_NUMBA", None)
    if disable:
        env["UNIGRAPH_DISABLE_NUMBA"] = "1"
    cmd = [sys.executable, __file__, "--worker", "--repeat", str(repeat)]
    if only:
        cmd += ["--only", ",".join(only)]
    p = subprocess.run(cmd, capture_output=True, text=True, env=env)
    if p.returncode != 0:
        sys.exit(p.stderr)
    return json.loads(p.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--only", default="", help="comma-separated case keys")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    only = [x for x in args.only.split(",") if x]
    if args.worker:
        worker(args.repeat, only)
        return

    fast = run_backend(False, args.repeat, only)
    slow = run_backend(True, args.repeat, only)
    if fast["backend"] != "numba":
        print("note: numba unavailable, both columns use the fallback")
    print(f"{'case':<36} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for key, row in fast["cases"].items():
        a, b = row["seconds"], slow["cases"][key]["seconds"]
        print(f"{row['label']:<36} {a:>9.4f}s {b:>9.4f}s {b / a:>7.1f}x")


if __name__ == "__main__":
    main()
