"""Solving for k-factors: the front door of the library.

Builds a few small graphs, asks for k-factors, and shows the three
possible outcomes: a factor (with its edges), a proof-of-work refusal
after the trail search is exhausted, and an instant precheck rejection.

Run from anywhere after `pip install -e .`:

    python3 demos/01_solve_basics.py
"""

from __future__ import annotations

from kfactor import Graph, compute_k_factor, feasibility_precheck, verify_factor


def show(title: str, g: Graph, k: int) -> None:
    print(f"--- {title}: n={g.n}, m={g.m}, k={k}")
    out = compute_k_factor(g, k)
    print(f"status: {out.status}")
    if out.factor is not None:
        pairs = [g.endpoints[e] for e in out.factor]
        print(f"factor edges ({len(pairs)}): {pairs}")
        ok, report = verify_factor(g, k, out.factor)
        print(f"re-verified k-regular spanning: {ok}")
    else:
        print(f"reason: {out.reason}")
    stats = out.stats
    print(
        f"stats: {stats.augmentations} augmentations,"
        f" {stats.trails_examined} trails examined,"
        f" {stats.blossom_operations} blossom operations,"
        f" {stats.elapsed_s * 1000:.2f} ms"
    )
    print()


def main() -> None:
    # a hexagon is its own 2-factor; at k=1 it splits into a perfect matching
    hexagon = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    show("hexagon, k=2", hexagon, 2)
    show("hexagon, k=1", hexagon, 1)

    # the Petersen graph is 3-regular: a perfect matching and a 2-factor
    # coexist (its edge set splits into exactly those two pieces)
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    petersen = Graph(10, outer + spokes + inner)
    show("petersen, k=1", petersen, 1)
    show("petersen, k=2", petersen, 2)

    # two triangles glued at one vertex: every vertex has degree >= 2, so
    # the precheck passes, but any 2-factor would need degree 4 at the
    # shared vertex. The search proves no factor exists.
    bowtie = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    print(f"bowtie precheck for k=2: {feasibility_precheck(bowtie, 2)!r} (passes)")
    show("bowtie, k=2", bowtie, 2)

    # a star has a degree-1 vertex, so k=2 dies before any search runs
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    show("star, k=2", star, 2)


if __name__ == "__main__":
    main()
