"""Layered dart search for augmenting trails.

The search works on the directed view of the host graph: every edge
contributes two opposite darts. Starting from an unfilled vertex it grows
layers of darts, blue darts at even depths and red darts at odd depths,
each layer leaving from the filled head vertices of the previous layer.
Construction stops at the first blue layer whose head set contains a
usable trail endpoint: an unfilled vertex, with the start itself counting
only while its degree is below k - 1 (the closed-trail guard). A dart is
admitted at its earliest reachable depth only, which bounds the number of
layers by the dart count and makes any walk that picks one dart per layer
automatically dart-distinct.

Pruning deletes darts that cannot lie on a complete start-to-terminal
walk: a backward sweep drops darts whose head feeds nothing in the next
layer (terminal heads are exempt, they are the endpoints), then a forward
sweep drops darts whose tail is fed by nothing in the previous layer. One
pass each reaches the fixed point. Restricting the terminal layer to a
single target vertex and re-pruning leaves exactly the layered walks from
the start to that target.

Extraction walks the layers depth-first, lowest dart id first, and
returns a chained dart-distinct directed trail. Such a trail may still
traverse some edge in both directions, which happens when the walk folds
through an odd alternating cycle; the violation names the in-dart and the
later, opposite out-dart. The blossom operation deletes the in-dart
unless doing so would disconnect the start from the target (a cut dart),
in which case it deletes the out-dart; either way the dart count strictly
drops, so the extract/repair loop terminates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .subgraph import KLimitedSubgraph, Trail


@dataclass(frozen=True)
class DirectedTrail:
    """Dart sequence drawn one per layer; chaining is the builder's duty.

    Unlike Trail this container does not validate, because candidate
    sequences are inspected for violations before being promoted.
    """

    graph: Graph
    darts: tuple[int, ...]

    @property
    def start(self) -> int:
        return self.graph.dart_tails[self.darts[0]]

    @property
    def end(self) -> int:
        return self.graph.dart_heads[self.darts[-1]]

    def as_trail(self) -> Trail:
        """Forget orientation: an edge-simple directed trail is a trail."""
        return Trail(self.graph, self.darts)


@dataclass(frozen=True)
class BlossomViolation:
    """Positions i < j in a directed trail holding opposite darts."""

    trail: DirectedTrail
    in_index: int
    out_index: int

    @property
    def in_dart(self) -> int:
        return self.trail.darts[self.in_index]

    @property
    def out_dart(self) -> int:
        return self.trail.darts[self.out_index]


@dataclass
class SearchCounters:
    """Cheap event tallies for callers that do not want a trace callback."""

    extracted: int = 0
    blossoms: int = 0


class LayeredDartGraph:
    """Dart layers D_0 .. D_L grown from one unfilled start vertex.

    Layers are plain dart-id sets. target stays None until
    restrict_to_target narrows the terminal layer to one endpoint. A dart
    may in principle be listed at several depths (synthetic instances in
    tests do this); the builder itself admits each dart at its earliest
    depth only.
    """

    __slots__ = ("graph", "start", "layers", "target")

    def __init__(self, graph: Graph, start: int, layers: list[set[int]], target: int | None = None):
        self.graph = graph
        self.start = start
        self.layers = layers
        self.target = target

    def copy(self) -> "LayeredDartGraph":
        return LayeredDartGraph(self.graph, self.start, [set(s) for s in self.layers], self.target)

    def dart_count(self) -> int:
        return sum(len(s) for s in self.layers)

    def layer_count(self) -> int:
        return len(self.layers)

    def head_set(self, i: int) -> set[int]:
        heads = self.graph.dart_heads
        return {heads[d] for d in self.layers[i]}

    def tail_set(self, i: int) -> set[int]:
        tails = self.graph.dart_tails
        return {tails[d] for d in self.layers[i]}

    def terminal_heads(self) -> set[int]:
        return self.head_set(len(self.layers) - 1)

    def layer_indices(self, dart: int) -> tuple[int, ...]:
        """Depths at which a dart is listed (at most one for built graphs)."""
        return tuple(i for i, s in enumerate(self.layers) if dart in s)

    def is_dead(self) -> bool:
        """True when no complete start-to-terminal walk can exist."""
        return not self.layers or not self.layers[0] or not self.layers[-1]


def build_layers(g: Graph, m: KLimitedSubgraph, start: int, trace=None) -> LayeredDartGraph | None:
    """Grow dart layers from an unfilled start vertex.

    Returns the layered graph the moment some blue layer's head set holds a
    valid trail endpoint, or None when the expansion exhausts first (an
    empty next layer, or the layer cap of 2*m darts). Only filled head
    vertices are extended from, since a trail may pass through filled
    vertices only.
    """
    if m.is_filled(start):
        raise ValueError(f"start vertex {start} is filled")
    k = m.k
    deg = m.deg
    in_m = m.in_m
    adjacency = g.adjacency
    heads_by_dart = g.dart_heads

    seen = bytearray(2 * g.m)
    first = [d for d in adjacency[start] if (d >> 1) not in in_m]
    if not first:
        return None
    for d in first:
        seen[d] = 1
    layers: list[set[int]] = [set(first)]
    if trace:
        trace("layer-built", 0, len(first))
    cap = 2 * g.m
    while True:
        i = len(layers) - 1
        heads = {heads_by_dart[d] for d in layers[-1]}
        if i % 2 == 0:
            for v in heads:
                if deg[v] < k and (v != start or deg[v] < k - 1):
                    return LayeredDartGraph(g, start, layers, None)
        if len(layers) >= cap:
            return None
        want_red = i % 2 == 0
        nxt: list[int] = []
        for v in sorted(heads):
            if deg[v] != k:
                continue
            for d in adjacency[v]:
                if seen[d]:
                    continue
                if ((d >> 1) in in_m) != want_red:
                    continue
                seen[d] = 1
                nxt.append(d)
        if not nxt:
            return None
        layers.append(set(nxt))
        if trace:
            trace("layer-built", len(layers) - 1, len(nxt))


def prune(l: LayeredDartGraph, trace=None) -> LayeredDartGraph:
    """Remove every dart that cannot lie on a complete layered walk.

    Backward dead-head sweep, then forward dead-tail sweep; idempotent.
    If no complete walk exists, the cascades leave the first (and the
    terminal) layer empty.
    """
    layers = [set(s) for s in l.layers]
    heads = l.graph.dart_heads
    tails = l.graph.dart_tails
    last = len(layers) - 1
    for i in range(last - 1, -1, -1):
        alive = {tails[d] for d in layers[i + 1]}
        layers[i] = {d for d in layers[i] if heads[d] in alive}
    for i in range(1, last + 1):
        alive = {heads[d] for d in layers[i - 1]}
        layers[i] = {d for d in layers[i] if tails[d] in alive}
    out = LayeredDartGraph(l.graph, l.start, layers, l.target)
    if trace:
        trace("pruned", l.dart_count(), out.dart_count())
    return out


def restrict_to_target(l: LayeredDartGraph, v: int, trace=None) -> LayeredDartGraph:
    """Keep only terminal darts ending at v, then prune.

    What survives is exactly the set of darts lying on some layered walk
    from the start to v. Raises when v is not a terminal head.
    """
    heads = l.graph.dart_heads
    kept = {d for d in l.layers[-1] if heads[d] == v}
    if not kept:
        raise ValueError(f"vertex {v} is not in the terminal head set")
    # sharing the untouched layer sets is fine: prune copies before filtering
    layers = list(l.layers[:-1])
    layers.append(kept)
    if trace:
        trace("restricted", v)
    return prune(LayeredDartGraph(l.graph, l.start, layers, v), trace)


def extract_trail(gv: LayeredDartGraph, trace=None) -> DirectedTrail | None:
    """Depth-first extraction of one complete layered directed trail.

    Takes the lowest-id admissible dart at each layer, backtracking when a
    branch dies, and returns None when no dart-distinct walk spans every
    layer. Failed (layer, dart) states are memoized whenever each dart
    occupies a single layer (always true for built graphs, where the memo
    is sound because nothing upstream can block a later layer); synthetic
    instances with overlapping layers fall back to plain backtracking.
    """
    layers = gv.layers
    if not layers or any(not s for s in layers):
        return None
    g = gv.graph
    heads = g.dart_heads
    adjacency = g.adjacency
    last = len(layers) - 1
    distinct = len(set().union(*layers)) == sum(len(s) for s in layers)
    used: set[int] = set()
    failed: set[tuple[int, int]] = set()
    path: list[int] = []

    def candidates(i: int, v: int):
        layer = layers[i]
        return iter([d for d in adjacency[v] if d in layer])

    stack = [candidates(0, gv.start)]
    while stack:
        i = len(path)
        d = next(stack[-1], None)
        if d is None:
            stack.pop()
            if path:
                dead = path.pop()
                used.discard(dead)
                if distinct:
                    failed.add((len(path), dead))
            continue
        if d in used or (distinct and (i, d) in failed):
            continue
        path.append(d)
        used.add(d)
        if i == last:
            found = DirectedTrail(g, tuple(path))
            if trace:
                trace("extracted", *found.darts)
            return found
        stack.append(candidates(i + 1, heads[d]))
    return None


def find_blossom_violation(p: DirectedTrail) -> BlossomViolation | None:
    """Earliest (by in-dart position) opposite-dart pair, or None if edge-simple."""
    pos = {d: i for i, d in enumerate(p.darts)}
    for i, d in enumerate(p.darts):
        j = pos.get(d ^ 1)
        if j is not None and j > i:
            return BlossomViolation(p, i, j)
    return None


def is_cut_dart(gv: LayeredDartGraph, dart: int, layer_index: int) -> bool:
    """True when deleting the dart (plus pruning) severs all complete walks.

    Pure query: works on a copy and leaves gv untouched.
    """
    if dart not in gv.layers[layer_index]:
        raise ValueError(f"dart {dart} is not in layer {layer_index}")
    trial = gv.copy()
    trial.layers[layer_index].discard(dart)
    return prune(trial).is_dead()


def blossom_operation(gv: LayeredDartGraph, bv: BlossomViolation, trace=None) -> LayeredDartGraph:
    """Resolve one opposite-dart violation by deleting a single dart.

    The in-dart goes unless it is a cut dart of gv, in which case the
    out-dart goes instead; the result is re-pruned. The total dart count
    strictly decreases, which bounds the number of blossom operations per
    restricted graph.
    """
    if len(bv.trail.darts) != len(gv.layers):
        raise ValueError("violation does not come from a trail of this layered graph")
    before = gv.dart_count()
    in_dart, out_dart = bv.in_dart, bv.out_dart
    if not is_cut_dart(gv, in_dart, bv.in_index):
        doomed, at = in_dart, bv.in_index
    else:
        doomed, at = out_dart, bv.out_index
    if trace:
        trace("blossom", in_dart, out_dart, doomed)
    out = gv.copy()
    out.layers[at].discard(doomed)
    out = prune(out, trace)
    if out.dart_count() >= before:
        raise AssertionError("blossom operation failed to shrink the layer sets")
    return out


def find_augmenting_trail(
    g: Graph, m: KLimitedSubgraph, trace=None, counters: SearchCounters | None = None
) -> Trail | None:
    """Search for an augmenting trail for the subgraph m.

    Unfilled start vertices are tried in ascending id. For each, the dart
    layers are grown and every valid endpoint in the terminal head set is
    tried in ascending id, the start itself (closed trail) last: the
    layered graph is restricted to that endpoint and the extract/repair
    loop runs until an edge-simple trail appears or the restriction dies.
    Returns the undirected trail of the first success, None after all
    starts and endpoints fail. An optional SearchCounters tallies
    extractions and blossom operations without the cost of a trace.
    """
    if m.deficit == 0:
        raise ValueError("subgraph has no deficit, nothing to augment")
    k = m.k
    deg = m.deg
    in_m = m.in_m
    dart_heads = g.dart_heads
    adjacency = g.adjacency
    for start in range(g.n):
        if deg[start] == k:
            continue
        # probe for a one-dart trail first: a blue dart straight to an
        # unfilled neighbour is what restriction, pruning and extraction
        # would deliver from a single-layer graph, at a fraction of the
        # cost, and it is the common case while the subgraph is sparse
        blue = 0
        best_v = -1
        best_d = -1
        for d in adjacency[start]:
            if (d >> 1) in in_m:
                continue
            blue += 1
            h = dart_heads[d]
            if deg[h] < k and (best_v == -1 or h < best_v):
                best_v = h
                best_d = d
        if best_d != -1:
            if counters is not None:
                counters.extracted += 1
            if trace:
                trace("layer-built", 0, blue)
                trace("extracted", best_d)
                trace("accepted", best_d)
            return Trail(g, (best_d,))
        if blue == 0:
            continue
        built = build_layers(g, m, start, trace)
        if built is None:
            continue
        heads = built.terminal_heads()
        targets = sorted(v for v in heads if deg[v] < k and v != start)
        if start in heads and deg[start] < k - 1:
            targets.append(start)
        for v in targets:
            gv = restrict_to_target(built, v, trace)
            while not gv.is_dead():
                directed = extract_trail(gv, trace)
                if directed is None:
                    break
                if counters is not None:
                    counters.extracted += 1
                violation = find_blossom_violation(directed)
                if violation is None:
                    if trace:
                        trace("accepted", *directed.darts)
                    return directed.as_trail()
                if counters is not None:
                    counters.blossoms += 1
                gv = blossom_operation(gv, violation, trace)
    return None
