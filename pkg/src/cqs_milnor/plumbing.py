"""Plumbing graphs of genus-0 tree-shaped graph manifolds with boundary arrows.

Vertices carry integer Euler numbers, edges are unsigned (all vertices have
genus 0 and the graphs are trees), and each arrow marks a framed boundary
torus with an opaque hashable label.  Graphs are immutable; every move
returns a new graph.

Moves
-----
* blow-down of a ``+1`` or ``-1`` vertex of degree <= 2 without arrows;
  a ``+1`` vertex lowers each neighbour by one, a ``-1`` vertex raises it;
* 0-absorption: a weight-0 vertex of degree 2 without arrows is removed
  together with its neighbours ``u``, ``w``, which are replaced by one
  vertex of weight ``e(u) + e(w)``.

With positive weights ``(a_1, ..., a_k)``, all ``a_i >= 2``, a linear chain
presents ``L(n, q)`` for ``[a_1, ..., a_k] = n/(n-q)``; the negated chain
presents ``L(n, n-q)``.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence, Union

from .cfrac import eval_chain

__all__ = [
    "PlumbingGraph",
    "PlumbingError",
    "StripMode",
    "LensSpace",
    "SOneTimesSTwo",
    "S1_X_S2",
    "NotRecognized",
    "RecognitionResult",
    "linear_chain",
    "chain_with_arrows",
    "negate",
    "strip_arrows",
    "blow_down_once",
    "absorb_zero_once",
    "eligible_moves",
    "reduce",
    "blows_down_to_zero",
    "recognize_lens",
    "graphs_equal",
]


class PlumbingError(ValueError):
    """A move or operation was applied outside its preconditions."""


class PlumbingGraph:
    """Weighted graph with labelled boundary arrows.

    Parameters
    ----------
    weights : mapping of vertex id -> Euler number
    edges : iterable of vertex-id pairs (unordered, no loops, no repeats)
    arrows : iterable of ``(vertex id, label)``; labels must be distinct
    """

    __slots__ = ("_weights", "_edges", "_arrows", "_adj", "_tree")

    def __init__(
        self,
        weights: Mapping[int, int],
        edges: Iterable[tuple[int, int]] = (),
        arrows: Iterable[tuple[int, Hashable]] = (),
    ):
        w = {int(v): int(e) for v, e in weights.items()}
        if not w:
            raise PlumbingError("a plumbing graph needs at least one vertex")
        adj: dict[int, set[int]] = {v: set() for v in w}
        edge_set = set()
        for u, v in edges:
            if u not in w or v not in w:
                raise PlumbingError(f"edge ({u}, {v}) has an endpoint that is not a vertex")
            if u == v:
                raise PlumbingError(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in edge_set:
                raise PlumbingError(f"repeated edge {key}")
            edge_set.add(key)
            adj[u].add(v)
            adj[v].add(u)
        arr = []
        labels = set()
        for v, label in arrows:
            if v not in w:
                raise PlumbingError(f"arrow {label!r} on unknown vertex {v}")
            if label in labels:
                raise PlumbingError(f"duplicate arrow label {label!r}")
            labels.add(label)
            arr.append((v, label))
        self._weights = dict(sorted(w.items()))
        self._edges = frozenset(edge_set)
        self._arrows = tuple(arr)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._tree = None

    @classmethod
    def _trusted(cls, weights: dict[int, int], edges, arrows=(), tree=None) -> "PlumbingGraph":
        # internal constructor for inputs already known to be valid
        self = cls.__new__(cls)
        adj: dict[int, set[int]] = {v: set() for v in weights}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        self._weights = dict(sorted(weights.items()))
        self._edges = frozenset(edges)
        self._arrows = tuple(arrows)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._tree = tree
        return self

    # -- accessors ---------------------------------------------------------

    @property
    def weights(self) -> dict[int, int]:
        return dict(self._weights)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self._weights)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._edges))

    @property
    def arrows(self) -> tuple[tuple[int, Hashable], ...]:
        return self._arrows

    def weight(self, v: int) -> int:
        return self._weights[v]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def arrow_count(self, v: int) -> int:
        return sum(1 for u, _ in self._arrows if u == v)

    def __len__(self) -> int:
        return len(self._weights)

    def is_connected(self) -> bool:
        start = next(iter(self._weights))
        seen = {start}
        stack = [start]
        while stack:
            for u in self._adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(self._weights)

    def is_tree(self) -> bool:
        if self._tree is None:
            self._tree = len(self._edges) == len(self._weights) - 1 and self.is_connected()
        return self._tree

    def is_path(self) -> bool:
        return self.is_tree() and all(len(nb) <= 2 for nb in self._adj.values())

    def path_order(self) -> tuple[int, ...]:
        """Vertices of a path graph, starting from the lower-id endpoint."""
        if not self.is_path():
            raise PlumbingError("graph is not a linear chain")
        if len(self) == 1:
            return self.vertices
        ends = [v for v, nb in self._adj.items() if len(nb) == 1]
        order = [min(ends)]
        prev = None
        while len(order) < len(self):
            cur = order[-1]
            nxt = [u for u in self._adj[cur] if u != prev]
            prev = cur
            order.append(nxt[0])
        return tuple(order)

    def as_chain(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """``(weights, arrow counts)`` read along the path."""
        order = self.path_order()
        return (
            tuple(self._weights[v] for v in order),
            tuple(self.arrow_count(v) for v in order),
        )

    def _replace(self, weights=None, edges=None, arrows=None) -> "PlumbingGraph":
        return PlumbingGraph(
            self._weights if weights is None else weights,
            self._edges if edges is None else edges,
            self._arrows if arrows is None else arrows,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlumbingGraph):
            return NotImplemented
        return (
            self._weights == other._weights
            and self._edges == other._edges
            and sorted(map(repr, self._arrows)) == sorted(map(repr, other._arrows))
        )

    def __hash__(self) -> int:
        return hash((tuple(self._weights.items()), self._edges, len(self._arrows)))

    def __repr__(self) -> str:
        return (
            f"PlumbingGraph(weights={self._weights}, edges={sorted(self._edges)}, "
            f"arrows={list(self._arrows)})"
        )


def _require_tree(G: PlumbingGraph, what: str) -> None:
    if not G.is_tree():
        raise PlumbingError(f"{what} needs a tree-shaped plumbing graph")


# -- constructors ----------------------------------------------------------


def linear_chain(weights: Sequence[int]) -> PlumbingGraph:
    """Path ``v0 - v1 - ... `` with the given weights and no arrows."""
    weights = list(weights)
    if not weights:
        raise PlumbingError("a chain needs at least one vertex")
    return PlumbingGraph._trusted(
        {i: int(w) for i, w in enumerate(weights)},
        [(i, i + 1) for i in range(len(weights) - 1)],
        tree=True,
    )


def chain_with_arrows(weights: Sequence[int], arrow_counts: Sequence[int]) -> PlumbingGraph:
    """Linear chain whose ``i``-th vertex (1-based) carries arrows ``(i, 1), (i, 2), ...``."""
    if len(weights) != len(arrow_counts):
        raise PlumbingError("weights and arrow counts differ in length")
    if any(c < 0 for c in arrow_counts):
        raise PlumbingError("arrow counts must be nonnegative")
    base = linear_chain(weights)
    arrows = [(i, (i + 1, j + 1)) for i, c in enumerate(arrow_counts) for j in range(c)]
    return base._replace(arrows=arrows)


# -- global operations -----------------------------------------------------


def negate(G: PlumbingGraph) -> PlumbingGraph:
    """Orientation reversal: every weight times -1."""
    _require_tree(G, "negation")
    return G._replace(weights={v: -e for v, e in G.weights.items()})


class StripMode(enum.Enum):
    DELETE = "delete"
    ABSORB = "absorb"


def strip_arrows(G: PlumbingGraph, mode: Union[StripMode, str] = StripMode.DELETE) -> PlumbingGraph:
    """Remove all arrows.

    ``DELETE`` keeps the weights (canonical closure).  ``ABSORB`` adds to
    each weight the number of arrows the vertex carried.
    """
    mode = StripMode(mode)
    weights = G.weights
    if mode is StripMode.ABSORB:
        for v, _ in G.arrows:
            weights[v] += 1
    return G._replace(weights=weights, arrows=())


# -- local moves -----------------------------------------------------------


def _blow_down_problem(G: PlumbingGraph, v: int) -> str | None:
    if v not in G.weights:
        return f"vertex {v} does not exist"
    if G.weight(v) not in (1, -1):
        return f"vertex {v} has weight {G.weight(v)}, not +1 or -1"
    if G.arrow_count(v):
        return f"vertex {v} carries an arrow"
    if G.degree(v) > 2:
        return f"vertex {v} has degree {G.degree(v)} > 2"
    if len(G) == 1:
        return f"vertex {v} is the last vertex"
    return None


def _absorb_problem(G: PlumbingGraph, v: int) -> str | None:
    if v not in G.weights:
        return f"vertex {v} does not exist"
    if G.weight(v) != 0:
        return f"vertex {v} has weight {G.weight(v)}, not 0"
    if G.arrow_count(v):
        return f"vertex {v} carries an arrow"
    if G.degree(v) != 2:
        return f"vertex {v} has degree {G.degree(v)}, need 2"
    return None


def blow_down_once(G: PlumbingGraph, v: int) -> PlumbingGraph:
    """Blow down the ``+1``/``-1`` vertex ``v``."""
    _require_tree(G, "blow-down")
    problem = _blow_down_problem(G, v)
    if problem:
        raise PlumbingError(f"cannot blow down: {problem}")
    shift = -G.weight(v)
    nbrs = sorted(G.neighbors(v))
    weights = G.weights
    del weights[v]
    for u in nbrs:
        weights[u] += shift
    edges = [e for e in G.edges if v not in e]
    if len(nbrs) == 2:
        edges.append(tuple(nbrs))
    return G._replace(weights=weights, edges=edges)


def absorb_zero_once(G: PlumbingGraph, v: int) -> PlumbingGraph:
    """Absorb the weight-0 vertex ``v`` and merge its two neighbours."""
    _require_tree(G, "0-absorption")
    problem = _absorb_problem(G, v)
    if problem:
        raise PlumbingError(f"cannot absorb: {problem}")
    u, w = sorted(G.neighbors(v))
    weights = G.weights
    merged = weights[u] + weights[w]
    for x in (v, w):
        del weights[x]
    weights[u] = merged
    edges = set()
    for a, b in G.edges:
        if v in (a, b):
            continue
        a, b = (u if a == w else a), (u if b == w else b)
        edges.add((min(a, b), max(a, b)))
    arrows = [(u if x == w else x, label) for x, label in G.arrows]
    return G._replace(weights=weights, edges=edges, arrows=arrows)


def eligible_moves(
    G: PlumbingGraph, *, signs: tuple[int, ...] = (1, -1), absorb: bool = True
) -> list[tuple[str, int]]:
    """All applicable moves as ``("blow_down" | "absorb", vertex)``."""
    moves = [
        ("blow_down", v)
        for v in G.vertices
        if G.weight(v) in signs and _blow_down_problem(G, v) is None
    ]
    if absorb:
        moves += [("absorb", v) for v in G.vertices if _absorb_problem(G, v) is None]
    return moves


_MOVES = {"blow_down": blow_down_once, "absorb": absorb_zero_once}


def reduce(
    G: PlumbingGraph,
    rng: random.Random | None = None,
    *,
    signs: tuple[int, ...] = (1, -1),
    absorb: bool = True,
) -> PlumbingGraph:
    """Apply moves until none applies.

    Without ``rng`` the choice is greedy: blow down the lowest-id eligible
    vertex, otherwise absorb at the lowest-id eligible 0-vertex.  With
    ``rng`` a uniformly random eligible move is taken at each step.
    ``signs`` restricts which weights (+1, -1) may be blown down and
    ``absorb=False`` disables 0-absorption.
    """
    _require_tree(G, "reduction")
    if G.arrows:
        raise PlumbingError("strip arrows before reducing")
    weights, edges = _reduce_arrowless(G._weights, G._edges, rng, frozenset(signs), absorb)
    # moves keep the graph a tree
    return PlumbingGraph._trusted(weights, edges, tree=True)


def _reduce_arrowless(weights: dict[int, int], edges, rng, signs, absorb):
    # Same moves as blow_down_once / absorb_zero_once on a mutable copy;
    # building a PlumbingGraph per step dominates the cost otherwise.
    # dict order stays ascending by id: vertices are only ever deleted
    w = dict(sorted(weights.items()))
    adj: dict[int, set[int]] = {v: set() for v in w}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    while len(w) > 1:
        # a lone vertex can be neither blown down nor absorbed
        if rng is None:
            move = None
            for v in w:
                if w[v] in signs and len(adj[v]) <= 2:
                    move = ("blow_down", v)
                    break
            if move is None and absorb:
                for v in w:
                    if w[v] == 0 and len(adj[v]) == 2:
                        move = ("absorb", v)
                        break
        else:
            moves = [("blow_down", v) for v in w if w[v] in signs and len(adj[v]) <= 2]
            if absorb:
                moves += [("absorb", v) for v in w if w[v] == 0 and len(adj[v]) == 2]
            move = rng.choice(moves) if moves else None
        if move is None:
            break
        kind, v = move
        nbrs = sorted(adj.pop(v))
        for u in nbrs:
            adj[u].discard(v)
        if kind == "blow_down":
            shift = -w.pop(v)
            for u in nbrs:
                w[u] += shift
            if len(nbrs) == 2:
                a, b = nbrs
                adj[a].add(b)
                adj[b].add(a)
        else:
            del w[v]
            u, x = nbrs
            w[u] += w.pop(x)
            for y in adj.pop(x):
                adj[y].discard(x)
                adj[y].add(u)
                adj[u].add(y)
    out_edges = [(u, v) for u in adj for v in adj[u] if u < v]
    return w, out_edges


def blows_down_to_zero(G: PlumbingGraph) -> bool:
    """True iff successive blow-downs of +1 vertices end at a single 0-vertex.

    Only +1 vertices are blown down and no 0-absorption is used: with the
    full move set, positive chains such as ``(1, 1, 1, 1, 1)`` that are not
    chains representing zero also reach ``(0)``.
    """
    _require_tree(G, "reduction")
    if G.arrows:
        raise PlumbingError("strip arrows before reducing")
    weights, _ = _reduce_arrowless(G._weights, G._edges, None, frozenset((1,)), False)
    return list(weights.values()) == [0]


# -- lens-space recognition ------------------------------------------------


@dataclass(frozen=True)
class LensSpace:
    """``L(n, q)``; ``L(1, 0)`` is the 3-sphere."""

    n: int
    q: int

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.q < self.n or math.gcd(self.n, self.q) != 1:
            raise ValueError(f"invalid lens space parameters ({self.n}, {self.q})")

    def canonical(self) -> "LensSpace":
        """Representative with the smaller of ``q`` and ``q^-1 mod n``."""
        if self.n == 1:
            return self
        return LensSpace(self.n, min(self.q, pow(self.q, -1, self.n)))

    def same_oriented(self, other: "LensSpace") -> bool:
        """Orientation-preserving homeomorphism test: ``q' = q^{+-1} mod n``."""
        return self.canonical() == other.canonical()

    def reversed_orientation(self) -> "LensSpace":
        return LensSpace(self.n, (self.n - self.q) % self.n)

    def __str__(self) -> str:
        return f"L({self.n},{self.q})"


class SOneTimesSTwo:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "S1_X_S2"

    def __reduce__(self):
        return (SOneTimesSTwo, ())


S1_X_S2 = SOneTimesSTwo()


@dataclass(frozen=True)
class NotRecognized:
    reason: str


RecognitionResult = Union[LensSpace, SOneTimesSTwo, NotRecognized]


def _lens_from_positive(weights: Sequence[int]) -> LensSpace:
    x = eval_chain(weights)
    assert isinstance(x, Fraction) and x > 1
    n = x.numerator
    return LensSpace(n, n - x.denominator)


def recognize_lens(G: PlumbingGraph) -> RecognitionResult:
    """Identify the closed manifold of an arrowless chain after :func:`reduce`.

    The chain is read from its lower-id end.  All weights >= 2 give
    ``L(n, q)`` with ``[w] = n/(n-q)``; all weights <= -2 give
    ``L(n, n-q)`` with ``[-w] = n/(n-q)``.  A single vertex of weight 0 is
    S^1 x S^2 and one of weight +-1 is S^3 = L(1, 0).
    """
    if G.arrows:
        return NotRecognized("graph has arrows")
    if not G.is_tree():
        return NotRecognized("graph is not a tree")
    R = reduce(G)
    if not R.is_path():
        return NotRecognized("reduced graph is not a linear chain")
    weights, _ = R.as_chain()
    if len(weights) == 1 and weights[0] == 0:
        return S1_X_S2
    if len(weights) == 1 and weights[0] in (1, -1):
        return LensSpace(1, 0)
    if all(w >= 2 for w in weights):
        return _lens_from_positive(weights)
    if all(w <= -2 for w in weights):
        return _lens_from_positive([-w for w in weights]).reversed_orientation()
    return NotRecognized(f"reduced chain {list(weights)} has mixed signs")


def graphs_equal(G: PlumbingGraph, H: PlumbingGraph) -> bool:
    """Equality of linear chains with arrow multiplicities, up to reversal."""
    for X in (G, H):
        if not X.is_path():
            raise PlumbingError("graphs_equal compares linear chains only")
    g = G.as_chain()
    h = H.as_chain()
    return g == h or g == (h[0][::-1], h[1][::-1])
