"""Crystal operators on tableaux and full crystal-graph generation.

The lowering operator for color i scans the reading word restricted to the
letters {i, i+1}, pairing each i+1 (an opening parenthesis) with a later i
(a closing one); the rightmost unmatched i is bumped to i+1. Raising is the
reverse. The crystal graph is the closure of the highest-weight tableau
under all lowering operators, with breadth-first vertex ids so generation
is deterministic.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Optional

from .perm import Permutation, parabolic_quotient, reduced_word
from .tableaux import (
    Partition,
    Tableau,
    dual_shape,
    format_tableau,
    highest_weight_tableau,
    reading_cells,
)

DEFAULT_VERTEX_CAP = 2_000_000
CAP_ENV_VAR = "CRYSTAL_POP_CAP"


class SizeLimitExceeded(RuntimeError):
    pass


class IsomorphismFailure(RuntimeError):
    """The forced colored-digraph matching broke; indicates a bug."""


def default_cap() -> int:
    return int(os.environ.get(CAP_ENV_VAR, DEFAULT_VERTEX_CAP))


def lowering_F(t: Tableau, i: int) -> Optional[Tableau]:
    """F_i: bump the rightmost unmatched i to i+1, or None if F_i(t) = 0."""
    depth = 0
    target = None
    for cell in reading_cells(t.shape):
        letter = t.entry(*cell)
        if letter == i + 1:
            depth += 1
        elif letter == i:
            if depth > 0:
                depth -= 1
            else:
                target = cell
    if target is None:
        return None
    return t.with_entry(*target, i + 1)


def raising_E(t: Tableau, i: int) -> Optional[Tableau]:
    """E_i: drop the leftmost unmatched i+1 to i, or None if E_i(t) = 0."""
    stack = []
    for cell in reading_cells(t.shape):
        letter = t.entry(*cell)
        if letter == i + 1:
            stack.append(cell)
        elif letter == i and stack:
            stack.pop()
    if not stack:
        return None
    return t.with_entry(*stack[0], i)


@dataclass
class CrystalGraph:
    """Edge-colored DAG over the tableaux of one shape. succ[v][i-1] is the
    id of F_i(vertex v) or None; pred is the E_i counterpart."""

    shape: Partition
    vertices: list[Tableau]
    succ: list[list[Optional[int]]]
    pred: list[list[Optional[int]]]
    index: dict[Tableau, int] = field(repr=False, default_factory=dict)
    min_vertex: int = 0

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def vertex_id(self, t: Tableau) -> int:
        return self.index[t]

    def edges(self):
        """(src, dst, color) triples in id order."""
        for v, row in enumerate(self.succ):
            for c, w in enumerate(row, start=1):
                if w is not None:
                    yield v, w, c

    def max_vertex(self) -> int:
        sinks = [v for v, row in enumerate(self.succ) if not any(x is not None for x in row)]
        if len(sinks) != 1:
            raise IsomorphismFailure(f"expected a unique sink, found {sinks}")
        return sinks[0]


def generate_crystal(shape: Partition, cap: Optional[int] = None) -> CrystalGraph:
    """Breadth-first closure of the highest-weight tableau under all F_i."""
    if cap is None:
        cap = default_cap()
    n = shape.n
    t_min = highest_weight_tableau(shape)
    vertices = [t_min]
    index = {t_min: 0}
    succ: list[list[Optional[int]]] = [[None] * n]
    pred: list[list[Optional[int]]] = [[None] * n]
    head = 0
    while head < len(vertices):
        t = vertices[head]
        for i in range(1, n + 1):
            img = lowering_F(t, i)
            if img is None:
                continue
            w = index.get(img)
            if w is None:
                if len(vertices) >= cap:
                    raise SizeLimitExceeded(
                        f"crystal for {shape.parts} at n={n} exceeds cap {cap}"
                    )
                w = len(vertices)
                index[img] = w
                vertices.append(img)
                succ.append([None] * n)
                pred.append([None] * n)
            succ[head][i - 1] = w
            pred[w][i - 1] = head
        head += 1
    return CrystalGraph(shape=shape, vertices=vertices, succ=succ, pred=pred, index=index)


@dataclass(frozen=True)
class LeviView:
    """The crystal with only the edges whose colors lie in a chosen subset."""

    graph: CrystalGraph
    colors: frozenset[int]

    def succ_edges(self, v: int):
        for i in self.colors:
            w = self.graph.succ[v][i - 1]
            if w is not None:
                yield w, i

    def pred_edges(self, v: int):
        for i in self.colors:
            w = self.graph.pred[v][i - 1]
            if w is not None:
                yield w, i


def levi_restrict(graph: CrystalGraph, colors) -> LeviView:
    colors = frozenset(colors)
    bad = colors - set(range(1, graph.n + 1))
    if bad:
        raise ValueError(f"colors {sorted(bad)} outside [1, {graph.n}]")
    return LeviView(graph, colors)


@dataclass(frozen=True)
class DualCrystal:
    """The dual crystal together with the forced vertex bijection from the
    original graph (to_dual[v] is the dual id of vertex v)."""

    graph: CrystalGraph
    to_dual: tuple[int, ...]

    def from_dual(self) -> tuple[int, ...]:
        inv = [0] * len(self.to_dual)
        for v, w in enumerate(self.to_dual):
            inv[w] = v
        return tuple(inv)


def dual_crystal(graph: CrystalGraph) -> DualCrystal:
    """Relabel color i as n+1-i and recognize the result as the crystal of
    the dual shape via deterministic simultaneous BFS from the two sources.
    Each vertex has at most one successor per color, so the isomorphism is
    forced; any mismatch raises IsomorphismFailure."""
    n = graph.n
    dual = generate_crystal(dual_shape(graph.shape))
    if dual.num_vertices != graph.num_vertices:
        raise IsomorphismFailure(
            f"dual vertex count {dual.num_vertices} != {graph.num_vertices}"
        )
    mapping: list[Optional[int]] = [None] * graph.num_vertices
    mapping[graph.min_vertex] = dual.min_vertex
    queue = [graph.min_vertex]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for i in range(1, n + 1):
            w = graph.succ[v][i - 1]
            img = dual.succ[mapping[v]][n - i]  # color i becomes n+1-i
            if (w is None) != (img is None):
                raise IsomorphismFailure(f"edge mismatch at vertex {v}, color {i}")
            if w is None:
                continue
            if mapping[w] is None:
                mapping[w] = img
                queue.append(w)
            elif mapping[w] != img:
                raise IsomorphismFailure(f"inconsistent image for vertex {w}")
    if any(m is None for m in mapping) or len(set(mapping)) != len(mapping):
        raise IsomorphismFailure("matching is not a bijection")
    return DualCrystal(graph=dual, to_dual=tuple(mapping))  # type: ignore[arg-type]


def weyl_reflect(graph: CrystalGraph, v: int, i: int) -> int:
    """Reverse the maximal i-colored chain through v: if v sits at position
    j from the bottom of an m-chain, return the vertex at position m+1-j."""
    up = 0
    cur = v
    while graph.succ[cur][i - 1] is not None:
        cur = graph.succ[cur][i - 1]
        up += 1
    down = 0
    cur = v
    while graph.pred[cur][i - 1] is not None:
        cur = graph.pred[cur][i - 1]
        down += 1
    steps = up - down
    cur = v
    if steps >= 0:
        for _ in range(steps):
            cur = graph.succ[cur][i - 1]
    else:
        for _ in range(-steps):
            cur = graph.pred[cur][i - 1]
    return cur


def weyl_act(graph: CrystalGraph, v: int, word) -> int:
    """Right action: apply the reflections left to right."""
    for i in word:
        v = weyl_reflect(graph, v, i)
    return v


def stabilizer_colors(shape: Partition) -> frozenset[int]:
    """Colors i with equal adjacent parts (zero-padded), generating the
    stabilizer of the weight."""
    return frozenset(
        i for i in range(1, shape.n + 1) if shape.part(i) == shape.part(i + 1)
    )


def embed_parabolic_quotient(graph: CrystalGraph) -> dict[Permutation, int]:
    """Map each minimal coset representative w (for the stabilizer of the
    shape) to the vertex reached from the minimum by acting with a reduced
    word of w."""
    kset = stabilizer_colors(graph.shape)
    out = {}
    for w in parabolic_quotient(kset, graph.n + 1):
        out[w] = weyl_act(graph, graph.min_vertex, reduced_word(w))
    return out


def to_json(graph: CrystalGraph) -> str:
    payload = {
        "lambda": list(graph.shape.parts),
        "n": graph.n,
        "vertices": [
            {"id": v, "rows": format_tableau(t)} for v, t in enumerate(graph.vertices)
        ],
        "edges": [
            {"src": src, "dst": dst, "color": color}
            for src, dst, color in graph.edges()
        ],
    }
    return json.dumps(payload, indent=2)


_DOT_PALETTE = [
    "red", "blue", "green3", "orange", "purple", "brown", "cyan3", "magenta",
]


def to_dot(graph: CrystalGraph) -> str:
    lines = ["digraph crystal {", "  rankdir=BT;"]
    for v, t in enumerate(graph.vertices):
        lines.append(f'  v{v} [label="{format_tableau(t)}"];')
    for src, dst, color in graph.edges():
        pen = _DOT_PALETTE[(color - 1) % len(_DOT_PALETTE)]
        lines.append(f'  v{src} -> v{dst} [label="F{color}", color={pen}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
