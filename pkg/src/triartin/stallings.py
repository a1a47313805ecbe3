"""Based, edge-labeled directed graphs for subgroups of free groups.

Folding, immersion and covering checks, rank, membership, oppressive-set
enumeration and the finite-quotient separation predicate.  Graphs here are
small (tens of vertices), so the algorithms favour clarity over asymptotics;
simple-path enumeration in particular is plain DFS.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .presentations import GroupHom, PermutationTarget, perm_compose, perm_inverse
from .words import EMPTY, Word, free_reduce, is_reduced

Edge = Tuple[int, int, str]  # (source vertex, target vertex, label)


class StallingsGraph:
    """Connected, based, edge-labeled directed multigraph.

    Edges are addressed by index into ``edges``.  The graph is folded when no
    two distinct edges share (source, label) or (target, label).
    """

    def __init__(self, vertices: Iterable[int], edges: Iterable[Edge], base: int,
                 alphabet: Optional[Sequence[str]] = None):
        self.vertices = sorted(set(vertices))
        self.edges = [(int(s), int(t), str(l)) for s, t, l in edges]
        self.base = base
        vset = set(self.vertices)
        if base not in vset:
            raise ValueError("base vertex %r not in vertex set" % (base,))
        for s, t, _ in self.edges:
            if s not in vset or t not in vset:
                raise ValueError("edge endpoint outside vertex set")
        self.alphabet = tuple(alphabet) if alphabet is not None else tuple(
            sorted({l for _, _, l in self.edges}))
        if not self.is_connected():
            raise ValueError("graph must be connected")

    def __repr__(self) -> str:
        return "StallingsGraph(%d vertices, %d edges, base=%r)" % (
            len(self.vertices), len(self.edges), self.base)

    def neighbours(self, v: int) -> List[Tuple[int, int, int]]:
        """Incident darts as (edge index, direction, other endpoint)."""
        out = []
        for i, (s, t, _) in enumerate(self.edges):
            if s == v:
                out.append((i, 1, t))
            if t == v:
                out.append((i, -1, s))
        return out

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.base}
        stack = [self.base]
        while stack:
            v = stack.pop()
            for _, _, w in self.neighbours(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == set(self.vertices)

    def is_folded(self) -> bool:
        seen_out: Set[Tuple[int, str]] = set()
        seen_in: Set[Tuple[int, str]] = set()
        for s, t, l in self.edges:
            if (s, l) in seen_out or (t, l) in seen_in:
                return False
            seen_out.add((s, l))
            seen_in.add((t, l))
        return True


def wedge_graph(alphabet: Sequence[str]) -> StallingsGraph:
    """Single vertex with one loop per letter: the ambient free group."""
    return StallingsGraph([0], [(0, 0, l) for l in alphabet], 0, alphabet=alphabet)


def graph_rank(g: StallingsGraph) -> int:
    """First Betti number E - V + 1 of a connected graph."""
    if not g.is_connected():
        raise ValueError("rank is defined for connected graphs only")
    return len(g.edges) - len(g.vertices) + 1


def fold(g: StallingsGraph, rng: Optional[random.Random] = None) -> Tuple[StallingsGraph, int]:
    """Fold to the unique immersion, counting identification steps.

    When ``rng`` is given the next fold is chosen at random among all
    currently available ones (used by the confluence tests); the folded
    result is independent of that order up to based isomorphism.
    """
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    alive = [(s, t, l) for s, t, l in g.edges]
    count = 0
    while True:
        pairs = []
        for i in range(len(alive)):
            si, ti, li = find(alive[i][0]), find(alive[i][1]), alive[i][2]
            for j in range(i + 1, len(alive)):
                sj, tj, lj = find(alive[j][0]), find(alive[j][1]), alive[j][2]
                if li != lj:
                    continue
                if si == sj or ti == tj:
                    pairs.append((i, j))
        if not pairs:
            break
        i, j = rng.choice(pairs) if rng is not None else pairs[0]
        union(alive[i][0], alive[j][0])
        union(alive[i][1], alive[j][1])
        del alive[j]
        count += 1

    verts = sorted({find(v) for v in g.vertices})
    edges = sorted({(find(s), find(t), l) for s, t, l in alive})
    folded = StallingsGraph(verts, edges, find(g.base), alphabet=g.alphabet)
    return folded, count


def canonical_form(g: StallingsGraph):
    """Canonical description of a folded based graph.

    Breadth-first relabeling from the base with label-ordered exploration
    (per label: outgoing edge first, then incoming); two folded graphs are
    isomorphic as based labeled graphs iff their forms are equal.
    """
    if not g.is_folded():
        raise ValueError("canonical form requires a folded graph")
    out_by = {}
    in_by = {}
    for s, t, l in g.edges:
        out_by[(s, l)] = t
        in_by[(t, l)] = s
    labels = sorted(set(g.alphabet) | {l for _, _, l in g.edges})
    order = {g.base: 0}
    queue = [g.base]
    while queue:
        v = queue.pop(0)
        for l in labels:
            for w in (out_by.get((v, l)), in_by.get((v, l))):
                if w is not None and w not in order:
                    order[w] = len(order)
                    queue.append(w)
    edges = sorted((order[s], order[t], l) for s, t, l in g.edges)
    return (len(g.vertices), tuple(edges))


def subgroup_graph_from_words(ws: Sequence[Word], alphabet: Sequence[str]) -> StallingsGraph:
    """Folded core graph of the subgroup generated by the given reduced words."""
    alpha = set(alphabet)
    for w in ws:
        if not is_reduced(w):
            raise ValueError("generator words must be freely reduced")
        if not w.names() <= alpha:
            raise ValueError("word %r uses letters outside the alphabet" % (w,))
    vertices = [0]
    edges: List[Edge] = []
    nxt = 1
    for w in ws:
        if not w:
            continue
        prev = 0
        for i, (name, sign) in enumerate(w):
            cur = 0 if i == len(w) - 1 else nxt
            if cur == nxt:
                vertices.append(nxt)
                nxt += 1
            if sign > 0:
                edges.append((prev, cur, name))
            else:
                edges.append((cur, prev, name))
            prev = cur
    g = StallingsGraph(vertices, edges, 0, alphabet=sorted(alpha))
    folded, _ = fold(g)
    return folded


def membership(g: StallingsGraph, w: Word) -> bool:
    """Does ``w`` read as a closed path at the base of a folded graph?"""
    if not g.is_folded():
        raise ValueError("membership requires a folded graph")
    alpha = set(g.alphabet)
    out_by = {(s, l): t for s, t, l in g.edges}
    in_by = {(t, l): s for s, t, l in g.edges}
    v = g.base
    for name, sign in free_reduce(w):
        if name not in alpha:
            raise ValueError("letter %r outside the graph alphabet" % name)
        v = out_by.get((v, name)) if sign > 0 else in_by.get((v, name))
        if v is None:
            return False
    return v == g.base


def subgroup_generators(g: StallingsGraph) -> List[Word]:
    """Free basis of pi_1 at the base: one word per non-tree edge of a
    breadth-first spanning tree."""
    paths: Dict[int, Word] = {g.base: EMPTY}
    tree_edges: Set[int] = set()
    queue = [g.base]
    while queue:
        v = queue.pop(0)
        for idx, direction, w in sorted(g.neighbours(v)):
            if w not in paths:
                paths[w] = paths[v] * Word(((g.edges[idx][2], direction),))
                tree_edges.add(idx)
                queue.append(w)
    gens = []
    for idx, (s, t, l) in enumerate(g.edges):
        if idx in tree_edges:
            continue
        gens.append(free_reduce(paths[s] * Word(((l, 1),)) * ~paths[t]))
    return gens


# ---------------------------------------------------------------------------
# Morphisms
# ---------------------------------------------------------------------------

@dataclass
class GraphMorphism:
    """Combinatorial map of based labeled graphs.

    edge_map sends each domain edge index to a signed edge path in the
    codomain (list of (edge index, +-1)); the empty path marks a collapsed
    edge and is allowed only when the two endpoint images agree.
    """

    domain: StallingsGraph
    codomain: StallingsGraph
    vertex_map: Dict[int, int]
    edge_map: Dict[int, List[Tuple[int, int]]]

    def __post_init__(self):
        for v in self.domain.vertices:
            if v not in self.vertex_map:
                raise ValueError("vertex %r has no image" % v)
            if self.vertex_map[v] not in set(self.codomain.vertices):
                raise ValueError("vertex image %r not in codomain" % (self.vertex_map[v],))
        for idx, (s, t, _) in enumerate(self.domain.edges):
            path = self.edge_map.get(idx)
            if path is None:
                raise ValueError("edge %d has no image" % idx)
            here = self.vertex_map[s]
            for eidx, sign in path:
                es, et, _ = self.codomain.edges[eidx]
                start, end = (es, et) if sign > 0 else (et, es)
                if start != here:
                    raise ValueError("edge path of edge %d does not compose" % idx)
                here = end
            if here != self.vertex_map[t]:
                raise ValueError("edge path of edge %d ends at the wrong vertex" % idx)

    def is_combinatorial(self) -> bool:
        return all(len(p) == 1 for p in self.edge_map.values())

    def image_word(self, darts: Sequence[Tuple[int, int]]) -> Word:
        """Label word of the image of a domain edge path given as darts
        (edge index, direction)."""
        letters = []
        for idx, direction in darts:
            path = self.edge_map[idx]
            steps = path if direction > 0 else [(e, -s) for e, s in reversed(path)]
            for eidx, sign in steps:
                letters.append((self.codomain.edges[eidx][2], sign))
        return free_reduce(Word(letters))


def label_morphism(y: StallingsGraph, x: StallingsGraph) -> GraphMorphism:
    """The label-respecting map onto a single-vertex wedge codomain."""
    if len(x.vertices) != 1:
        raise ValueError("label morphism needs a single-vertex codomain")
    loops = {l: i for i, (_, _, l) in enumerate(x.edges)}
    missing = {l for _, _, l in y.edges} - set(loops)
    if missing:
        raise ValueError("codomain has no loops for labels %s" % sorted(missing))
    x0 = x.vertices[0]
    return GraphMorphism(
        domain=y,
        codomain=x,
        vertex_map={v: x0 for v in y.vertices},
        edge_map={i: [(loops[l], 1)] for i, (_, _, l) in enumerate(y.edges)},
    )


def _dart_image(m: GraphMorphism, edge_idx: int, end: int) -> Tuple[int, int]:
    """Image of the dart (edge, end) where end 0 = source side, 1 = target side."""
    eidx, sign = m.edge_map[edge_idx][0]
    if sign > 0:
        return (eidx, end)
    return (eidx, 1 - end)


def check_immersion(m: GraphMorphism) -> bool:
    """Locally injective on stars: no two darts at a vertex share an image.

    Edge images must be single edges (subdivide longer paths, remove
    collapsed edges first)."""
    if not m.is_combinatorial():
        raise ValueError("subdivide multi-edge images and remove collapsed edges first")
    return _check_star_injective(m)


def _star_darts(g: StallingsGraph, v: int) -> List[Tuple[int, int]]:
    darts = []
    for idx, (s, t, _) in enumerate(g.edges):
        if s == v:
            darts.append((idx, 0))
        if t == v:
            darts.append((idx, 1))
    return darts


def _check_star_injective(m: GraphMorphism) -> bool:
    for v in m.domain.vertices:
        images = [_dart_image(m, idx, end) for idx, end in _star_darts(m.domain, v)]
        if len(images) != len(set(images)):
            return False
    return True


def check_covering(m: GraphMorphism, degree: int) -> bool:
    """True iff the map is a degree-d covering: every codomain vertex has
    exactly d preimages and the dart map is a bijection on every star."""
    if degree < 1:
        raise ValueError("covering degree must be positive")
    if not m.is_combinatorial():
        raise ValueError("subdivide multi-edge images first")
    fibers: Dict[int, int] = {w: 0 for w in m.codomain.vertices}
    for v in m.domain.vertices:
        fibers[m.vertex_map[v]] += 1
    if any(n != degree for n in fibers.values()):
        return False
    for v in m.domain.vertices:
        images = [_dart_image(m, idx, end) for idx, end in _star_darts(m.domain, v)]
        target_star = _star_darts(m.codomain, m.vertex_map[v])
        if sorted(images) != sorted(target_star):
            return False
    return True


# ---------------------------------------------------------------------------
# Oppressive sets and separation
# ---------------------------------------------------------------------------

def simple_paths_from(g: StallingsGraph, start: int) -> List[List[Tuple[int, int]]]:
    """All nontrivial simple non-closed paths (no repeated vertices) leaving
    ``start``, as dart lists."""
    paths: List[List[Tuple[int, int]]] = []

    def walk(v, visited, acc):
        for idx, direction, w in sorted(g.neighbours(v)):
            if w in visited:
                continue
            acc.append((idx, direction))
            paths.append(list(acc))
            walk(w, visited | {w}, acc)
            acc.pop()

    walk(start, {start}, [])
    return paths


def oppressive_set(rho: GraphMorphism) -> List[Word]:
    """Words rho(mu1) rho(mu2) for mu1 a nontrivial simple non-closed path
    out of the base and mu2 a nontrivial simple non-closed path back into it.

    The codomain must be a single-vertex wedge (so every concatenation is a
    cycle at the base point).  Results are freely reduced, deduplicated, and
    the identity is dropped.
    """
    if len(rho.codomain.vertices) != 1:
        raise ValueError("oppressive sets are defined over a single-vertex codomain")
    if not check_immersion(rho):
        raise ValueError("the defining map must be an immersion")
    y = rho.domain
    paths_out = simple_paths_from(y, y.base)
    paths_in = [[(idx, -s) for idx, s in reversed(p)] for p in paths_out]
    words = set()
    for mu1 in paths_out:
        w1 = rho.image_word(mu1)
        for mu2 in paths_in:
            w = free_reduce(w1 * rho.image_word(mu2))
            if w:
                words.add(w)
    return sorted(words, key=lambda w: (len(w), w.letters))


def separates_finite(phi: GroupHom, c: StallingsGraph, s: Sequence[Word],
                     degree_limit: int = 12) -> bool:
    """Does ``phi`` separate the words ``s`` from the subgroup read by ``c``?

    Computes the finite image subgroup phi(pi_1(c)) by closing the images of
    a free basis under multiplication, then checks that no word of ``s``
    lands inside it.
    """
    if not isinstance(phi.target, PermutationTarget):
        raise ValueError("separation check needs a finite permutation target")
    if phi.target.degree > degree_limit:
        raise ValueError("permutation degree %d exceeds limit %d" % (phi.target.degree, degree_limit))
    if not set(c.alphabet) <= set(phi.source.generators):
        raise ValueError("graph alphabet must be contained in the hom source generators")
    gens = [phi.apply(w) for w in subgroup_generators(c)]
    gens += [perm_inverse(p) for p in gens]
    identity = phi.target.identity()
    subgroup = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for q in gens:
                r = perm_compose(p, q)
                if r not in subgroup:
                    subgroup.add(r)
                    nxt.append(r)
        frontier = nxt
    return all(phi.apply(w) not in subgroup for w in s)
