"""Combinatorial level sets of presentation 2-complexes with folded heights.

The complex has a single vertex at height 0; each edge is either flat
(constant height 0) or a tent (rising 0 -> 1/2 -> 0 along its
parametrization, heights taken in the folded interval [0, 1/2] where t and
1 - t are identified).  Each 2-cell boundary is unfolded to integer levels
{0, 1}: flats sit at a constant unfolded level, tent occurrences flip it.

Level sets at folded heights 1/4 and 1/2 are graphs.  Their vertices come
from tent-edge crossings (two per tent at the quarter level, written e+ for
the crossing at intrinsic parameter 1/4 and e- at 3/4; one apex vertex e^
at the half level).  Their arcs come from matched crossing pairs inside
each cell.  The projection to the height-0 skeleton reads the flat boundary
stretch next to each arc; arcs with an empty stretch are the green arcs,
collapsed before immersion checking.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .stallings import (
    GraphMorphism,
    StallingsGraph,
    check_covering,
    check_immersion,
    graph_rank,
    wedge_graph,
)
from .words import EMPTY, Word, free_reduce, word_to_str

FLAT = "flat"
TENT = "tent"

ASCEND = "ascend"
DESCEND = "descend"


class CellUnfoldError(ValueError):
    pass


@dataclass
class HeightedComplex:
    """Single-vertex 2-complex with per-edge height profiles.

    edges: ordered (label, profile) pairs, labels unique;
    cells: cyclic boundary words as sequences of signed edge occurrences.
    """

    edges: List[Tuple[str, str]]
    cells: List[Word]
    label: str = ""

    def __post_init__(self):
        labels = [l for l, _ in self.edges]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate edge labels")
        for _, profile in self.edges:
            if profile not in (FLAT, TENT):
                raise ValueError("profile must be %r or %r" % (FLAT, TENT))
        self.cells = [Word(tuple(c)) if not isinstance(c, Word) else c for c in self.cells]
        known = set(labels)
        for i, cell in enumerate(self.cells):
            if not cell:
                raise ValueError("cell %d has empty boundary" % i)
            if not cell.names() <= known:
                raise ValueError("cell %d uses unknown edge labels" % i)

    @property
    def profile(self) -> Dict[str, str]:
        return dict(self.edges)

    def flat_labels(self) -> List[str]:
        return [l for l, p in self.edges if p == FLAT]

    def tent_labels(self) -> List[str]:
        return [l for l, p in self.edges if p == TENT]


def hanham_complex(m: int) -> HeightedComplex:
    """Presentation complex of the six-generator form of Art(2,3,2m) with
    x, y, d flat and b, c, z tents."""
    if m < 3:
        raise ValueError("the complex needs m >= 3")
    cells = [
        "x c z^-1",
        "b x z^-1",
        "b c y^-1",
        "y b y^-1 c^-1",
        "d b d^-1 c^-1",
        "z " + "x " * (m - 2) + "z d^-1",
    ]
    from .words import parse_word

    return HeightedComplex(
        edges=[("x", FLAT), ("y", FLAT), ("d", FLAT), ("b", TENT), ("c", TENT), ("z", TENT)],
        cells=[parse_word(c) for c in cells],
        label="X_B(%d)" % m,
    )


@dataclass
class UnfoldedCell:
    """Placement of one cell boundary at integer unfolded levels.

    placements[i] is ("flat", level) with level in {0, 1} or
    ("tent", direction) with direction ascend (0 -> 1) or descend (1 -> 0).
    """

    placements: List[Tuple[str, object]]


def unfold_cells(c: HeightedComplex, flipped: frozenset = frozenset()) -> List[UnfoldedCell]:
    """Assign consistent integer levels along every cell boundary.

    Canonical choice: the first tent occurrence ascends (all-flat cells sit
    at level 0).  Cells listed in ``flipped`` take the reflected unfolding
    (levels 1 - L, first tent descends); the level graphs do not depend on
    this choice up to isomorphism.  A cell with an odd number of tent
    occurrences cannot close up and raises a CellUnfoldError naming it.
    """
    profile = c.profile
    out = []
    for ci, cell in enumerate(c.cells):
        tents = sum(1 for name, _ in cell if profile[name] == TENT)
        if tents % 2 != 0:
            raise CellUnfoldError(
                "cell %d (%s) has %d tent occurrences; the boundary walk cannot close up"
                % (ci, word_to_str(cell), tents))
        level = 1 if ci in flipped else 0
        placements: List[Tuple[str, object]] = []
        for name, _sign in cell:
            if profile[name] == FLAT:
                placements.append((FLAT, level))
            else:
                placements.append((TENT, ASCEND if level == 0 else DESCEND))
                level = 1 - level
        out.append(UnfoldedCell(placements))
    return out


def _quarter_vertex(label: str, sign: int, direction: str, unfolded_level: str) -> str:
    """Crossing-to-vertex naming at the quarter level.

    e+ is the crossing at intrinsic edge parameter 1/4, e- at 3/4; the table
    below is the translation from boundary data (occurrence sign, unfolded
    direction, crossing at unfolded height 1/4 or 3/4).
    """
    ascending = (direction == ASCEND)
    positive = (sign > 0)
    low = (unfolded_level == "1/4")
    if positive == ascending:
        plus = low
    else:
        plus = not low
    return label + ("+" if plus else "-")


@dataclass
class LevelArc:
    """One arc of a level graph, oriented from the ascending crossing to the
    descending crossing of its matched pair."""

    cell: int
    level: str  # "1/4", "3/4" or "1/2"
    tail: str
    head: str
    tail_occ: int
    head_occ: int
    down_label: Word = EMPTY


@dataclass
class LevelGraph:
    level: str  # "quarter" or "half"
    vertices: List[str]
    arcs: List[LevelArc]

    def rank(self) -> int:
        g = self.as_stallings()
        return graph_rank(g)

    def vertex_index(self) -> Dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def as_stallings(self, base: Optional[str] = None) -> StallingsGraph:
        """The underlying based graph; arcs are labeled by their cell index
        (labels only matter for bookkeeping, not for rank or coverings)."""
        idx = self.vertex_index()
        edges = [(idx[a.tail], idx[a.head], "cell%d" % a.cell) for a in self.arcs]
        base_idx = idx[base] if base is not None else 0
        return StallingsGraph(range(len(self.vertices)), edges, base_idx)

    def green_count(self) -> int:
        return sum(1 for a in self.arcs if a.level in ("1/4", "3/4") and not a.down_label)


def _matched_pairs(cell: Word, unfolded: UnfoldedCell) -> List[Tuple[int, int]]:
    """Match tent occurrences of one cell into (ascend, descend) pairs.

    Ascents and descents alternate around the boundary (levels live in
    {0, 1}), so the canonical disk foliation pairs each ascent with the next
    descent in cyclic order.
    """
    tents = [(i, direction) for i, (kind, direction) in enumerate(unfolded.placements) if kind == TENT]
    if not tents:
        return []
    start = next(k for k, (_, d) in enumerate(tents) if d == ASCEND)
    rotated = tents[start:] + tents[:start]
    pairs = []
    for k in range(0, len(rotated), 2):
        (i, d1), (j, d2) = rotated[k], rotated[k + 1]
        if d1 != ASCEND or d2 != DESCEND:
            raise CellUnfoldError("tent directions do not alternate; unfolding is inconsistent")
        pairs.append((i, j))
    return pairs


def _flat_stretch(c: HeightedComplex, cell_index: int, start_occ: int, end_occ: int) -> Word:
    """Boundary letters strictly between two occurrences in cyclic order;
    must all be flat, anything else means the level structure is broken."""
    cell = c.cells[cell_index]
    profile = c.profile
    n = len(cell)
    letters = []
    k = (start_occ + 1) % n
    while k != end_occ:
        name, sign = cell.letters[k]
        if profile[name] != FLAT:
            raise CellUnfoldError(
                "down projection of cell %d reads the tent edge %r; "
                "only cells with a single matched tent pair support flat projections"
                % (cell_index, name))
        letters.append((name, sign))
        k = (k + 1) % n
    return Word(letters)


def level_graph(c: HeightedComplex, level: str, flipped: frozenset = frozenset()) -> LevelGraph:
    """Level-set graph at folded height 1/4 ("quarter") or 1/2 ("half").

    Quarter arcs carry a down label: the flat boundary stretch on their
    integer-level side, read from the arc's tail to its head (level-0 side
    for unfolded height 1/4, level-1 side for 3/4).
    """
    if level not in ("quarter", "half"):
        raise ValueError("level must be 'quarter' or 'half'")
    unfolded = unfold_cells(c, flipped)
    tents = c.tent_labels()
    if level == "half":
        vertices = [t + "^" for t in tents]
    else:
        vertices = [t + s for t in tents for s in ("+", "-")]
    arcs: List[LevelArc] = []
    for ci, cell in enumerate(c.cells):
        pairs = _matched_pairs(cell, unfolded[ci])
        for (i, j) in pairs:
            name_i, sign_i = cell.letters[i]
            name_j, sign_j = cell.letters[j]
            if level == "half":
                arcs.append(LevelArc(cell=ci, level="1/2",
                                     tail=name_i + "^", head=name_j + "^",
                                     tail_occ=i, head_occ=j))
                continue
            # Unfolded height 1/4: the integer-level side is level 0, the
            # stretch runs from the descending crossing forward to the
            # ascending one; reading tail -> head inverts it.
            low_label = ~_flat_stretch(c, ci, j, i)
            arcs.append(LevelArc(
                cell=ci, level="1/4",
                tail=_quarter_vertex(name_i, sign_i, ASCEND, "1/4"),
                head=_quarter_vertex(name_j, sign_j, DESCEND, "1/4"),
                tail_occ=i, head_occ=j,
                down_label=low_label))
            # Unfolded height 3/4: level-1 side, read forward from the
            # ascending crossing to the descending one.
            high_label = _flat_stretch(c, ci, i, j)
            arcs.append(LevelArc(
                cell=ci, level="3/4",
                tail=_quarter_vertex(name_i, sign_i, ASCEND, "3/4"),
                head=_quarter_vertex(name_j, sign_j, DESCEND, "3/4"),
                tail_occ=i, head_occ=j,
                down_label=high_label))
    return LevelGraph(level=level, vertices=vertices, arcs=arcs)


def skeleton_graph(c: HeightedComplex) -> StallingsGraph:
    """The height-0 level set: the wedge of the flat edges."""
    return wedge_graph(c.flat_labels())


def _collapse_and_subdivide(q: LevelGraph, flats: Sequence[str]) -> Tuple[StallingsGraph, Dict[int, int]]:
    """Quarter graph with green arcs collapsed and multi-letter down labels
    subdivided into single-letter edges (stored with positive labels)."""
    idx = q.vertex_index()
    parent = list(range(len(q.vertices)))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for arc in q.arcs:
        if not arc.down_label:
            a, b = find(idx[arc.tail]), find(idx[arc.head])
            if a != b:
                parent[max(a, b)] = min(a, b)
    next_vertex = len(q.vertices)
    edges = []
    for arc in q.arcs:
        if not arc.down_label:
            continue
        chain = [find(idx[arc.tail])]
        for _ in range(len(arc.down_label) - 1):
            chain.append(next_vertex)
            next_vertex += 1
        chain.append(find(idx[arc.head]))
        for k, (name, sign) in enumerate(arc.down_label):
            u, v = chain[k], chain[k + 1]
            edges.append((u, v, name) if sign > 0 else (v, u, name))
    vertices = sorted({find(v) for v in range(len(q.vertices))} | {v for e in edges for v in e[:2]})
    graph = StallingsGraph(vertices, edges, vertices[0], alphabet=sorted(flats))
    return graph, {i: find(i) for i in range(len(q.vertices))}


def level_morphisms(c: HeightedComplex, flipped: frozenset = frozenset()) -> Tuple[GraphMorphism, GraphMorphism]:
    """(down, up): the collapsed-and-subdivided projection of the quarter
    graph onto the flat wedge, and the quarter-to-half apex map."""
    q = level_graph(c, "quarter", flipped)
    h = level_graph(c, "half", flipped)
    x0 = skeleton_graph(c)
    collapsed, _ = _collapse_and_subdivide(q, c.flat_labels())
    loops = {l: i for i, (_, _, l) in enumerate(x0.edges)}
    down = GraphMorphism(
        domain=collapsed,
        codomain=x0,
        vertex_map={v: x0.base for v in collapsed.vertices},
        edge_map={i: [(loops[l], 1)] for i, (_, _, l) in enumerate(collapsed.edges)},
    )
    # Up: e+- -> e^, each quarter arc to its cell pair's half arc, matching
    # the ascending side to the ascending side.
    qg = q.as_stallings()
    hg = h.as_stallings()
    hidx = h.vertex_index()
    qidx = q.vertex_index()
    half_arc_of = {(a.cell, a.tail_occ, a.head_occ): i for i, a in enumerate(h.arcs)}
    vertex_map = {qidx[v]: hidx[v[:-1] + "^"] for v in q.vertices}
    edge_map = {}
    for i, arc in enumerate(q.arcs):
        edge_map[i] = [(half_arc_of[(arc.cell, arc.tail_occ, arc.head_occ)], 1)]
    up = GraphMorphism(domain=qg, codomain=hg, vertex_map=vertex_map, edge_map=edge_map)
    return down, up


@dataclass
class SplittingReport:
    """Outcome of the level-set splitting verification."""

    rank_x0: int
    rank_xhalf: int
    rank_xquarter: int
    green_count: int
    immersion_ok: bool
    cover_degree_ok: bool

    EXPECTED = (3, 4, 7, 3, True, True)

    def as_tuple(self) -> Tuple:
        return (self.rank_x0, self.rank_xhalf, self.rank_xquarter,
                self.green_count, self.immersion_ok, self.cover_degree_ok)

    @property
    def matches_expected(self) -> bool:
        return self.as_tuple() == self.EXPECTED

    def as_dict(self) -> Dict:
        return {
            "rank_x0": self.rank_x0,
            "rank_xhalf": self.rank_xhalf,
            "rank_xquarter": self.rank_xquarter,
            "green_count": self.green_count,
            "immersion_ok": self.immersion_ok,
            "cover_degree_ok": self.cover_degree_ok,
        }


def splitting_report(c: HeightedComplex) -> SplittingReport:
    """Compute ranks and the two injectivity certificates for any complex.

    Internal consistency (Euler counts and, when the up map is a double
    covering, the index formula) is asserted outright: a violation is a
    construction bug, not a verification failure.
    """
    q = level_graph(c, "quarter")
    h = level_graph(c, "half")
    tent_occurrences = sum(
        1 for cell in c.cells for name, _ in cell if c.profile[name] == TENT)
    if len(q.vertices) != 2 * len(c.tent_labels()):
        raise AssertionError("quarter vertex count violates the Euler count")
    if len(q.arcs) != tent_occurrences:
        raise AssertionError("quarter arc count violates the Euler count")
    down, up = level_morphisms(c)
    rank_q = q.rank()
    rank_h = h.rank()
    report = SplittingReport(
        rank_x0=graph_rank(skeleton_graph(c)),
        rank_xhalf=rank_h,
        rank_xquarter=rank_q,
        green_count=q.green_count(),
        immersion_ok=check_immersion(down),
        cover_degree_ok=check_covering(up, 2),
    )
    if report.cover_degree_ok and rank_q != 2 * rank_h - 1:
        raise AssertionError("double covering violates the Nielsen-Schreier index formula")
    return report


def verify_splitting(m: int) -> SplittingReport:
    """Splitting checks for the Hanham complex of Art(2,3,2m); the expected
    report is ranks (3, 4, 7) with 3 green arcs and both maps certified."""
    return splitting_report(hanham_complex(m))
