import pytest

from triartin.levelset import (
    ASCEND,
    DESCEND,
    FLAT,
    TENT,
    CellUnfoldError,
    HeightedComplex,
    hanham_complex,
    level_graph,
    level_morphisms,
    skeleton_graph,
    splitting_report,
    unfold_cells,
    verify_splitting,
)
from triartin.presentations import bounded_trivial, hanham_presentation
from triartin.stallings import canonical_form, check_covering, check_immersion, fold, graph_rank
from triartin.words import Word, free_reduce, parse_word, word_to_str


def test_hanham_complex_shape():
    c3 = hanham_complex(3)
    assert len(c3.cells) == 6
    assert len(c3.edges) == 6
    assert c3.tent_labels() == ["b", "c", "z"]
    assert c3.flat_labels() == ["x", "y", "d"]
    # 1-skeleton is a wedge of six circles
    assert len(c3.edges) - 1 + 1 == 6
    c5 = hanham_complex(5)
    assert len(c5.cells[5]) == 6  # z x x x z d^-1
    with pytest.raises(ValueError):
        hanham_complex(2)


def test_unfold_examples():
    c = hanham_complex(3)
    unfolded = unfold_cells(c)
    assert unfolded[2].placements == [(TENT, ASCEND), (TENT, DESCEND), (FLAT, 0)]
    assert unfolded[5].placements == [(TENT, ASCEND), (FLAT, 1), (TENT, DESCEND), (FLAT, 0)]


def test_unfold_rejects_odd_tent_count():
    bad = HeightedComplex(edges=[("x", FLAT), ("b", TENT)], cells=[parse_word("bx")])
    with pytest.raises(CellUnfoldError):
        unfold_cells(bad)


def test_quarter_graph_counts():
    q = level_graph(hanham_complex(3), "quarter")
    assert len(q.vertices) == 6
    assert len(q.arcs) == 12
    assert q.green_count() == 3
    assert q.rank() == 7


def test_half_graph_counts():
    h = level_graph(hanham_complex(3), "half")
    assert len(h.vertices) == 3
    assert len(h.arcs) == 6
    assert h.rank() == 4


def test_quarter_rank_stable_in_m():
    for m in range(3, 9):
        assert level_graph(hanham_complex(m), "quarter").rank() == 7


def test_euler_counts():
    for m in (3, 5, 8):
        c = hanham_complex(m)
        q = level_graph(c, "quarter")
        tents = sum(1 for cell in c.cells for name, _ in cell if c.profile[name] == TENT)
        assert len(q.vertices) == 2 * len(c.tent_labels())
        assert len(q.arcs) == tents
        assert q.rank() == len(q.arcs) - len(q.vertices) + 1


def test_level_morphisms():
    c = hanham_complex(3)
    down, up = level_morphisms(c)
    assert graph_rank(skeleton_graph(c)) == 3
    assert check_immersion(down)
    assert check_covering(up, 2)
    assert not check_covering(up, 1)


def test_index_formula_on_coverings():
    for m in range(3, 9):
        c = hanham_complex(m)
        q = level_graph(c, "quarter")
        h = level_graph(c, "half")
        _, up = level_morphisms(c)
        assert check_covering(up, 2)
        assert q.rank() == 2 * h.rank() - 1


def test_verify_splitting_range():
    for m in range(3, 9):
        report = verify_splitting(m)
        assert report.as_tuple() == (3, 4, 7, 3, True, True)
        assert report.matches_expected


def test_corrupted_complex_is_flagged():
    c = hanham_complex(3)
    bad = HeightedComplex(edges=c.edges, cells=c.cells[:5] + [parse_word("zyzd^-1")],
                          label="corrupted")
    report = splitting_report(bad)
    assert not report.matches_expected
    assert not report.immersion_ok


def test_reflection_independence():
    # flipping the canonical ascent choice of one cell reverses that cell's
    # two arcs; the collapsed projection graph is isomorphic to the original
    base = hanham_complex(3)
    down_base, _ = level_morphisms(base)
    base_form = canonical_form(fold(down_base.domain)[0])
    for cell_index in range(6):
        flip = frozenset({cell_index})
        down_flip, up_flip = level_morphisms(base, flipped=flip)
        assert canonical_form(fold(down_flip.domain)[0]) == base_form
        assert check_covering(up_flip, 2)
        assert level_graph(base, "quarter", flipped=flip).rank() == 7


def test_cell_reconstruction_consistency():
    # the two arcs of each cell carry exactly the flat stretches of its
    # boundary: stitching tent letters and down labels back together must
    # reproduce a cyclic rotation of the cell (up to inversion), and that
    # word is trivial in the presentation by a one-step certificate.
    m = 3
    c = hanham_complex(m)
    q = level_graph(c, "quarter")
    pres = hanham_presentation(m)
    by_cell = {}
    for arc in q.arcs:
        by_cell.setdefault(arc.cell, {})[arc.level] = arc
    for ci, cell in enumerate(c.cells):
        low = by_cell[ci]["1/4"]
        high = by_cell[ci]["3/4"]
        tent_i = Word((cell.letters[low.tail_occ],))
        tent_j = Word((cell.letters[low.head_occ],))
        # boundary = (flats before tent_i) tent_i (mid flats) tent_j (flats after)
        rebuilt = free_reduce(tent_i * high.down_label * tent_j * ~low.down_label)
        candidates = set()
        for rot in range(len(cell)):
            rotated = Word(cell.letters[rot:] + cell.letters[:rot])
            candidates.add(rotated)
            candidates.add(~rotated)
        assert rebuilt in candidates
        verdict = bounded_trivial(rebuilt, pres)
        assert verdict.is_trivial and len(verdict.certificate) == 1


def test_all_flat_cell_is_allowed():
    c = HeightedComplex(edges=[("x", FLAT)], cells=[parse_word("xx")])
    assert unfold_cells(c)[0].placements == [(FLAT, 0), (FLAT, 0)]
    assert level_graph(c, "quarter").arcs == []
