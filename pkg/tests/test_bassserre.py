import random

import pytest

from triartin.bassserre import (
    AmalgamElement,
    DihedralAmalgam,
    FreeProduct,
    FreeProductElement,
    amalgam_normalize,
    canonical_vertex,
    check_hom_to_freeprod,
    fixed_vertex_images,
    fixes_vertex,
    four_generator_presentation,
    freeprod_multiply,
    verify_dihedral_generators,
)
from triartin.words import parse_word


def test_freeprod_multiply_examples():
    fp = FreeProduct(3)
    u, v = fp.u(), fp.v()
    assert freeprod_multiply(fp.multiply(u, v), fp.multiply(v, u), 3) == fp.u(2)
    assert fp.multiply(u, fp.u(2)).is_identity()
    assert fp.multiply(fp.multiply(v, u), fp.multiply(fp.u(2), v)).is_identity()


def test_freeprod_orders():
    fp = FreeProduct(3)
    assert fp.power(fp.u(), 3).is_identity()
    assert not fp.power(fp.u(), 2).is_identity()
    assert fp.power(fp.v(), 2).is_identity()
    uv = fp.multiply(fp.u(), fp.v())
    for n in range(1, 61):
        assert not fp.power(uv, n).is_identity()


def random_syllables(rng, j, length):
    out = []
    for _ in range(length):
        if rng.random() < 0.5:
            out.append(("u", rng.randrange(1, j)))
        else:
            out.append(("v", 1))
    return out


def test_freeprod_normal_forms_unique():
    rng = random.Random(77)
    for j in (2, 3, 5, 7):
        fp = FreeProduct(j)
        for _ in range(100):
            syls = random_syllables(rng, j, rng.randrange(0, 8))
            left = fp.identity()
            for s in syls:
                left = fp.multiply(left, fp.element([s]))
            right = fp.element(syls)
            assert left == right
            assert fp.multiply(left, fp.inverse(left)).is_identity()


def test_four_generator_presentation():
    pres = four_generator_presentation(1)
    assert pres.generators == ("x", "y", "s", "t")
    assert len(pres.relators) == 3
    with pytest.raises(ValueError):
        four_generator_presentation(0)


def test_check_hom_to_freeprod_range():
    for k in range(1, 6):
        assert check_hom_to_freeprod(k)


def test_check_hom_to_freeprod_corrupted():
    fp = FreeProduct(3)
    bad = {"x": fp.u(), "y": fp.u(2), "s": fp.v(), "t": fp.v()}
    assert not check_hom_to_freeprod(1, images=bad)


def test_fixed_vertex_images():
    for k in (1, 2, 3):
        report = fixed_vertex_images(k)
        assert report["all_identity"]
        assert all(e["fixes_base_edge"] for e in report["entries"])
        assert len(report["entries"]) == 5


def test_tree_vertex_fixing():
    fp = FreeProduct(3)
    base_u = canonical_vertex(fp, fp.identity(), "u")
    base_v = canonical_vertex(fp, fp.identity(), "v")
    assert fixes_vertex(fp, fp.u(), base_u)
    assert not fixes_vertex(fp, fp.u(), base_v)
    assert fixes_vertex(fp, fp.v(), base_v)
    # a conjugate of u fixes the translated vertex, not the base one
    g = fp.multiply(fp.multiply(fp.v(), fp.u()), fp.v())
    moved = canonical_vertex(fp, fp.v(), "u")
    assert fixes_vertex(fp, g, moved)
    assert not fixes_vertex(fp, g, base_u)


def test_amalgam_normalize_examples():
    m = 3
    x, s = parse_word("x"), parse_word("s")
    assert amalgam_normalize(s ** 2 * x ** (-(2 * m + 1)), m).is_identity()
    assert amalgam_normalize(x ** (2 * m + 2), m) == AmalgamElement(1, (("x", 1),))
    assert amalgam_normalize(s * x ** (2 * m + 1) * s, m) == AmalgamElement(2, ())


def test_amalgam_normal_forms_unique():
    rng = random.Random(88)
    for m in (1, 2, 3):
        amalgam = DihedralAmalgam(m)
        for _ in range(100):
            letters = [(rng.choice("xs"), rng.choice((1, -1))) for _ in range(rng.randrange(0, 10))]
            w = parse_word(" ".join(n + ("^-1" if s < 0 else "") for n, s in letters) or "1")
            left = amalgam.identity()
            for name, sign in w:
                piece = amalgam.from_word(parse_word(name + ("^-1" if sign < 0 else "")))
                left = amalgam.multiply(left, piece)
            assert left == amalgam.from_word(w)


def test_verify_dihedral_generators():
    for m in (1, 2, 3):
        assert verify_dihedral_generators(m)


def test_verify_dihedral_corrupted():
    m = 2
    bad = ~parse_word("s") * parse_word("x") ** m
    assert not verify_dihedral_generators(m, b_image=bad)
