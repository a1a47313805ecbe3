"""Normal forms in free products Z/j * Z/2 and in the odd dihedral amalgam,
plus the word-level verifications they support.

The dihedral Artin group on two generators with odd label 2m+1 is the
amalgam <x> *_{x^(2m+1) = s^2} <s>; its elements have the unique normal
form z^n w with z = x^(2m+1) = s^2 central and w an alternating word in
x^e (1 <= e <= 2m) and s.  Killing z gives Z/(2m+1) * Z/2, whose elements
are alternating syllable words.  Everything here verifies explicit word
identities in these normal forms; no general tree machinery is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .presentations import Presentation
from .words import Word, free_reduce, parse_word

Syllable = Tuple[str, int]  # ("u", exponent) or ("v", 1); ("x", e) / ("s", 1) in the amalgam


@dataclass(frozen=True)
class FreeProductElement:
    """Normal form in Z/j * Z/2 = <u> * <v>: alternating syllables u^e
    (exponents in 1..j-1) and v."""

    syllables: Tuple[Syllable, ...] = ()

    def is_identity(self) -> bool:
        return not self.syllables

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return "".join("v" if k == "v" else ("u" if e == 1 else "u^%d" % e)
                       for k, e in self.syllables)

    __repr__ = __str__


class FreeProduct:
    """The group Z/j * Z/2 with syllable arithmetic."""

    def __init__(self, j: int):
        if j < 2:
            raise ValueError("the cyclic factor order must be >= 2")
        self.j = j

    def identity(self) -> FreeProductElement:
        return FreeProductElement()

    def _push(self, syllables: List[Syllable], kind: str, exp: int):
        if kind == "u":
            exp %= self.j
            if exp == 0:
                return
            if syllables and syllables[-1][0] == "u":
                merged = (syllables[-1][1] + exp) % self.j
                syllables.pop()
                if merged:
                    self._push(syllables, "u", merged)
            else:
                syllables.append(("u", exp))
        else:
            if exp % 2 == 0:
                return
            if syllables and syllables[-1][0] == "v":
                syllables.pop()
            else:
                syllables.append(("v", 1))

    def element(self, syllables: Sequence[Syllable]) -> FreeProductElement:
        acc: List[Syllable] = []
        for kind, exp in syllables:
            if kind not in ("u", "v"):
                raise ValueError("unknown syllable %r" % kind)
            self._push(acc, kind, exp)
        return FreeProductElement(tuple(acc))

    def u(self, exp: int = 1) -> FreeProductElement:
        return self.element([("u", exp)])

    def v(self) -> FreeProductElement:
        return self.element([("v", 1)])

    def multiply(self, g: FreeProductElement, h: FreeProductElement) -> FreeProductElement:
        return self.element(list(g.syllables) + list(h.syllables))

    def inverse(self, g: FreeProductElement) -> FreeProductElement:
        inv = []
        for kind, exp in reversed(g.syllables):
            inv.append((kind, (-exp) % self.j if kind == "u" else exp))
        return self.element(inv)

    def power(self, g: FreeProductElement, k: int) -> FreeProductElement:
        base = g if k >= 0 else self.inverse(g)
        out = self.identity()
        for _ in range(abs(k)):
            out = self.multiply(out, base)
        return out

    def evaluate_word(self, w: Word, images: Dict[str, FreeProductElement]) -> FreeProductElement:
        out = self.identity()
        for name, sign in w:
            if name not in images:
                raise ValueError("no image for generator %r" % name)
            img = images[name] if sign > 0 else self.inverse(images[name])
            out = self.multiply(out, img)
        return out


def freeprod_multiply(g: FreeProductElement, h: FreeProductElement, j: int) -> FreeProductElement:
    return FreeProduct(j).multiply(g, h)


@dataclass(frozen=True)
class TreeVertex:
    """Vertex of the Bass-Serre tree of <u> * <v>: a coset g<u> or g<v>,
    stored by its canonical representative (normal form not ending in the
    stabilizing factor)."""

    rep: FreeProductElement
    tag: str  # "u" or "v"

    def __post_init__(self):
        if self.tag not in ("u", "v"):
            raise ValueError("vertex tag must be 'u' or 'v'")


def canonical_vertex(group: FreeProduct, g: FreeProductElement, tag: str) -> TreeVertex:
    syllables = list(g.syllables)
    if syllables and syllables[-1][0] == tag:
        syllables.pop()
    return TreeVertex(FreeProductElement(tuple(syllables)), tag)


def fixes_vertex(group: FreeProduct, g: FreeProductElement, vertex: TreeVertex) -> bool:
    """g fixes the coset h<t> iff h^-1 g h lies in <t>."""
    conj = group.multiply(group.multiply(group.inverse(vertex.rep), g), vertex.rep)
    return all(kind == vertex.tag for kind, _ in conj.syllables)


# ---------------------------------------------------------------------------
# The explicit epimorphism onto Z/3 * Z/2 and its stabilizer-image checks
# ---------------------------------------------------------------------------

def four_generator_presentation(k: int) -> Presentation:
    """Presentation of the (2, 3, 6k+3) triangle group on x = ab, y = cb,
    s = (ab)^(3k+1) a, t = cbc."""
    if k < 1:
        raise ValueError("k must be >= 1")
    x, y, s, t = (parse_word(ch) for ch in "xyst")
    rels = [
        x ** (6 * k + 3) * s ** -2,
        y ** 3 * t ** -2,
        (s * y ** -1) * ~(x ** (3 * k + 1) * y ** -1 * t * x ** (-3 * k - 1) * s * t ** -1),
    ]
    return Presentation(("x", "y", "s", "t"), rels, label="Art(2,3,%d) on x,y,s,t" % (6 * k + 3))


def check_hom_to_freeprod(k: int, images: Optional[Dict[str, FreeProductElement]] = None) -> bool:
    """Does x, y -> u and s, t -> v define a surjection of the (2,3,6k+3)
    group onto Z/3 * Z/2?  True iff every relator image normalizes to the
    identity (surjectivity is immediate: u and v are images)."""
    group = FreeProduct(3)
    if images is None:
        images = {"x": group.u(), "y": group.u(), "s": group.v(), "t": group.v()}
    pres = four_generator_presentation(k)
    for r in pres.relators:
        if not group.evaluate_word(r, images).is_identity():
            return False
    hit = {str(img) for img in images.values()}
    return {"u", "v"} <= hit


def fixed_vertex_images(k: int) -> Dict:
    """Images of the listed edge-stabilizer words under the epimorphism.

    The words are written in x = ab and y = cb; each image must normalize
    to the identity, which fixes both endpoints of the base edge of the
    Bass-Serre tree of Z/3 * Z/2 (the edge stabilizer there is trivial).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    group = FreeProduct(3)
    images = {"x": group.u(), "y": group.u()}
    x, y = parse_word("x"), parse_word("y")
    listed = [
        ("(ab)(cb)^-1", x * y ** -1),
        ("(cb)^-1(ab)^%d" % (3 * k + 1), y ** -1 * x ** (3 * k + 1)),
        ("(cb)(ab)^%d" % (-3 * k - 1), y * x ** (-3 * k - 1)),
        ("(cb)^3", y ** 3),
        ("(ab)^%d" % (6 * k + 3), x ** (6 * k + 3)),
    ]
    base_u = canonical_vertex(group, group.identity(), "u")
    base_v = canonical_vertex(group, group.identity(), "v")
    entries = []
    for label, word in listed:
        img = group.evaluate_word(word, images)
        entries.append({
            "word": label,
            "image": str(img),
            "is_identity": img.is_identity(),
            "fixes_base_edge": fixes_vertex(group, img, base_u) and fixes_vertex(group, img, base_v),
        })
    return {"k": k, "entries": entries, "all_identity": all(e["is_identity"] for e in entries)}


# ---------------------------------------------------------------------------
# The odd dihedral amalgam
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AmalgamElement:
    """Normal form z^central * (alternating syllables x^e, 1 <= e <= 2m,
    and s) in <x> *_{x^(2m+1) = s^2} <s>."""

    central: int = 0
    syllables: Tuple[Syllable, ...] = ()

    def is_identity(self) -> bool:
        return self.central == 0 and not self.syllables

    def __str__(self) -> str:
        parts = []
        if self.central:
            parts.append("z" if self.central == 1 else "z^%d" % self.central)
        for kind, e in self.syllables:
            parts.append("s" if kind == "s" else ("x" if e == 1 else "x^%d" % e))
        return "*".join(parts) if parts else "1"

    __repr__ = __str__


class DihedralAmalgam:
    """The two-generator Artin group of odd label 2m+1 in amalgam form."""

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("m must be >= 1")
        self.m = m
        self.order = 2 * m + 1  # x^order = z

    def identity(self) -> AmalgamElement:
        return AmalgamElement()

    def _push_x(self, state, exp: int):
        central, syll = state
        if syll and syll[-1][0] == "x":
            exp += syll.pop()[1]
        central += exp // self.order
        exp %= self.order
        if exp:
            syll.append(("x", exp))
        return (central, syll)

    def _push_s(self, state):
        central, syll = state
        if syll and syll[-1][0] == "s":
            syll.pop()
            central += 1  # s^2 = z
        else:
            syll.append(("s", 1))
        return (central, syll)

    def from_word(self, w: Word) -> AmalgamElement:
        """Normalize a word in the letters x and s (s^-1 = z^-1 s)."""
        state = (0, [])
        for name, sign in w:
            if name == "x":
                state = self._push_x(state, sign)
            elif name == "s":
                if sign < 0:
                    state = (state[0] - 1, state[1])
                state = self._push_s(state)
            else:
                raise ValueError("amalgam words use letters x and s only, got %r" % name)
        central, syll = state
        return AmalgamElement(central, tuple(syll))

    def multiply(self, g: AmalgamElement, h: AmalgamElement) -> AmalgamElement:
        state = (g.central + h.central, list(g.syllables))
        for kind, e in h.syllables:
            if kind == "x":
                state = self._push_x(state, e)
            else:
                state = self._push_s(state)
        return AmalgamElement(state[0], tuple(state[1]))

    def evaluate(self, w: Word, images: Dict[str, Word]) -> AmalgamElement:
        """Substitute x/s-words for the letters of ``w`` and normalize."""
        letters = []
        for name, sign in w:
            img = images[name] if sign > 0 else ~images[name]
            letters.extend(img.letters)
        return self.from_word(Word(letters))


def amalgam_normalize(w: Word, m: int) -> AmalgamElement:
    return DihedralAmalgam(m).from_word(w)


def verify_dihedral_generators(m: int, b_image: Optional[Word] = None) -> bool:
    """Check the amalgam change of generators for the odd dihedral group:
    a -> x^-m s and b -> s^-1 x^(m+1) kill the dihedral relator, with
    ab -> x and (ab)^m a -> s."""
    if m < 1:
        raise ValueError("m must be >= 1")
    amalgam = DihedralAmalgam(m)
    x, s = parse_word("x"), parse_word("s")
    images = {
        "a": x ** (-m) * s,
        "b": b_image if b_image is not None else ~s * x ** (m + 1),
    }
    from .words import alternating_product

    relator = alternating_product("a", "b", 2 * m + 1) * ~alternating_product("b", "a", 2 * m + 1)
    a, b = parse_word("a"), parse_word("b")
    ab_img = amalgam.evaluate(a * b, images)
    s_img = amalgam.evaluate((a * b) ** m * a, images)
    return (
        amalgam.evaluate(relator, images).is_identity()
        and ab_img == amalgam.from_word(x)
        and s_img == amalgam.from_word(s)
    )
