"""Finitely presented groups, standard triangle-group presentations,
homomorphisms by generator images, abelianization, and a bounded
relator-insertion prover for word triviality.

The prover is a certificate-producing search, not a decision procedure: a
``trivial`` verdict always carries a replayable insertion certificate, and
``unknown`` never asserts nontriviality.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .snf import cokernel, smith_normal_form
from .words import (
    EMPTY,
    Word,
    alternating_product,
    cyclic_reduce,
    cyclic_rotations,
    free_reduce,
    gen,
    splice_reduce,
)

Perm = Tuple[int, ...]


def perm_identity(degree: int) -> Perm:
    return tuple(range(degree))


def perm_compose(p: Perm, q: Perm) -> Perm:
    """Apply p first, then q."""
    return tuple(q[i] for i in p)


def perm_inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


@dataclass(frozen=True)
class PermutationTarget:
    """A finite permutation group target for homomorphisms (a subgroup of
    Sym(degree) given implicitly by generator images)."""

    degree: int

    def identity(self) -> Perm:
        return perm_identity(self.degree)


class Presentation:
    """Group presentation: generator names plus freely reduced relators."""

    def __init__(self, generators: Sequence[str], relators: Sequence[Word], label: str = ""):
        self.generators = tuple(generators)
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        rels = []
        genset = set(self.generators)
        for r in relators:
            r = free_reduce(r)
            if not r:
                raise ValueError("relators must be nonempty after free reduction")
            if not r.names() <= genset:
                raise ValueError("relator %r uses generators outside %r" % (r, self.generators))
            rels.append(r)
        self.relators = tuple(rels)
        self.label = label
        # Cyclically reduced forms drive the insertion search.
        self.cyclic_relators = tuple(cyclic_reduce(r) for r in self.relators)

    def __repr__(self) -> str:
        return "Presentation(%s; %d relators)" % (",".join(self.generators), len(self.relators))

    def exponent_matrix(self) -> List[List[int]]:
        return [[r.exponent_sum(g) for g in self.generators] for r in self.relators]

    def search_relators(self) -> List[Word]:
        """Cyclic relators followed by their inverses; the index space used
        by triviality certificates."""
        base = list(self.cyclic_relators)
        return base + [~r for r in base]


def presentation_to_json(p: Presentation) -> dict:
    """File form: {"generators": [name], "relators": [word string], "label": str}."""
    from .words import word_to_str

    return {
        "generators": list(p.generators),
        "relators": [word_to_str(r) for r in p.relators],
        "label": p.label,
    }


def presentation_from_json(data: dict) -> Presentation:
    from .words import parse_word

    return Presentation(
        [str(g) for g in data["generators"]],
        [parse_word(str(r)) for r in data["relators"]],
        label=str(data.get("label", "")),
    )


def triangle_artin(m: int, n: int, p: int) -> Presentation:
    """The three-generator presentation with one alternating-product relation
    per pair of generators, labelled (m, n, p)."""
    for lab in (m, n, p):
        if lab < 2:
            raise ValueError("triangle labels must be >= 2, got %r" % (lab,))
    rels = [
        alternating_product("a", "b", m) * ~alternating_product("b", "a", m),
        alternating_product("b", "c", n) * ~alternating_product("c", "b", n),
        alternating_product("c", "a", p) * ~alternating_product("a", "c", p),
    ]
    return Presentation(("a", "b", "c"), rels, label="Art(%d,%d,%d)" % (m, n, p))


def hanham_presentation(m: int) -> Presentation:
    """Six-generator presentation of Art(2,3,2m) on b,c,x,y,z,d.

    z and d are shortcut generators (z = xc = bx, d = z x^(m-2) z); the
    presentation complex of this presentation carries the height function
    that exhibits the amalgam splitting, see levelset.hanham_complex.
    """
    if m < 3:
        raise ValueError("hanham presentation needs m >= 3 (x^(m-2) degenerates)")
    b, c, x, y, z, d = (gen(s) for s in "bcxyzd")
    rels = [
        z * ~(x * c),
        z * ~(b * x),
        y * ~(b * c),
        (y * b) * ~(c * y),
        (d * b) * ~(c * d),
        d * ~(z * x ** (m - 2) * z),
    ]
    return Presentation(("b", "c", "x", "y", "z", "d"), rels, label="B(%d)" % m)


def abelianization(p: Presentation) -> Tuple[List[List[int]], List[int]]:
    """Exponent-sum matrix of the relators and its invariant factors."""
    matrix = p.exponent_matrix()
    if not matrix:
        return [], []
    return matrix, smith_normal_form(matrix).invariant_factors


def first_homology(p: Presentation) -> Tuple[int, List[int]]:
    """H1 of the presented group: (free rank, torsion factors)."""
    matrix = p.exponent_matrix()
    return cokernel(matrix, cols=len(p.generators))


# ---------------------------------------------------------------------------
# Bounded triviality search
# ---------------------------------------------------------------------------

@dataclass
class SearchBudget:
    """Bounds for the insertion search.

    max_depth caps certificate length and max_len prunes long intermediate
    words.  max_growth limits how much a single insertion may lengthen the
    current word (insertions must also cancel at least one letter, so every
    move interacts with the word being simplified); max_expansions bounds
    the number of explored states so exhaustion terminates.
    """

    max_depth: int = 16
    max_len: int = 256
    max_growth: int = 4
    max_expansions: int = 50_000


CertStep = Tuple[int, Word, int]  # (search relator index, conjugator, insert position)


@dataclass
class TrivialityVerdict:
    status: str  # "trivial" | "unknown"
    certificate: Optional[Tuple[CertStep, ...]] = None

    @property
    def is_trivial(self) -> bool:
        return self.status == "trivial"


def replay_certificate(w: Word, p: Presentation, certificate: Sequence[CertStep]) -> Word:
    """Apply the certificate's insertions to ``w`` and return the final
    reduced word (empty iff the certificate proves triviality)."""
    search = p.search_relators()
    current = free_reduce(w)
    for idx, conj, pos in certificate:
        ins = free_reduce(conj * search[idx] * ~conj)
        if pos < 0 or pos > len(current):
            raise ValueError("certificate position %d out of range" % pos)
        current = splice_reduce(current, pos, ins)
    return current


def _insertion_variants(p: Presentation) -> List[Tuple[int, Word, Word]]:
    """(search index, conjugator, reduced insertion word) for every cyclic
    rotation of every relator and relator inverse.

    A rotation of r by k letters equals u r u^(-1) for u the inverse of the
    length-k prefix, which is what the certificate records.
    """
    out = []
    seen = set()
    for idx, r in enumerate(p.search_relators()):
        for k, rot in enumerate(cyclic_rotations(r)):
            if not rot:
                continue
            key = rot.letters
            if key in seen:
                continue
            seen.add(key)
            conj = ~Word(r.letters[:k])
            out.append((idx, conj, rot))
    return out


def _splice(letters: Tuple, pos: int, rot: Tuple):
    """Reduced result of inserting ``rot`` into reduced ``letters`` at ``pos``,
    plus the number of cancelled letter pairs.

    Only the neighbourhood of the splice point is touched, so the cost is
    O(len(rot) + cancellations) until the result is materialized.
    """
    i = pos  # letters[:i] survives untouched below the overlay
    overlay: list = []

    def top():
        if overlay:
            return overlay[-1]
        return letters[i - 1] if i > 0 else None

    cancels = 0
    for letter in rot:
        t = top()
        if t is not None and t[0] == letter[0] and t[1] == -letter[1]:
            if overlay:
                overlay.pop()
            else:
                i -= 1
            cancels += 1
        else:
            overlay.append(letter)
    j = pos
    n = len(letters)
    while j < n and (overlay or i < pos):
        letter = letters[j]
        t = top()
        if t is not None and t[0] == letter[0] and t[1] == -letter[1]:
            if overlay:
                overlay.pop()
            else:
                i -= 1
            cancels += 1
            j += 1
        else:
            break
    new_letters = letters[:i] + tuple(overlay) + letters[j:]
    return new_letters, cancels


def bounded_trivial(w: Word, p: Presentation, budget: Optional[SearchBudget] = None) -> TrivialityVerdict:
    """Search for a proof that ``w`` is trivial in ``p``.

    Best-first search on reduced words ordered by (length, depth), where a
    move inserts one relator-conjugate (a cyclic rotation of a relator or
    relator inverse) and freely reduces.  Moves must cancel at least one
    letter and may grow the word by at most ``max_growth``.  A ``trivial``
    verdict is replay-checked before being returned; exhausting the budget
    yields ``unknown``, which never asserts nontriviality.
    """
    budget = budget or SearchBudget()
    if not w.names() <= set(p.generators):
        raise ValueError("word uses generators outside the presentation")
    start = free_reduce(w)
    if not start:
        return TrivialityVerdict("trivial", ())
    variants = _insertion_variants(p)
    rot_letters = [(idx, conj, rot.letters) for idx, conj, rot in variants]
    # heap entries: (length, depth, word letters, certificate)
    heap = [(len(start), 0, start.letters, ())]
    best_depth = {start.letters: 0}
    expansions = 0
    while heap:
        size, depth, letters, cert = heapq.heappop(heap)
        if depth > best_depth.get(letters, depth):
            continue  # stale entry
        if depth >= budget.max_depth:
            continue
        expansions += 1
        if expansions > budget.max_expansions:
            break
        cap = min(budget.max_len, size + budget.max_growth)
        for idx, conj, rot in rot_letters:
            for pos in range(size + 1):
                new_letters, cancels = _splice(letters, pos, rot)
                if cancels == 0 or len(new_letters) > cap:
                    continue
                step: Tuple[CertStep, ...] = cert + ((idx, conj, pos),)
                if not new_letters:
                    if replay_certificate(w, p, step):
                        raise RuntimeError("certificate failed to replay; search is inconsistent")
                    return TrivialityVerdict("trivial", step)
                known = best_depth.get(new_letters)
                if known is not None and known <= depth + 1:
                    continue
                best_depth[new_letters] = depth + 1
                heapq.heappush(heap, (len(new_letters), depth + 1, new_letters, step))
    return TrivialityVerdict("unknown")


# ---------------------------------------------------------------------------
# Homomorphisms by generator images
# ---------------------------------------------------------------------------

@dataclass
class GroupHom:
    """Homomorphism given on generators.

    images maps each source generator either to a target Word (presentation
    targets) or to a permutation tuple (PermutationTarget)."""

    source: Presentation
    target: Union[Presentation, PermutationTarget]
    images: Dict[str, Union[Word, Perm]]
    label: str = ""

    def __post_init__(self):
        missing = set(self.source.generators) - set(self.images)
        if missing:
            raise ValueError("missing images for generators %s" % sorted(missing))
        if isinstance(self.target, Presentation):
            tgens = set(self.target.generators)
            for g, img in self.images.items():
                if not isinstance(img, Word):
                    raise ValueError("image of %r must be a Word" % g)
                if not img.names() <= tgens:
                    raise ValueError("image of %r uses generators absent from target" % g)
        else:
            for g, img in self.images.items():
                if isinstance(img, Word):
                    raise ValueError("image of %r must be a permutation" % g)
                if sorted(img) != list(range(self.target.degree)):
                    raise ValueError("image of %r is not a permutation of degree %d" % (g, self.target.degree))

    def apply(self, w: Word) -> Union[Word, Perm]:
        if isinstance(self.target, Presentation):
            out = EMPTY
            for name, sign in w:
                img = self.images[name]
                out = out * (img if sign > 0 else ~img)
            return out
        acc = self.target.identity()
        for name, sign in w:
            img = self.images[name]
            acc = perm_compose(acc, img if sign > 0 else perm_inverse(img))
        return acc


def check_hom(h: GroupHom, budget: Optional[SearchBudget] = None) -> List[TrivialityVerdict]:
    """One verdict per source relator: does its image die in the target?

    Permutation targets and free targets (no relators) are decided exactly;
    other presentation targets run the bounded insertion search.
    """
    verdicts = []
    for r in h.source.relators:
        img = h.apply(r)
        if isinstance(h.target, PermutationTarget):
            ok = img == h.target.identity()
            verdicts.append(TrivialityVerdict("trivial", ()) if ok else TrivialityVerdict("unknown"))
        elif not h.target.relators:
            # Free target: free reduction is an exact decision.
            verdicts.append(TrivialityVerdict("trivial", ()) if not img else TrivialityVerdict("unknown"))
        else:
            verdicts.append(bounded_trivial(img, h.target, budget))
    return verdicts


def hanham_homomorphisms(m: int) -> Tuple[GroupHom, GroupHom]:
    """The mutually inverse pair between Art(2,3,2m) and its six-generator
    Hanham form: phi into the shortcut presentation and psi back.

    The triangle group is taken with the even label on the (a,b) pair and
    the commuting pair (a,c), i.e. triangle_artin(2m, 3, 2); that is the
    letter convention under which the shortcut generators are defined.
    """
    art = triangle_artin(2 * m, 3, 2)
    b_pres = hanham_presentation(m)
    b, c, x = gen("b"), gen("c"), gen("x")
    a = gen("a")
    phi = GroupHom(
        source=art,
        target=b_pres,
        images={"a": ~b * ~c * x * c, "b": b, "c": c},
        label="phi: %s -> %s" % (art.label, b_pres.label),
    )
    ba = gen("b") * a
    psi = GroupHom(
        source=b_pres,
        target=art,
        images={
            "b": gen("b"),
            "c": gen("c"),
            "x": gen("c") * ba * ~gen("c"),
            "y": gen("b") * gen("c"),
            "z": gen("b") * gen("c") * ba * ~gen("c"),
            "d": gen("b") * gen("c") * ba ** m,
        },
        label="psi: %s -> %s" % (b_pres.label, art.label),
    )
    return phi, psi


def check_mutually_inverse(
    phi: GroupHom, psi: GroupHom, budget: Optional[SearchBudget] = None
) -> Dict[str, TrivialityVerdict]:
    """Verdicts for psi(phi(g)) g^-1 and phi(psi(h)) h^-1 on all generators.

    Both compositions are only certified up to the search budget; an unknown
    entry means the budget ran out, not that the maps fail to invert.
    """
    out: Dict[str, TrivialityVerdict] = {}
    for g in phi.source.generators:
        word = psi.apply(phi.apply(gen(g))) * ~gen(g)
        out["psi.phi(%s)" % g] = bounded_trivial(word, psi.target, budget)
    for g in psi.source.generators:
        word = phi.apply(psi.apply(gen(g))) * ~gen(g)
        out["phi.psi(%s)" % g] = bounded_trivial(word, phi.target, budget)
    return out
