"""Reidemeister-Schreier rewriting over power-of-a transversals.

The subgroup in question is always the kernel of the map sending every
generator to 1 in Z (the infinite shift transversal {a^i : i in Z}, handled
symbolically) or in Z/n (the finite transversal {a^0, ..., a^(n-1)}).
Rewriting follows the prefix-representative rule: an occurrence g^e with
prefix degree d contributes the symbol s_{a^{d'}, g}^e where d' = d for
e = +1 and d' = d - 1 for e = -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .laurent import LaurentPoly
from .presentations import Presentation, triangle_artin
from .words import EMPTY, Word, free_reduce

TRANSVERSAL_LETTER = "a"


@dataclass(frozen=True, order=True)
class SchreierGenerator:
    """The symbol s_{a^shift, gen}."""

    shift: int
    gen: str

    def __str__(self) -> str:
        return "s(%d,%s)" % (self.shift, self.gen)


class RewrittenWord:
    """Freely reduced word in signed Schreier symbols."""

    __slots__ = ("symbols",)

    def __init__(self, symbols: Sequence[Tuple[SchreierGenerator, int]] = ()):
        stack: List[Tuple[SchreierGenerator, int]] = []
        for sym, sign in symbols:
            if stack and stack[-1][0] == sym and stack[-1][1] == -sign:
                stack.pop()
            else:
                stack.append((sym, sign))
        object.__setattr__(self, "symbols", tuple(stack))

    def __setattr__(self, *args):
        raise AttributeError("RewrittenWord is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, RewrittenWord) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __str__(self) -> str:
        if not self.symbols:
            return "1"
        return " ".join(str(s) + ("^-1" if sign < 0 else "") for s, sign in self.symbols)

    __repr__ = __str__


def rewrite_tau(w: Word, modulus: Optional[int] = None) -> RewrittenWord:
    """Rewrite a kernel word into Schreier symbols.

    ``modulus=None`` uses the infinite shift transversal: occurrences of the
    transversal letter itself emit nothing (their symbols are trivial).
    With ``modulus=n`` shifts live in Z/n and the symbol s_{a^{n-1}, a}
    (the word a^n) survives as a genuine generator.
    """
    total = w.degree()
    if modulus is None:
        if total != 0:
            raise ValueError("word has degree %d, not in the kernel of the degree map" % total)
    else:
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        if total % modulus != 0:
            raise ValueError(
                "word has degree %d == %d mod %d, not in the kernel" % (total, total % modulus, modulus))
    symbols: List[Tuple[SchreierGenerator, int]] = []
    d = 0
    for name, sign in w:
        shift = d if sign > 0 else d - 1
        if modulus is not None:
            shift %= modulus
        if name == TRANSVERSAL_LETTER:
            # s_{a^i, a} is trivial except for the wrap symbol a^n mod n.
            if modulus is not None and shift == modulus - 1:
                symbols.append((SchreierGenerator(shift, name), sign))
        else:
            symbols.append((SchreierGenerator(shift, name), sign))
        d += sign
    return RewrittenWord(symbols)


def shift_rewritten(rw: RewrittenWord, offset: int) -> RewrittenWord:
    """Conjugation by a^offset increments every shift (infinite transversal)."""
    return RewrittenWord(tuple((SchreierGenerator(s.shift + offset, s.gen), sign) for s, sign in rw))


def expand_symbol(sym: SchreierGenerator, modulus: Optional[int] = None) -> Word:
    """The subgroup element a^i g (a^(i+1))^(-1) denoted by s_{a^i, g},
    with the exponent of the trailing representative taken mod n when a
    finite transversal is in play.  Shifts may be negative in the infinite
    case."""

    def a_power(k: int):
        return [(TRANSVERSAL_LETTER, 1 if k > 0 else -1)] * abs(k)

    i = sym.shift
    rep_exp = i + 1 if modulus is None else (i + 1) % modulus
    letters = a_power(i) + [(sym.gen, 1)] + a_power(-rep_exp)
    return free_reduce(Word(letters))


def expand_rewritten(rw: RewrittenWord, modulus: Optional[int] = None) -> Word:
    """Map each symbol back to the word it denotes and reduce; for kernel
    input this recovers the original word."""
    out = EMPTY
    for sym, sign in rw:
        piece = expand_symbol(sym, modulus)
        out = out * (piece if sign > 0 else ~piece)
    return out


def abelianized_row(rw: RewrittenWord, gens: Sequence[str]) -> Tuple[LaurentPoly, ...]:
    """Collect each symbol occurrence g^e at shift d as e t^d in the slot of
    g; the transversal letter's class is zero and is dropped."""
    acc: Dict[str, Dict[int, int]] = {g: {} for g in gens}
    for sym, sign in rw:
        if sym.gen == TRANSVERSAL_LETTER:
            continue
        slot = acc[sym.gen]
        slot[sym.shift] = slot.get(sym.shift, 0) + sign
    return tuple(LaurentPoly(acc[g]) for g in gens)


def kernel_relator_rows(m: int, n: int, p: int) -> List[Tuple[LaurentPoly, LaurentPoly]]:
    """Abelianized rewriting of the three triangle relators over the infinite
    shift transversal, as Laurent vectors in the classes of (s_b, s_c).

    Degree-shifted relators are t-multiples of these and are not listed;
    conjugation by a acts as multiplication by t on the rows.
    """
    pres = triangle_artin(m, n, p)
    rows = []
    for r in pres.relators:
        rw = rewrite_tau(r)
        rows.append(tuple(abelianized_row(rw, ("b", "c"))))
    return rows


def finite_cover_presentation(pres: Presentation, n: int) -> Presentation:
    """Presentation of the kernel of the mod-n degree map.

    Generators are s_{a^i, g} for non-transversal g and 0 <= i < n plus the
    wrap symbol s_{a^(n-1), a} = a^n; relators are the rewrites of all
    a^i r a^(-i) for r a relator and 0 <= i < n.
    """
    if n < 1:
        raise ValueError("cover index must be >= 1")
    if TRANSVERSAL_LETTER not in pres.generators:
        raise ValueError("presentation must contain the transversal letter %r" % TRANSVERSAL_LETTER)

    def sym_name(sym: SchreierGenerator) -> str:
        return "%s%d" % (sym.gen, sym.shift)

    others = [g for g in pres.generators if g != TRANSVERSAL_LETTER]
    gens = ["%s%d" % (g, i) for i in range(n) for g in others]
    gens.append("%s%d" % (TRANSVERSAL_LETTER, n - 1))
    a = Word(((TRANSVERSAL_LETTER, 1),))
    relators = []
    for i in range(n):
        for r in pres.relators:
            conj = free_reduce(a ** i * r * a ** (-i))
            rw = rewrite_tau(conj, modulus=n)
            word = Word(tuple((sym_name(sym), sign) for sym, sign in rw))
            if word:
                relators.append(word)
    return Presentation(gens, relators, label="index-%d cover of %s" % (n, pres.label))
