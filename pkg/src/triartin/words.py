"""Signed-letter words over named generators, with free reduction.

A letter is a pair ``(name, sign)`` with ``sign`` in ``{+1, -1}``; a Word is
an immutable sequence of letters.  Words are the common currency between all
other modules: presentations, graph labels, rewriting output and normal-form
inputs all speak this type.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Tuple

Letter = Tuple[str, int]


class Word:
    """Immutable word in a free group.

    ``Word * Word`` concatenates and freely reduces; ``~w`` is the inverse.
    Construction does not reduce, so a Word can also hold an unreduced
    spelling (use :func:`free_reduce` to normalize).
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        letters = tuple((name, sign) for name, sign in letters)
        for name, sign in letters:
            if not name:
                raise ValueError("generator name must be nonempty")
            if sign not in (1, -1):
                raise ValueError("letter sign must be +1 or -1, got %r" % (sign,))
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, *args):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, idx):
        got = self.letters[idx]
        return Word(got) if isinstance(idx, slice) else got

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __lt__(self, other: "Word") -> bool:
        return self.letters < other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return free_reduce(Word(self.letters + other.letters))

    def __invert__(self) -> "Word":
        return Word(tuple((n, -s) for n, s in reversed(self.letters)))

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else ~self
        out = Word()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __repr__(self) -> str:
        return "Word(%s)" % (word_to_str(self) or "1")

    def names(self) -> set:
        return {n for n, _ in self.letters}

    def exponent_sum(self, name: str) -> int:
        return sum(s for n, s in self.letters if n == name)

    def degree(self) -> int:
        """Total exponent sum; the image under the all-generators-to-1 map."""
        return sum(s for _, s in self.letters)


EMPTY = Word()


def gen(name: str, sign: int = 1) -> Word:
    """One-letter word."""
    return Word(((name, sign),))


def free_reduce(w: Word) -> Word:
    """The unique freely reduced word equal to ``w``; idempotent."""
    stack: list = []
    for name, sign in w:
        if stack and stack[-1][0] == name and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((name, sign))
    return Word(stack)


def is_reduced(w: Word) -> bool:
    return all(
        not (a[0] == b[0] and a[1] == -b[1])
        for a, b in zip(w.letters, w.letters[1:])
    )


def splice_reduce(w: Word, pos: int, ins: Word) -> Word:
    """Freely reduce ``w[:pos] + ins + w[pos:]``.

    Assumes ``w`` is already reduced; cancellation can only happen around the
    splice point, so this runs in O(len(ins) + cancellations).
    """
    left = list(w.letters[:pos])
    right = list(w.letters[pos:])

    def push(stack, letter):
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)

    for letter in ins:
        push(left, letter)
    for letter in right:
        push(left, letter)
    return Word(left)


def cyclic_reduce(w: Word) -> Word:
    """Strip matching inverse letters from the two ends after free reduction."""
    v = free_reduce(w)
    letters = list(v.letters)
    while len(letters) >= 2 and letters[0][0] == letters[-1][0] and letters[0][1] == -letters[-1][1]:
        letters = letters[1:-1]
    return Word(letters)


def cyclic_rotations(w: Word) -> list:
    """All cyclic rotations of ``w`` (a cyclically reduced word stays reduced)."""
    letters = w.letters
    return [Word(letters[i:] + letters[:i]) for i in range(max(len(letters), 1))]


def alternating_product(g: str, h: str, length: int) -> Word:
    """The word ``g h g h ...`` of the given length, starting with ``g``."""
    if length < 1:
        raise ValueError("alternating product needs length >= 1, got %d" % length)
    if g == h:
        raise ValueError("alternating product needs two distinct generators")
    return Word(tuple((g if i % 2 == 0 else h, 1) for i in range(length)))


def parse_word(text: str) -> Word:
    """Parse the textual word syntax.

    Grammar: ``word := (ident ("^-1")?)+``.  An ident is a single character;
    an uppercase letter is the alias for the inverse of its lowercase form.
    Whitespace may separate letters (required for multi-character generator
    names, e.g. names produced by finite-cover presentations).  The empty
    string and "1" both denote the empty word.
    """
    text = text.strip()
    if text in ("", "1"):
        return EMPTY
    if any(ch.isspace() for ch in text):
        tokens = text.split()
    else:
        tokens = []
        i = 0
        while i < len(text):
            ch = text[i]
            if text[i + 1:i + 4] == "^-1":
                tokens.append(ch + "^-1")
                i += 4
            else:
                tokens.append(ch)
                i += 1
    letters = []
    for tok in tokens:
        if tok.endswith("^-1"):
            name, sign = tok[:-3], -1
        elif len(tok) == 1 and tok.isalpha() and tok.isupper():
            name, sign = tok.lower(), -1
        else:
            name, sign = tok, 1
        if not name:
            raise ValueError("malformed word token %r in %r" % (tok, text))
        letters.append((name, sign))
    return Word(letters)


def word_to_str(w: Word) -> str:
    """Inverse of :func:`parse_word`; spaces appear only for long names."""
    parts = [n + ("^-1" if s < 0 else "") for n, s in w]
    sep = "" if all(len(n) == 1 for n, _ in w) else " "
    return sep.join(parts)


def words_from_strs(texts: Sequence[str]) -> list:
    return [parse_word(t) for t in texts]
