"""Words over a finite alphabet: the free monoid, factor search and overlaps.

Words are immutable value objects (tuples of generator names) so they can be
used as dictionary keys throughout the engine.  The textual form is
whitespace-separated names, with ``1`` standing for the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError

EMPTY_WORD_TOKEN = "1"

# Characters that would break the textual formats if they appeared in a
# generator name.  `->`, a leading sign and the empty-word token are also
# rejected by is_valid_generator_name.
RESERVED_NAME_CHARS = frozenset("|:()=;")


def is_valid_generator_name(name: str) -> bool:
    if not name or name == EMPTY_WORD_TOKEN:
        return False
    if "->" in name or name[0] in "+-":
        return False
    return not any(c.isspace() or c in RESERVED_NAME_CHARS for c in name)


@dataclass(frozen=True)
class Word:
    """A finite sequence of generator names."""

    letters: tuple[str, ...] = ()

    def __len__(self):
        return len(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index])
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __bool__(self):
        return bool(self.letters)

    def __str__(self):
        return format_word(self)


EMPTY = Word()


def concat(w1: Word, w2: Word) -> Word:
    """Product of the free monoid."""
    return Word(w1.letters + w2.letters)


def format_word(w: Word) -> str:
    return " ".join(w.letters) if w.letters else EMPTY_WORD_TOKEN


def parse_word(text: str, alphabet=None, line=None) -> Word:
    """Parse a whitespace-separated word, ``1`` denoting the empty word."""
    tokens = text.split()
    if not tokens:
        raise ParseError("expected a word", line)
    if tokens == [EMPTY_WORD_TOKEN]:
        return EMPTY
    for t in tokens:
        if t == EMPTY_WORD_TOKEN:
            raise ParseError("'1' (empty word) cannot appear inside a word", line)
        if alphabet is not None and t not in alphabet:
            raise ParseError(f"unknown generator {t!r}", line)
    return Word(tuple(tokens))


def find_occurrences(pattern: Word, w: Word) -> list[int]:
    """All start indices of `pattern` inside `w`, overlapping ones included."""
    if not pattern:
        raise ValueError("empty pattern")
    n, m = len(w), len(pattern)
    return [i for i in range(n - m + 1) if w.letters[i:i + m] == pattern.letters]


@dataclass(frozen=True)
class Overlap:
    """A minimal superposition of two patterns, with the first at index 0."""

    kind: str  # "suffix-prefix" | "inclusion"
    offset: int  # start index of the second pattern in the superposition
    superposition: Word


def overlaps(l1: Word, l2: Word) -> list[Overlap]:
    """Minimal superpositions of `l1` (at index 0) with `l2`.

    Suffix-prefix: a proper nonempty suffix of `l1` equals a proper prefix of
    `l2`, with `l2` sticking out on the right.  Inclusion: `l2` occurs as a
    factor of `l1`, except for the identical full overlap of a pattern with
    itself at offset 0.
    """
    if not l1 or not l2:
        raise ValueError("overlap patterns must be nonempty")
    found = []
    for k in find_occurrences(l2, l1):
        if k == 0 and l1 == l2:
            continue
        found.append(Overlap("inclusion", k, l1))
    n1, n2 = len(l1), len(l2)
    for k in range(1, n1):
        shared = n1 - k
        if shared < n2 and l1.letters[k:] == l2.letters[:shared]:
            found.append(Overlap("suffix-prefix", k, Word(l1.letters + l2.letters[shared:])))
    found.sort(key=lambda o: o.offset)
    return found
