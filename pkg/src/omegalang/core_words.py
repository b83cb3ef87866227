"""Word primitives over the four-letter working alphabet.

The whole toolkit lives on words over {x, y, z, p}: x/y act as opening and
closing brackets, p delimits leaf blocks, z is the payload letter that the
erasing homomorphism keeps.  Words are plain Python strings; ``parse_word``
is the validation boundary for external input.  Unary words z^m are never
materialized; ``UnaryWord`` carries only the (arbitrary-precision) length.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

ALPHABET = "xyzp"
LETTERS = frozenset(ALPHABET)

_X_RUN = re.compile(r"x+")


class WordError(ValueError):
    """Input text is not a word over {x,y,z,p}; carries the offending position."""

    def __init__(self, position: int, found: str):
        self.position = position
        self.found = found
        super().__init__(
            f"invalid letter {found!r} at position {position}: words use only x, y, z, p"
        )


def parse_word(text: str) -> str:
    """Validate ASCII input as a word over {x,y,z,p} and return it.

    Raises WordError naming the first offending byte offset.
    """
    for i, ch in enumerate(text):
        if ch not in LETTERS:
            raise WordError(i, ch)
    return text


def occur(w: str, t: str) -> int:
    """Number of occurrences of the factor t in w, overlaps included.

    Defined as the number of suffixes of w that start with t, so occur("zzz",
    "zz") is 2.  The empty factor is rejected (its count is undefined).
    """
    if not t:
        raise ValueError("occur is undefined for the empty factor")
    if len(t) == 1:
        return w.count(t)
    n = 0
    i = w.find(t)
    while i != -1:
        n += 1
        i = w.find(t, i + 1)
    return n


def prefixes(w: str) -> set[str]:
    """All prefixes of w, including the empty word and w itself."""
    return {w[:i] for i in range(len(w) + 1)}


def suffixes(w: str) -> set[str]:
    """All suffixes of w, including the empty word and w itself."""
    return {w[i:] for i in range(len(w) + 1)}


def factors(w: str) -> set[str]:
    """All factors (substrings) of w, including the empty word and w itself."""
    out = {""}
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n + 1):
            out.add(w[i:j])
    return out


def replace(w: str, v: str, u: str) -> str:
    """Replace the leftmost occurrence of v in w by u.

    If v does not occur in w, w is returned unchanged.  v must be nonempty.
    """
    if not v:
        raise ValueError("replace is undefined for an empty pattern")
    return w.replace(v, u, 1)


def height(w: str) -> int:
    """Length of the longest run of consecutive x letters in w (0 if none)."""
    best = 0
    for m in _X_RUN.finditer(w):
        n = m.end() - m.start()
        if n > best:
            best = n
    return best


@dataclass(frozen=True)
class UnaryWord:
    """A unary word z^length, represented by its length only.

    Lengths are arbitrary-precision; dissection demos use values like 3^40
    that must never be spelled out letter by letter.
    """

    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("unary word length must be >= 0")

    def text(self, cap: int = 10**6) -> str:
        """Materialize the word as a string; refuses lengths above cap."""
        if self.length > cap:
            raise ValueError(f"refusing to materialize z^{self.length} (cap {cap})")
        return "z" * self.length


def pi(w: str) -> UnaryWord:
    """Erasing homomorphism: keep z, delete x, y, p."""
    return UnaryWord(w.count("z"))
