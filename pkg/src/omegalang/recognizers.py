"""Direct recognizers and enumerators for the two word languages.

Everything here works on strings with single-pass scans or arithmetic on run
lengths; no chart machinery.  The chart path in :mod:`omegalang.grammar_engine` is
the independent oracle these functions are tested against.

Tree view: a word of the first language is a perfect nesting of x…y wrappers
around two-child groups whose leaves are the blocks pzp and pzzp, i.e. a
binary tree.  ``parse_enw`` produces that tree, ``serialize_tree`` inverts
it, and ``enumerate_enw`` walks shapes (counted by the Catalan numbers) and
leaf labelings separately.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .core_words import LETTERS

LEAF_SHORT = "pzp"
LEAF_LONG = "pzzp"


class EnwParseError(ValueError):
    """Structural parse failure, with the offending position and a reason."""

    def __init__(self, position: int, reason: str):
        self.position = position
        self.reason = reason
        super().__init__(f"parse error at position {position}: {reason}")


@dataclass(frozen=True)
class Leaf:
    """A leaf block: z_count is 1 (pzp) or 2 (pzzp)."""

    z_count: int

    def __post_init__(self):
        if self.z_count not in (1, 2):
            raise ValueError("leaf z_count must be 1 or 2")


@dataclass(frozen=True)
class Node:
    """An internal pairing node: x <left> <right> y."""

    left: "EnwTree"
    right: "EnwTree"


EnwTree = Leaf | Node


def parse_enw(w: str):
    """Parse w into its unique tree, or raise EnwParseError.

    Recursive descent; each position is consumed once.
    """

    n = len(w)

    def node(i: int):
        if i >= n:
            raise EnwParseError(i, "unexpected end of word")
        c = w[i]
        if c == "p":
            if w.startswith(LEAF_LONG, i):
                return Leaf(2), i + 4
            if w.startswith(LEAF_SHORT, i):
                return Leaf(1), i + 3
            raise EnwParseError(i, "p does not open a pzp or pzzp block")
        if c == "x":
            left, j = node(i + 1)
            right, k = node(j)
            if k >= n or w[k] != "y":
                raise EnwParseError(k, "expected y closing the pair opened by x")
            return Node(left, right), k + 1
        if c in LETTERS:
            raise EnwParseError(i, f"unexpected {c!r}: a subtree starts with x or p")
        raise EnwParseError(i, f"invalid letter {c!r}")

    tree, end = node(0)
    if not isinstance(tree, Node):
        raise EnwParseError(0, "word must start with an x pair, not a bare block")
    if end != n:
        raise EnwParseError(end, "trailing letters after a complete word")
    return tree


def serialize_tree(t: EnwTree) -> str:
    """Inverse of parse_enw (on Node roots)."""
    parts: list[str] = []
    stack: list = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
        elif isinstance(item, Leaf):
            parts.append(LEAF_SHORT if item.z_count == 1 else LEAF_LONG)
        else:
            stack.extend(("y", item.right, item.left, "x"))
    return "".join(parts)


def tree_leaves(t: EnwTree) -> list[Leaf]:
    """Leaves in left-to-right order."""
    out: list[Leaf] = []
    stack = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, Leaf):
            out.append(item)
        else:
            stack.append(item.right)
            stack.append(item.left)
    return out


def is_enw(w: str) -> bool:
    """True iff w parses as a tree word.  Single pass, no tree built.

    counts[-1] tracks how many completed subtrees sit inside the currently
    open x…y pair; a y may close only a pair holding exactly two.
    """
    n = len(w)
    if n < 8 or w[0] != "x":
        return False
    counts = [0]
    i = 0
    while i < n:
        c = w[i]
        if c == "x":
            counts.append(0)
            i += 1
        elif c == "p":
            if w.startswith(LEAF_LONG, i):
                i += 4
            elif w.startswith(LEAF_SHORT, i):
                i += 3
            else:
                return False
            counts[-1] += 1
            if counts[-1] > 2:
                return False
        elif c == "y":
            if len(counts) == 1 or counts[-1] != 2:
                return False
            counts.pop()
            counts[-1] += 1
            if counts[-1] > 2:
                return False
            i += 1
        else:
            return False
    return counts == [1]


_TURN_BLOCK = re.compile(r"p(y*)(x*)p")


def _split_core(w: str):
    """Strip the outer x^i … y^i wrap and return (i, core) or None.

    The core must start and end with p; the wrap may be empty.
    """
    i = len(w) - len(w.lstrip("x"))
    j = len(w) - len(w.rstrip("y"))
    if i != j:
        return None
    core = w[i:len(w) - j] if j else w[i:]
    if len(core) < 6 or core[0] != "p" or core[-1] != "p":
        return None
    return i, core


def is_balanced(w: str, strict_turns: bool = False) -> bool:
    """True iff w belongs to the balanced language.  Linear scan.

    Shape: x^i p z-run [block z-run]... p y^i with every z-run of length 1
    or 2 and every block of the form p y^j x^j p.  With strict_turns the
    blocks must actually turn (j >= 1); by default j = 0 blocks (pp joined
    as p..p around an empty turn) are allowed, matching the grammar.
    """
    if not w or set(w) - LETTERS:
        return False
    split = _split_core(w)
    if split is None:
        return False
    _, core = split
    inner = core[1:-1]
    if "zzz" in inner:
        return False
    segs = re.split("z+", inner)
    if len(segs) < 2 or segs[0] != "" or segs[-1] != "":
        return False
    for block in segs[1:-1]:
        m = _TURN_BLOCK.fullmatch(block)
        if m is None or len(m.group(1)) != len(m.group(2)):
            return False
        if strict_turns and not m.group(1):
            return False
    return True


def check_balanced_factors(w: str) -> bool:
    """Bracket-count balance between delimiters: for every pair of p
    positions, the letters strictly between them hold as many x as y.

    Prefix sums make each of the quadratically many p-pairs O(1).
    """
    if set(w) - LETTERS:
        return False
    cum_x = [0]
    cum_y = [0]
    ps = []
    for i, c in enumerate(w):
        cum_x.append(cum_x[-1] + (c == "x"))
        cum_y.append(cum_y[-1] + (c == "y"))
        if c == "p":
            ps.append(i)
    for ai in range(len(ps)):
        a = ps[ai]
        for bi in range(ai + 1, len(ps)):
            b = ps[bi]
            if cum_x[b] - cum_x[a + 1] != cum_y[b] - cum_y[a + 1]:
                return False
    return True


def catalan(n: int) -> int:
    """The n-th Catalan number (n >= 0)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _shapes(k: int) -> tuple[str, ...]:
    """Skeletons of all binary trees with k leaves, as format templates with
    one '{}' per leaf.  Ordered by left-subtree leaf count ascending."""
    if k == 1:
        return ("{}",)
    out: list[str] = []
    for left in range(1, k):
        for ls in _shapes(left):
            for rs in _shapes(k - left):
                out.append("x" + ls + rs + "y")
    return tuple(out)


def iter_enw(k: int):
    """Yield every tree word with exactly k leaves (k >= 2), without repeats.

    Order: shape-major (left-subtree size ascending, recursively), then leaf
    labelings as a binary counter with pzp < pzzp, leftmost leaf most
    significant.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    for shape in _shapes(k):
        for labels in product((LEAF_SHORT, LEAF_LONG), repeat=k):
            yield shape.format(*labels)


def enumerate_enw(k: int) -> list[str]:
    """List of iter_enw(k), in the same order.  Length is 2^k * catalan(k-1)."""
    return list(iter_enw(k))
