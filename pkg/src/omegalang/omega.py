"""The intersection language: balanced tree words, their heights and counts.

A word lies in the intersection exactly when both direct recognizers accept
it.  Members serialize perfect binary trees: every leaf at the same depth h,
each leaf a pzp or pzzp block, so the z-count n of a height-h member sits in
[2^h, 2^(h+1)].  ``PerfectTreeSpec`` is that normal form; construction,
enumeration and counting all go through it, with every emitted word
re-verified by the recognizers rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .core_words import height, replace
from .recognizers import (
    LEAF_LONG,
    LEAF_SHORT,
    Leaf,
    Node,
    is_balanced,
    is_enw,
    parse_enw,
)

LEAF_KINDS = (LEAF_SHORT, LEAF_LONG)

# practical bound for enumeration APIs; beyond it counts explode anyway
MAX_ENUM_Z = 64

# interfaces refuse to materialize enumerations larger than this
MAX_ENUM_WORDS = 2_000_000


@lru_cache(maxsize=None)
def _perfect_skeleton(h: int) -> str:
    """Format template of the perfect tree of height h: 2^h leaf slots."""
    if h == 1:
        return "x{}{}y"
    half = _perfect_skeleton(h - 1)
    return "x" + half + half + "y"


@dataclass(frozen=True)
class PerfectTreeSpec:
    """A perfect tree of height h with an explicit leaf-kind vector.

    leaf_kinds has exactly 2^h entries, each the block string pzp or pzzp,
    in left-to-right leaf order.
    """

    h: int
    leaf_kinds: tuple[str, ...]

    def __post_init__(self):
        if self.h < 1:
            raise ValueError("height must be >= 1")
        object.__setattr__(self, "leaf_kinds", tuple(self.leaf_kinds))
        if len(self.leaf_kinds) != 1 << self.h:
            raise ValueError(f"height {self.h} needs exactly {1 << self.h} leaf kinds")
        for kind in self.leaf_kinds:
            if kind not in LEAF_KINDS:
                raise ValueError(f"leaf kind must be {LEAF_SHORT!r} or {LEAF_LONG!r}, got {kind!r}")

    @property
    def z_count(self) -> int:
        return (1 << self.h) + sum(1 for k in self.leaf_kinds if k == LEAF_LONG)

    @property
    def word(self) -> str:
        return _perfect_skeleton(self.h).format(*self.leaf_kinds)


def is_omega(w: str) -> bool:
    """Membership in the intersection: both direct recognizers accept."""
    return is_enw(w) and is_balanced(w)


def feasible_heights(n: int) -> set[int]:
    """Heights a member with z-count n can have: {h >= 1 : 2^h <= n <= 2^(h+1)}.

    Singleton unless n is a power of two >= 4, then two heights.
    """
    if n < 2:
        raise ValueError("z-count below 2 has no members: the smallest word has two leaves")
    hi = n.bit_length() - 1  # floor(log2 n)
    out = set()
    for h in (hi - 1, hi):
        if h >= 1 and (1 << h) <= n <= (1 << (h + 1)):
            out.add(h)
    return out


def construct_omega(n: int) -> str:
    """A canonical member with z-count exactly n (n >= 2).

    Start from the all-pzzp perfect tree of height ceil(log2 n) - 1, whose
    z-count is the next power of two >= n, then shrink leftmost pzzp blocks
    to pzp one at a time until the count is n.  n = 2 needs height 1
    directly, since a height-0 tree is a bare block, not a word.
    """
    if n < 2:
        raise ValueError("z-count below 2 has no members: the smallest word has two leaves")
    if n == 2:
        return PerfectTreeSpec(1, (LEAF_SHORT, LEAF_SHORT)).word
    j = (n - 1).bit_length()  # ceil(log2 n), so 2^(j-1) < n <= 2^j
    w = PerfectTreeSpec(j - 1, (LEAF_LONG,) * (1 << (j - 1))).word
    for _ in range((1 << j) - n):
        w = replace(w, LEAF_LONG, LEAF_SHORT)
    return w


def iter_omega(n: int):
    """Yield every member with z-count n, heights ascending, and within one
    height the long-leaf position sets in lexicographic order."""
    if not 2 <= n <= MAX_ENUM_Z:
        raise ValueError(f"enumeration supports z-counts 2..{MAX_ENUM_Z}")
    for h in sorted(feasible_heights(n)):
        leaves = 1 << h
        skeleton = _perfect_skeleton(h)
        for longs in combinations(range(leaves), n - leaves):
            kinds = [LEAF_SHORT] * leaves
            for i in longs:
                kinds[i] = LEAF_LONG
            yield skeleton.format(*kinds)


def enumerate_omega(n: int) -> set[str]:
    """All members with z-count n, each re-verified by both recognizers.

    Candidates come from PerfectTreeSpec; verification guards the perfect
    tree normal form instead of assuming it.
    """
    out = set()
    for w in iter_omega(n):
        if not is_omega(w):
            raise AssertionError(f"perfect-tree candidate rejected by recognizers: {w}")
        out.add(w)
    return out


def count_omega(n: int) -> int:
    """|members with z-count n| by the binomial formula over feasible heights."""
    if n < 2:
        raise ValueError("z-count below 2 has no members: the smallest word has two leaves")
    return sum(comb(1 << h, n - (1 << h)) for h in feasible_heights(n))


def verify_height_law(w: str) -> bool:
    """Check the height laws on a member: with h = height(w), x^h is a
    prefix, y^h is a suffix, and 2^h <= z-count <= 2^(h+1).

    Raises ValueError when w is not in the intersection at all.
    """
    if not is_omega(w):
        raise ValueError("height law applies to intersection members only")
    h = height(w)
    n = w.count("z")
    return (
        w.startswith("x" * h)
        and w.endswith("y" * h)
        and (1 << h) <= n <= (1 << (h + 1))
    )


def perfect_spec_of(w: str) -> PerfectTreeSpec | None:
    """The PerfectTreeSpec serializing to w, or None if w is not the
    serialization of a perfect tree (not a tree word, or depths differ)."""
    try:
        tree = parse_enw(w)
    except ValueError:
        return None
    kinds: list[str] = []
    depths: set[int] = set()
    stack: list[tuple[object, int]] = [(tree, 0)]
    while stack:
        node, d = stack.pop()
        if isinstance(node, Leaf):
            depths.add(d)
            kinds.append(LEAF_SHORT if node.z_count == 1 else LEAF_LONG)
        else:
            stack.append((node.right, d + 1))
            stack.append((node.left, d + 1))
    if len(depths) != 1:
        return None
    h = depths.pop()
    return PerfectTreeSpec(h, tuple(kinds))
