"""Direct recognizer tests: tree parsing round-trips, the balanced scan,
factor balance counting, and Catalan-counted enumeration."""

import random
from itertools import product

import pytest

from omegalang import (
    ALPHABET,
    EnwParseError,
    Leaf,
    Node,
    catalan,
    check_balanced_factors,
    enumerate_enw,
    is_balanced,
    is_enw,
    occur,
    parse_enw,
    serialize_tree,
    tree_leaves,
)
from omegalang.recognizers import LEAF_LONG, LEAF_SHORT

V1 = "xpzpxpzppzzpyy"
V2 = "xxpzppzpyxpzzppzzpyy"


def catalan_by_recurrence(n: int) -> int:
    # independent oracle: C_0 = 1, C_{n+1} = sum C_i C_{n-i}
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def test_is_enw_golden():
    assert is_enw(V1)
    assert is_enw(V2)
    assert is_enw("xpzppzpy")
    assert not is_enw("pzp")
    assert not is_enw("")
    assert not is_enw("xpzppzppzpy")  # three children under one pair
    assert not is_enw("xxpzppzpyy")  # one child under the outer pair
    assert not is_enw("xpzppzpypzpy")


def test_parse_enw_single_node():
    assert parse_enw("xpzppzzpy") == Node(Leaf(1), Leaf(2))


def test_parse_enw_nested():
    assert parse_enw(V2) == Node(Node(Leaf(1), Leaf(1)), Node(Leaf(2), Leaf(2)))


def test_parse_enw_error_positions():
    with pytest.raises(EnwParseError) as exc:
        parse_enw("pzp")
    assert exc.value.position == 0
    with pytest.raises(EnwParseError) as exc:
        parse_enw("xpzppzp")  # missing closing y
    assert exc.value.position == 7
    with pytest.raises(EnwParseError) as exc:
        parse_enw("xpzppzpyy")  # trailing letter
    assert exc.value.position == 8
    with pytest.raises(EnwParseError) as exc:
        parse_enw("xpqppzpy")
    assert exc.value.position == 1  # p fails to open a block
    with pytest.raises(EnwParseError):
        parse_enw("abc")


def test_serialize_inverts_parse():
    for k in range(2, 6):
        for w in enumerate_enw(k):
            assert serialize_tree(parse_enw(w)) == w


def test_tree_leaves_order():
    leaves = tree_leaves(parse_enw(V2))
    assert [leaf.z_count for leaf in leaves] == [1, 1, 2, 2]


def test_leaf_validation():
    with pytest.raises(ValueError):
        Leaf(3)


def test_is_enw_agrees_with_parse():
    # exhaustive to length 8, then seeded random words
    for length in range(9):
        for tup in product(ALPHABET, repeat=length):
            w = "".join(tup)
            parsed = True
            try:
                parse_enw(w)
            except EnwParseError:
                parsed = False
            assert is_enw(w) == parsed, w
    rng = random.Random(21)
    for _ in range(20000):
        w = "".join(rng.choices(ALPHABET, k=rng.randint(0, 60)))
        parsed = True
        try:
            parse_enw(w)
        except EnwParseError:
            parsed = False
        assert is_enw(w) == parsed, w


def test_is_balanced_golden():
    assert is_balanced(V2)
    assert not is_balanced(V1)
    assert not is_balanced("pzpzp")
    assert not is_balanced("")
    assert is_balanced("pzppzp")
    assert is_balanced("xpzppzpy")
    assert is_balanced("xpzpyxpzpy")
    assert is_balanced("pzpyxpzpyxpzp")
    assert not is_balanced("pzzzp")
    assert not is_balanced("xpzppzpyy")
    assert not is_balanced("abc")


def test_is_balanced_strict_turns_flag():
    # pp blocks carry an empty turn; the strict variant insists on a real turn
    assert is_balanced("pzppzp")
    assert not is_balanced("pzppzp", strict_turns=True)
    assert is_balanced("pzpyxpzp", strict_turns=True)


def test_check_balanced_factors_golden():
    assert check_balanced_factors("pp")
    assert check_balanced_factors(V2)
    assert not check_balanced_factors(V1)
    # interleaved y x y x between the outer p pair still counts equal
    assert check_balanced_factors("pzpyxpzpyxpzp")
    assert not check_balanced_factors("pxp")
    assert not check_balanced_factors("abc")


def test_check_balanced_factors_on_random_words_matches_naive():
    rng = random.Random(22)
    for _ in range(500):
        w = "".join(rng.choices(ALPHABET, k=rng.randint(0, 24)))
        ps = [i for i, c in enumerate(w) if c == "p"]
        naive = all(
            w.count("x", a + 1, b) == w.count("y", a + 1, b)
            for i, a in enumerate(ps)
            for b in ps[i + 1:]
        )
        assert check_balanced_factors(w) == naive, w


def test_catalan_against_recurrence():
    for n in range(11):
        assert catalan(n) == catalan_by_recurrence(n)
    with pytest.raises(ValueError):
        catalan(-1)


def test_enumerate_enw_counts():
    for k in range(2, 7):
        words = enumerate_enw(k)
        assert len(words) == len(set(words)) == (1 << k) * catalan_by_recurrence(k - 1)


def test_enumerate_enw_members_and_leaf_counts():
    for k in range(2, 6):
        for w in enumerate_enw(k):
            assert is_enw(w)
            assert occur(w, LEAF_SHORT) + occur(w, LEAF_LONG) == k


def test_enumerate_enw_canonical_order():
    assert enumerate_enw(2) == ["xpzppzpy", "xpzppzzpy", "xpzzppzpy", "xpzzppzzpy"]
    three = enumerate_enw(3)
    assert three[0] == "xpzpxpzppzpyy"  # smallest left subtree first
    assert three[-1] == "xxpzzppzzpypzzpy"


def test_enumerate_enw_length_bounds():
    # length = 2(k-1) + 3*short + 4*long, so 5k-2 <= len <= 6k-2
    for k in range(2, 7):
        lengths = {len(w) for w in enumerate_enw(k)}
        assert min(lengths) == 5 * k - 2
        assert max(lengths) == 6 * k - 2


def test_enumerate_enw_rejects_small_k():
    with pytest.raises(ValueError):
        enumerate_enw(1)
