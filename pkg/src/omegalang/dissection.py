"""Growth specifications and the unary-language dissection pipeline.

A dissector splits an infinite language into two infinite parts.  For unary
length sets whose consecutive gaps are eventually bounded by g, the residue
window [0, g-1] modulo 2g does it: a bounded-gap walk cannot jump over g
consecutive residues, so it keeps landing both inside and outside the
window.  Geometric growth with ratio c bounds the height gap of consecutive
members by alpha + 1 where 2^alpha >= c, which picks the window size.

Lengths are plain integers end to end; z^m is never materialized.  Ratios
are exact rationals so the alpha computation is deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .omega import MAX_ENUM_Z, PerfectTreeSpec, feasible_heights, is_omega, iter_omega
from .recognizers import LEAF_LONG, LEAF_SHORT

# largest z-count for which witness words are materialized (~6 MB of text)
MAX_WITNESS_Z = 1 << 20


class GrowthError(ValueError):
    """Growth precondition failure: bad ratio, degenerate sample, or a
    violated growth bound."""


def parse_cap(text: str) -> int:
    """Length cap from 'a^b' power notation or a plain decimal string."""
    text = text.strip()
    if "^" in text:
        base_text, _, exp_text = text.partition("^")
        try:
            base, exp = int(base_text), int(exp_text)
        except ValueError:
            raise ValueError(f"cap {text!r} is not a^b with integer a, b") from None
        if base < 1 or exp < 0:
            raise ValueError(f"cap {text!r} needs base >= 1 and exponent >= 0")
        return base**exp
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"cap {text!r} is not a decimal integer or a^b") from None


def parse_ratio(text) -> Fraction:
    """Exact growth ratio from a string like '2', '3/2' or '1.5'."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"ratio {text!r} is not a rational number") from None


# ---------------------------------------------------------------------------
# growth specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConstantGrowth:
    """Additive growth: beyond length c0, some member lies a K-step ahead."""

    c0: int
    steps: frozenset[int]

    def __init__(self, c0: int, steps):
        if c0 < 1:
            raise GrowthError("threshold c0 must be a positive integer")
        steps = frozenset(steps)
        if not steps or any(s < 1 for s in steps):
            raise GrowthError("step set must be nonempty with all steps >= 1")
        object.__setattr__(self, "c0", c0)
        object.__setattr__(self, "steps", steps)


@dataclass(frozen=True)
class GeometricGrowth:
    """Multiplicative growth: after each member, another within factor c."""

    c: Fraction

    def __init__(self, c):
        c = Fraction(c)
        if c <= 1:
            raise GrowthError("growth ratio must exceed 1")
        object.__setattr__(self, "c", c)


GrowthSpec = ConstantGrowth | GeometricGrowth


# ---------------------------------------------------------------------------
# unary languages as length sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnaryLanguage:
    """A set of unary word lengths: explicit finite list or named generator.

    Generators are infinite; every query goes through members_upto(cap), so
    evaluation is always finite and reproducible.
    """

    name: str
    _lengths: tuple[int, ...] | None = None
    _generator: Callable[[int], list[int]] | None = field(default=None, compare=False)

    @staticmethod
    def explicit(lengths) -> "UnaryLanguage":
        lengths = tuple(lengths)
        if any(m < 1 for m in lengths):
            raise ValueError("lengths must be positive")
        if any(a >= b for a, b in zip(lengths, lengths[1:])):
            raise ValueError("lengths must be strictly increasing")
        return UnaryLanguage(name="explicit", _lengths=lengths)

    @staticmethod
    def pow2() -> "UnaryLanguage":
        def gen(cap: int) -> list[int]:
            out, m = [], 4
            while m <= cap:
                out.append(m)
                m *= 2
            return out

        return UnaryLanguage(name="pow2", _generator=gen)

    @staticmethod
    def pow3() -> "UnaryLanguage":
        def gen(cap: int) -> list[int]:
            out, m = [], 3
            while m <= cap:
                out.append(m)
                m *= 3
            return out

        return UnaryLanguage(name="pow3", _generator=gen)

    @staticmethod
    def fib() -> "UnaryLanguage":
        def gen(cap: int) -> list[int]:
            out, a, b = [], 2, 3
            while a <= cap:
                out.append(a)
                a, b = b, a + b
            return out

        return UnaryLanguage(name="fib", _generator=gen)

    def members_upto(self, cap: int) -> list[int]:
        """Strictly increasing member lengths <= cap."""
        if cap < 0:
            raise ValueError("cap must be >= 0")
        if self._lengths is not None:
            return [m for m in self._lengths if m <= cap]
        if self._generator is None:
            raise ValueError("language has neither explicit lengths nor a generator")
        return self._generator(cap)


BUILTIN_LANGUAGES = {
    "pow2": UnaryLanguage.pow2,
    "pow3": UnaryLanguage.pow3,
    "fib": UnaryLanguage.fib,
}


# ---------------------------------------------------------------------------
# growth checking
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrowthCheck:
    """Outcome of a growth scan.  Truthy iff no violations were found.

    violations: (member, successor) pairs breaking the bound; skipped:
    members near the cap whose successor is not observable.
    """

    ok: bool
    violations: tuple[tuple[int, int], ...]
    # diagnostic only, excluded from equality so JSON round-trips compare clean
    skipped: tuple[int, ...] = field(default=(), compare=False)

    def __bool__(self) -> bool:
        return self.ok


def check_growth(lang: UnaryLanguage, spec: GrowthSpec, cap: int) -> GrowthCheck:
    """Scan members <= cap against the growth promise.

    Geometric: each member's successor stays within factor c.  Constant:
    each member >= c0 has another member one K-step ahead.  The last member
    has no observable successor and is skipped, not failed.
    """
    members = lang.members_upto(cap)
    if len(members) < 2:
        raise GrowthError(f"need at least 2 members <= cap, found {len(members)}")
    violations: list[tuple[int, int]] = []
    if isinstance(spec, GeometricGrowth):
        for u, v in zip(members, members[1:]):
            if v > spec.c * u:
                violations.append((u, v))
    else:
        member_set = set(members)
        for u, v in zip(members, members[1:]):
            if u >= spec.c0 and not any(u + s in member_set for s in spec.steps):
                violations.append((u, v))
    return GrowthCheck(
        ok=not violations,
        violations=tuple(violations),
        skipped=(members[-1],),
    )


# ---------------------------------------------------------------------------
# the dissector and its lift
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResidueDissector:
    """Unary lengths with residue mod 2g inside [0, g-1] are accepted.

    Both the window and its complement have g residues, so any length set
    with eventually bounded gaps <= g hits both sides infinitely often.
    """

    g: int

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("window size g must be >= 1")

    @property
    def modulus(self) -> int:
        return 2 * self.g

    @property
    def accepted_residues(self) -> range:
        return range(self.g)

    def accept(self, h: int) -> bool:
        if h < 0:
            raise ValueError("length must be >= 0")
        return h % self.modulus < self.g


def residue_dissector(g: int) -> ResidueDissector:
    """The window-[0, g-1]-mod-2g dissector."""
    return ResidueDissector(g)


@dataclass(frozen=True)
class ThetaRegular:
    """The dissector lifted to four-letter words: accepted x-run, then p.

    Membership reads only the maximal leading x-run and the letter after it.
    """

    base: ResidueDissector

    def contains(self, w: str) -> bool:
        h = len(w) - len(w.lstrip("x"))
        if h >= len(w) or w[h] != "p":
            return False
        return self.base.accept(h)


def lift_to_theta(d: ResidueDissector) -> ThetaRegular:
    return ThetaRegular(d)


def alpha_for(c) -> int:
    """Least alpha >= 1 with 2^alpha >= c (c a rational > 1)."""
    c = Fraction(c)
    if c <= 1:
        raise GrowthError("growth ratio must exceed 1")
    alpha = 1
    while (1 << alpha) < c:
        alpha += 1
    return alpha


def image_membership(m: int, d: ResidueDissector) -> bool:
    """Whether z^m is the erasure of some member word the lifted dissector
    accepts: some feasible height for m falls in the accepted window.

    Sound because a member with z-count m has its height as the leading
    x-run; complete because every feasible height is realized by a perfect
    tree with the right leaf mix.
    """
    if m < 2:
        raise ValueError("z-count below 2 has no members: the smallest word has two leaves")
    return any(d.accept(h) for h in feasible_heights(m))


def witness(m: int, d: ResidueDissector) -> str | None:
    """An audit word for image_membership(m, d), or None when none exists.

    Picks the smallest accepted feasible height h and fills the perfect
    tree with short leaves first, long leaves last; the result is verified
    before being returned.
    """
    if not image_membership(m, d):
        return None
    if m > MAX_WITNESS_Z:
        raise ValueError(f"witness words are materialized only up to z-count {MAX_WITNESS_Z}")
    h = min(h for h in feasible_heights(m) if d.accept(h))
    leaves = 1 << h
    kinds = (LEAF_SHORT,) * (2 * leaves - m) + (LEAF_LONG,) * (m - leaves)
    w = PerfectTreeSpec(h, kinds).word
    if not (is_omega(w) and lift_to_theta(d).contains(w)):
        raise AssertionError(f"constructed witness failed verification for m={m}, g={d.g}")
    return w


# ---------------------------------------------------------------------------
# the end-to-end pipeline
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DissectionReport:
    """Partition summary of a dissection run at one cap."""

    alpha: int
    g: int
    cap: int
    in_count: int
    out_count: int
    samples_in: tuple[int, ...]
    samples_out: tuple[int, ...]
    growth_check: GrowthCheck

    def to_json(self) -> str:
        # lengths as decimal strings: caps like 3^40 overflow fixed-width
        # consumers, so the schema is string-typed for them
        payload = {
            "alpha": self.alpha,
            "g": self.g,
            "cap": str(self.cap),
            "in_count": self.in_count,
            "out_count": self.out_count,
            "samples_in": [str(m) for m in self.samples_in],
            "samples_out": [str(m) for m in self.samples_out],
            "growth_check": {
                "ok": self.growth_check.ok,
                "violations": [[str(u), str(v)] for u, v in self.growth_check.violations],
            },
        }
        return json.dumps(payload, indent=2)

    @staticmethod
    def from_json(text: str) -> "DissectionReport":
        raw = json.loads(text)
        gc = GrowthCheck(
            ok=bool(raw["growth_check"]["ok"]),
            violations=tuple((int(u), int(v)) for u, v in raw["growth_check"]["violations"]),
            skipped=(),
        )
        return DissectionReport(
            alpha=int(raw["alpha"]),
            g=int(raw["g"]),
            cap=int(raw["cap"]),
            in_count=int(raw["in_count"]),
            out_count=int(raw["out_count"]),
            samples_in=tuple(int(m) for m in raw["samples_in"]),
            samples_out=tuple(int(m) for m in raw["samples_out"]),
            growth_check=gc,
        )


SAMPLE_LIMIT = 5


def dissect_geometric(lang: UnaryLanguage, c, cap: int) -> DissectionReport:
    """Partition the members <= cap by the lifted-dissector image test.

    The growth promise is checked first and must hold; window size is
    g = alpha + 1 for the least alpha with 2^alpha >= c.  Members of
    length < 2 have no member words at all and land in the out part.
    """
    c = Fraction(c)
    gc = check_growth(lang, GeometricGrowth(c), cap)
    if not gc:
        u, v = gc.violations[0]
        raise GrowthError(f"growth ratio {c} violated: member {u} is followed by {v} > {c}*{u}")
    alpha = alpha_for(c)
    d = residue_dissector(alpha + 1)
    inside: list[int] = []
    outside: list[int] = []
    for m in lang.members_upto(cap):
        if m >= 2 and image_membership(m, d):
            inside.append(m)
        else:
            outside.append(m)
    return DissectionReport(
        alpha=alpha,
        g=d.g,
        cap=cap,
        in_count=len(inside),
        out_count=len(outside),
        samples_in=tuple(inside[:SAMPLE_LIMIT]),
        samples_out=tuple(outside[:SAMPLE_LIMIT]),
        growth_check=gc,
    )


def brute_force_image_membership(m: int, d: ResidueDissector) -> bool:
    """Oracle for image_membership: enumerate all members with z-count m and
    test the lifted language directly.  Desk scale only."""
    if not 2 <= m <= MAX_ENUM_Z:
        raise ValueError(f"brute force supports z-counts 2..{MAX_ENUM_Z}")
    lifted = lift_to_theta(d)
    return any(lifted.contains(w) for w in iter_omega(m))
