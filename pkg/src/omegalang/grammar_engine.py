"""Generic context-free grammars and a chart-based membership oracle.

The two grammars of interest (``enw_grammar`` and ``balanced_grammar``) are
kept verbatim, with no normal-form transformation, and recognition is plain
Earley with the nullable-prediction fix, so it handles the epsilon production
and the left-recursive alternative directly.  The chart recognizer is the
independent oracle against the linear-time recognizers in
:mod:`omegalang.recognizers`; the two paths share no code.

``accepted_words`` evaluates the recognizer over every word up to a length
bound by extending chart columns along a 4-ary prefix tree.  An empty column
is a sound cut: every Earley item at position k+1 descends from a scan out of
position k, so once a column is empty no extension of that prefix can parse.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .core_words import ALPHABET, LETTERS


class GrammarError(ValueError):
    """Malformed grammar definition."""


class Cfg:
    """An immutable context-free grammar with terminals drawn from {x,y,z,p}.

    Productions are (lhs, body) pairs; bodies are tuples over nonterminals
    and terminal letters, and may be empty.  Construction validates the
    declaration invariants and precomputes the derived tables (rules by
    left-hand side, nullable set, minimal expansion lengths) that the
    recognizer and enumerator need.
    """

    def __init__(self, nonterminals, terminals, start, productions):
        self.nonterminals = frozenset(nonterminals)
        self.terminals = frozenset(terminals)
        self.start = start
        self.productions = tuple((lhs, tuple(body)) for lhs, body in productions)
        self._validate()

        by_lhs: dict[str, list[int]] = {nt: [] for nt in self.nonterminals}
        for pid, (lhs, _) in enumerate(self.productions):
            by_lhs[lhs].append(pid)
        self._by_lhs = {nt: tuple(pids) for nt, pids in by_lhs.items()}
        self._nullable = self._compute_nullable()
        self._min_len = self._compute_min_len()

    def _validate(self):
        if self.nonterminals & self.terminals:
            raise GrammarError("nonterminals and terminals overlap")
        if not self.terminals <= LETTERS:
            bad = sorted(self.terminals - LETTERS)
            raise GrammarError(f"terminals outside the working alphabet: {bad}")
        if self.start not in self.nonterminals:
            raise GrammarError(f"start symbol {self.start!r} is not a nonterminal")
        declared = self.nonterminals | self.terminals
        for lhs, body in self.productions:
            if lhs not in self.nonterminals:
                raise GrammarError(f"production head {lhs!r} is not a nonterminal")
            for sym in body:
                if sym not in declared:
                    raise GrammarError(f"undeclared symbol {sym!r} in a production body")
        # every nonterminal reachable from the start needs at least one rule
        heads = {lhs for lhs, _ in self.productions}
        seen = {self.start}
        pending = [self.start]
        while pending:
            nt = pending.pop()
            if nt not in heads:
                raise GrammarError(f"reachable nonterminal {nt!r} has no production")
            for lhs, body in self.productions:
                if lhs != nt:
                    continue
                for sym in body:
                    if sym in self.nonterminals and sym not in seen:
                        seen.add(sym)
                        pending.append(sym)

    def _compute_nullable(self) -> frozenset:
        nullable = set()
        changed = True
        while changed:
            changed = False
            for lhs, body in self.productions:
                if lhs not in nullable and all(s in nullable for s in body):
                    nullable.add(lhs)
                    changed = True
        return frozenset(nullable)

    def _compute_min_len(self) -> dict:
        inf = float("inf")
        m = {nt: inf for nt in self.nonterminals}
        changed = True
        while changed:
            changed = False
            for lhs, body in self.productions:
                total = 0
                for sym in body:
                    total += 1 if sym in self.terminals else m[sym]
                if total < m[lhs]:
                    m[lhs] = total
                    changed = True
        return m

    def __repr__(self):
        return f"Cfg(start={self.start!r}, productions={len(self.productions)})"


@dataclass(frozen=True)
class ChartRecognition:
    """Outcome of a chart run: verdict plus total item count as a diagnostic."""

    accepted: bool
    item_count: int


class _Column:
    """One Earley chart column: item set plus a wait-index by next symbol."""

    __slots__ = ("items", "wait")

    def __init__(self):
        self.items: set = set()
        self.wait: dict = {}


def _close(g: Cfg, columns: list, col: _Column, index: int, queue: deque) -> int:
    """Run predict/complete to fixpoint over the queued items; returns items added."""
    prods = g.productions
    nullable = g._nullable
    by_lhs = g._by_lhs
    added = 0
    while queue:
        item = queue.popleft()
        pid, dot, origin = item
        lhs, body = prods[pid]
        if dot == len(body):
            # completion: advance everything in the origin column waiting on lhs
            for w_item in columns[origin].wait.get(lhs, ()):
                w_pid, w_dot, w_origin = w_item
                adv = (w_pid, w_dot + 1, w_origin)
                if adv not in col.items:
                    col.items.add(adv)
                    queue.append(adv)
                    added += 1
                    a_body = prods[w_pid][1]
                    if w_dot + 1 < len(a_body):
                        col.wait.setdefault(a_body[w_dot + 1], []).append(adv)
            continue
        sym = body[dot]
        if sym in g.nonterminals:
            for new_pid in by_lhs[sym]:
                new = (new_pid, 0, index)
                if new not in col.items:
                    col.items.add(new)
                    queue.append(new)
                    added += 1
                    n_body = prods[new_pid][1]
                    if n_body:
                        col.wait.setdefault(n_body[0], []).append(new)
            if sym in nullable:
                # nullable prediction: advance past it immediately so that
                # same-column completions cannot be missed
                adv = (pid, dot + 1, origin)
                if adv not in col.items:
                    col.items.add(adv)
                    queue.append(adv)
                    added += 1
                    if dot + 1 < len(body):
                        col.wait.setdefault(body[dot + 1], []).append(adv)
    return added


def _initial_column(g: Cfg) -> tuple[_Column, int]:
    col = _Column()
    queue: deque = deque()
    for pid in g._by_lhs[g.start]:
        item = (pid, 0, 0)
        col.items.add(item)
        queue.append(item)
        body = g.productions[pid][1]
        if body:
            col.wait.setdefault(body[0], []).append(item)
    n = len(col.items)
    n += _close(g, [col], col, 0, queue)
    return col, n


def _scan(g: Cfg, columns: list, letter: str) -> tuple[_Column, int]:
    """Extend the chart by one letter; the new column may be empty (dead)."""
    prev = columns[-1]
    col = _Column()
    queue: deque = deque()
    prods = g.productions
    for item in prev.wait.get(letter, ()):
        pid, dot, origin = item
        adv = (pid, dot + 1, origin)
        if adv not in col.items:
            col.items.add(adv)
            queue.append(adv)
            body = prods[pid][1]
            if dot + 1 < len(body):
                col.wait.setdefault(body[dot + 1], []).append(adv)
    added = len(col.items)
    if added:
        columns.append(col)
        added += _close(g, columns, col, len(columns) - 1, queue)
        columns.pop()
    return col, added


def _accepts(g: Cfg, col: _Column) -> bool:
    prods = g.productions
    for pid, dot, origin in col.items:
        if origin == 0 and prods[pid][0] == g.start and dot == len(prods[pid][1]):
            return True
    return False


def recognize(g: Cfg, w: str) -> ChartRecognition:
    """Earley membership test: accepted iff w derives from g's start symbol.

    Cubic worst case, epsilon productions and left recursion included.  Bails
    out as soon as a chart column comes up empty.
    """
    col, count = _initial_column(g)
    columns = [col]
    for letter in w:
        col, added = _scan(g, columns, letter)
        count += added
        if not col.items:
            return ChartRecognition(False, count)
        columns.append(col)
    return ChartRecognition(_accepts(g, columns[-1]), count)


def accepted_words(g: Cfg, max_len: int) -> frozenset:
    """Every word of length ≤ max_len the chart recognizer accepts.

    Walks the 4-ary tree of prefixes, extending chart columns incrementally
    and pruning a whole subtree whenever a column is empty (no extension of a
    dead prefix can parse).  Equivalent to calling ``recognize`` on all
    4^max_len words, at a small fraction of the cost.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    out = []
    col0, _ = _initial_column(g)
    columns = [col0]
    prefix: list[str] = []

    def walk():
        if _accepts(g, columns[-1]):
            out.append("".join(prefix))
        if len(prefix) == max_len:
            return
        for letter in ALPHABET:
            col, _ = _scan(g, columns, letter)
            if not col.items:
                continue
            columns.append(col)
            prefix.append(letter)
            walk()
            prefix.pop()
            columns.pop()

    walk()
    return frozenset(out)


def enumerate_derivations(g: Cfg, max_len: int) -> set:
    """All distinct words of length ≤ max_len generated by g.

    Breadth-first search over sentential forms with leftmost expansion,
    pruned by the minimal terminal length each form can still reach, and
    deduplicated (distinct derivations of one word collapse).
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    terminals = g.terminals
    min_len = g._min_len
    rules = {nt: [g.productions[pid][1] for pid in pids] for nt, pids in g._by_lhs.items()}

    def min_expansion(form) -> int:
        total = 0
        for sym in form:
            total += 1 if sym in terminals else min_len[sym]
        return total

    words: set = set()
    start_form = (g.start,)
    seen = {start_form}
    queue = deque([start_form])
    while queue:
        form = queue.popleft()
        for i, sym in enumerate(form):
            if sym not in terminals:
                break
        else:
            words.add("".join(form))
            continue
        head, tail = form[:i], form[i + 1:]
        for body in rules[sym]:
            new_form = head + body + tail
            if new_form in seen:
                continue
            if min_expansion(new_form) > max_len:
                continue
            seen.add(new_form)
            queue.append(new_form)
    return words


def oracle_diff(max_exhaustive: int, random_samples: int, seed: int) -> list[str]:
    """Words on which a direct recognizer and the chart oracle disagree.

    Exhaustive over all words of length <= max_exhaustive (both grammars),
    then random_samples seeded uniform words of length <= 200.  Empty result
    means the two recognition routes agree everywhere tested.
    """
    import random
    from itertools import product

    from .recognizers import is_balanced, is_enw

    if not 0 <= max_exhaustive <= 12:
        raise ValueError("exhaustive bound must be 0..12")
    if random_samples < 0 or seed < 0:
        raise ValueError("sample count and seed must be >= 0")

    pairs = (
        (enw_grammar(), is_enw),
        (balanced_grammar(), is_balanced),
    )
    chart_sets = [accepted_words(g, max_exhaustive) for g, _ in pairs]
    mismatches: list[str] = []
    for length in range(max_exhaustive + 1):
        for tup in product(ALPHABET, repeat=length):
            w = "".join(tup)
            for (_, direct), chart_set in zip(pairs, chart_sets):
                if direct(w) != (w in chart_set):
                    mismatches.append(w)
    rng = random.Random(seed)
    for _ in range(random_samples):
        w = "".join(rng.choices(ALPHABET, k=rng.randint(0, 200)))
        for g, direct in pairs:
            if direct(w) != recognize(g, w).accepted:
                mismatches.append(w)
    return mismatches


@lru_cache(maxsize=None)
def enw_grammar() -> Cfg:
    """Grammar of the extended non-associative words.

    S -> x P P y;  P -> S | p z p | p z z p.  The two leaf blocks appear as
    terminal sequences in the bodies, exactly as stated.
    """
    return Cfg(
        nonterminals={"S", "P"},
        terminals=set("xyzp"),
        start="S",
        productions=[
            ("S", ("x", "P", "P", "y")),
            ("P", ("S",)),
            ("P", ("p", "z", "p")),
            ("P", ("p", "z", "z", "p")),
        ],
    )


@lru_cache(maxsize=None)
def balanced_grammar() -> Cfg:
    """Grammar of the balanced words.

    S -> x S y | p Z V Z p;  V -> V Z V | p T p;  T -> y T x | eps;
    Z -> z | z z.
    """
    return Cfg(
        nonterminals={"S", "V", "T", "Z"},
        terminals=set("xyzp"),
        start="S",
        productions=[
            ("S", ("x", "S", "y")),
            ("S", ("p", "Z", "V", "Z", "p")),
            ("V", ("V", "Z", "V")),
            ("V", ("p", "T", "p")),
            ("T", ("y", "T", "x")),
            ("T", ()),
            ("Z", ("z",)),
            ("Z", ("z", "z")),
        ],
    )


def bnf_text(g: Cfg) -> str:
    """Plain-text BNF listing: one nonterminal per line, '|' between
    alternatives, body symbols space-separated, 'eps' for the empty body."""
    order = []
    for lhs, _ in g.productions:
        if lhs not in order:
            order.append(lhs)
    if g.start in order:
        order.remove(g.start)
    order.insert(0, g.start)
    lines = []
    for nt in order:
        alts = []
        for pid in g._by_lhs[nt]:
            body = g.productions[pid][1]
            alts.append(" ".join(body) if body else "eps")
        lines.append(f"{nt} -> {' | '.join(alts)}")
    return "\n".join(lines)
