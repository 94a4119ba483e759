"""Permutations in one-line notation, classical and vincular patterns, and
the permutation statistics used throughout the package.

Conventions: values and positions are 1-based, so a permutation of length n
is a tuple holding a rearrangement of 1..n.  The empty permutation is valid.

A pattern is a permutation skeleton plus a set of "glued" positions: i is
glued when letters i and i+1 of the skeleton must sit in adjacent positions
of the host permutation.  Text form follows the dash notation for vincular
(generalized) patterns: "1-23" has skeleton 123 with letters 2,3 adjacent,
while a dash-free string such as "132" is a classical pattern (no adjacency
requirements at all).  Fully glued patterns are therefore not expressible
in text and must be built with Pattern(...) directly.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]


def permutation(entries: Iterable[int]) -> Perm:
    """Validate and freeze a 1-based one-line permutation.

    >>> permutation([2, 1, 3])
    (2, 1, 3)
    """
    p = tuple(int(v) for v in entries)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def parse_permutation(text: str) -> Perm:
    """Parse space- or comma-separated one-line notation, e.g. '6 7 4 3 5 2 8 1'."""
    stripped = text.strip()
    if not stripped:
        return ()
    tokens = [t for t in re.split(r"[,\s]+", stripped) if t]
    values = []
    for t in tokens:
        if not re.fullmatch(r"\d+", t):
            raise ValueError(f"bad permutation token {t!r}")
        values.append(int(t))
    return permutation(values)


def format_permutation(p: Perm) -> str:
    return " ".join(str(v) for v in p)


@dataclass(frozen=True)
class Pattern:
    """A pattern skeleton plus adjacency (glue) constraints.

    ``glued`` holds positions i (1-based, i < len) meaning skeleton letters
    i and i+1 must be adjacent in any occurrence.  Empty ``glued`` is a
    classical pattern.
    """

    skeleton: Perm
    glued: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "skeleton", permutation(self.skeleton))
        object.__setattr__(self, "glued", frozenset(self.glued))
        k = len(self.skeleton)
        if any(not (1 <= i <= k - 1) for i in self.glued):
            raise ValueError(f"glued positions {sorted(self.glued)} out of range for length {k}")

    @property
    def is_classical(self) -> bool:
        return not self.glued

    def __str__(self) -> str:
        if not self.skeleton:
            return ""
        if any(v > 9 for v in self.skeleton):
            raise ValueError("letters above 9 have no text form")
        out = [str(self.skeleton[0])]
        for i in range(1, len(self.skeleton)):
            if self.glued and i not in self.glued:
                out.append("-")
            out.append(str(self.skeleton[i]))
        return "".join(out)


def parse_pattern(text: str) -> Pattern:
    """Parse dash notation: '132' (classical), '1-23', '12-3-4'.

    A dash-free string is classical; once any dash appears, letters within
    the same dash-free group are glued.
    """
    if text == "":
        raise ValueError("empty pattern text")
    if not re.fullmatch(r"[1-9]+(-[1-9]+)*", text):
        raise ValueError(f"bad pattern text {text!r}")
    groups = text.split("-")
    letters = [int(ch) for g in groups for ch in g]
    skeleton = permutation(letters)
    glued: set[int] = set()
    if len(groups) > 1:
        pos = 0
        for g in groups:
            for j in range(len(g) - 1):
                glued.add(pos + j + 1)
            pos += len(g)
    return Pattern(skeleton, frozenset(glued))


# A handful of patterns used over and over.
P132 = parse_pattern("132")
P231 = parse_pattern("231")
P1_23 = parse_pattern("1-23")
P32_1 = parse_pattern("32-1")


def increasing_pattern(k: int, glued: Iterable[int] = ()) -> Pattern:
    return Pattern(tuple(range(1, k + 1)), frozenset(glued))


def _count_occurrences(p: Sequence[int], pat: Pattern, limit: int | None = None) -> int:
    """Backtracking count of occurrences; stops once ``limit`` are found."""
    skel = pat.skeleton
    k = len(skel)
    n = len(p)
    if k == 0:
        return 1
    if k > n:
        return 0
    # For each skeleton slot j, the chosen value must fall strictly between
    # the values already chosen for lower_ref[j] and upper_ref[j]: the
    # previously placed letters closest to skel[j] from below and above.
    lower_ref: list[int | None] = [None] * k
    upper_ref: list[int | None] = [None] * k
    for j in range(k):
        lo_val = hi_val = None
        for a in range(j):
            if skel[a] < skel[j] and (lo_val is None or skel[a] > lo_val):
                lo_val, lower_ref[j] = skel[a], a
            if skel[a] > skel[j] and (hi_val is None or skel[a] < hi_val):
                hi_val, upper_ref[j] = skel[a], a

    chosen_pos = [0] * k
    chosen_val = [0] * k
    count = 0

    def extend(j: int) -> bool:
        nonlocal count
        if j == k:
            count += 1
            return limit is not None and count >= limit
        if j > 0 and j in pat.glued:
            candidates: Iterable[int] = (chosen_pos[j - 1] + 1,)
        elif j > 0:
            candidates = range(chosen_pos[j - 1] + 1, n - (k - j) + 1)
        else:
            candidates = range(0, n - k + 1)
        for pos in candidates:
            if pos >= n:
                continue
            v = p[pos]
            lr, ur = lower_ref[j], upper_ref[j]
            if lr is not None and v <= chosen_val[lr]:
                continue
            if ur is not None and v >= chosen_val[ur]:
                continue
            chosen_pos[j] = pos
            chosen_val[j] = v
            if extend(j + 1):
                return True
        return False

    extend(0)
    return count


def occurrences(p: Sequence[int], pat: Pattern) -> int:
    """Number of occurrences of ``pat`` in ``p``.

    An occurrence is a position tuple i_1 < ... < i_k whose values are
    order-isomorphic to the skeleton, with i_{j+1} = i_j + 1 whenever j is
    glued.  The empty pattern occurs once.
    """
    return _count_occurrences(p, pat)


def avoids(p: Sequence[int], pat: Pattern) -> bool:
    return _count_occurrences(p, pat, limit=1) == 0


def contains(p: Sequence[int], pat: Pattern) -> bool:
    return _count_occurrences(p, pat, limit=1) > 0


def reverse(p: Perm) -> Perm:
    """The reversal: entry i of the result is entry n+1-i of the input."""
    return tuple(reversed(p))


def is_motzkin(p: Sequence[int]) -> bool:
    """132-avoiding with no occurrence of the vincular pattern 1-23."""
    return avoids(p, P132) and avoids(p, P1_23)


def is_motzkin_by_triples(p: Sequence[int]) -> bool:
    """Equivalent test: 132-avoiding with no three consecutive ascending
    entries.  Kept separate so the equivalence itself can be tested.
    """
    if not avoids(p, P132):
        return False
    return not any(p[i] < p[i + 1] < p[i + 2] for i in range(len(p) - 2))


def is_reverse_motzkin(p: Sequence[int]) -> bool:
    """True when the reversal is Motzkin; equivalently p avoids 231 and 32-1."""
    return is_motzkin(reverse(tuple(p)))


@dataclass(frozen=True)
class StatProfile:
    """The permutation statistics tracked by the generating functions."""

    lds: int
    lis: int
    rises: int
    descents: int
    fixed_points: int
    free_rises: int
    lrm: int


def longest_monotone(p: Sequence[int], decreasing: bool) -> int:
    best = [0] * len(p)
    for i, v in enumerate(p):
        m = 0
        for j in range(i):
            cmp = p[j] > v if decreasing else p[j] < v
            if cmp and best[j] > m:
                m = best[j]
        best[i] = m + 1
    return max(best, default=0)


def rl_maxima(p: Sequence[int]) -> int:
    """Entries larger than everything after them (right-to-left maxima)."""
    count, running = 0, 0
    for v in reversed(p):
        if v > running:
            count += 1
            running = v
    return count


def stats(p: Sequence[int]) -> StatProfile:
    n = len(p)
    rises = sum(1 for i in range(n - 1) if p[i] < p[i + 1])
    descents = (n - 1) - rises if n else 0
    fixed = sum(1 for i, v in enumerate(p, start=1) if v == i)
    # free rise at i: some later entry is larger
    free = 0
    suffix_max = 0
    for v in reversed(p):
        if v < suffix_max:
            free += 1
        suffix_max = max(suffix_max, v)
    lrm = 0
    running = 0
    for v in p:
        if v > running:
            lrm += 1
            running = v
    return StatProfile(
        lds=longest_monotone(p, decreasing=True),
        lis=longest_monotone(p, decreasing=False),
        rises=rises,
        descents=descents,
        fixed_points=fixed,
        free_rises=free,
        lrm=lrm,
    )


def pattern_of(values: Sequence[int]) -> Perm:
    """Rank-normalise arbitrary distinct values to a permutation pattern.

    >>> pattern_of((5, 2, 8))
    (2, 1, 3)
    """
    order = sorted(values)
    rank = {v: i + 1 for i, v in enumerate(order)}
    return tuple(rank[v] for v in values)


def all_permutations(n: int) -> Iterator[Perm]:
    import itertools

    return (tuple(q) for q in itertools.permutations(range(1, n + 1)))
