"""Bijections between 132-avoiding permutations, Dyck paths, and Motzkin
paths.

``perm_to_dyck`` realises the classical cross-array bijection from
132-avoiding permutations to Dyck paths: draw the permutation as an n x n
array of crosses (row i from the top holds the cross in column p[i]), then
walk the monotone lattice path from the lower-left corner to the upper-right
corner that stays as close to the main diagonal as possible while keeping
every cross weakly to its right.  Reading u for each vertical step and d for
each horizontal one yields the Dyck word.

``collapse_blocks`` maps Dyck paths without triple rises to Motzkin paths:
cut after each down-step, so every block is uud, ud, or d, and send
uud -> u, ud -> h, d -> d.

The composite ``perm_to_motzkin`` restricts to a bijection between Motzkin
permutations (132-avoiding with no vincular 1-23) and Motzkin paths; its
inverse doubles as a fast exhaustive generator of Motzkin permutations.
"""
from __future__ import annotations

from typing import Iterator

from .paths import DYCK, MOTZKIN, LatticePath, motzkin_paths, path_stats
from .permutations import P132, Perm, avoids, is_motzkin


def perm_to_dyck(p: Perm) -> LatticePath:
    """Cross-array bijection from a 132-avoiding permutation to a Dyck path.

    The vertical step of the lattice path crossing the r-th row from the
    bottom (which holds the cross in column p[n-r], 0-based input) sits at
    the largest horizontal position allowed by monotonicity and by keeping
    every cross to the right: a single top-down minimum sweep.
    """
    if not avoids(p, P132):
        raise ValueError("permutation contains 132; the cross-array walk is not defined")
    n = len(p)
    # rightmost admissible x-position for the vertical step in bottom row r
    # (1-based r): one column left of the cross in that row.
    limits = [p[n - r] - 1 for r in range(1, n + 1)]
    xs = [0] * n
    for r in range(n - 1, -1, -1):
        xs[r] = limits[r] if r == n - 1 else min(limits[r], xs[r + 1])
    word = []
    prev = 0
    for r in range(n):
        word.append("d" * (xs[r] - prev))
        word.append("u")
        prev = xs[r]
    word.append("d" * (n - prev))
    return LatticePath("".join(word), DYCK)


def dyck_to_perm(path: LatticePath) -> Perm:
    """Inverse of the cross-array walk.

    Row by row from the top of the array, place a cross in the leftmost
    column that lies strictly right of the path and is still free.
    """
    if path.kind != DYCK:
        raise ValueError("expected a Dyck path")
    n = path.size
    # x-position of the vertical step in bottom row r = number of d's
    # preceding the r-th u.
    xs = []
    ds = 0
    for s in path.steps:
        if s == "u":
            xs.append(ds)
        else:
            ds += 1
    used = [False] * (n + 2)
    out = []
    for r in range(n - 1, -1, -1):      # top row first
        c = xs[r] + 1
        while used[c]:
            c += 1
        used[c] = True
        out.append(c)
    return tuple(out)


def collapse_blocks(path: LatticePath) -> LatticePath:
    """Triple-rise-free Dyck path -> Motzkin path via uud/ud/d -> u/h/d."""
    if path.kind != DYCK:
        raise ValueError("expected a Dyck path")
    out = []
    run = 0
    for s in path.steps:
        if s == "u":
            run += 1
            if run > 2:
                raise ValueError("triple rise: the block rule needs blocks uud, ud, d")
        else:
            out.append("uhd"[2 - run])
            run = 0
    return LatticePath("".join(out), MOTZKIN)


def expand_blocks(path: LatticePath) -> LatticePath:
    """Motzkin path -> triple-rise-free Dyck path via u/h/d -> uud/ud/d."""
    if path.kind != MOTZKIN:
        raise ValueError("expected a Motzkin path")
    word = "".join({"u": "uud", "h": "ud", "d": "d"}[s] for s in path.steps)
    return LatticePath(word, DYCK)


def perm_to_motzkin(p: Perm) -> LatticePath:
    """Motzkin permutation -> Motzkin path (cross-array walk, then blocks)."""
    if not is_motzkin(p):
        raise ValueError("not a Motzkin permutation")
    return collapse_blocks(perm_to_dyck(p))


def motzkin_to_perm(path: LatticePath) -> Perm:
    """Inverse of perm_to_motzkin."""
    return dyck_to_perm(expand_blocks(path))


def motzkin_permutations(n: int) -> Iterator[Perm]:
    """All Motzkin permutations of length n, one per Motzkin path, in
    lexicographic path order (u < h < d)."""
    for path in motzkin_paths(n):
        yield motzkin_to_perm(path)


def triple_rise_free(p: Perm) -> bool:
    """Whether the Dyck image of a 132-avoiding permutation avoids uuu."""
    return path_stats(perm_to_dyck(p)).triple_rises == 0
