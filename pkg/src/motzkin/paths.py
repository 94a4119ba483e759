"""Dyck and Motzkin lattice paths, their local statistics, and tunnels.

Paths are step words over u (up), d (down), h (horizontal), starting and
ending on the x-axis and never dipping below it.  Dyck paths forbid h and
their size |D| is the semilength (half the step count); Motzkin size is the
step count.

A tunnel is the horizontal segment joining the start of an up-step to the
end of its matching down-step; there is exactly one per up-step.  Tunnel
coordinates are reported as (start, end, height) in step units, so length =
end - start, matching the two "good tunnel" predicates used by the fixed
point counting: height+1 = length on a Motzkin path, height+1 = length/2 on
a Dyck path.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

DYCK = "dyck"
MOTZKIN = "motzkin"

_STEP_DELTA = {"u": 1, "d": -1, "h": 0}


@dataclass(frozen=True)
class LatticePath:
    steps: str
    kind: str

    def __post_init__(self):
        if self.kind not in (DYCK, MOTZKIN):
            raise ValueError(f"unknown path kind {self.kind!r}")
        height = 0
        for i, s in enumerate(self.steps):
            if s not in _STEP_DELTA:
                raise ValueError(f"bad step {s!r} at position {i}")
            if s == "h" and self.kind == DYCK:
                raise ValueError(f"horizontal step at position {i} in a Dyck path")
            height += _STEP_DELTA[s]
            if height < 0:
                raise ValueError(f"path dips below the axis at position {i}")
        if height != 0:
            raise ValueError(f"path ends at height {height}, not 0")

    @property
    def size(self) -> int:
        """|D| = semilength for Dyck, step count for Motzkin."""
        return len(self.steps) // 2 if self.kind == DYCK else len(self.steps)

    def __str__(self) -> str:
        return self.steps


def parse_path(text: str, kind: str) -> LatticePath:
    return LatticePath(text.strip(), kind)


def dyck(text: str) -> LatticePath:
    return LatticePath(text, DYCK)


def motzkin(text: str) -> LatticePath:
    return LatticePath(text, MOTZKIN)


def height(path: LatticePath) -> int:
    """Maximum height reached (maximum prefix sum)."""
    best = cur = 0
    for s in path.steps:
        cur += _STEP_DELTA[s]
        if cur > best:
            best = cur
    return best


@dataclass(frozen=True)
class PathStats:
    peaks: int
    double_rises: int
    triple_rises: int
    up_steps: int
    horiz_steps: int
    horiz_at_zero: int


def path_stats(path: LatticePath) -> PathStats:
    w = path.steps
    peaks = sum(1 for i in range(len(w) - 1) if w[i] == "u" and w[i + 1] == "d")
    double = sum(1 for i in range(len(w) - 1) if w[i] == "u" and w[i + 1] == "u")
    triple = sum(1 for i in range(len(w) - 2) if w[i : i + 3] == "uuu")
    horiz_zero = 0
    cur = 0
    for s in w:
        if s == "h" and cur == 0:
            horiz_zero += 1
        cur += _STEP_DELTA[s]
    return PathStats(
        peaks=peaks,
        double_rises=double,
        triple_rises=triple,
        up_steps=w.count("u"),
        horiz_steps=w.count("h"),
        horiz_at_zero=horiz_zero,
    )


@dataclass(frozen=True)
class Tunnel:
    """Horizontal segment from the start of an up-step to the end of its
    matching down-step; start/end are x-coordinates in step units."""

    start: int
    end: int
    height: int

    @property
    def length(self) -> int:
        return self.end - self.start


def tunnels(path: LatticePath) -> list[Tunnel]:
    """One tunnel per up-step, via the matching-parenthesis scan."""
    out: list[Tunnel] = []
    stack: list[tuple[int, int]] = []  # (x of step start, height before step)
    cur = 0
    for i, s in enumerate(path.steps):
        if s == "u":
            stack.append((i, cur))
        elif s == "d":
            x0, h = stack.pop()
            out.append(Tunnel(start=x0, end=i + 1, height=h))
        cur += _STEP_DELTA[s]
    assert not stack
    out.sort(key=lambda t: (t.start, t.end))
    return out


def good_tunnels(path: LatticePath) -> int:
    """Motzkin tunnels with height + 1 = length."""
    if path.kind != MOTZKIN:
        raise ValueError("good tunnels are defined on Motzkin paths")
    return sum(1 for t in tunnels(path) if t.height + 1 == t.length)


def gt_counts(path: LatticePath) -> dict[int, int]:
    """Number of tunnels of height k and length k+1 for each k >= 1."""
    if path.kind != MOTZKIN:
        raise ValueError("good tunnels are defined on Motzkin paths")
    out: dict[int, int] = {}
    for t in tunnels(path):
        if t.height >= 1 and t.length == t.height + 1:
            out[t.height] = out.get(t.height, 0) + 1
    return out


def dyck_diag_tunnels(path: LatticePath) -> int:
    """Dyck tunnels with height + 1 = length/2."""
    if path.kind != DYCK:
        raise ValueError("diagonal tunnels are defined on Dyck paths")
    return sum(1 for t in tunnels(path) if 2 * (t.height + 1) == t.length)


def motzkin_paths(n: int) -> Iterator[LatticePath]:
    """All Motzkin paths with n steps, lexicographic in u < h < d."""

    def rec(prefix: list[str], h: int, remaining: int) -> Iterator[str]:
        if remaining == 0:
            yield "".join(prefix)
            return
        if remaining >= h + 2:     # room to go up and still return to 0
            prefix.append("u")
            yield from rec(prefix, h + 1, remaining - 1)
            prefix.pop()
        if remaining >= h + 1:
            prefix.append("h")
            yield from rec(prefix, h, remaining - 1)
            prefix.pop()
        if h > 0:
            prefix.append("d")
            yield from rec(prefix, h - 1, remaining - 1)
            prefix.pop()

    for w in rec([], 0, n):
        yield LatticePath(w, MOTZKIN)


def dyck_paths(n: int) -> Iterator[LatticePath]:
    """All Dyck paths of semilength n, lexicographic in u < d."""

    def rec(prefix: list[str], h: int, remaining: int) -> Iterator[str]:
        if remaining == 0:
            yield "".join(prefix)
            return
        if remaining >= h + 2:
            prefix.append("u")
            yield from rec(prefix, h + 1, remaining - 1)
            prefix.pop()
        if h > 0:
            prefix.append("d")
            yield from rec(prefix, h - 1, remaining - 1)
            prefix.pop()

    for w in rec([], 0, 2 * n):
        yield LatticePath(w, DYCK)
