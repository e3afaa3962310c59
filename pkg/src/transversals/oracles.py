"""Independent ground-truth engines for verification: power-set sweep,
inclusion-exclusion counting and the census of rows of a given length.

These are deliberately written against different machinery than the engine
(bitmasks and alternating sums instead of row splitting) so that agreement
between the two sides is meaningful.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .hypergraph import Hypergraph
from .rows import Row, binomial

BRUTE_VERTEX_LIMIT = 24
IE_EDGE_LIMIT = 20
CENSUS_BRUTE_LIMIT = 5


def brute_transversals(hg: Hypergraph) -> list[tuple[int, ...]]:
    """All transversals by sweeping the 2^w bitmasks; lexicographic order."""
    if hg.w > BRUTE_VERTEX_LIMIT:
        raise ValueError(f"w={hg.w} exceeds brute-force limit {BRUTE_VERTEX_LIMIT}")
    masks = [sum(1 << (v - 1) for v in edge) for edge in hg.edges]
    found = []
    for m in range(1 << hg.w):
        if all(m & em for em in masks):
            found.append(tuple(v for v in range(1, hg.w + 1) if m >> (v - 1) & 1))
    found.sort()
    return found


def inclusion_exclusion_count(hg: Hypergraph, k: int | None = None) -> int:
    """Transversal count by the alternating sum over edge subsets S of the
    sets avoiding union(S); counts k-element transversals when k is given.

    Subsets are walked in Gray-code order so each step toggles one edge in
    per-vertex coverage counters, keeping the running union size cheap.
    """
    h = hg.h
    if h > IE_EDGE_LIMIT:
        raise ValueError(f"h={h} exceeds inclusion-exclusion limit {IE_EDGE_LIMIT}")
    if k is not None and (k < 0 or k > hg.w):
        return 0

    def term(uncovered: int) -> int:
        if k is None:
            return 1 << uncovered
        return binomial(uncovered, k)

    total = term(hg.w)
    cover = [0] * (hg.w + 1)
    covered = 0
    selected = [False] * h
    picked = 0
    for step in range(1, 1 << h):
        j = (step & -step).bit_length() - 1
        if selected[j]:
            selected[j] = False
            picked -= 1
            for v in hg.edges[j]:
                cover[v] -= 1
                if cover[v] == 0:
                    covered -= 1
        else:
            selected[j] = True
            picked += 1
            for v in hg.edges[j]:
                cover[v] += 1
                if cover[v] == 1:
                    covered += 1
        if picked % 2:
            total -= term(hg.w - covered)
        else:
            total += term(hg.w - covered)
    return total


def bell_numbers(n: int) -> list[int]:
    """[Bell(0), ..., Bell(n)] via the Bell triangle."""
    values = [1]
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        values.append(nxt[0])
        row = nxt
    return values[: n + 1]


def row_census(w: int) -> int:
    """Number of distinct rows of length w: Bell(w+2) - Bell(w+1)."""
    if w < 0:
        raise ValueError("w must be >= 0")
    bells = bell_numbers(w + 2)
    return bells[w + 2] - bells[w + 1]


def all_rows(w: int) -> Iterator[Row]:
    """Every valid row of length w, built literally: choose the bubble
    region, partition it into blocks of size >= 2, and label the rest."""
    universe = list(range(1, w + 1))
    for region_mask in range(1 << w):
        region = [v for v in universe if region_mask >> (v - 1) & 1]
        rest = [v for v in universe if not region_mask >> (v - 1) & 1]
        for blocks in _partitions_min2(region):
            for labels in itertools.product((0, 1, 2), repeat=len(rest)):
                zeros, ones, twos = set(), set(), set()
                for v, label in zip(rest, labels):
                    (zeros, ones, twos)[label].add(v)
                yield Row(w, zeros, ones, twos, tuple(map(frozenset, blocks)))


def row_census_brute(w: int) -> int:
    if w > CENSUS_BRUTE_LIMIT:
        raise ValueError(f"w={w} exceeds census brute-force limit {CENSUS_BRUTE_LIMIT}")
    return sum(1 for _ in all_rows(w))


def _partitions_min2(items: list[int]) -> Iterator[list[list[int]]]:
    """Set partitions of ``items`` with every block of size >= 2."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    n = len(rest)
    for mask in range(1 << n):
        mates = [rest[i] for i in range(n) if mask >> i & 1]
        if not mates:
            continue
        block = [first] + mates
        remaining = [rest[i] for i in range(n) if not mask >> i & 1]
        for tail in _partitions_min2(remaining):
            yield [block] + tail
