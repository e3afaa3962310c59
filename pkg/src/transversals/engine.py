"""The transversal engine: impose hyperedges one at a time on a LIFO stack
of rows, splitting each row into disjoint sons that still hit the edge and
pruning sons that cannot survive the remaining edges.  The surviving final
rows form a disjoint family whose union is the set of all transversals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .hypergraph import Hypergraph
from .rows import Row


class WorkItem(NamedTuple):
    """A row together with the 1-based index of the next edge to impose.

    Every member of ``row`` already hits the edges before ``pc``; ``pc`` of
    h+1 marks a final row.
    """

    row: Row
    pc: int


@dataclass(frozen=True)
class RunStats:
    impositions: int
    s_max: int
    max_stack: int


@dataclass(frozen=True)
class RowFamily:
    """Ordered list of pairwise-disjoint rows plus the run bookkeeping.

    ``min_card`` records that the producing run pruned rows which could not
    reach that cardinality; analytics refuse per-k queries below it because
    smaller transversals may have been discarded.
    """

    w: int
    rows: tuple[Row, ...]
    min_card: int | None = None
    stats: RunStats | None = None


def impose(row: Row, edge: Iterable[int]) -> list[Row]:
    """Split ``row`` into disjoint rows whose union is the members hitting
    ``edge``.

    If a forced position or a whole bubble lies inside the edge, every
    member already hits it and the row passes through unchanged.  Otherwise
    son s hits the edge inside the s-th cut bubble (the hit part becomes a
    fresh bubble, or a forced 1 when it is a single position, and the rest
    of that bubble goes free), while the earlier cut parts are zeroed out
    with their remainders shrinking in place.  A last son catches members
    hitting the edge only among the free positions; it exists only when the
    edge meets them.  Sons are returned in that order.
    """
    hit = frozenset(edge)
    if hit & row.ones or any(bubble <= hit for bubble in row.bubbles):
        return [row]
    cut_ids = [i for i, bubble in enumerate(row.bubbles) if bubble & hit]
    free_hit = row.twos & hit
    sons = []
    for s, i in enumerate(cut_ids):
        zeros = row.zeros
        bubbles = list(row.bubbles)
        for q in cut_ids[:s]:
            part = bubbles[q] & hit
            zeros |= part
            bubbles[q] = bubbles[q] - part
        part = bubbles[i] & hit
        twos = row.twos | (bubbles[i] - part)
        bubbles[i] = part
        sons.append(Row(row.w, zeros, row.ones, twos, tuple(bubbles)))
    if free_hit:
        zeros = row.zeros
        bubbles = list(row.bubbles)
        for q in cut_ids:
            part = bubbles[q] & hit
            zeros |= part
            bubbles[q] = bubbles[q] - part
        sons.append(Row(row.w, zeros, row.ones, row.twos - free_hit,
                        tuple(bubbles) + (free_hit,)))
    return sons


def is_feasible(row: Row, pending: Iterable[Iterable[int]]) -> bool:
    """True iff no pending edge lies entirely inside the zeros, i.e. the
    member taking everything outside the zeros hits every pending edge."""
    zeros = row.zeros
    return all(not zeros.issuperset(edge) for edge in pending)


def is_extra_feasible(row: Row, pending: Iterable[Iterable[int]], k: int) -> bool:
    """Feasible and still containing a member of cardinality >= k."""
    return row.c_max >= k and is_feasible(row, pending)


def run(hg: Hypergraph, min_card: int | None = None) -> RowFamily:
    """Impose all edges in input order and return the final row family.

    The work stack is LIFO and sons are pushed so that the first son of a
    split is processed first; together with the fixed son order of
    :func:`impose` this makes the traversal, the final row order and all
    statistics deterministic.  With ``min_card`` set, sons that cannot
    contain a member of at least that cardinality are pruned; the result
    then still covers every transversal of size >= min_card exactly once,
    but may omit smaller ones.
    """
    if min_card is not None and min_card < 0:
        raise ValueError("min_card must be >= 0")
    edges = [frozenset(e) for e in hg.edges]
    h = len(edges)

    def admissible(row: Row, pc: int) -> bool:
        pending = edges[pc - 1:]
        if min_card is None:
            return is_feasible(row, pending)
        return is_extra_feasible(row, pending, min_card)

    impositions = 0
    s_max = 0
    max_stack = 0
    final: list[Row] = []
    stack: list[WorkItem] = []
    root = Row.powerset(hg.w)
    if admissible(root, 1):
        stack.append(WorkItem(root, 1))
    while stack:
        max_stack = max(max_stack, len(stack))
        row, pc = stack.pop()
        if pc > h:
            final.append(row)
            continue
        candidates = impose(row, edges[pc - 1])
        impositions += 1
        s_max = max(s_max, len(candidates))
        survivors = [son for son in candidates if admissible(son, pc + 1)]
        stack.extend(WorkItem(son, pc + 1) for son in reversed(survivors))
    return RowFamily(w=hg.w, rows=tuple(final), min_card=min_card,
                     stats=RunStats(impositions, s_max, max_stack))
