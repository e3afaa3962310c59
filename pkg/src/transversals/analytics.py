"""Whole-family counting, generation and query filtering on top of a
RowFamily produced by the engine."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .engine import RowFamily


class Infeasible(Exception):
    """Raised when asked for the transversal number of an empty family."""


@dataclass(frozen=True)
class Spectrum:
    """Per-cardinality transversal counts, indexed k = 0..w, plus the total."""

    counts: tuple[int, ...]
    total: int


def _refuse_pruned(family: RowFamily, what: str) -> None:
    if family.min_card is not None:
        raise ValueError(
            f"{what} needs a family built without min_card; this one was "
            f"pruned below cardinality {family.min_card}")


def count_total(family: RowFamily) -> int:
    """Total number of represented transversals."""
    _refuse_pruned(family, "count_total")
    return sum(row.size() for row in family.rows)


def spectrum(family: RowFamily) -> Spectrum:
    """Exact transversal counts for every cardinality 0..w."""
    _refuse_pruned(family, "spectrum")
    counts = [0] * (family.w + 1)
    for row in family.rows:
        for k, c in enumerate(row.counts_by_size(family.w)):
            counts[k] += c
    return Spectrum(tuple(counts), sum(counts))


def count_at_least(family: RowFamily, k: int) -> int:
    """Number of transversals of cardinality >= k, as row totals minus the
    per-row counts below k."""
    if family.min_card is not None and k < family.min_card:
        raise ValueError(
            f"family was pruned below cardinality {family.min_card}; "
            f"counts for k={k} would be incomplete")
    cutoff = min(k, family.w + 1)
    total = 0
    for row in family.rows:
        total += row.size()
        if cutoff > 0:
            total -= sum(row.counts_by_size(cutoff - 1))
    return total


def transversal_number(family: RowFamily) -> tuple[int, int]:
    """(smallest transversal size, number of transversals of that size).

    The count is the product of bubble sizes summed over the rows whose
    minimum member size attains the overall minimum; minimum members take
    the forced positions plus exactly one position per bubble.
    """
    _refuse_pruned(family, "transversal_number")
    if not family.rows:
        raise Infeasible("empty row family has no transversals")
    k_min = min(row.c_min for row in family.rows)
    tau_min = 0
    for row in family.rows:
        if row.c_min != k_min:
            continue
        count = 1
        for bubble in row.bubbles:
            count *= len(bubble)
        assert count == row.count_of_size(k_min)
        tau_min += count
    return k_min, tau_min


def transversals_of_size(family: RowFamily, k: int) -> Iterator[tuple[int, ...]]:
    """Every represented transversal of cardinality k exactly once, row by
    row; row disjointness rules out duplicates."""
    if family.min_card is not None and k < family.min_card:
        raise ValueError(
            f"family was pruned below cardinality {family.min_card}; "
            f"generation for k={k} would be incomplete")

    def generate() -> Iterator[tuple[int, ...]]:
        for row in family.rows:
            yield from row.members_of_size(k)

    return generate()


def filter_family(family: RowFamily, require: Iterable[int] = (),
                  forbid: Iterable[int] = ()) -> RowFamily:
    """Restrict the family to members containing all of ``require`` and none
    of ``forbid``, by single-vertex surgery on each row.

    Filtering the already-built family replaces re-running the engine for
    every query; rows whose members all violate a condition drop out.
    """
    require = frozenset(require)
    forbid = frozenset(forbid)
    if require & forbid:
        raise ValueError(
            f"require and forbid overlap on {sorted(require & forbid)}")
    filtered = []
    for row in family.rows:
        cur = row
        for v in sorted(require):
            cur = cur.require(v)
            if cur is None:
                break
        if cur is None:
            continue
        for v in sorted(forbid):
            cur = cur.forbid(v)
            if cur is None:
                break
        if cur is not None:
            filtered.append(cur)
    return RowFamily(w=family.w, rows=tuple(filtered),
                     min_card=family.min_card, stats=None)
