"""Randomized invariants for rows, the engine and the analytics layer,
cross-checked against the brute-force and inclusion-exclusion oracles."""

import itertools

from hypothesis import given, settings
import hypothesis.strategies as st

from transversals import (Hypergraph, Row, brute_transversals, count_at_least,
                          count_total, filter_family, impose,
                          inclusion_exclusion_count, is_feasible,
                          parse_hypergraph, render_hypergraph, run, spectrum,
                          subset_reduced, superset_reduced, transversal_number,
                          transversals_of_size)


@st.composite
def rows_st(draw, min_w=0, max_w=8):
    w = draw(st.integers(min_w, max_w))
    labels = draw(st.lists(st.integers(0, 6), min_size=w, max_size=w))
    zeros, ones, twos = set(), set(), set()
    groups: dict[int, set] = {}
    for v, label in zip(range(1, w + 1), labels):
        if label == 0:
            zeros.add(v)
        elif label == 1:
            ones.add(v)
        elif label == 2:
            twos.add(v)
        else:
            groups.setdefault(label, set()).add(v)
    return Row(w, zeros, ones, twos, tuple(map(frozenset, groups.values())))


@st.composite
def hypergraphs_st(draw, max_w=8, max_h=5):
    w = draw(st.integers(1, max_w))
    edges = draw(st.lists(
        st.frozensets(st.integers(1, w), min_size=1, max_size=w),
        max_size=max_h))
    return Hypergraph(w, tuple(tuple(sorted(e)) for e in edges))


def brute_members(row):
    return sorted(x for size in range(row.w + 1)
                  for x in itertools.combinations(range(1, row.w + 1), size)
                  if row.contains(x))


# ----- row invariants ------------------------------------------------------

@given(rows_st())
def test_row_parts_partition_ground_set(r):
    parts = [r.zeros, r.ones, r.twos, *r.bubbles]
    assert sum(len(p) for p in parts) == r.w
    assert frozenset().union(*parts) == frozenset(range(1, r.w + 1))


@given(rows_st())
def test_counts_sum_to_size(r):
    assert sum(r.counts_by_size(r.w)) == r.size()


@given(rows_st())
def test_counts_match_brute_force(r):
    by_size = [0] * (r.w + 1)
    for x in brute_members(r):
        by_size[len(x)] += 1
    assert r.counts_by_size(r.w) == by_size


@given(rows_st())
def test_minimum_size_count_is_bubble_product(r):
    product = 1
    for bubble in r.bubbles:
        product *= len(bubble)
    assert r.count_of_size(r.c_min) == product


@given(rows_st(), st.integers(0, 8))
def test_generation_is_exact(r, k):
    got = list(r.members_of_size(k))
    assert len(got) == len(set(got)) == r.count_of_size(k)
    assert all(len(x) == k and r.contains(x) for x in got)


@given(rows_st())
def test_full_expansion_is_exact(r):
    assert sorted(r.members()) == brute_members(r)


@given(rows_st(min_w=1), st.data())
def test_surgery_matches_brute_filter(r, data):
    v = data.draw(st.integers(1, r.w))
    kept = r.require(v)
    assert sorted(kept.members() if kept else []) == \
        [x for x in brute_members(r) if v in x]
    dropped = r.forbid(v)
    assert sorted(dropped.members() if dropped else []) == \
        [x for x in brute_members(r) if v not in x]


# ----- imposition and the engine -------------------------------------------

@given(rows_st(min_w=1), st.data())
def test_impose_splits_hitters_disjointly(r, data):
    edge = data.draw(st.frozensets(st.integers(1, r.w), min_size=1))
    sons = impose(r, edge)
    expanded = [x for son in sons for x in son.members()]
    assert len(expanded) == len(set(expanded))
    assert sorted(expanded) == sorted(
        x for x in r.members() if set(x) & edge)


@settings(max_examples=60)
@given(hypergraphs_st())
def test_engine_matches_brute_force(hg):
    family = run(hg)
    expanded = [x for row in family.rows for x in row.members()]
    assert len(expanded) == len(set(expanded))
    assert sorted(expanded) == brute_transversals(hg)
    for row in family.rows:
        assert is_feasible(row, hg.edges)


@settings(max_examples=60)
@given(hypergraphs_st(), st.integers(0, 9))
def test_pruned_engine_keeps_large_transversals_once(hg, k):
    family = run(hg, min_card=k)
    expanded = [x for row in family.rows for x in row.members() if len(x) >= k]
    assert len(expanded) == len(set(expanded))
    assert sorted(set(expanded)) == \
        [x for x in brute_transversals(hg) if len(x) >= k]


@settings(max_examples=60)
@given(hypergraphs_st())
def test_engine_stats_bounds(hg):
    family = run(hg)
    stats = family.stats
    assert stats.impositions <= len(family.rows) * hg.h
    assert stats.s_max <= hg.d + 1
    assert stats.max_stack <= hg.h * stats.s_max + 1


# ----- analytics ------------------------------------------------------------

@settings(max_examples=60)
@given(hypergraphs_st())
def test_counters_agree(hg):
    family = run(hg)
    total = count_total(family)
    assert total == len(brute_transversals(hg))
    assert total == inclusion_exclusion_count(hg)


@settings(max_examples=60)
@given(hypergraphs_st())
def test_spectrum_matches_inclusion_exclusion(hg):
    sp = spectrum(run(hg))
    for k in range(hg.w + 1):
        assert sp.counts[k] == inclusion_exclusion_count(hg, k)


@settings(max_examples=40)
@given(hypergraphs_st(), st.integers(0, 9))
def test_count_at_least_is_spectrum_tail(hg, k):
    family = run(hg)
    assert count_at_least(family, k) == sum(spectrum(family).counts[k:])


@settings(max_examples=40)
@given(hypergraphs_st(), st.integers(0, 8))
def test_generation_across_rows_is_exact(hg, k):
    family = run(hg)
    got = list(transversals_of_size(family, k))
    assert len(got) == len(set(got))
    assert sorted(got) == [x for x in brute_transversals(hg) if len(x) == k]


@settings(max_examples=40)
@given(hypergraphs_st())
def test_transversal_number_matches_spectrum(hg):
    family = run(hg)
    k_min, tau_min = transversal_number(family)
    sp = spectrum(family)
    assert sp.counts[k_min] == tau_min
    assert all(c == 0 for c in sp.counts[:k_min])


@settings(max_examples=50)
@given(hypergraphs_st(), st.data())
def test_filter_family_matches_brute_filter(hg, data):
    require = data.draw(st.frozensets(st.integers(1, hg.w)))
    forbid = data.draw(st.frozensets(
        st.integers(1, hg.w)).filter(lambda f: not (f & require)))
    filtered = filter_family(run(hg), require=require, forbid=forbid)
    expanded = [x for row in filtered.rows for x in row.members()]
    assert len(expanded) == len(set(expanded))
    assert sorted(expanded) == [
        x for x in brute_transversals(hg)
        if require <= set(x) and forbid.isdisjoint(x)]


# ----- reductions and parsing -----------------------------------------------

@settings(max_examples=50)
@given(hypergraphs_st(), st.data())
def test_subset_reduction_identity(hg, data):
    allowed = data.draw(st.frozensets(st.integers(1, hg.w)))
    reduced = subset_reduced(hg, allowed)
    expected = [x for x in brute_transversals(hg) if set(x) <= allowed]
    if reduced is None:
        assert expected == []
    else:
        got = [x for x in brute_transversals(reduced) if set(x) <= allowed]
        assert got == expected


@settings(max_examples=50)
@given(hypergraphs_st(), st.data())
def test_superset_reduction_identity(hg, data):
    fixed = data.draw(st.frozensets(st.integers(1, hg.w)))
    reduced = superset_reduced(hg, fixed)
    got = {tuple(sorted(fixed | set(y))) for y in brute_transversals(reduced)}
    assert got == {x for x in brute_transversals(hg) if fixed <= set(x)}


@given(hypergraphs_st())
def test_parse_render_round_trip(hg):
    assert parse_hypergraph(render_hypergraph(hg)) == hg
