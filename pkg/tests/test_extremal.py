import pytest

from rainbowlab import (
    BudgetExceededError,
    Coloring,
    canonical_colorings,
    ext_exact,
    ext_formula_regular,
    find_rainbow_matching,
    make_circulant_regular_bipartite,
    make_complete_bipartite,
    make_cycle,
    make_path,
    max_matching_size,
    rb_bounds_regular,
    rb_exact,
    rb_formula_complete_bipartite,
    rb_formula_cycle,
    rb_formula_path,
    rb_formula_regular,
)
from helpers import brute_ext, brute_max_matching_size, is_disjoint_edge_set


# --- ext ---------------------------------------------------------------------


def test_ext_regular_example():
    g = make_circulant_regular_bipartite(4, 3)
    assert ext_exact(g, 2).value == 3


def test_ext_m1_is_zero():
    assert ext_exact(make_path(5), 1).value == 0


def test_ext_path_matches_brute_force():
    g = make_path(4)
    result = ext_exact(g, 2)
    assert result.value == brute_ext(g, 2) == 2
    assert result.method == "cover_based"


def test_ext_witness_invariants():
    for g, m in [
        (make_path(6), 3),
        (make_cycle(7), 2),
        (make_circulant_regular_bipartite(4, 2), 3),
    ]:
        result = ext_exact(g, m)
        assert len(result.witness_edges) == result.value
        sub_edges = sorted(result.witness_edges)
        # no m pairwise-disjoint edges inside the witness
        from itertools import combinations

        assert not any(
            is_disjoint_edge_set(g, combo) for combo in combinations(sub_edges, m)
        )


def test_ext_odd_cycle_uses_branch_and_bound():
    g = make_cycle(5)
    result = ext_exact(g, 2)
    assert result.method == "branch_and_bound"
    assert result.value == brute_ext(g, 2)


def test_ext_odd_cycles_match_brute_force():
    for n in (3, 5, 7):
        g = make_cycle(n)
        for m in range(2, n // 2 + 1):
            assert ext_exact(g, m).value == brute_ext(g, m), (n, m)


def test_ext_rejects_m_zero_and_big_non_bipartite():
    with pytest.raises(ValueError):
        ext_exact(make_path(3), 0)
    big = make_cycle(19)
    with pytest.raises(BudgetExceededError):
        ext_exact(big, 2)


def test_ext_formula_values():
    assert ext_formula_regular(5, 3, 3) == 6
    assert ext_formula_regular(4, 4, 2) == 4
    assert ext_formula_regular(3, 1, 2) == 1


def test_ext_formula_names_violated_constraint():
    with pytest.raises(ValueError, match="k <= n"):
        ext_formula_regular(3, 4, 2)
    with pytest.raises(ValueError, match="2 <= m <= n"):
        ext_formula_regular(5, 3, 7)


def test_ext_consistency_small_sweep():
    for n in range(3, 6):
        for k in range(2, n + 1):
            g = make_circulant_regular_bipartite(n, k)
            for m in range(2, n + 1):
                assert ext_exact(g, m).value == k * (m - 1), (n, k, m)


# --- rb exact -----------------------------------------------------------------


def test_rb_path_values():
    assert rb_exact(make_path(4), 2).rb_value == 2
    assert rb_exact(make_path(3), 2).rb_value == 3


def test_rb_complete_bipartite():
    assert rb_exact(make_complete_bipartite(3), 3).rb_value == 5


def test_rb_four_cycle_disagrees_with_formula():
    result = rb_exact(make_cycle(4), 2)
    assert result.rb_value == 3
    assert rb_formula_cycle(4, 2).value == 2
    # the certifying coloring: opposite edges share a color
    assert find_rainbow_matching(make_cycle(4), Coloring((1, 2, 1, 2), 2), 2) is None


def test_rb_result_coherence():
    result = rb_exact(make_path(6), 3)
    assert result.rb_value == result.f_value + 1
    coloring = result.extremal_coloring
    assert coloring.color_count == result.f_value
    assert find_rainbow_matching(make_path(6), coloring, 3) is None


def test_every_coloring_at_rb_colors_has_rainbow():
    for g, m in [(make_path(4), 2), (make_cycle(4), 2), (make_cycle(5), 2)]:
        rb = rb_exact(g, m).rb_value
        for c in canonical_colorings(g.edge_count):
            if c.color_count == rb:
                assert find_rainbow_matching(g, c, m) is not None, (g.edges, c)


def test_f_at_most_ext():
    for g, m in [
        (make_path(7), 3),
        (make_cycle(6), 2),
        (make_circulant_regular_bipartite(4, 3), 3),
    ]:
        assert rb_exact(g, m).f_value <= ext_exact(g, m).value


def test_rb_sandwich_regular():
    for n, k in [(3, 2), (4, 3), (4, 4), (5, 2), (5, 3)]:
        g = make_circulant_regular_bipartite(n, k)
        for m in (2, 3):
            if m > n:
                continue
            lo, hi = rb_bounds_regular(n, k, m)
            assert lo <= rb_exact(g, m).rb_value <= hi, (n, k, m)


def test_rb_budget_refusal_and_override():
    g = make_circulant_regular_bipartite(5, 4)  # 20 edges
    with pytest.raises(BudgetExceededError):
        rb_exact(g, 2)
    assert rb_exact(g, 2, edge_budget=20).rb_value == 2


def test_rb_rejects_m_above_matching_number():
    with pytest.raises(ValueError):
        rb_exact(make_path(4), 3)


def test_rb_m1_special_case():
    result = rb_exact(make_path(3), 1)
    assert (result.f_value, result.rb_value) == (0, 1)
    assert result.extremal_coloring is None


def test_rb_timeout_is_budget_refusal():
    with pytest.raises(BudgetExceededError):
        rb_exact(make_complete_bipartite(4), 4, timeout_ms=0.0)


def test_rb_workers_match_sequential():
    g = make_cycle(7)
    a = rb_exact(g, 3, workers=1)
    b = rb_exact(g, 3, workers=3)
    assert (a.f_value, a.rb_value, a.extremal_coloring) == (
        b.f_value,
        b.rb_value,
        b.extremal_coloring,
    )


def test_rb_extremal_coloring_is_lex_minimal():
    # every canonical coloring strictly below the witness in lex order either
    # uses fewer colors or contains a rainbow matching
    g = make_path(5)
    m = 2
    result = rb_exact(g, m)
    witness = result.extremal_coloring.assignment
    for c in canonical_colorings(5):
        if c.assignment >= witness:
            continue
        assert (
            c.color_count < result.f_value
            or find_rainbow_matching(g, c, m) is not None
        )


# --- closed forms ---------------------------------------------------------------


def test_bounds_values():
    assert rb_bounds_regular(4, 3, 2) == (2, 4)
    assert rb_bounds_regular(5, 3, 3) == (5, 7)
    assert rb_bounds_regular(6, 2, 2) == (2, 3)


def test_bounds_reject_m1_with_pointer():
    with pytest.raises(ValueError, match="rb\\(G, one edge\\) = 1"):
        rb_bounds_regular(4, 3, 1)


def test_regular_formula():
    assert rb_formula_regular(4, 3, 2) == 2
    assert rb_formula_regular(7, 3, 3) == 5
    assert rb_formula_regular(6, 3, 3) is None  # n = 3(m-1) boundary
    assert rb_formula_regular(9, 2, 2) is None  # k below 3


def test_path_formula():
    assert rb_formula_path(6, 3) == 5
    assert rb_formula_path(7, 3) == 4
    assert rb_formula_path(4, 2) == 2
    with pytest.raises(ValueError):
        rb_formula_path(4, 3)


def test_cycle_formula():
    assert rb_formula_cycle(6, 3) == (5, False)
    assert rb_formula_cycle(8, 3) == (4, False)
    disputed = rb_formula_cycle(4, 2)
    assert disputed.value == 2 and disputed.disputed
    with pytest.raises(ValueError):
        rb_formula_cycle(5, 3)


def test_complete_bipartite_formula():
    assert rb_formula_complete_bipartite(3, 2) == 2
    assert rb_formula_complete_bipartite(3, 3) == 5
    assert rb_formula_complete_bipartite(4, 4) == 10
    with pytest.raises(ValueError, match="n >= 3"):
        rb_formula_complete_bipartite(2, 2)


def test_matching_number_guard_uses_exact_value():
    # rb_exact's matching-number precondition agrees with brute force
    for g in [make_path(5), make_cycle(5), make_cycle(6)]:
        assert brute_max_matching_size(g) == max_matching_size(g)
