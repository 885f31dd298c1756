"""Monochromatic-structure searches: frozen threshold oracles, witness
validity under the independent checkers, kernel backend agreement, and
exhaustiveness of proven-absent answers."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ufw.errors import BudgetExhausted
from ufw.largeness import (
    EdgeColoring,
    IntervalColoring,
    SearchBudget,
    WordColoring,
    coloring_from_index,
    edge_list,
    find_mono_ap,
    find_mono_clique,
    find_mono_fs,
    find_mono_line,
    finite_combinations,
    first_uncovered_coloring,
    fs_multiple_window,
    ipstar_probe,
    partition_harness,
    pattern_configs,
    threshold_number,
    universal_check,
)
from ufw.largeness import checkers
from ufw.largeness.kernels import _compiled


# --- finite combinations ---------------------------------------------------


def test_fc_sums_oracle():
    assert finite_combinations((10, 100)) == [10, 100, 110]


def test_fc_sums_powers_of_ten_have_binary_digits():
    for value in finite_combinations((10, 100, 1000, 10000)):
        assert set(str(value)) <= {"0", "1"}


def test_fc_unions_oracle():
    out = finite_combinations([{0}, {1}], "unions")
    assert out == [frozenset({0}), frozenset({1}), frozenset({0, 1})]


def test_fc_products():
    assert finite_combinations((2, 3), "products") == [2, 3, 6]


@given(st.integers(1, 8))
@settings(max_examples=20, deadline=None)
def test_fc_powers_of_two_distinct(k):
    xs = [2**i for i in range(k)]
    assert len(finite_combinations(xs)) == 2**k - 1


# --- finite-sums search ----------------------------------------------------


def test_fs_witness_on_constant_coloring():
    c = IntervalColoring(8, (0,) * 8)
    w = find_mono_fs(c, 3)
    assert w.generators == (1, 2, 4)
    assert set(w.sums) == set(range(1, 8))
    assert checkers.check_fs_witness(c.colors, w.generators, w.color, w.sums)


def test_fs_proven_absent_small_split():
    c = IntervalColoring(4, (0, 0, 1, 1))
    assert find_mono_fs(c, 2) is None


def test_fs_every_2coloring_of_5_has_witness_with_repeats():
    for idx in range(2**5):
        c = IntervalColoring(5, tuple((idx >> i) & 1 for i in range(5)), r=2)
        w = find_mono_fs(c, 2, distinct=False)
        assert w is not None
        assert checkers.check_fs_witness(c.colors, w.generators, w.color, distinct=False)


def test_fs_strict_counterexample_at_5():
    assert find_mono_fs(IntervalColoring(5, (0, 1, 0, 1, 0)), 2) is None


def test_fs_budget_exhaustion_distinguished():
    c = IntervalColoring(12, tuple(i % 2 for i in range(12)))
    with pytest.raises(BudgetExhausted) as err:
        find_mono_fs(c, 4, SearchBudget(node_cap=3))
    assert err.value.nodes is not None


def test_fs_proven_absent_stable_under_bigger_budget():
    c = IntervalColoring(6, (0, 1, 1, 0, 1, 0))
    small = find_mono_fs(c, 3, SearchBudget(node_cap=10**5))
    big = find_mono_fs(c, 3, SearchBudget(node_cap=2 * 10**5))
    assert small is None and big is None


@given(st.integers(0, 2**10 - 1))
@settings(max_examples=100, deadline=None)
def test_fs_found_witnesses_validate(bits):
    c = IntervalColoring(10, tuple((bits >> i) & 1 for i in range(10)), r=2)
    w = find_mono_fs(c, 2)
    if w is not None:
        assert checkers.check_fs_witness(c.colors, w.generators, w.color, w.sums)


# --- arithmetic progressions -----------------------------------------------


def test_ap_constant_coloring():
    w = find_mono_ap(IntervalColoring(9, (0,) * 9), 3)
    assert (w.start, w.step, w.color) == (1, 1, 0)


def test_ap_rrbbrrbb_avoids():
    assert find_mono_ap(IntervalColoring(8, (0, 0, 1, 1, 0, 0, 1, 1)), 3) is None


def test_ap_every_2coloring_of_9():
    for bits in range(2**9):
        c = IntervalColoring(9, tuple((bits >> i) & 1 for i in range(9)), r=2)
        w = find_mono_ap(c, 3)
        assert w is not None
        assert checkers.check_ap_witness(c.colors, w.start, w.step, 3, w.color)


# --- combinatorial lines ---------------------------------------------------


def test_line_absent_for_split_singletons():
    assert find_mono_line(WordColoring(2, 1, (0, 1))) is None


def test_line_every_2coloring_of_2cube():
    for bits in range(2**4):
        c = WordColoring(2, 2, tuple((bits >> i) & 1 for i in range(4)), r=2)
        w = find_mono_line(c)
        assert w is not None
        assert checkers.check_line_witness(c.colors, 2, w.word, w.color)


def test_line_constant_coloring_all_variable():
    w = find_mono_line(WordColoring(2, 3, (0,) * 8))
    assert any(x is None for x in w.word)


# --- cliques ---------------------------------------------------------------


def test_pentagon_pentagram_has_no_mono_triangle():
    edges = edge_list(5, 2)
    pent = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
    colors = tuple(0 if e in pent else 1 for e in edges)
    assert find_mono_clique(EdgeColoring(5, 2, colors), 3) is None
    assert checkers.check_avoiding_coloring(("clique", 2, 3), 2, colors)


def test_constant_k4():
    subset, color = find_mono_clique(EdgeColoring(4, 2, (0,) * 6), 4)
    assert subset == (0, 1, 2, 3)
    assert checkers.check_clique_witness((0,) * 6, 4, 2, subset, color)


def test_every_2coloring_of_k6_has_mono_triangle():
    covered, avoiding = universal_check(("clique", 2, 3), 2, 6)
    assert covered and avoiding is None


# --- thresholds ------------------------------------------------------------


def test_threshold_oracles():
    assert threshold_number(("clique", 2, 3), 2, 8).value == 6
    assert threshold_number(("ap", 3), 2, 12).value == 9
    assert threshold_number(("fs", 2), 2, 8).value == 5


def test_threshold_failure_colorings_recheck():
    for pattern in (("clique", 2, 3), ("ap", 3), ("fs", 2)):
        res = threshold_number(pattern, 2, 10)
        assert res.value is not None
        assert checkers.check_avoiding_coloring(pattern, 2, res.failure_coloring)


def test_threshold_unknown_at_cap():
    res = threshold_number(("ap", 3), 2, 5)
    assert res.value is None and res.cap == 5
    assert checkers.check_avoiding_coloring(("ap", 3), 2, res.failure_coloring)


def test_threshold_monotone_in_colors():
    two = threshold_number(("ap", 3), 2, 12).value
    one = threshold_number(("ap", 3), 1, 12).value
    assert one <= two


def test_threshold_monotone_in_pattern_size():
    m3 = threshold_number(("ap", 3), 2, 12).value
    m4 = threshold_number(("ap", 4), 2, 12).value
    assert m4 is None or m3 <= m4


# --- kernels ---------------------------------------------------------------


def test_compiled_kernel_available():
    assert _compiled is not None


@pytest.mark.parametrize(
    "pattern,r,size",
    [
        (("ap", 3), 2, 8),
        (("ap", 3), 2, 9),
        (("ap", 3), 3, 6),
        (("fs", 2), 2, 4),
        (("fs", 2), 2, 5),
        (("clique", 2, 3), 2, 5),
        (("clique", 2, 3), 2, 6),
        (("line", 2), 2, 2),
        (("line", 2), 3, 2),
    ],
)
def test_backends_agree(pattern, r, size):
    domain, configs = pattern_configs(pattern, size)
    compiled = first_uncovered_coloring(domain, r, configs, backend="compiled")
    python = first_uncovered_coloring(domain, r, configs, backend="python")
    assert compiled == python


def test_uncovered_index_decodes_to_avoiding_coloring():
    domain, configs = pattern_configs(("ap", 3), 8)
    idx = first_uncovered_coloring(domain, 2, configs)
    colors = coloring_from_index(idx, domain, 2)
    assert checkers.check_avoiding_coloring(("ap", 3), 2, colors)
    assert colors[0] == 0  # first position pinned by symmetry reduction


def test_empty_config_list():
    assert first_uncovered_coloring(3, 2, [], backend="python") == 0
    assert first_uncovered_coloring(3, 2, [], backend="compiled") == 0


# --- harness, probes, pigeonhole -------------------------------------------


def test_partition_harness_even_part_has_ap():
    def has_ap3(part):
        colors = tuple(0 if i in part else 1 for i in range(1, 10))
        w = find_mono_ap(IntervalColoring(9, colors), 3)
        return w is not None and w.color == 0

    out = partition_harness(
        range(1, 10), [set(range(1, 10, 2)), set(range(2, 10, 2))], has_ap3
    )
    assert out["regular_here"]


def test_partition_harness_single_part():
    out = partition_harness({1, 2}, [{1, 2}], lambda p: 1 in p)
    assert out == {"regular_here": True, "surviving_part": 0}


def test_partition_harness_rejects_bad_partition():
    with pytest.raises(ValueError):
        partition_harness({1, 2}, [{1}, {1, 2}], bool)


def test_ipstar_multiples_of_three():
    assert ipstar_probe(set(range(3, 31, 3)), 30, 3)["holds"]


def test_ipstar_counterexamples_lex_least():
    assert ipstar_probe({1}, 10, 2) == {"holds": False, "counterexample": (2, 3)}
    assert ipstar_probe(set(range(1, 11, 2)), 10, 2)["counterexample"] == (2, 4)


def test_ipstar_generator_scope_differs():
    # {10} misses FS(1,2)={1,2,3} under either scope, but generator scope
    # admits tuples whose sums exceed the interval
    sums = ipstar_probe({9, 10}, 6, 2, scope="sums")
    gens = ipstar_probe({9, 10}, 6, 2, scope="generators")
    assert not sums["holds"] and not gens["holds"]
    assert ipstar_probe(set(range(1, 7)), 6, 2, scope="sums")["holds"]


@given(st.lists(st.integers(1, 10**6), min_size=1, max_size=12))
@settings(max_examples=300, deadline=None)
def test_fs_contains_multiple_of_length(xs):
    i, j = fs_multiple_window(xs)
    assert 0 <= i < j <= len(xs)
    assert sum(xs[i:j]) % len(xs) == 0
