from palrich.core import Alphabet, Antimorphism, Word, apply_antimorphism
from palrich.complexity import complexity_table
from palrich.rauzy import (
    build_graph,
    check_proposition1,
    simple_paths,
    special_factors,
    special_positions,
)
from palrich.generators import fibonacci_source, periodic_source, thue_morse_source
from conftest import w


def test_special_factors_fibonacci(tr, ab):
    fib = fibonacci_source().prefix(2000)
    spec = special_factors(fib, 2)
    assert {x.text for x in spec.left_special} == {"ab"}
    assert {x.text for x in spec.right_special} == {"ba"}
    assert spec.bispecial == frozenset()
    spec1 = special_factors(fib, 1)
    assert {x.text for x in spec1.left_special} == {"a"}
    assert {x.text for x in spec1.right_special} == {"a"}
    assert {x.text for x in spec1.bispecial} == {"a"}


def test_simple_paths_fibonacci(ab):
    fib = fibonacci_source().prefix(2000)
    assert {p.word.text for p in simple_paths(fib, 1)} == {"aa", "aba"}
    paths = simple_paths(fib, 2)
    assert {p.word.text for p in paths} == {"aba", "baab", "bab"}
    for p in paths:
        assert p.begin.text in {"ab", "ba"}
        assert p.end.text in {"ab", "ba"}


def test_special_positions_sorted(ab):
    fib = fibonacci_source().prefix(300)
    pos = special_positions(fib, 2)
    assert pos == sorted(pos)
    sym = fib.symbols
    assert all(sym[i:i + 2] in {(0, 1), (1, 0)} for i in pos)


def test_fibonacci_graph_n1_is_rich_shape(tr, ab):
    fib = fibonacci_source().prefix(2000)
    g = build_graph(tr, fib, 1)
    assert len(g.vertices) == 1
    assert len(g.edges) == 2
    assert all(e.is_loop for e in g.edges)
    res = check_proposition1(g, tr)
    assert res.loops_palindromic and res.tree_after_loop_removal
    assert res.holds


def test_thue_morse_graph_matches_gap(tr, ab):
    tm = thue_morse_source().prefix(4000)
    table = complexity_table(tr, tm, 6)
    for n in range(1, 7):
        g = build_graph(tr, tm, n)
        assert check_proposition1(g, tr).holds == (table.t(n) == 0)
    # the first failing length fails through the tree condition
    res3 = check_proposition1(build_graph(tr, tm, 3), tr)
    assert res3.loops_palindromic
    assert not res3.tree_after_loop_removal


def test_graph_vertices_closed_under_theta(swap, ab):
    word = periodic_source(w(ab, "abab")).prefix(400)
    g = build_graph(swap, word, 2)
    pair = swap.pairing
    for v in g.vertices:
        x, y = v
        assert tuple(pair[s] for s in reversed(x)) == y or \
            tuple(pair[s] for s in reversed(x)) == x


def test_edge_words_are_theta_pairs(tr, ab):
    tm = thue_morse_source().prefix(1500)
    g = build_graph(tr, tm, 3)
    for e in g.edges:
        x, y = e.words
        img = apply_antimorphism(tr, Word(ab, x)).symbols
        assert img in (x, y)


def test_empty_graph_passes(tr, ab):
    # a long unary run has no special factors at length 2
    g = build_graph(tr, w(ab, "a" * 50), 2)
    assert not g.vertices and not g.edges
    assert check_proposition1(g, tr).holds


def test_dot_output_deterministic(tr, ab):
    fib = fibonacci_source().prefix(800)
    g1 = build_graph(tr, fib, 2)
    g2 = build_graph(tr, fib, 2)
    dot = g1.to_dot()
    assert dot == g2.to_dot()
    assert dot.startswith("graph rauzy {")
    assert dot.rstrip().endswith("}")
    assert 'label="ab|ba"' in dot


def test_multitoken_labels_use_spaces():
    alpha = Alphabet(("[0]", "[1]"))
    th = Antimorphism.reversal(alpha)
    word = Word(alpha, (0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0))
    dot = build_graph(th, word, 1).to_dot()
    assert "[0] [1]" in dot or "[1] [0]" in dot
