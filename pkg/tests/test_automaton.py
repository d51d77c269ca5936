import random

import pytest

from wheelerkit import (
    AlphabetMismatch,
    Automaton,
    FormatError,
    NotDeterministic,
    OrderedAlphabet,
    WordNotReadable,
    accepts,
    determinize,
    language_equal,
    minimize,
    parse_automaton,
    right_context_equal,
    run,
    serialize_automaton,
    to_dot,
    trim_basic,
    word,
)
from conftest import make
from corpus import all_words, random_trimmed_nfa


def test_parse_wdfa6_fixture(fixtures_dir, wdfa6):
    text = (fixtures_dir / "wdfa6.aut").read_text()
    a = parse_automaton(text)
    assert a == wdfa6
    assert a.n == 6 and len(a.edges) == 8
    assert a.deterministic


def test_parse_single_state_epsilon_language():
    a = parse_automaton("alphabet a\nstates 1\ninitial 0\nfinal 0\n")
    assert a.n == 1 and a.finals == frozenset({0}) and not a.edges
    assert accepts(a, ()) and not accepts(a, ("a",))


@pytest.mark.parametrize("text,fragment", [
    ("alphabet a\nstates 1\ninitial 0\nfinal 0\nedge 0 b 0\n", "symbol"),
    ("alphabet a\nstates 1\ninitial 0\nfinal 0\nedge 0 a 3\n", "state"),
    ("alphabet a\nstates 1\ninitial 0\nfinal 0\nedge 0 a 0\nedge 0 a 0\n", "duplicate"),
    ("alphabet a\nstates 1\nfinal 0\n", "initial"),
    ("states 1\ninitial 0\nfinal 0\n", "alphabet"),
    ("alphabet a a\nstates 1\ninitial 0\nfinal 0\n", "duplicate"),
], ids=["bad-symbol", "bad-state", "dup-edge", "missing-initial",
        "missing-alphabet", "dup-symbol"])
def test_parse_rejections(text, fragment):
    with pytest.raises(FormatError) as err:
        parse_automaton(text)
    assert fragment in str(err.value)


def test_roundtrip_fixtures(wdfa6, mind4_nonwheeler):
    for a in (wdfa6, mind4_nonwheeler):
        assert parse_automaton(serialize_automaton(a)) == a


def test_roundtrip_random_trimmed_nfas():
    rng = random.Random(5)
    for _ in range(25):
        a = random_trimmed_nfa(rng, max_n=50, density=0.05)
        assert parse_automaton(serialize_automaton(a)) == a


def test_trim_keeps_basic_automaton(wdfa6):
    assert trim_basic(wdfa6) == wdfa6


def test_trim_drops_unreachable_final():
    a = make(("a",), 3, 0, {1, 2}, {(0, "a", 1)})
    t = trim_basic(a)
    assert t.n == 2 and t.finals == frozenset({1})
    assert language_equal(a, t)


def test_trim_to_empty_language():
    a = make(("a",), 2, 0, {1}, set())  # the final state is unreachable
    t = trim_basic(a)
    assert t.n == 1 and not t.finals and not t.edges


def test_run(wdfa6, mind4_nonwheeler):
    assert run(wdfa6, word("d c f")) == frozenset({5})
    assert run(wdfa6, ()) == frozenset({0})
    assert run(mind4_nonwheeler, word("b a")) == frozenset()


def test_run_from_state_set(wdfa6):
    assert run(wdfa6, ("c",), start={1, 4}) == frozenset({2, 3})


def test_determinize_deterministic_input_is_isomorphic(wdfa6):
    d = determinize(wdfa6)
    assert d.n == wdfa6.n and d.deterministic
    assert language_equal(d, wdfa6)


def test_determinize_mod2_branches_brute_force():
    # two nondeterministic branches, both accepting an even number of a's
    a = make(("a",), 3, 0, {0}, {(0, "a", 1), (0, "a", 2), (1, "a", 0), (2, "a", 0)})
    d = determinize(a)
    assert d.deterministic
    for w in all_words(("a",), 8):
        assert accepts(d, w) == (len(w) % 2 == 0)


def test_determinize_preserves_language_randomized():
    rng = random.Random(11)
    for _ in range(40):
        a = random_trimmed_nfa(rng, max_n=6, max_sigma=3)
        d = determinize(a)
        assert d.deterministic
        for w in all_words(a.alphabet.symbols, 8):
            assert accepts(a, w) == accepts(d, w)


def test_minimize_wdfa6_gives_four_state_min_dfa(wdfa6, mind4_wheeler):
    m = minimize(wdfa6)
    assert m.n == 4
    assert m == minimize(mind4_wheeler)


def test_minimize_is_idempotent_and_shrinks(mind4_nonwheeler):
    m = minimize(mind4_nonwheeler)
    assert m == minimize(m)
    assert m.n <= mind4_nonwheeler.n


def test_minimize_random_dfas_language_preserving():
    rng = random.Random(23)
    for _ in range(20):
        a = determinize(random_trimmed_nfa(rng, max_n=6, max_sigma=2))
        m = minimize(a)
        assert m.n <= a.n
        for w in all_words(a.alphabet.symbols, 9):
            assert accepts(a, w) == accepts(m, w)


def test_minimize_rejects_nfa():
    a = make(("a",), 2, 0, {1}, {(0, "a", 0), (0, "a", 1)})
    with pytest.raises(NotDeterministic):
        minimize(a)


def test_language_equal(wdfa6, mind4_wheeler):
    assert language_equal(wdfa6, mind4_wheeler)
    assert language_equal(wdfa6, wdfa6)
    other_symbols = make(("a", "b", "c", "f"), 4, 0, {1, 3},
                         {(0, "a", 1), (1, "c", 1), (0, "b", 2), (2, "c", 2),
                          (2, "f", 3)})
    with pytest.raises(AlphabetMismatch):
        language_equal(mind4_wheeler, other_symbols)


def test_language_equal_separating_word(mind4_wheeler, mind4_nonwheeler):
    shared = OrderedAlphabet(("a", "b", "c", "d", "f"))
    wa = Automaton(shared, mind4_wheeler.n, 0, mind4_wheeler.finals, mind4_wheeler.edges)
    wb = Automaton(shared, mind4_nonwheeler.n, 0, mind4_nonwheeler.finals,
                   mind4_nonwheeler.edges)
    assert not language_equal(wa, wb)
    assert accepts(wb, word("b c f")) and not accepts(wa, word("b c f"))


def test_readable_words_are_prefixes_of_the_language():
    rng = random.Random(31)
    for _ in range(15):
        a = random_trimmed_nfa(rng, max_n=5, max_sigma=2)
        for w in all_words(a.alphabet.symbols, 5):
            reached = run(a, w)
            if not reached:
                continue
            # extend along co-reachability to an accepted word
            extended = False
            for tail in all_words(a.alphabet.symbols, a.n):
                if run(a, tail, start=reached) & a.finals:
                    extended = True
                    break
            assert extended, (serialize_automaton(a), w)


def test_right_context_equal(mind4_nonwheeler, mind4_wheeler):
    mb = minimize(mind4_nonwheeler)
    assert not right_context_equal(mb, ("a",), ("b",))
    assert right_context_equal(mb, ("a",), ("a",))
    ma = minimize(mind4_wheeler)
    assert right_context_equal(ma, ("a",), word("a c"))
    with pytest.raises(WordNotReadable):
        right_context_equal(ma, word("a f"), ("a",))


def test_to_dot_mentions_every_state_and_edge(wdfa6):
    dot = to_dot(wdfa6)
    assert dot.count("doublecircle") == len(wdfa6.finals)
    assert '0 -> 1 [label="a"]' in dot
