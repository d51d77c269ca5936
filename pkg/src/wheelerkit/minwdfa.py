"""Minimum Wheeler DFA from a minimum DFA.

The states of the minimum WDFA are the classes of the convex, end-symbol
refinement of the Myhill-Nerode equivalence.  Every class has a member
shorter than n + n^2, so enumerating the readable words up to that depth,
sorting them co-lexicographically and scanning for run boundaries yields one
representative per class; transitions follow from where representative-plus-
symbol lands among the representatives.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .alphabet import INITIAL_MARK
from .automaton import Automaton, dfa_walk, language_equal, count_readable_words
from .errors import (
    ConstructionInconsistent,
    InfeasibleEnumeration,
    NotDeterministic,
    WheelerkitError,
)
from .wheeler import WheelerOrder, verify_wheeler

DEFAULT_WORD_CAP = 10 ** 7


def certifying_depth(n):
    """Enumeration depth that is guaranteed to expose every class."""
    return n + n * n


@dataclass(frozen=True)
class PrefixList:
    """All readable words up to the depth, strictly co-lex increasing."""

    words: tuple
    depth: int
    class_of: tuple  # index -> state of the minimum DFA reached
    last_sym: tuple  # index -> last symbol ("#" for the empty word)


@dataclass(frozen=True)
class Fingerprint:
    """One representative word per class, co-lex increasing."""

    representatives: tuple

    @property
    def classes(self):
        return len(self.representatives)


@dataclass(frozen=True)
class Wdfa:
    """A Wheeler DFA: automaton + its state order + the words the states stand for."""

    automaton: Automaton
    order: WheelerOrder
    representatives: tuple
    certified: bool


def enumerate_prefixes(min_dfa, depth, word_cap=DEFAULT_WORD_CAP):
    """Readable words of the minimum DFA up to `depth`, co-lex sorted.

    Walks only the paths of the automaton (readable words are exactly the
    prefixes of the language on a trimmed machine).  Raises
    InfeasibleEnumeration, without materializing anything, when a path count
    shows more than `word_cap` words.
    """
    if not min_dfa.deterministic:
        raise NotDeterministic("prefix enumeration wants a DFA")
    if depth < 0:
        raise WheelerkitError("depth must be non-negative")
    total = count_readable_words(min_dfa, depth)
    if total > word_cap:
        raise InfeasibleEnumeration(
            f"{total} readable words up to depth {depth} exceed the cap {word_cap}")

    items = [((), min_dfa.initial)]
    frontier = [((), min_dfa.initial)]
    for _ in range(depth):
        nxt = []
        for w, q in frontier:
            for sym in min_dfa.alphabet.symbols:
                t = min_dfa.dstep(q, sym)
                if t is not None:
                    nxt.append((w + (sym,), t))
        if not nxt:
            break
        frontier = nxt
        items.extend(nxt)

    key = min_dfa.alphabet.colex_key
    items.sort(key=lambda item: key(item[0]))
    return PrefixList(
        words=tuple(w for w, _ in items),
        depth=depth,
        class_of=tuple(q for _, q in items),
        last_sym=tuple(w[-1] if w else INITIAL_MARK for w, _ in items),
    )


def compute_fingerprint(min_dfa, prefixes):
    """Scan the sorted prefix list for runs of one class.

    A new run starts whenever the Myhill-Nerode class or the last symbol
    changes.  The representative of a run is its shortest word (ties broken
    co-lexicographically), which keeps representatives below the n + n^2
    length bound whenever the depth is certifying.
    """
    words, classes, lasts = prefixes.words, prefixes.class_of, prefixes.last_sym
    reps = []
    run_best = None
    for i in range(len(words)):
        if i > 0 and (classes[i] != classes[i - 1] or lasts[i] != lasts[i - 1]):
            reps.append(run_best)
            run_best = None
        if run_best is None or len(words[i]) < len(run_best):
            run_best = words[i]
    if run_best is not None:
        reps.append(run_best)
    return Fingerprint(tuple(reps))


def build_min_wdfa(min_dfa, depth=None, word_cap=DEFAULT_WORD_CAP):
    """Assemble the minimum WDFA for the language of a minimum DFA.

    With the default depth the construction is certifying: the result is
    verified Wheeler and language-equal to the input, and any inconsistency
    (raised as ConstructionInconsistent) proves the language is not Wheeler.
    A smaller explicit depth is diagnostic only.
    """
    n = min_dfa.n
    d = certifying_depth(n) if depth is None else depth
    certifying = d >= certifying_depth(n)
    prefixes = enumerate_prefixes(min_dfa, d, word_cap)
    fp = compute_fingerprint(min_dfa, prefixes)
    reps = fp.representatives
    m = len(reps)
    key = min_dfa.alphabet.colex_key
    keys = [key(r) for r in reps]
    rep_state = [dfa_walk(min_dfa, r) for r in reps]

    finals = frozenset(j for j in range(m) if rep_state[j] in min_dfa.finals)
    edges = set()
    for j, rep in enumerate(reps):
        for c in min_dfa.alphabet.symbols:
            probe_state = min_dfa.dstep(rep_state[j], c)
            if probe_state is None:
                continue  # rep . c is not readable: no c-edge out of this state
            probe = rep + (c,)
            pk = key(probe)
            pos = bisect.bisect_left(keys, pk)
            if pos < m and keys[pos] == pk:
                target = pos
            elif pos == 0:
                target = 0
            elif pos == m:
                target = m - 1
            else:
                s, s1 = pos - 1, pos
                eq_s = rep_state[s] == probe_state
                eq_s1 = rep_state[s1] == probe_state
                if eq_s and not eq_s1:
                    target = s
                elif eq_s1 and not eq_s:
                    target = s1
                elif not eq_s and not eq_s1:
                    raise ConstructionInconsistent(
                        "probe falls between two representatives of other classes",
                        word=rep, symbol=c)
                else:
                    last_s = reps[s][-1] if reps[s] else INITIAL_MARK
                    last_s1 = reps[s1][-1] if reps[s1] else INITIAL_MARK
                    if (last_s == c) == (last_s1 == c):
                        raise ConstructionInconsistent(
                            "end-symbol tie between enclosing representatives",
                            word=rep, symbol=c)
                    target = s if last_s == c else s1
            edges.add((j, c, target))

    automaton = Automaton(min_dfa.alphabet, m, 0, finals, frozenset(edges))
    order = WheelerOrder(tuple(range(m)))
    if certifying:
        violation = verify_wheeler(automaton, order)
        if violation is not None:
            raise ConstructionInconsistent(f"built automaton is not Wheeler: {violation}")
        if not language_equal(automaton, min_dfa):
            raise ConstructionInconsistent("built automaton changes the language")
    return Wdfa(automaton, order, reps, certifying)
