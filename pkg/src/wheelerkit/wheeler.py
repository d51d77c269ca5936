"""Deciding whether an automaton is Wheeler under its fixed alphabet order.

A Wheeler order is a total order on states with the initial state as minimum
(and no edges into it) such that, for any two edges (u1,a1,v1), (u2,a2,v2):

  (i)  a1 < a2                 implies  v1 < v2
  (ii) a1 = a2 and u1 < u2     implies  v1 <= v2

For DFAs the order, when it exists, is unique: sort states by the
co-lexicographic order of any word entering them.  For NFAs existence is
decided by backtracking over the orderings inside each in-label block.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .alphabet import INITIAL_MARK
from .errors import NotDeterministic, SearchBudgetExceeded, WheelerkitError

INITIAL_IN_EDGE = "initial-has-in-edge"
INPUT_INCONSISTENT = "input-inconsistent"
CONDITION_I = "condition-i"
CONDITION_II = "condition-ii"
ORDER_CONTRADICTION = "order-contradiction"


@dataclass(frozen=True)
class WheelerOrder:
    """ranks[state id] = position in the order (initial state must get 0)."""

    ranks: tuple

    @staticmethod
    def from_sequence(states):
        ranks = [0] * len(states)
        for pos, q in enumerate(states):
            ranks[q] = pos
        return WheelerOrder(tuple(ranks))

    def sequence(self):
        return tuple(sorted(range(len(self.ranks)), key=lambda q: self.ranks[q]))


@dataclass(frozen=True)
class WheelerViolation:
    kind: str
    evidence: tuple  # the offending edges (or states) in a self-checkable form
    detail: str = ""

    def __str__(self):
        return f"{self.kind}: {self.detail}" if self.detail else self.kind


@dataclass(frozen=True)
class LambdaMap:
    """Per-state in-label; the initial state carries the reserved mark."""

    labels: tuple

    def __getitem__(self, q):
        return self.labels[q]


def input_consistency(a):
    """All in-edges of a state must share one label, and none may enter the
    initial state.  Returns the in-label map or the violation found first."""
    labels = [None] * a.n
    labels[a.initial] = INITIAL_MARK
    for q in range(a.n):
        for edge in a.in_edges[q]:
            if q == a.initial:
                return WheelerViolation(
                    INITIAL_IN_EDGE, (edge,),
                    f"edge {edge} enters the initial state")
            sym = edge[1]
            if labels[q] is None:
                labels[q] = sym
            elif labels[q] != sym:
                first = next(e for e in a.in_edges[q] if e[1] == labels[q])
                return WheelerViolation(
                    INPUT_INCONSISTENT, (first, edge),
                    f"state {q} has in-labels {labels[q]} and {sym}")
    return LambdaMap(tuple(labels))


def verify_wheeler(a, order):
    """Check a candidate order against the Wheeler conditions.

    Returns None when the order is valid, otherwise the first violation in a
    deterministic sweep.  Works for NFAs and DFAs alike.
    """
    ranks = order.ranks
    if len(ranks) != a.n or sorted(ranks) != list(range(a.n)):
        return WheelerViolation(
            ORDER_CONTRADICTION, tuple(ranks), "ranking is not a bijection onto 0..n-1")
    if ranks[a.initial] != 0:
        return WheelerViolation(
            ORDER_CONTRADICTION, (a.initial,), "the initial state is not the minimum")
    if a.in_edges[a.initial]:
        edge = a.in_edges[a.initial][0]
        return WheelerViolation(
            INITIAL_IN_EDGE, (edge,), f"edge {edge} enters the initial state")

    by_label = {}
    for e in a.edges:
        by_label.setdefault(e[1], []).append(e)

    # (i): all targets of an a-block must lie strictly below all targets of a
    # b-block when a < b; checking consecutive nonempty blocks suffices.
    prev_max = None
    for sym in a.alphabet.symbols:
        block = by_label.get(sym)
        if not block:
            continue
        lo = min(block, key=lambda e: ranks[e[2]])
        hi = max(block, key=lambda e: ranks[e[2]])
        if prev_max is not None and ranks[prev_max[2]] >= ranks[lo[2]]:
            return WheelerViolation(
                CONDITION_I, (prev_max, lo),
                f"{prev_max} does not precede {lo} despite the smaller label")
        prev_max = hi

    # (ii): within one label, targets may not decrease as sources increase.
    for sym in a.alphabet.symbols:
        block = by_label.get(sym)
        if not block:
            continue
        block.sort(key=lambda e: (ranks[e[0]], ranks[e[2]]))
        best = None  # edge with the largest target seen at a strictly smaller source
        i = 0
        while i < len(block):
            j = i
            while j < len(block) and block[j][0] == block[i][0]:
                j += 1
            group = block[i:j]
            if best is not None and ranks[best[2]] > ranks[group[0][2]]:
                return WheelerViolation(
                    CONDITION_II, (best, group[0]),
                    f"{best} and {group[0]} share label {sym} but cross the order")
            top = group[-1]
            if best is None or ranks[top[2]] > ranks[best[2]]:
                best = top
            i = j
    return None


def recheck_violation(a, violation, order=None):
    """Re-evaluate the named clause on the evidence alone; True means the
    violation is self-evident (the clause indeed fails on those edges)."""
    kind, ev = violation.kind, violation.evidence
    if kind == INITIAL_IN_EDGE:
        (edge,) = ev
        return edge in a.edges and edge[2] == a.initial
    if kind == INPUT_INCONSISTENT:
        e1, e2 = ev
        return e1 in a.edges and e2 in a.edges and e1[2] == e2[2] and e1[1] != e2[1]
    if kind == CONDITION_I:
        e1, e2 = ev
        pos = a.alphabet.position
        return (e1 in a.edges and e2 in a.edges
                and pos[e1[1]] < pos[e2[1]]
                and not order.ranks[e1[2]] < order.ranks[e2[2]])
    if kind == CONDITION_II:
        e1, e2 = ev
        r = order.ranks
        return (e1 in a.edges and e2 in a.edges and e1[1] == e2[1]
                and r[e1[0]] < r[e2[0]] and not r[e1[2]] <= r[e2[2]])
    if kind == ORDER_CONTRADICTION:
        return True
    return False


def shortest_entering_words(d):
    """One entering word per state: shortest, ties broken co-lexicographically.

    Any entering word represents its state for the order test, so the tie
    break only pins the output deterministically.  Words are settled when
    popped, not when pushed: a later predecessor at the same distance may
    enter through a smaller symbol.
    """
    key = d.alphabet.colex_key
    syms = d.alphabet.symbols
    best = {}
    heap = [(0, (), d.initial)]
    while heap and len(best) < d.n:
        _, kw, q = heapq.heappop(heap)
        if q in best:
            continue
        w = tuple(syms[i] for i in reversed(kw))
        best[q] = w
        for sym in syms:
            for t in d.out_map.get((q, sym), ()):
                if t not in best:
                    heapq.heappush(heap, (len(w) + 1, key(w + (sym,)), t))
    return best


def dfa_wheeler_order(d):
    """Wheeler order of a trimmed DFA, or the violation refuting every order.

    Sorts states by the co-lex order of one entering word each, then verifies;
    for a DFA this candidate is the only order that can work.
    """
    if not d.deterministic:
        raise NotDeterministic("dfa_wheeler_order wants a DFA")
    lam = input_consistency(d)
    if isinstance(lam, WheelerViolation):
        return lam
    entering = shortest_entering_words(d)
    if len(entering) != d.n:
        raise WheelerkitError("dfa_wheeler_order wants a trimmed automaton")
    key = d.alphabet.colex_key
    order = WheelerOrder.from_sequence(sorted(range(d.n), key=lambda q: key(entering[q])))
    violation = verify_wheeler(d, order)
    return violation if violation is not None else order


class _OrderSearch:
    """Backtracking over within-block state orders with constraint propagation.

    Blocks (states grouped by in-label) are already totally ordered by the
    alphabet, so condition (i) holds structurally; the search decides the
    relative order of same-block pairs.  Orienting u1 < u2 forces v1 < v2 for
    every pair of equally labeled edges with targets v1 != v2, and order
    relations are kept transitively closed inside each block.
    """

    def __init__(self, a, blocks, budget):
        self.a = a
        self.budget = budget
        self.nodes = 0
        self.block_of = {}
        for bi, states in enumerate(blocks):
            for q in states:
                self.block_of[q] = bi
        self.rel = {}  # (p, q) with p < q by id -> +1 (p first) / -1 (q first)
        self.pairs = []
        for states in blocks:
            for i in range(len(states)):
                for j in range(i + 1, len(states)):
                    self.pairs.append(tuple(sorted((states[i], states[j]))))
        self.peers = {}  # state -> same-block peers
        for states in blocks:
            for q in states:
                self.peers[q] = [p for p in states if p != q]
        # forced[(p, q)] = target pairs (v, w) that p-before-q pushes into v-before-w
        self.forced = {}
        out = a.out_map
        syms = sorted(set(e[1] for e in a.edges))
        for p in range(a.n):
            for q in range(a.n):
                if p == q:
                    continue
                fw = []
                for sym in syms:
                    for v in sorted(out.get((p, sym), ())):
                        for w in sorted(out.get((q, sym), ())):
                            if v != w:
                                fw.append((v, w))
                self.forced[(p, q)] = fw
        self.trail = []

    def before(self, p, q):
        """+1 if p is known to precede q, -1 if q precedes p, 0 if open."""
        bp, bq = self.block_of[p], self.block_of[q]
        if bp != bq:
            return 1 if bp < bq else -1
        a, b = (p, q) if p < q else (q, p)
        sign = self.rel.get((a, b), 0)
        return sign if (p, q) == (a, b) else -sign

    def orient(self, p, q):
        """Record p before q; propagate; False on contradiction."""
        stack = [(p, q)]
        while stack:
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded(f"order search passed {self.budget} nodes")
            x, y = stack.pop()
            cur = self.before(x, y)
            if cur == 1:
                continue
            if cur == -1:
                return False
            a, b = (x, y) if x < y else (y, x)
            self.rel[(a, b)] = 1 if (x, y) == (a, b) else -1
            self.trail.append((a, b))
            stack.extend(self.forced[(x, y)])
            for r in self.peers[x]:
                if r != y:
                    if self.before(r, x) == 1:
                        stack.append((r, y))
                    if self.before(y, r) == 1:
                        stack.append((x, r))
        return True

    def solve(self):
        mark = len(self.trail)
        pair = next((pq for pq in self.pairs if self.rel.get(pq, 0) == 0), None)
        if pair is None:
            return True
        for first, second in ((pair[0], pair[1]), (pair[1], pair[0])):
            if self.orient(first, second) and self.solve():
                return True
            while len(self.trail) > mark:
                del self.rel[self.trail.pop()]
        return False

    def extract_order(self):
        states = sorted(range(self.a.n),
                        key=lambda q: (self.block_of[q],
                                       sum(1 for p in self.peers[q]
                                           if self.before(p, q) == 1)))
        return WheelerOrder.from_sequence(states)


def nfa_wheeler_search(a, budget=10 ** 6):
    """Find some Wheeler order for an NFA, if one exists.

    Returns a WheelerOrder, or an input-consistency WheelerViolation, or None
    when the exhaustive search proves no order works.  Raises
    SearchBudgetExceeded when the node budget runs out first.
    """
    lam = input_consistency(a)
    if isinstance(lam, WheelerViolation):
        return lam
    label_rank = {INITIAL_MARK: -1}
    label_rank.update(a.alphabet.position)
    grouped = {}
    for q in range(a.n):
        grouped.setdefault(label_rank[lam[q]], []).append(q)
    blocks = [sorted(grouped[r]) for r in sorted(grouped)]

    search = _OrderSearch(a, blocks, budget)
    # seed with the implications of the already-fixed cross-block source pairs
    for (p, q), targets in sorted(search.forced.items()):
        if search.block_of[p] < search.block_of[q]:
            for (v, w) in targets:
                if not search.orient(v, w):
                    return None
    if not search.solve():
        return None
    order = search.extract_order()
    violation = verify_wheeler(a, order)
    if violation is not None:
        raise WheelerkitError(f"order search produced an invalid order: {violation}")
    return order


@dataclass(frozen=True)
class PathCoherenceCounterexample:
    interval: tuple  # states of the starting interval, in order
    word: tuple
    image: tuple  # states reached, in order

    def __str__(self):
        return (f"interval {self.interval} under {' '.join(self.word) or 'epsilon'} "
                f"gives non-interval {self.image}")


def path_coherence_check(a, order, maxlen):
    """Bounded check that every interval of states maps to an interval.

    Explores images of every rank interval under all words up to `maxlen`,
    pruning repeated reach sets; returns the first counterexample found.
    """
    ranks = order.ranks
    seq = order.sequence()

    def is_interval(states):
        if not states:
            return True
        rs = sorted(ranks[q] for q in states)
        return rs[-1] - rs[0] + 1 == len(rs)

    for lo in range(a.n):
        for hi in range(lo, a.n):
            start = frozenset(seq[lo:hi + 1])
            frontier = [(start, ())]
            seen = {start}
            while frontier:
                states, w = frontier.pop(0)
                if len(w) >= maxlen:
                    continue
                for sym in a.alphabet.symbols:
                    image = a.step(states, sym)
                    if not image:
                        continue
                    if not is_interval(image):
                        return PathCoherenceCounterexample(
                            tuple(sorted(start, key=lambda q: ranks[q])),
                            w + (sym,),
                            tuple(sorted(image, key=lambda q: ranks[q])))
                    if image not in seen:
                        seen.add(image)
                        frontier.append((image, w + (sym,)))
    return None
