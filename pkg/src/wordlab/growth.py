"""Monomial-algebra growth via the subword graph, plus factor complexity.

A monomial algebra is presented by a finite set of forbidden factors;
its nonzero monomials are the words avoiding them all.  The subword
graph has the allowed words of length m as vertices (m one less than
the longest forbidden word) and overlap edges whose (m+1)-letter merge
is allowed; growth is exponential exactly when some vertex lies on two
distinct cycles, and otherwise polynomial with degree equal to the
most cycles any path through the cycle condensation can visit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import iv_log2
from .words import Alphabet, Word, format_word, parse_word


@dataclass(frozen=True)
class MonomialAlgebraSpec:
    alphabet: Alphabet
    forbidden: tuple[Word, ...]

    def __post_init__(self) -> None:
        for w in self.forbidden:
            if len(w) == 0:
                raise ValueError("the empty word cannot be forbidden")
            if w.alphabet != self.alphabet:
                raise ValueError("forbidden word over the wrong alphabet")

    @staticmethod
    def of(alphabet: Alphabet, forbidden: "list[Word] | tuple[Word, ...]") -> "MonomialAlgebraSpec":
        """Normalize: drop any forbidden word containing another as a factor."""
        kept: list[Word] = []
        for w in sorted({f.letters for f in forbidden}, key=lambda t: (len(t), t)):
            if not any(_is_factor(k.letters, w) for k in kept):
                kept.append(Word(w, alphabet))
        return MonomialAlgebraSpec(alphabet, tuple(kept))

    def allows(self, letters: tuple[int, ...]) -> bool:
        return not any(_is_factor(f.letters, letters) for f in self.forbidden)


def _is_factor(needle: tuple[int, ...], hay: tuple[int, ...]) -> bool:
    if len(needle) > len(hay):
        return False
    return any(
        hay[i : i + len(needle)] == needle for i in range(len(hay) - len(needle) + 1)
    )


@dataclass(frozen=True)
class SubwordGraph:
    window: int
    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]  # indices into vertices

    def successors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.vertices]
        for a, b in self.edges:
            out[a].append(b)
        return out


def subword_graph(spec: MonomialAlgebraSpec) -> SubwordGraph:
    m = max((len(f) for f in spec.forbidden), default=2) - 1
    m = max(m, 1)
    verts = [
        ls
        for ls in itertools.product(spec.alphabet.letters(), repeat=m)
        if spec.allows(ls)
    ]
    index = {ls: i for i, ls in enumerate(verts)}
    edges = []
    for ls in verts:
        for x in spec.alphabet.letters():
            merged = ls + (x,)
            if spec.allows(merged):
                edges.append((index[ls], index[merged[1:]]))
    return SubwordGraph(m, tuple(verts), tuple(edges))


def count_words(spec: MonomialAlgebraSpec, n: int) -> list[int]:
    """Allowed words per length 0..n, by transfer over the subword graph."""
    g = subword_graph(spec)
    m = g.window
    counts = [0] * (n + 1)
    counts[0] = 1
    for k in range(1, min(m, n) + 1):
        counts[k] = sum(
            1
            for ls in itertools.product(spec.alphabet.letters(), repeat=k)
            if spec.allows(ls)
        )
    if n >= m:
        succ = g.successors()
        vec = [1] * len(g.vertices)
        counts[m] = len(g.vertices)
        for k in range(m + 1, n + 1):
            nxt = [0] * len(g.vertices)
            for a in range(len(g.vertices)):
                for b in succ[a]:
                    nxt[b] += vec[a]
            vec = nxt
            counts[k] = sum(vec)
    return counts


def growth_function(spec: MonomialAlgebraSpec, n: int, cap: int = 10_000) -> list[int]:
    """Cumulative counts V(0..n): words of length at most k, empty word included."""
    if n > cap:
        raise ValueError(f"growth cap {cap} exceeded")
    counts = count_words(spec, n)
    out = []
    total = 0
    for c in counts:
        total += c
        out.append(total)
    return out


def count_words_direct(spec: MonomialAlgebraSpec, n: int) -> list[int]:
    """Independent enumeration used to cross-check the transfer counts."""
    counts = [1] + [0] * n
    frontier = [()]
    for k in range(1, n + 1):
        nxt = []
        for ls in frontier:
            for x in spec.alphabet.letters():
                cand = ls + (x,)
                if spec.allows(cand):
                    nxt.append(cand)
        counts[k] = len(nxt)
        frontier = nxt
    return counts


@dataclass(frozen=True)
class GrowthClass:
    kind: str  # "exponential" | "polynomial"
    degree: int | None  # GK dimension for polynomial growth


def classify_growth(spec: MonomialAlgebraSpec) -> GrowthClass:
    g = subword_graph(spec)
    succ = g.successors()
    sccs = _strongly_connected(succ)
    comp_of = [0] * len(g.vertices)
    for ci, comp in enumerate(sccs):
        for v in comp:
            comp_of[v] = ci
    internal_edges = [0] * len(sccs)
    for a, b in g.edges:
        if comp_of[a] == comp_of[b]:
            internal_edges[comp_of[a]] += 1
    cyclic = [
        internal_edges[ci] >= 1 for ci in range(len(sccs))
    ]
    branching = [
        internal_edges[ci] > len(sccs[ci]) for ci in range(len(sccs))
    ]
    # Cross-check: a component has more internal edges than vertices exactly
    # when some vertex sits on two distinct simple cycles.
    for ci, comp in enumerate(sccs):
        if cyclic[ci]:
            assert branching[ci] == any(
                _two_cycles_through(v, comp, succ) for v in comp
            )
    if any(branching):
        return GrowthClass("exponential", None)
    # condensation DAG; degree = most cyclic components along a path
    comp_succ: list[set[int]] = [set() for _ in sccs]
    for a, b in g.edges:
        if comp_of[a] != comp_of[b]:
            comp_succ[comp_of[a]].add(comp_of[b])
    order = _topo_order(comp_succ)
    best = [0] * len(sccs)
    for ci in reversed(order):
        follow = max((best[cj] for cj in comp_succ[ci]), default=0)
        best[ci] = follow + (1 if cyclic[ci] else 0)
    degree = max(best, default=0)
    return GrowthClass("polynomial", degree)


def _strongly_connected(succ: list[list[int]]) -> list[list[int]]:
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while pi < len(succ[v]):
                u = succ[v][pi]
                pi += 1
                if index[u] < 0:
                    work[-1] = (v, pi)
                    work.append((u, 0))
                    advanced = True
                    break
                if on_stack[u]:
                    low[v] = min(low[v], index[u])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp.append(u)
                    if u == v:
                        break
                out.append(comp)
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
    return out


def _two_cycles_through(v: int, comp: list[int], succ: list[list[int]]) -> bool:
    inside = set(comp)
    cycles_found = 0

    def walk(u: int, visited: frozenset[int]) -> int:
        found = 0
        for w in succ[u]:
            if w == v:
                found += 1
            elif w in inside and w not in visited:
                found += walk(w, visited | {w})
            if found >= 2:
                return found
        return found

    cycles_found = walk(v, frozenset([v]))
    return cycles_found >= 2


def _topo_order(succ: list[set[int]]) -> list[int]:
    n = len(succ)
    indeg = [0] * n
    for outs in succ:
        for b in outs:
            indeg[b] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for b in succ[v]:
            indeg[b] -= 1
            if indeg[b] == 0:
                ready.append(b)
    assert len(order) == n
    return order


def gk_dimension_estimate(spec: MonomialAlgebraSpec, n: int) -> Fraction:
    """log V(n) / log n as an exact rational bracket midpoint."""
    if n < 8:
        raise ValueError("estimate needs n >= 8")
    v = growth_function(spec, n)[n]
    num = iv_log2((Fraction(v), Fraction(v)), 64)
    den = iv_log2((Fraction(n), Fraction(n)), 64)
    lo = num[0] / den[1]
    hi = num[1] / den[0]
    return (lo + hi) / 2


# --- factor complexity and mechanical words ---


def complexity_function(w: Word, n: int) -> list[int]:
    """p_w(1..n): distinct factors of each length."""
    ls = w.letters
    out = []
    for k in range(1, n + 1):
        out.append(len({ls[i : i + k] for i in range(len(ls) - k + 1)}))
    return out


def is_balanced(w: Word) -> bool:
    """Any two equal-length factors carry 'b' counts differing by at most 1."""
    if w.alphabet.size > 2:
        raise ValueError("balance is defined over a two-letter alphabet")
    ls = w.letters
    for k in range(1, len(ls) + 1):
        counts = {sum(1 for x in ls[i : i + k] if x == 2) for i in range(len(ls) - k + 1)}
        if max(counts) - min(counts) > 1:
            return False
    return True


def mechanical_word(alpha: Fraction, rho: Fraction, length: int) -> Word:
    """Letters floor(alpha*(i+1)+rho) - floor(alpha*i+rho), 0 -> a, 1 -> b."""
    if not 0 <= alpha <= 1:
        raise ValueError("slope must lie in [0, 1]")
    a2 = Alphabet(2)
    letters = []
    for i in range(length):
        lo = (alpha * i + rho).__floor__()
        hi = (alpha * (i + 1) + rho).__floor__()
        letters.append(1 + hi - lo)
    return Word(tuple(letters), a2)


def parse_algebra_spec(text: str) -> MonomialAlgebraSpec:
    """First line: alphabet size; following lines: forbidden words."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty algebra spec")
    alphabet = Alphabet(int(lines[0]))
    forbidden = [parse_word(ln, alphabet) for ln in lines[1:]]
    return MonomialAlgebraSpec.of(alphabet, forbidden)


def format_algebra_spec(spec: MonomialAlgebraSpec) -> str:
    lines = [str(spec.alphabet.size)]
    lines += [format_word(w) for w in spec.forbidden]
    return "\n".join(lines) + "\n"
