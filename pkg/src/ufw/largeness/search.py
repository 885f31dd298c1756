"""Monochromatic-structure searches over finite colored domains.

Domains: integer intervals [1..N] (1-based), edge sets of complete
k-uniform hypergraphs (vertices 0-based, edges in colex order), and word
cubes Σ^n (alphabet 0-based, words in lex order with position 0 most
significant).  Abstract index sets [m] elsewhere in the package are
0-based; intervals here start at 1.

Witness searches are deterministic; the universal (for-all-colorings)
checks behind :func:`threshold_number` run on the kernel backend selected
in :mod:`ufw.largeness.kernels`, with color 0 pinned at the first domain
position (a sound color-symmetry reduction).
"""

import time
from dataclasses import dataclass, field
from itertools import combinations, product as iproduct

from ..errors import BudgetExhausted
from .kernels import first_uncovered_coloring


@dataclass(frozen=True)
class IntervalColoring:
    """Coloring of [1..n]; colors[i-1] is the color of i."""

    n: int
    colors: tuple
    r: int = 0

    def __post_init__(self):
        colors = tuple(self.colors)
        if len(colors) != self.n or self.n < 1:
            raise ValueError("need one color per element of [1..n]")
        r = self.r or max(colors) + 1
        if any(not 0 <= c < r for c in colors):
            raise ValueError("colors must lie in [0..r)")
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "r", r)

    def color(self, i):
        if not 1 <= i <= self.n:
            raise ValueError("element %d outside [1..%d]" % (i, self.n))
        return self.colors[i - 1]


@dataclass(frozen=True)
class EdgeColoring:
    """Coloring of the complete k-uniform hypergraph on vertices 0..n-1;
    colors[j] is the color of the j-th k-subset in colex order."""

    n: int
    k: int
    colors: tuple
    r: int = 0

    def __post_init__(self):
        edges = edge_list(self.n, self.k)
        colors = tuple(self.colors)
        if len(colors) != len(edges):
            raise ValueError("need one color per %d-subset" % self.k)
        r = self.r or max(colors) + 1
        if any(not 0 <= c < r for c in colors):
            raise ValueError("colors must lie in [0..r)")
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "r", r)

    def color(self, edge):
        edge = tuple(sorted(edge))
        return self.colors[edge_index(edge)]


@dataclass(frozen=True)
class WordColoring:
    """Coloring of Σ^n for Σ = {0..sigma-1}; colors[j] is the color of the
    j-th word in lex order (position 0 most significant)."""

    sigma: int
    n: int
    colors: tuple
    r: int = 0

    def __post_init__(self):
        colors = tuple(self.colors)
        if len(colors) != self.sigma**self.n:
            raise ValueError("need one color per word of length %d" % self.n)
        r = self.r or max(colors) + 1
        if any(not 0 <= c < r for c in colors):
            raise ValueError("colors must lie in [0..r)")
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "r", r)

    def color(self, word):
        idx = 0
        for a in word:
            if not 0 <= a < self.sigma:
                raise ValueError("letter %r outside alphabet" % (a,))
            idx = idx * self.sigma + a
        return self.colors[idx]


def edge_list(n, k):
    """All k-subsets of {0..n-1} in colex order (sorted by reversed tuple)."""
    return sorted(combinations(range(n), k), key=lambda e: tuple(reversed(e)))


def edge_index(edge):
    """Colex rank of a sorted k-subset: sum of C(v_i, i+1)."""
    rank = 0
    for i, v in enumerate(edge):
        rank += _binom(v, i + 1)
    return rank


def _binom(n, k):
    if k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


@dataclass(frozen=True)
class FSWitness:
    """Strictly increasing generators whose non-empty subset sums all share
    one color; ``sums`` lists the distinct sums in increasing order."""

    generators: tuple
    color: int
    sums: tuple


@dataclass(frozen=True)
class APWitness:
    start: int
    step: int
    length: int
    color: int


@dataclass(frozen=True)
class LineWitness:
    """Variable word: tuple over Σ ∪ {None}, None marking the variable
    positions (at least one)."""

    word: tuple
    color: int


@dataclass(frozen=True)
class SearchBudget:
    node_cap: int = 10**7
    time_cap_ms: int = 60000
    seed: int = 0

    def __post_init__(self):
        if self.node_cap <= 0 or self.time_cap_ms <= 0:
            raise ValueError("caps must be positive")


def finite_combinations(xs, mode="sums"):
    """All combinations of non-empty index subsets of ``xs``: sums,
    products, or unions (elements must then be sets), deduplicated.
    Returns a sorted list (unions sorted as sorted tuples of frozensets'
    elements — a list of frozensets sorted by (size, sorted elements))."""
    xs = list(xs)
    if not xs:
        raise ValueError("xs must be non-empty")
    if mode == "sums":
        acc = set()
        for x in xs:
            acc |= {s + x for s in acc} | {x}
        return sorted(acc)
    if mode == "products":
        acc = set()
        for x in xs:
            acc |= {s * x for s in acc} | {x}
        return sorted(acc)
    if mode == "unions":
        sets = [frozenset(x) for x in xs]
        acc = set()
        for x in sets:
            acc |= {s | x for s in acc} | {x}
        return sorted(acc, key=lambda s: (len(s), sorted(s)))
    raise ValueError("mode must be sums, products, or unions")


def find_mono_fs(coloring, k, budget=None, distinct=True):
    """Search [1..N] for generators x_1<…<x_k whose 2^k−1 index-subset sums
    are all ≤ N and monochromatic.

    ``distinct=False`` relaxes to non-decreasing generators (the classical
    Schur reading at k=2, where x+x=2x counts).  Returns an FSWitness, or
    None when the exhaustive search proves no witness exists.  Raises
    BudgetExhausted when the node budget runs out first (a strictly weaker
    answer than None).
    """
    budget = budget or SearchBudget()
    n = coloring.n
    deadline = time.monotonic() + budget.time_cap_ms / 1000.0
    nodes = 0
    gap = 1 if distinct else 0

    def extend(gens, sums, color):
        nonlocal nodes
        if len(gens) == k:
            return FSWitness(tuple(gens), color, tuple(sorted(set(sums))))
        lo = gens[-1] + gap if gens else 1
        for g in range(lo, n + 1):
            nodes += 1
            if nodes > budget.node_cap or time.monotonic() > deadline:
                raise BudgetExhausted("search budget exhausted", nodes=nodes)
            new = [g] + [s + g for s in sums]
            if new[-1] > n:
                # sums only grow with g; no larger generator can fit
                break
            if distinct and len(set(sums + new)) < len(sums) + len(new):
                # proper FS witnesses carry 2^k−1 pairwise distinct sums
                continue
            c = color if color is not None else coloring.color(g)
            if any(coloring.color(s) != c for s in new):
                continue
            found = extend(gens + [g], sums + new, c)
            if found is not None:
                return found
        return None

    return extend([], [], None)


def find_mono_ap(coloring, length):
    """First monochromatic arithmetic progression of the given length in
    [1..N] (by start, then step), or None; the scan is exhaustive."""
    n = coloring.n
    for start in range(1, n + 1):
        for step in range(1, (n - start) // max(length - 1, 1) + 1):
            terms = [start + i * step for i in range(length)]
            if terms[-1] > n:
                break
            c = coloring.color(terms[0])
            if all(coloring.color(t) == c for t in terms[1:]):
                return APWitness(start, step, length, c)
    return None


def combinatorial_lines(sigma, n):
    """All variable words over Σ^n (None marks the variable), lex order with
    fixed letters first and variable positions by subset enumeration."""
    out = []
    for pattern in iproduct(range(sigma + 1), repeat=n):
        word = tuple(None if a == sigma else a for a in pattern)
        if any(a is None for a in word):
            out.append(word)
    return out


def line_points(word, sigma):
    return [tuple(a if w is None else w for w in word) for a in range(sigma)]


def find_mono_line(coloring):
    """First monochromatic combinatorial line of the word coloring, or
    None; the scan over all variable words is exhaustive."""
    for word in combinatorial_lines(coloring.sigma, coloring.n):
        pts = line_points(word, coloring.sigma)
        c = coloring.color(pts[0])
        if all(coloring.color(p) == c for p in pts[1:]):
            return LineWitness(word, c)
    return None


def find_mono_clique(coloring, m):
    """First vertex subset of size m (lex order) whose k-edges all share
    one color, or None; the scan is exhaustive."""
    for subset in combinations(range(coloring.n), m):
        edges = list(combinations(subset, coloring.k))
        c = coloring.color(edges[0])
        if all(coloring.color(e) == c for e in edges[1:]):
            return (subset, c)
    return None


# --- universal checks / threshold numbers ---------------------------------


def pattern_configs(pattern, size):
    """(domain_size, configs) for the universal check at the given size.

    Domains: ap/fs → [1..size] (position = value−1); clique → edges of the
    complete k-graph on ``size`` vertices, colex; line → words of Σ^size,
    lex.  Each config is the tuple of positions of one pattern instance.
    """
    kind = pattern[0]
    if kind == "ap":
        length = pattern[1]
        configs = []
        for start in range(1, size + 1):
            for step in range(1, size + 1):
                terms = [start + i * step for i in range(length)]
                if terms[-1] > size:
                    break
                configs.append(tuple(t - 1 for t in terms))
        return size, configs
    if kind == "fs":
        # Non-decreasing generators (x+x=2x counts), so fs(2) is the
        # classical Schur pattern {x, y, x+y} with x ≤ y.
        k = pattern[1]
        configs = []

        def rec(gens, sums):
            if len(gens) == k:
                configs.append(tuple(sorted({s - 1 for s in sums})))
                return
            lo = gens[-1] if gens else 1
            for g in range(lo, size + 1):
                new = [g] + [s + g for s in sums]
                if new[-1] > size:
                    break
                rec(gens + [g], sums + new)

        rec([], [])
        return size, configs
    if kind == "clique":
        k, m = pattern[1], pattern[2]
        edges = edge_list(size, k)
        index = {e: i for i, e in enumerate(edges)}
        configs = [
            tuple(sorted(index[e] for e in combinations(subset, k)))
            for subset in combinations(range(size), m)
        ]
        return len(edges), configs
    if kind == "line":
        sigma = pattern[1]
        words = list(iproduct(range(sigma), repeat=size))
        index = {w: i for i, w in enumerate(words)}
        configs = [
            tuple(sorted(index[p] for p in line_points(word, sigma)))
            for word in combinatorial_lines(sigma, size)
        ]
        return len(words), configs
    raise ValueError("unknown pattern kind %r" % (kind,))


@dataclass(frozen=True)
class ThresholdResult:
    """value: least domain size at which every r-coloring contains the
    pattern (None when the cap was reached first); failure_coloring: an
    explicit avoiding coloring at value−1 (None when value ≤ 1)."""

    pattern: tuple
    r: int
    value: object
    cap: int
    failure_coloring: object = None


def coloring_from_index(idx, domain_size, r):
    colors = []
    for _ in range(domain_size):
        colors.append(idx % r)
        idx //= r
    return tuple(colors)


def universal_check(pattern, r, size, backend=None):
    """(covered, avoiding) — covered is True when every r-coloring of the
    size-``size`` domain contains the pattern; otherwise ``avoiding`` is an
    explicit avoiding coloring (tuple of colors per position)."""
    domain, configs = pattern_configs(pattern, size)
    idx = first_uncovered_coloring(domain, r, configs, fix_first=True, backend=backend)
    if idx < 0:
        return True, None
    return False, coloring_from_index(idx, domain, r)


def threshold_number(pattern, r, cap, backend=None):
    """Least domain size at which the pattern is unavoidable for r colors.

    Verified in both directions: an explicit avoiding coloring below the
    threshold, and an exhaustive universal check at it.  ``pattern`` is
    ("ap", len) | ("fs", k) | ("line", sigma) | ("clique", k, m).
    """
    last_avoiding = None
    start = 1 if pattern[0] != "clique" else pattern[1]
    for size in range(start, cap + 1):
        covered, avoiding = universal_check(pattern, r, size, backend=backend)
        if covered:
            return ThresholdResult(pattern, r, size, cap, last_avoiding)
        last_avoiding = avoiding
    return ThresholdResult(pattern, r, None, cap, last_avoiding)


# --- partition regularity harness and IP* probe ---------------------------


def partition_harness(base, parts, predicate):
    """Evaluate ``predicate`` on each part of a partition of ``base``.

    Reports whether some part satisfies it (the experimental shadow of
    partition regularity) and the first part that does.
    """
    base = set(base)
    parts = [set(p) for p in parts]
    union = set()
    for p in parts:
        if union & p:
            raise ValueError("parts overlap")
        union |= p
    if union != base:
        raise ValueError("parts do not cover the base")
    for i, p in enumerate(parts):
        if predicate(p):
            return {"regular_here": True, "surviving_part": i}
    return {"regular_here": False, "surviving_part": None}


def ipstar_probe(a, n, k, scope="sums"):
    """Does ``a`` ⊆ [1..n] meet FS(x_1..x_k) for every increasing tuple?

    ``scope`` controls the tuple space: "sums" requires every subset sum
    ≤ n (the default bounded reading), "generators" only bounds the
    generators themselves by n, with sums allowed to leave [1..n].
    The counterexample is the lexicographically least failing tuple.
    """
    if scope not in ("sums", "generators"):
        raise ValueError("scope must be 'sums' or 'generators'")
    a = set(a)

    def rec(gens, sums):
        if len(gens) == k:
            if not (a & set(sums)):
                return tuple(gens)
            return None
        lo = gens[-1] + 1 if gens else 1
        for g in range(lo, n + 1):
            new = [g] + [s + g for s in sums]
            if scope == "sums" and new[-1] > n:
                break
            bad = rec(gens + [g], sums + new)
            if bad is not None:
                return bad
        return None

    counterexample = rec([], [])
    if counterexample is None:
        return {"holds": True, "counterexample": None}
    return {"holds": False, "counterexample": counterexample}


def fs_multiple_window(xs):
    """For a positive-integer sequence of length m, a non-empty contiguous
    index window whose sum is divisible by m (always exists: two of the
    m+1 prefix sums agree mod m).  Returns (i, j) with sum(xs[i:j]) ≡ 0."""
    xs = list(xs)
    m = len(xs)
    seen = {0: 0}
    total = 0
    for j, x in enumerate(xs, start=1):
        total = (total + x) % m
        if total in seen:
            return seen[total], j
        seen[total] = j
    raise AssertionError("pigeonhole cannot fail on %d prefixes" % (m + 1))
