"""Independent witness checkers.

These re-validate certificates produced by the searches from first
principles, deliberately sharing no code with :mod:`ufw.largeness.search`
(no pruning, no shared enumeration helpers).  Each checker takes plain
data so it can also validate certificates loaded from JSON.
"""

from itertools import combinations, combinations_with_replacement, product as iproduct


def check_fs_witness(colors, generators, color, sums=None, distinct=True):
    """colors: color of i at colors[i-1] for [1..N]; generators strictly
    increasing positive (non-decreasing when ``distinct`` is False); all
    2^k−1 index-subset sums in range and of the stated color; ``sums`` (if
    given) must equal the recomputed distinct sums."""
    gens = list(generators)
    n = len(colors)
    if not gens or any(g <= 0 for g in gens):
        return False
    if any(a > b or (distinct and a == b) for a, b in zip(gens, gens[1:])):
        return False
    k = len(gens)
    all_sums = set()
    for size in range(1, k + 1):
        for idxs in combinations(range(k), size):
            all_sums.add(sum(gens[i] for i in idxs))
    if distinct and len(all_sums) != 2**k - 1:
        return False
    if sums is not None and sorted(all_sums) != sorted(sums):
        return False
    for s in all_sums:
        if not 1 <= s <= n or colors[s - 1] != color:
            return False
    return True


def check_ap_witness(colors, start, step, length, color):
    n = len(colors)
    if start < 1 or step < 1 or length < 1:
        return False
    for i in range(length):
        t = start + i * step
        if not 1 <= t <= n or colors[t - 1] != color:
            return False
    return True


def check_line_witness(colors, sigma, word, color):
    """colors: one per word of Σ^n in lex order; ``word`` uses None for the
    variable positions (at least one required)."""
    if not any(w is None for w in word):
        return False
    if any(w is not None and not 0 <= w < sigma for w in word):
        return False
    for a in range(sigma):
        idx = 0
        for w in word:
            idx = idx * sigma + (a if w is None else w)
        if colors[idx] != color:
            return False
    return True


def check_clique_witness(colors, nvertices, k, subset, color):
    """colors: one per k-subset of {0..n-1} in colex order."""
    subset = sorted(subset)
    if len(set(subset)) != len(subset):
        return False
    if any(not 0 <= v < nvertices for v in subset):
        return False
    for edge in combinations(subset, k):
        rank = 0
        for i, v in enumerate(edge):
            c = 1
            for j in range(i + 1):
                c = c * (v - j) // (j + 1)
            rank += c if v >= i + 1 else 0
        if colors[rank] != color:
            return False
    return True


def check_avoiding_coloring(pattern, r, colors):
    """Confirm an avoiding coloring from a threshold certificate: no
    instance of the pattern is monochromatic.  Recomputes the instances
    with plain itertools enumeration."""
    kind = pattern[0]
    if any(not 0 <= c < r for c in colors):
        return False
    if kind == "ap":
        n, length = len(colors), pattern[1]
        for start in range(1, n + 1):
            for step in range(1, n + 1):
                terms = [start + i * step for i in range(length)]
                if terms[-1] > n:
                    break
                if len({colors[t - 1] for t in terms}) == 1:
                    return False
        return True
    if kind == "fs":
        n, k = len(colors), pattern[1]
        for gens in combinations_with_replacement(range(1, n + 1), k):
            sums = {
                sum(gens[i] for i in idxs)
                for size in range(1, k + 1)
                for idxs in combinations(range(k), size)
            }
            if max(sums) <= n and len({colors[s - 1] for s in sums}) == 1:
                return False
        return True
    if kind == "clique":
        k, m = pattern[1], pattern[2]
        nv = 0
        while True:
            count = 1
            for i in range(k):
                count = count * (nv - i) // (i + 1)
            if count == len(colors):
                break
            nv += 1
            if nv > len(colors) + k + 1:
                return False
        edges = sorted(combinations(range(nv), k), key=lambda e: tuple(reversed(e)))
        rank = {e: i for i, e in enumerate(edges)}
        for subset in combinations(range(nv), m):
            cs = {colors[rank[e]] for e in combinations(subset, k)}
            if len(cs) == 1:
                return False
        return True
    if kind == "line":
        sigma = pattern[1]
        n = 0
        while sigma**n < len(colors):
            n += 1
        if sigma**n != len(colors):
            return False
        words = list(iproduct(range(sigma), repeat=n))
        rank = {w: i for i, w in enumerate(words)}
        for spots in iproduct(range(sigma + 1), repeat=n):
            if sigma not in spots:
                continue
            pts = [
                tuple(a if w == sigma else w for w in spots) for a in range(sigma)
            ]
            if len({colors[rank[p]] for p in pts}) == 1:
                return False
        return True
    raise ValueError("unknown pattern kind %r" % (kind,))


def check_dictator(voters, candidates, table, dictator):
    """Confirm a dictatorship certificate for an aggregation rule given as
    a table of order indices over all profiles.  Decodes profiles and
    orders locally (orders = permutations in lex order, worst to best;
    voter 0 is the most significant digit of the profile index)."""
    from itertools import permutations

    orders = list(permutations(range(candidates)))
    fact = len(orders)
    if len(table) != fact**voters:
        return False
    for pidx, out in enumerate(table):
        digits = []
        rest = pidx
        for _ in range(voters):
            digits.append(rest % fact)
            rest //= fact
        digits.reverse()
        if out != digits[dictator]:
            return False
    return True
