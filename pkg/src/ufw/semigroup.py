"""Finite-semigroup algebra on Cayley tables: idempotents, minimal left
ideals, the smallest two-sided ideal K(S), the idempotent order, direct
products, and the ultrafilter product on the element set.

Elements are 0-based indices; the pair (a, b) in a direct product of orders
(m, n) becomes index a·n + b.
"""

import random
from dataclasses import dataclass, field

from .bitsets import indices_of, mask_of
from .errors import (
    NotAssociative,
    NotCommutative,
    NotIdempotent,
    NotUltrafilter,
)
from .setfam import GroundSet, SetFamily, classify_family, quotient_set


@dataclass(frozen=True)
class CayleyTable:
    """A finite magma given by its multiplication table; flags are computed
    on construction, so they can never disagree with the table."""

    mul: tuple
    n: int = field(init=False)
    associative: bool = field(init=False)
    commutative: bool = field(init=False)

    def __post_init__(self):
        mul = tuple(tuple(row) for row in self.mul)
        n = len(mul)
        if n < 1:
            raise ValueError("table must have order ≥ 1")
        for row in mul:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise ValueError("table rows must be length n with entries < n")
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "associative", _assoc_witness(mul) is None)
        object.__setattr__(self, "commutative", _comm_witness(mul) is None)

    def __call__(self, x, y):
        return self.mul[x][y]

    def to_json(self):
        return {"n": self.n, "mul": [list(row) for row in self.mul]}

    @classmethod
    def from_json(cls, obj):
        table = cls(obj["mul"])
        if table.n != obj.get("n", table.n):
            raise ValueError("declared order disagrees with the table")
        return table


def _assoc_witness(mul):
    n = len(mul)
    for a in range(n):
        for b in range(n):
            ab = mul[a][b]
            for c in range(n):
                if mul[ab][c] != mul[a][mul[b][c]]:
                    return (a, b, c)
    return None


def _comm_witness(mul):
    n = len(mul)
    for a in range(n):
        for b in range(a + 1, n):
            if mul[a][b] != mul[b][a]:
                return (a, b)
    return None


def validate(table):
    """Associativity/commutativity report with first violating instances in
    lexicographic order."""
    aw = _assoc_witness(table.mul)
    cw = _comm_witness(table.mul)
    return {
        "associative": aw is None,
        "commutative": cw is None,
        "assoc_witness": aw,
        "comm_witness": cw,
    }


def _require_assoc(table):
    if not table.associative:
        raise NotAssociative("table is not associative", _assoc_witness(table.mul))


def idempotents(table):
    """{x : x·x = x}; non-empty for every finite semigroup."""
    _require_assoc(table)
    return tuple(x for x in range(table.n) if table.mul[x][x] == x)


def principal_left_ideal(table, x):
    """S·x as a sorted tuple (a left ideal; x itself need not belong)."""
    return tuple(sorted({table.mul[s][x] for s in range(table.n)}))


def minimal_left_ideals(table):
    """All minimal left ideals: the sets S·x with S·y = S·x for every y in
    them (the principal-ideal minimality criterion)."""
    _require_assoc(table)
    principal = {}
    for x in range(table.n):
        principal[x] = principal_left_ideal(table, x)
    candidates = sorted(set(principal.values()))
    out = []
    for L in candidates:
        if all(principal_left_ideal(table, y) == L for y in L):
            out.append(L)
    return out


def kernel(table):
    """K(S): the smallest two-sided ideal, as the union of all minimal left
    ideals."""
    _require_assoc(table)
    members = set()
    for L in minimal_left_ideals(table):
        members.update(L)
    return tuple(sorted(members))


def is_minimal_element(table, x):
    """x ∈ K(S) iff for every y some z solves z·y·x = x."""
    _require_assoc(table)
    mul = table.mul
    for y in range(table.n):
        yx = mul[y][x]
        if all(mul[z][yx] != x for z in range(table.n)):
            return False
    return True


def two_sided_ideals(table):
    """All two-sided ideals (exhaustive over subsets; intended for small n)."""
    _require_assoc(table)
    n = table.n
    out = []
    for mask in range(1, 1 << n):
        members = indices_of(mask)
        ok = True
        for i in members:
            for s in range(n):
                if not mask & (1 << table.mul[s][i]) or not mask & (1 << table.mul[i][s]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(members)
    return out


def idempotent_leq(table, p, q):
    """The order on idempotents: p ≤ q iff p·q = q·p = p."""
    _require_assoc(table)
    for e in (p, q):
        if table.mul[e][e] != e:
            raise NotIdempotent("element %d is not idempotent" % e, which=e)
    return table.mul[p][q] == p and table.mul[q][p] == p


def ideal_report(table):
    """One-stop structural report used by the CLI."""
    idems = idempotents(table)
    ker = kernel(table)
    ker_set = set(ker)
    pairs = []
    for p in idems:
        for q in idems:
            if idempotent_leq(table, p, q):
                pairs.append((p, q))
    return {
        "minimal_left_ideals": minimal_left_ideals(table),
        "kernel": ker,
        "idempotents": idems,
        "minimal_idempotents": tuple(e for e in idems if e in ker_set),
        "order_pairs": pairs,
    }


def direct_product(table_s, table_t):
    """Componentwise product; (a, b) ↦ a·n_T + b."""
    _require_assoc(table_s)
    _require_assoc(table_t)
    ns, nt = table_s.n, table_t.n
    mul = [[0] * (ns * nt) for _ in range(ns * nt)]
    for a in range(ns):
        for b in range(nt):
            for c in range(ns):
                for d in range(nt):
                    mul[a * nt + b][c * nt + d] = table_s.mul[a][c] * nt + table_t.mul[b][d]
    return CayleyTable(mul)


def commutative_kernel_group(table):
    """For commutative semigroups: K(S) is a group; return its identity (the
    unique idempotent) and the inverse map."""
    _require_assoc(table)
    cw = _comm_witness(table.mul)
    if cw is not None:
        raise NotCommutative("table is not commutative", cw)
    ker = kernel(table)
    idems_in_k = [e for e in ker if table.mul[e][e] == e]
    if len(idems_in_k) != 1:  # pragma: no cover - excluded by the theorem
        raise AssertionError("commutative kernel must contain a unique idempotent")
    e = idems_in_k[0]
    inverse = {}
    ker_set = set(ker)
    for k in ker:
        inv = [m for m in ker if table.mul[k][m] == e]
        if len(inv) != 1 or table.mul[k][inv[0]] not in ker_set:  # pragma: no cover
            raise AssertionError("kernel is not a group")
        inverse[k] = inv[0]
    return {"identity": e, "inverse": inverse}


def subsemigroups(table):
    """All non-empty subsets closed under multiplication, as sorted tuples."""
    _require_assoc(table)
    n = table.n
    out = []
    for mask in range(1, 1 << n):
        members = indices_of(mask)
        if all(mask & (1 << table.mul[a][b]) for a in members for b in members):
            out.append(members)
    return out


def subtable(table, members):
    """Restrict the table to a subsemigroup, reindexed 0..len-1."""
    pos = {x: i for i, x in enumerate(members)}
    mul = [[pos[table.mul[a][b]] for b in members] for a in members]
    return CayleyTable(mul)


def ultrafilter_product(table, u, v):
    """The product ultrafilter: A ∈ 𝓤·𝓥 iff {x : x⁻¹A ∈ 𝓥} ∈ 𝓤."""
    _require_assoc(table)
    n = table.n
    for name, fam in (("first", u), ("second", v)):
        if fam.ground.size != n:
            raise ValueError("%s family ground size must equal the table order" % name)
        verdict = classify_family(fam)
        if verdict.kind != "ultrafilter":
            raise NotUltrafilter(
                "%s argument is %s, not an ultrafilter" % (name, verdict.kind),
                verdict.witness,
            )
    out = []
    for a_mask in range(1 << n):
        a = indices_of(a_mask)
        inner = mask_of(
            x for x in range(n) if v.has_mask(mask_of(quotient_set(table, x, a, "left")))
        )
        if u.has_mask(inner):
            out.append(a_mask)
    return SetFamily.from_masks(GroundSet(n), out)


# ---------------------------------------------------------------------------
# Table zoo and enumeration


def cyclic_table(n):
    """ℤ/n under addition."""
    return CayleyTable([[(a + b) % n for b in range(n)] for a in range(n)])


def mult_mod_table(n):
    """{0..n-1} under multiplication mod n."""
    return CayleyTable([[(a * b) % n for b in range(n)] for a in range(n)])


def left_zero_table(n):
    """x·y = x."""
    return CayleyTable([[a for _ in range(n)] for a in range(n)])


def right_zero_table(n):
    """x·y = y."""
    return CayleyTable([[b for b in range(n)] for _ in range(n)])


def _partial_assoc_ok(mul, i, j, n):
    """Check every associativity triple that became fully determined when
    cell (i, j) was filled.  Cells are filled in row-major order, so a cell
    (a, b) is known iff a < i or (a == i and b <= j).  A triple (a, b, c)
    needs cells (a,b), (b,c), (ab,c), (a,bc); only triples using the new
    cell in one of those roles can have become checkable, which keeps this
    O(n²) per filled cell."""

    def known(a, b):
        return a < i or (a == i and b <= j)

    def triple_ok(a, b, c):
        if not (known(a, b) and known(b, c)):
            return True
        ab = mul[a][b]
        bc = mul[b][c]
        if not (known(ab, c) and known(a, bc)):
            return True
        return mul[ab][c] == mul[a][bc]

    # (a, b) = (i, j) or (b, c) = (i, j)
    for c in range(n):
        if not triple_ok(i, j, c):
            return False
    for a in range(n):
        if not triple_ok(a, i, j):
            return False
    # (i, j) plays the role of (ab, c) or (a, bc)
    for a in range(n):
        for b in range(n):
            if known(a, b) and mul[a][b] == i:
                if not triple_ok(a, b, j):
                    return False
            if known(a, b) and mul[a][b] == j:
                if not triple_ok(i, a, b):
                    return False
    return True


def enumerate_associative_tables(n, prefix=()):
    """Depth-first enumeration of all associative tables of order n, with
    partial-associativity pruning.

    ``prefix`` fixes the first len(prefix) cells in row-major order, which
    gives a deterministic work-splitting interface for parallel runs.
    """
    cells = [(i, j) for i in range(n) for j in range(n)]
    mul = [[-1] * n for _ in range(n)]

    def fill(pos):
        if pos == len(cells):
            yield CayleyTable([row[:] for row in mul])
            return
        i, j = cells[pos]
        choices = (prefix[pos],) if pos < len(prefix) else range(n)
        for v in choices:
            mul[i][j] = v
            if _partial_assoc_ok(mul, i, j, n):
                yield from fill(pos + 1)
        mul[i][j] = -1

    yield from fill(0)


def sample_associative_tables(n, count, seed=0):
    """Randomized-backtracking sample of associative tables (with
    replacement): each draw is one DFS descent with shuffled cell values."""
    rng = random.Random(seed)
    cells = [(i, j) for i in range(n) for j in range(n)]
    out = []
    while len(out) < count:
        mul = [[-1] * n for _ in range(n)]

        def descend(pos):
            if pos == len(cells):
                return True
            i, j = cells[pos]
            values = list(range(n))
            rng.shuffle(values)
            for v in values:
                mul[i][j] = v
                if _partial_assoc_ok(mul, i, j, n) and descend(pos + 1):
                    return True
            mul[i][j] = -1
            return False

        if descend(0):
            out.append(CayleyTable([row[:] for row in mul]))
    return out
