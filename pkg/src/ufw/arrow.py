"""Social-choice verification on finite electorates: axiom checking
(independence of irrelevant alternatives, positive association/monotonicity,
unanimity), decisive-coalition extraction, ultrafilter verification with
dictator recovery, and the converse rule-from-ultrafilter construction.

Orders are strict total orders, stored as permutations of the candidate set
read worst-to-best: a ≺ b iff a appears earlier.  Profiles are indexed in
mixed radix over per-voter permutation indices (voter 0 most significant);
witnesses reference profile indices, so they are stable across runs.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial

from .bitsets import indices_of, mask_of
from .errors import CapExceeded, NotStrictOrder, NotUltrafilter
from .setfam import GroundSet, SetFamily, classify_family

PROFILE_CAP = 10**6


@dataclass(frozen=True)
class Election:
    voters: int
    candidates: int

    def __post_init__(self):
        if self.voters < 1 or self.candidates < 2:
            raise ValueError("need ≥ 1 voter and ≥ 2 candidates")

    @property
    def profile_count(self):
        return factorial(self.candidates) ** self.voters


@lru_cache(maxsize=None)
def all_orders(m):
    """All strict orders on m candidates (permutations, lexicographic)."""
    return tuple(permutations(range(m)))


@lru_cache(maxsize=None)
def _order_index(m):
    return {p: i for i, p in enumerate(all_orders(m))}


def prec(order, a, b):
    """a ≺ b in the worst-to-best permutation ``order``."""
    return order.index(a) < order.index(b)


def profile_orders(election, pidx):
    """Decode a profile index into per-voter orders (voter 0 most
    significant in the mixed-radix encoding)."""
    orders = all_orders(election.candidates)
    base = len(orders)
    out = [None] * election.voters
    for v in range(election.voters - 1, -1, -1):
        out[v] = orders[pidx % base]
        pidx //= base
    return tuple(out)


def profile_index(election, orders):
    """Inverse of profile_orders."""
    lookup = _order_index(election.candidates)
    idx = 0
    for order in orders:
        idx = idx * factorial(election.candidates) + lookup[tuple(order)]
    return idx


class AggregationRule:
    """A total map from profiles to strict orders, stored as a table of
    permutation indices.  Construction rejects any non-total-order output
    with the offending profile."""

    __slots__ = ("election", "table")

    def __init__(self, election, table=None, func=None):
        if election.profile_count > PROFILE_CAP:
            raise CapExceeded("profile space exceeds cap %d" % PROFILE_CAP)
        if (table is None) == (func is None):
            raise ValueError("provide exactly one of table / func")
        orders = all_orders(election.candidates)
        lookup = _order_index(election.candidates)
        if table is not None:
            table = tuple(table)
            if len(table) != election.profile_count:
                raise ValueError("table must cover every profile")
            for pidx, oi in enumerate(table):
                if not 0 <= oi < len(orders):
                    raise NotStrictOrder(
                        "output %r at profile %d is not a strict order" % (oi, pidx),
                        profile_index=pidx,
                    )
        else:
            rows = []
            for pidx in range(election.profile_count):
                out = func(profile_orders(election, pidx))
                out = tuple(out)
                if out not in lookup:
                    raise NotStrictOrder(
                        "output %r at profile %d is not a strict order" % (out, pidx),
                        profile_index=pidx,
                    )
                rows.append(lookup[out])
            table = tuple(rows)
        object.__setattr__(self, "election", election)
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, value):
        raise AttributeError("AggregationRule is immutable")

    def order(self, pidx):
        return all_orders(self.election.candidates)[self.table[pidx]]

    def to_json(self):
        return {
            "voters": self.election.voters,
            "candidates": self.election.candidates,
            "table": list(self.table),
        }

    @classmethod
    def from_json(cls, obj):
        return cls(Election(obj["voters"], obj["candidates"]), table=obj["table"])


def dictator_rule(election, voter):
    """The rule that copies the given voter's order."""
    return AggregationRule(election, func=lambda orders: orders[voter])


def borda_rule(election):
    """Borda count with lexicographic tie-break (lower index preferred on
    equal score); the classic IIA violator."""

    def social(orders):
        m = election.candidates
        score = [0] * m
        for order in orders:
            for pos, cand in enumerate(order):
                score[cand] += pos  # worst-to-best: later = better
        # Worst-to-best output: ascending score; ties broken so the lower
        # candidate index ends up better (later).
        return tuple(sorted(range(m), key=lambda c: (score[c], c)))

    return AggregationRule(election, func=social)


def pairwise_majority_rule(election):
    """Pairwise-majority 'rule'; raises NotStrictOrder on the first profile
    (e.g. a Condorcet cycle) whose tally is not a total order."""

    def social(orders):
        m = election.candidates
        beats = [[0] * m for _ in range(m)]
        for a in range(m):
            for b in range(m):
                if a != b:
                    beats[a][b] = sum(1 for o in orders if prec(o, b, a))
        # b "beats" a when a majority ranks b above a; count wins.
        wins = [sum(1 for b in range(m) if b != a and beats[a][b] > beats[b][a]) for a in range(m)]
        order = tuple(sorted(range(m), key=lambda c: wins[c]))
        # Valid only when win counts are all distinct (a linear tournament).
        if len(set(wins)) != m:
            return ("cycle",)
        return order

    return AggregationRule(election, func=social)


def _ordered_pairs(m):
    return [(a, b) for a in range(m) for b in range(m) if a != b]


def check_iia(rule):
    """(IIA): profiles agreeing on every voter's a-vs-b comparison must agree
    on the social a-vs-b comparison."""
    el = rule.election
    for a, b in _ordered_pairs(el.candidates):
        groups = {}
        for pidx in range(el.profile_count):
            key = tuple(prec(o, a, b) for o in profile_orders(el, pidx))
            soc = prec(rule.order(pidx), a, b)
            if key not in groups:
                groups[key] = (pidx, soc)
            elif groups[key][1] != soc:
                return False, (groups[key][0], pidx, (a, b))
    return True, None


def check_monotone(rule):
    """(M): if candidate a weakly rises in every voter's order while all
    other relative comparisons are fixed, a's social standing cannot drop."""
    el = rule.election
    for a in range(el.candidates):
        groups = {}
        for pidx in range(el.profile_count):
            orders = profile_orders(el, pidx)
            key = tuple(tuple(c for c in o if c != a) for o in orders)
            groups.setdefault(key, []).append(pidx)
        for pidxs in groups.values():
            for p1 in pidxs:
                orders1 = profile_orders(el, p1)
                below1 = [frozenset(c for c in o if prec(o, c, a)) for o in orders1]
                for p2 in pidxs:
                    orders2 = profile_orders(el, p2)
                    if not all(
                        below1[v] <= frozenset(c for c in o if prec(o, c, a))
                        for v, o in enumerate(orders2)
                    ):
                        continue
                    for b in range(el.candidates):
                        if b == a:
                            continue
                        if prec(rule.order(p1), b, a) and not prec(rule.order(p2), b, a):
                            return False, (p1, p2, (b, a))
    return True, None


def check_unanimity(rule):
    """(NI)/unanimity: a unanimous profile maps to the common order."""
    el = rule.election
    for order in all_orders(el.candidates):
        pidx = profile_index(el, [order] * el.voters)
        soc = rule.order(pidx)
        if soc != order:
            pair = next(
                (a, b)
                for a, b in _ordered_pairs(el.candidates)
                if prec(order, a, b) and not prec(soc, a, b)
            )
            return False, (pidx, pidx, pair)
    return True, None


def check_axioms(rule):
    iia, iia_w = check_iia(rule)
    mono, mono_w = check_monotone(rule)
    una, una_w = check_unanimity(rule)
    return {
        "iia": iia,
        "iia_witness": iia_w,
        "monotone": mono,
        "monotone_witness": mono_w,
        "unanimity": una,
        "unanimity_witness": una_w,
    }


def pairwise_decisive(rule, a, b):
    """Coalitions whose unanimous a ≺ b forces a ≺_soc b."""
    el = rule.election
    rows = []
    for pidx in range(el.profile_count):
        orders = profile_orders(el, pidx)
        supporters = mask_of(v for v in range(el.voters) if prec(orders[v], a, b))
        rows.append((supporters, prec(rule.order(pidx), a, b)))
    masks = []
    for coalition in range(1 << el.voters):
        if all(soc for supporters, soc in rows if coalition & ~supporters == 0):
            masks.append(coalition)
    return SetFamily.from_masks(GroundSet(el.voters), masks)


def decisive_family(rule):
    """𝒟: coalitions decisive for every ordered candidate pair at once."""
    el = rule.election
    masks = None
    for a, b in _ordered_pairs(el.candidates):
        fam = pairwise_decisive(rule, a, b)
        pair_masks = set(fam.masks)
        masks = pair_masks if masks is None else masks & pair_masks
    return SetFamily.from_masks(GroundSet(el.voters), masks)


def verify_arrow(rule):
    """Check the three axioms; when they all hold and |C| ≥ 3, verify that
    the decisive family is an ultrafilter and name its generator as the
    dictator."""
    axioms = check_axioms(rule)
    report = {"axioms": axioms, "family_verdict": None, "dictator": None}
    if not (axioms["iia"] and axioms["monotone"] and axioms["unanimity"]):
        return report
    fam = decisive_family(rule)
    verdict = classify_family(fam)
    report["decisive_family"] = fam
    report["family_verdict"] = verdict.kind
    if rule.election.candidates >= 3:
        if verdict.kind != "ultrafilter":
            raise AssertionError(
                "axioms passed with ≥ 3 candidates but the decisive family "
                "is %s — impossibility-theorem violation" % verdict.kind
            )
        generator_mask = min(fam.masks, key=lambda m: bin(m).count("1"))
        report["dictator"] = indices_of(generator_mask)[0]
    return report


def rule_from_ultrafilter(u, election):
    """a ≺_soc b iff {x : a ≺_x b} ∈ 𝒰; always a strict order."""
    if u.ground.size != election.voters:
        raise ValueError("ultrafilter ground must equal the voter set")
    verdict = classify_family(u)
    if verdict.kind != "ultrafilter":
        raise NotUltrafilter("family is %s" % verdict.kind, verdict.witness)

    def social(orders):
        m = election.candidates
        below_count = [0] * m
        for a in range(m):
            for b in range(m):
                if a != b:
                    supporters = mask_of(
                        v for v in range(election.voters) if prec(orders[v], a, b)
                    )
                    if u.has_mask(supporters):
                        below_count[b] += 1
        return tuple(sorted(range(m), key=lambda c: below_count[c]))

    return AggregationRule(election, func=social)


def weighted_threshold_rule(weights, t, election):
    """Two-candidate weighted voting: candidate 1 wins over 0 iff the total
    weight preferring 1 exceeds t.  Returns the rule and its dictator (if
    any), found by exhaustive profile scan."""
    weights = list(weights)
    if election.candidates != 2:
        raise ValueError("weighted threshold rules need exactly 2 candidates")
    if len(weights) != election.voters:
        raise ValueError("one weight per voter")
    if not 0 < t < sum(weights):
        raise ValueError("threshold must satisfy 0 < t < Σ weights")

    def social(orders):
        yes = sum(w for w, o in zip(weights, orders) if prec(o, 0, 1))
        return (0, 1) if yes > t else (1, 0)

    rule = AggregationRule(election, func=social)
    dictator = None
    for v in range(election.voters):
        if all(
            rule.order(pidx) == profile_orders(election, pidx)[v]
            for pidx in range(election.profile_count)
        ):
            dictator = v
            break
    return {"rule": rule, "dictator": dictator}
