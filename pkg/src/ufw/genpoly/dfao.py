"""Automatic functions via deterministic finite automata with output.

The automaton reads the base-a digits of n least-significant first (the
Σ λᵢ·bⁱ pairing aligns output index i with digit index i); a flag allows
most-significant-first experiments.  f(n) = Σᵢ λ(qᵢ, μᵢ)·bⁱ with
q₀ = q_init and qᵢ₊₁ = τ(qᵢ, μᵢ).
"""

from dataclasses import dataclass

from .digits import _base_digits


@dataclass(frozen=True)
class Dfao:
    """states: number of states (0..states-1); init: initial state;
    tau/lam: transition and output tables indexed [state][digit];
    in_base a, out_base b."""

    states: int
    init: int
    tau: tuple
    lam: tuple
    in_base: int
    out_base: int

    def __post_init__(self):
        tau = tuple(tuple(row) for row in self.tau)
        lam = tuple(tuple(row) for row in self.lam)
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "lam", lam)
        if len(tau) != self.states or len(lam) != self.states:
            raise ValueError("tau/lam must have one row per state")
        for row in tau:
            if len(row) != self.in_base or any(not 0 <= q < self.states for q in row):
                raise ValueError("tau rows must map every digit to a state")
        for row in lam:
            if len(row) != self.in_base or any(v < 0 for v in row):
                raise ValueError("lam rows must be non-negative, one per digit")
        if not 0 <= self.init < self.states:
            raise ValueError("initial state out of range")

    def to_json(self):
        return {
            "states": self.states,
            "init": self.init,
            "tau": [list(r) for r in self.tau],
            "lam": [list(r) for r in self.lam],
            "in_base": self.in_base,
            "out_base": self.out_base,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            obj["states"], obj["init"], obj["tau"], obj["lam"],
            obj["in_base"], obj["out_base"],
        )


def dfao_eval(m, n, msd_first=False):
    """Run the automaton on the digits of n and collect Σ λᵢ·bⁱ."""
    if n < 0:
        raise ValueError("n must be non-negative")
    digits = _base_digits(n, m.in_base)
    if msd_first:
        digits = digits[::-1]
    state = m.init
    total = 0
    power = 1
    for d in digits:
        total += m.lam[state][d] * power
        state = m.tau[state][d]
        power *= m.out_base
    return total


def validate_bijective(m):
    """True iff τ(·, d) is a bijection on states for every digit d."""
    for d in range(m.in_base):
        image = {m.tau[q][d] for q in range(m.states)}
        if len(image) != m.states:
            return False
    return True


def identity_dfao(a):
    """One-state automaton computing f(n) = n (λ = digit, b = a)."""
    return Dfao(1, 0, [[0] * a], [list(range(a))], a, a)


def digit_sum_dfao(a):
    """One-state automaton computing the digit sum (λ = digit, b = 1)."""
    return Dfao(1, 0, [[0] * a], [list(range(a))], a, 1)
