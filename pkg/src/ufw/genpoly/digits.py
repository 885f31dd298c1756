"""Digit systems: ordinary base-a expansions, mixed-radix (custom place
value) systems, and the Fibonacci/Zeckendorf system.

The Fibonacci system indexes place values f₀ = 1, f₁ = 2, fᵢ = fᵢ₋₁ + fᵢ₋₂;
its digits are 0/1 with no two adjacent ones (Zeckendorf expansions), which
makes the greedy expansion unique.

A digit map evaluates Σ μᵢ(n)·bᵢ for configurable weights bᵢ; with bᵢ equal
to the place values this reconstructs n, with bᵢ = 1 it is the digit sum,
and with bᵢ = bⁱ it reinterprets base-a digits in base b.

Negative n: all digits share the sign of n (the expansion of |n|, negated).
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class DigitSystem:
    """kind: 'base' (payload: radix a), 'custom' (payload: tuple of radices
    d₀, d₁, …, least-significant first), or 'fibonacci'.  ``weights``: either
    None (use place values: reconstruction), the string 'ones' (digit sum),
    or an explicit tuple bᵢ."""

    kind: str
    payload: tuple = ()
    weights: object = None

    @classmethod
    def base(cls, a, weights=None):
        if a < 2:
            raise ValueError("base must be ≥ 2")
        return cls("base", (a,), weights)

    @classmethod
    def custom(cls, radices, weights=None):
        radices = tuple(radices)
        if any(d < 2 for d in radices):
            raise ValueError("all radices must be ≥ 2")
        return cls("custom", radices, weights)

    @classmethod
    def fibonacci(cls, weights=None):
        return cls("fibonacci", (), weights)

    def place_values(self, count):
        """The first ``count`` place values aᵢ, least-significant first."""
        if self.kind == "base":
            a = self.payload[0]
            return [a**i for i in range(count)]
        if self.kind == "custom":
            if count > len(self.payload) + 1:
                raise ValueError("custom system has too few radices")
            out = [1]
            for d in self.payload[: count - 1]:
                out.append(out[-1] * d)
            return out
        if self.kind == "fibonacci":
            out = []
            a, b = 1, 2
            for _ in range(count):
                out.append(a)
                a, b = b, a + b
            return out
        raise ValueError("unknown digit system kind %r" % self.kind)


def _base_digits(n, a):
    digits = []
    while n:
        digits.append(n % a)
        n //= a
    return digits


def _custom_digits(n, radices):
    digits = []
    for d in radices:
        if not n:
            break
        digits.append(n % d)
        n //= d
    if n:
        raise ValueError("n too large for the custom system's radices")
    return digits


def _zeckendorf_digits(n):
    """Greedy Fibonacci expansion; guaranteed free of adjacent ones."""
    fibs = []
    a, b = 1, 2
    while a <= n:
        fibs.append(a)
        a, b = b, a + b
    digits = [0] * len(fibs)
    for i in range(len(fibs) - 1, -1, -1):
        if fibs[i] <= n:
            digits[i] = 1
            n -= fibs[i]
    assert n == 0
    return digits


def digit_map(n, sys):
    """Expand n in the system and evaluate the weighted digit sum.

    Returns {"digits": μ (least-significant first), "value": Σ μᵢ bᵢ}.
    """
    sign = -1 if n < 0 else 1
    m = abs(n)
    if sys.kind == "base":
        digits = _base_digits(m, sys.payload[0])
    elif sys.kind == "custom":
        digits = _custom_digits(m, sys.payload)
    elif sys.kind == "fibonacci":
        digits = _zeckendorf_digits(m)
    else:
        raise ValueError("unknown digit system kind %r" % sys.kind)
    digits = [sign * d for d in digits]
    if sys.weights is None:
        weights = sys.place_values(len(digits))
    elif sys.weights == "ones":
        weights = [1] * len(digits)
    else:
        weights = list(sys.weights[: len(digits)])
        if len(weights) < len(digits):
            raise ValueError("not enough weights for the expansion")
    value = sum(d * w for d, w in zip(digits, weights))
    return {"digits": digits, "value": value}


def base_change(n, a, b):
    """Reinterpret the base-a digits of n as a base-b expansion."""
    digits = digit_map(n, DigitSystem.base(a))["digits"]
    return sum(d * b**i for i, d in enumerate(digits))


def zeckendorf_indices(n):
    """Indices of the 1-digits of the Zeckendorf expansion of n ≥ 0."""
    return [i for i, d in enumerate(_zeckendorf_digits(n)) if d]
