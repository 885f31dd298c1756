"""Exact discrete calculus on rational polynomials: the difference operator
Δ_a, the symmetric difference Δ̄_a, k-fold symmetric differences (recursive
and explicit inclusion–exclusion forms), degree/leading-coefficient laws,
and conversion to the binomial-coefficient basis.

Everything here is exact rational arithmetic; no floats anywhere.
"""

from fractions import Fraction
from math import comb, factorial

NEG_INF = float("-inf")


class RationalPoly:
    """Dense univariate polynomial over exact rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    @property
    def degree(self):
        """Degree, with the zero polynomial at the −∞ sentinel (so that
        degree arithmetic like deg − 1 stays −∞)."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self):
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return RationalPoly(
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RationalPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, RationalPoly):
            return RationalPoly([c * Fraction(other) for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def shift(self, a):
        """The polynomial x ↦ f(x + a), expanded exactly."""
        a = Fraction(a)
        out = [Fraction(0)] * len(self.coeffs)
        for d, c in enumerate(self.coeffs):
            # c·(x+a)^d
            power = Fraction(1)
            for j in range(d, -1, -1):
                out[j] += c * comb(d, j) * power
                power *= a
        return RationalPoly(out)

    def __eq__(self, other):
        return isinstance(other, RationalPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "RationalPoly(%r)" % (list(self.coeffs),)

    def to_json(self):
        return {"monomial": ["%d/%d" % (c.numerator, c.denominator) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        if "monomial" in obj:
            return cls([Fraction(s) for s in obj["monomial"]])
        if "binomial" in obj:
            return binomial_to_monomial(BinomialPoly([Fraction(s) for s in obj["binomial"]]))
        raise ValueError("expected a 'monomial' or 'binomial' key")


class BinomialPoly:
    """Coefficients c_0..c_d over the basis e_n(x) = C(x, n)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("BinomialPoly is immutable")

    def __eq__(self, other):
        return isinstance(other, BinomialPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "BinomialPoly(%r)" % (list(self.coeffs),)

    def is_integer_valued(self):
        """Integer-valued on ℤ iff every basis coefficient is an integer."""
        return all(c.denominator == 1 for c in self.coeffs)

    def to_json(self):
        return {"binomial": ["%d/%d" % (c.numerator, c.denominator) for c in self.coeffs]}


def binomial_basis_poly(n):
    """e_n(x) = x(x−1)…(x−n+1)/n! as a RationalPoly."""
    poly = RationalPoly([1])
    for i in range(n):
        poly = poly * RationalPoly([-i, 1])
    return poly * Fraction(1, factorial(n))


def delta(f, a):
    """(Δ_a f)(x) = f(x+a) − f(x)."""
    return f.shift(a) - f


def sym_delta(f, a):
    """(Δ̄_a f)(x) = f(x+a) − f(x) − f(a)."""
    a = Fraction(a)
    return f.shift(a) - f - RationalPoly([f(a)])


def sym_delta_k(f, xs, algorithm="recursive"):
    """k-fold symmetric difference Δ̄^k f(x₀, x₁..x_k) as a polynomial in x₀.

    ``xs`` supplies the rational parameters x₁..x_k.  The two algorithms —
    iterated Δ̄ and the inclusion–exclusion closed form
    Σ_{∅≠I⊆[k+1]} (−1)^{k+1−|I|} f(Σ_{i∈I} xᵢ) — must agree exactly.
    """
    xs = [Fraction(x) for x in xs]
    if not xs:
        raise ValueError("need k ≥ 1 parameters")
    if algorithm == "recursive":
        g = f
        for a in reversed(xs):
            g = sym_delta(g, a)
        return g
    if algorithm == "explicit":
        k = len(xs)
        total = RationalPoly([])
        for subset in range(1, 1 << (k + 1)):
            sign = (-1) ** (k + 1 - bin(subset).count("1"))
            rest = sum(xs[i - 1] for i in range(1, k + 1) if subset & (1 << i))
            if subset & 1:
                term = f.shift(rest)
            else:
                term = RationalPoly([f(Fraction(rest))])
            total = total + (term if sign > 0 else -term)
        return total
    raise ValueError("algorithm must be 'recursive' or 'explicit'")


def sym_delta_k_eval(func, points):
    """Evaluate Δ̄^k f at (x₀..x_k) for a black-box f via the explicit
    inclusion–exclusion formula (no symbolic result)."""
    points = list(points)
    k = len(points) - 1
    if k < 1:
        raise ValueError("need at least two evaluation points")
    total = 0
    for subset in range(1, 1 << (k + 1)):
        sign = (-1) ** (k + 1 - bin(subset).count("1"))
        s = sum(points[i] for i in range(k + 1) if subset & (1 << i))
        total += sign * func(s)
    return total


def degree_leading(f, a):
    """(deg, lc) of Δ_a f; the degree law predicts (deg f − 1, deg f·a·lc f)."""
    if f.degree == NEG_INF:
        raise ValueError("f must be non-zero")
    if Fraction(a) == 0:
        raise ValueError("a must be non-zero")
    d = delta(f, a)
    return d.degree, d.leading


def basis_convert(f):
    """Monomial → binomial basis, via forward differences c_n = (Δ₁ⁿf)(0)."""
    coeffs = []
    g = f
    while g.degree != NEG_INF or not coeffs:
        coeffs.append(g(Fraction(0)))
        if g.degree == NEG_INF:
            break
        g = delta(g, 1)
    return BinomialPoly(coeffs)


def binomial_to_monomial(b):
    """Binomial → monomial basis, exactly."""
    total = RationalPoly([])
    for n, c in enumerate(b.coeffs):
        total = total + binomial_basis_poly(n) * c
    return total


def verify_product_rule(f, g, a):
    """Δ_a(fg) = Δ_a f·Δ_a g + Δ_a f·g + f·Δ_a g, exactly."""
    df, dg = delta(f, a), delta(g, a)
    return delta(f * g, a) == df * dg + df * g + f * dg


def nonsym_relation(f, points):
    """Δ̄^k f(x₀..x_k) − (−1)^k f(0) = (Δ_{x₀}…Δ_{x_k} f)(0), exactly."""
    points = [Fraction(x) for x in points]
    k = len(points) - 1
    if k < 1:
        raise ValueError("need at least two points")
    lhs = sym_delta_k(f, points[1:], "recursive")(points[0]) - (-1) ** k * f(Fraction(0))
    g = f
    for a in points:
        g = delta(g, a)
    return lhs == g(Fraction(0))
