"""Exact dense integer polynomials and the eventual-dominance order.

Coefficients are arbitrary-precision Python ints stored ascending by
degree, with trailing zeros trimmed; the zero polynomial stores an empty
tuple.  Values are immutable and freely shareable.
"""

from __future__ import annotations

import json
from typing import Iterable


class IntPolynomial:
    """Immutable univariate polynomial over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return cls((0,) * degree + (coeff,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        """Product of (x - a) over the given integers (1 for an empty list)."""
        p = cls.one()
        for a in roots:
            p = p * cls((-int(a), 1))
        return p

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, i: int) -> int:
        if i < 0:
            raise ValueError("coefficient index must be nonnegative")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- ring arithmetic --------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __rmul__(self, other: int) -> "IntPolynomial":
        return self * other

    # -- evaluation and composition ----------------------------------------

    def evaluate(self, x: int) -> int:
        """Exact evaluation at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    def shift(self, k: int) -> "IntPolynomial":
        """Return q with q(x) = p(x - k), by Horner in the shifted variable."""
        if k < 0:
            raise ValueError("shift amount must be nonnegative")
        step = IntPolynomial((-k, 1))  # x - k
        acc = IntPolynomial.zero()
        for c in reversed(self.coeffs):
            acc = acc * step + IntPolynomial((c,))
        return acc

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- rendering ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        """Human-readable descending form, e.g. 'x^3 - 6x^2 + 11x - 6'."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                term = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(f"-{term}" if c < 0 else term)
            else:
                parts.append(f" {sign} {term}")
        return "".join(parts)

    def vector_str(self) -> str:
        """Coefficient-vector rendering '[c0, c1, ..., cn]' (ascending degree)."""
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    def to_json(self) -> str:
        """JSON array of decimal strings, exact round-trip."""
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("polynomial JSON must be an array of decimal strings")
        return cls(int(s) for s in data)


def compare_eventually(p: IntPolynomial, q: IntPolynomial) -> str:
    """Order two polynomials by their values at all sufficiently large x.

    Returns 'equal' iff p - q is the zero polynomial; otherwise 'p_wins'
    when the leading coefficient of p - q is positive (p(x) > q(x) for
    every large enough x) and 'q_wins' when it is negative.
    """
    d = p - q
    if d.is_zero():
        return "equal"
    return "p_wins" if d.leading > 0 else "q_wins"


def elementary_symmetric(values: Iterable[int], i: int) -> int:
    """i-th elementary symmetric function of a list (sum of i-subset products).

    S_0 is 1 for any list; raises ValueError when i is outside 0..len(values).
    """
    vals = [int(v) for v in values]
    if i < 0 or i > len(vals):
        raise ValueError(f"symmetric function index {i} out of range 0..{len(vals)}")
    e = [1] + [0] * i
    for v in vals:
        for j in range(min(i, len(e) - 1), 0, -1):
            e[j] += v * e[j - 1]
    return e[i]
