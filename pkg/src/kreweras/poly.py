"""Dense univariate polynomials in q with exact integer coefficients."""

from __future__ import annotations

import json
import math
import re
from typing import Iterable, Sequence

from .errors import InconsistencyError


class IntPolynomial:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of q^k, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * k + [coeff])

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls([c])

    @property
    def degree(self) -> float:
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @staticmethod
    def _coerce(other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(size))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial([1])
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by q^k."""
        return IntPolynomial([0] * k + list(self.coeffs)) if self else self

    def __divmod__(self, divisor):
        """Long division over the integers.

        Every quotient coefficient must be integral; otherwise the division is
        not defined in Z[q] and InconsistencyError is raised.
        """
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dl = len(divisor.coeffs)
        lead = divisor.coeffs[-1]
        if len(rem) < dl:
            return IntPolynomial(), self
        quot = [0] * (len(rem) - dl + 1)
        for k in range(len(quot) - 1, -1, -1):
            top = rem[k + dl - 1]
            if top % lead:
                raise InconsistencyError(f"non-integral quotient coefficient {top}/{lead}")
            factor = top // lead
            quot[k] = factor
            if factor:
                for j, b in enumerate(divisor.coeffs):
                    rem[k + j] -= factor * b
        return IntPolynomial(quot), IntPolynomial(rem)

    def __floordiv__(self, divisor):
        return divmod(self, divisor)[0]

    def __mod__(self, divisor):
        return divmod(self, divisor)[1]

    def exact_div(self, divisor) -> IntPolynomial:
        quot, rem = divmod(self, divisor)
        if rem:
            raise InconsistencyError(f"{self} is not divisible by {divisor}: remainder {rem}")
        return quot

    def divisible_by(self, divisor) -> bool:
        try:
            return not divmod(self, divisor)[1]
        except InconsistencyError:
            return False

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def mod_cyclic(poly: IntPolynomial, m: int) -> list[int]:
    """Coefficients a_0..a_{m-1} of ``poly`` reduced modulo q^m - 1."""
    if m < 1:
        raise ValueError(f"modulus exponent must be positive, got {m}")
    out = [0] * m
    for e, c in enumerate(poly.coeffs):
        out[e % m] += c
    return out


def format_poly(poly: IntPolynomial) -> str:
    """Ascending exponents, e.g. ``1 + q^2 + 2q^4``."""
    terms = []
    for e, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "q" if e == 1 else f"q^{e}"
            body = var if mag == 1 else f"{mag}{var}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(q(?:\^(\d+))?)?")


def parse_poly(text: str | Sequence[int]) -> IntPolynomial:
    """Inverse of ``format_poly``; a list of ints is read as ascending coefficients."""
    if not isinstance(text, str):
        return IntPolynomial(text)
    s = text.strip()
    if s.startswith("["):
        return IntPolynomial(json.loads(s))
    coeffs: dict[int, int] = {}
    pos = 0
    s = s.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
    top = max(coeffs)
    return IntPolynomial(coeffs.get(k, 0) for k in range(top + 1))
