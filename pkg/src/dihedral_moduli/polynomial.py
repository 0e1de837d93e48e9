"""Univariate integer polynomials in ``q``.

Coefficients are Python ints, stored low degree first.  Values are
immutable and always kept in canonical form (no trailing zero
coefficients; the zero polynomial has no coefficients at all).
"""

from __future__ import annotations

import re
from typing import Iterable, Union

__all__ = [
    "Polynomial",
    "InexactDivisionError",
    "add",
    "mul",
    "eval_int",
    "from_root_range",
    "Q",
    "ONE",
    "ZERO",
]


class InexactDivisionError(ArithmeticError):
    """An integer division that was required to be exact left a remainder."""


class Polynomial:
    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return 0

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return Polynomial(c * other for c in self._coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        # schoolbook: one pass over the shorter factor
        for j, bj in enumerate(b):
            if bj:
                for i, ai in enumerate(a):
                    out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div(self, d: int) -> "Polynomial":
        """Divide every coefficient by the integer ``d``; raise if any remainder."""
        if d == 0:
            raise ZeroDivisionError("polynomial division by zero")
        out = []
        for c in self._coeffs:
            quo, rem = divmod(c, d)
            if rem:
                raise InexactDivisionError(f"{self} is not divisible by {d}")
            out.append(quo)
        return Polynomial(out)

    def substitute_power(self, k: int) -> "Polynomial":
        """Return p(q**k)."""
        if k < 1:
            raise ValueError("substitution exponent must be positive")
        if k == 1 or not self._coeffs:
            return self
        out = [0] * (k * self.degree + 1)
        for i, c in enumerate(self._coeffs):
            out[k * i] = c
        return Polynomial(out)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def is_palindromic(self) -> bool:
        return self._coeffs == self._coeffs[::-1]

    # -- comparison and display --------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("Polynomial", self._coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        terms = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not terms:
                terms.append("-" + body if c < 0 else body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms) if terms else "0"

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Parse the grammar produced by ``str``, e.g. ``"q^3 + 5*q - 4"``.

        Whitespace is ignored and repeated powers are summed, so
        non-canonical input such as ``"2*q + q"`` is accepted too.
        """
        s = re.sub(r"\s+", "", text)
        if not s:
            raise ValueError("empty polynomial text")
        coeffs: dict[int, int] = {}
        pos = 0
        for m in _TERM.finditer(s):
            if m.start() != pos or not m.group(0):
                break
            if pos and not m.group("sign"):
                raise ValueError(f"missing operator in {text!r}")
            sign = -1 if m.group("sign") == "-" else 1
            if m.group("star") and not m.group("var"):
                raise ValueError(f"dangling '*' in {text!r}")
            if m.group("var"):
                c = int(m.group("coef")) if m.group("coef") else 1
                k = int(m.group("exp")) if m.group("exp") else 1
            elif m.group("coef"):
                c, k = int(m.group("coef")), 0
            else:
                raise ValueError(f"malformed term in {text!r}")
            coeffs[k] = coeffs.get(k, 0) + sign * c
            pos = m.end()
        if pos != len(s):
            raise ValueError(f"cannot parse polynomial {text!r}")
        out = [0] * (max(coeffs) + 1)
        for k, c in coeffs.items():
            out[k] = c
        return cls(out)


_TERM = re.compile(
    r"(?P<sign>[+-]?)(?:(?P<coef>\d+)(?P<star>\*)?)?(?P<var>q(?:\^(?P<exp>\d+))?)?"
)


def _coerce(x) -> Union[Polynomial, type(NotImplemented)]:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int):
        return Polynomial.constant(x)
    return NotImplemented


ZERO = Polynomial()
ONE = Polynomial((1,))
Q = Polynomial((0, 1))


def add(p: Polynomial, r: Polynomial) -> Polynomial:
    return p + r


def mul(p: Polynomial, r: Polynomial) -> Polynomial:
    return p * r


def eval_int(p: Polynomial, x: int) -> int:
    """Exact value of ``p`` at the integer ``x`` (Horner)."""
    return p(x)


def from_root_range(a: int, b: int) -> Polynomial:
    """The product of ``(q - i)`` for ``a <= i <= b``; 1 when ``b < a``."""
    result = ONE
    for i in range(a, b + 1):
        result = result * Polynomial((-i, 1))
    return result
