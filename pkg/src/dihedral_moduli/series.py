"""Truncated power series in ``x`` with :class:`Polynomial` coefficients.

Every series here has zero constant term and carries its truncation
order ``N`` explicitly: the coefficients of ``x**1 .. x**N`` are known,
everything beyond is ``O(x**(N+1))``.  Operations on two series require
equal orders.

Exponential series keep integer numerators: a series flagged
``exponential`` with stored coefficient ``a_n`` stands for
``sum a_n x**n / n!``.  Composition of two exponential series uses the
binomial convolution for powers of the inner series, followed by an exact
division by ``k!`` per power, so no rational arithmetic is ever needed.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Callable, Iterable, Union

from .combinatorics import count_P, partitions
from .polynomial import ONE, ZERO, InexactDivisionError, Polynomial

__all__ = [
    "TruncatedSeries",
    "compose",
    "revert",
    "revert_lagrange",
    "egf_scale",
    "TO_EGF",
    "FROM_EGF",
]

TO_EGF = "to_egf"
FROM_EGF = "from_egf"

Coefficient = Union[Polynomial, int]


def _as_poly(c: Coefficient) -> Polynomial:
    return c if isinstance(c, Polynomial) else Polynomial.constant(c)


class TruncatedSeries:
    __slots__ = ("_coeffs", "exponential")

    def __init__(self, coefficients: Iterable[Coefficient], exponential: bool = False):
        """``coefficients[k]`` is the coefficient of ``x**(k + 1)``."""
        self._coeffs = tuple(_as_poly(c) for c in coefficients)
        if not self._coeffs:
            raise ValueError("truncation order must be positive")
        self.exponential = exponential

    @classmethod
    def identity(cls, order: int, exponential: bool = False) -> "TruncatedSeries":
        return cls([ONE] + [ZERO] * (order - 1), exponential)

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coefficients(self) -> tuple[Polynomial, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Polynomial:
        """Coefficient of ``x**n`` (the numerator, for exponential series)."""
        if n == 0:
            return ZERO
        if not 1 <= n <= self.order:
            raise IndexError(f"x^{n} is beyond truncation order {self.order}")
        return self._coeffs[n - 1]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncatedSeries(self._coeffs[:order], self.exponential)

    def map_coefficients(self, fn: Callable[[Polynomial], Coefficient]) -> "TruncatedSeries":
        return TruncatedSeries((fn(c) for c in self._coeffs), self.exponential)

    def is_identity(self) -> bool:
        return self._coeffs[0] == ONE and not any(self._coeffs[1:])

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        if self.exponential != other.exponential:
            raise ValueError("cannot mix ordinary and exponential series")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries((a + b for a, b in zip(self._coeffs, other._coeffs)), self.exponential)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries((a - b for a, b in zip(self._coeffs, other._coeffs)), self.exponential)

    def __neg__(self) -> "TruncatedSeries":
        return self.map_coefficients(lambda c: -c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self.exponential == other.exponential
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self._coeffs, self.exponential))

    def __repr__(self) -> str:
        kind = ", exponential=True" if self.exponential else ""
        return f"TruncatedSeries({list(self._coeffs)!r}{kind})"

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self._coeffs, start=1):
            if not c:
                continue
            mono = "x" if n == 1 else f"x^{n}"
            if self.exponential and n > 1:
                mono += f"/{n}!"
            terms.append(mono if c == ONE else f"({c})*{mono}")
        terms.append(f"O(x^{self.order + 1})")
        return " + ".join(terms)

    # method spellings of the module-level operations
    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        return compose(self, inner)

    def revert(self) -> "TruncatedSeries":
        return revert(self)


def _mul_trunc(a: list[Polynomial], b: list[Polynomial], order: int) -> list[Polynomial]:
    """Product of two zero-constant-term coefficient lists, index k <-> x^(k+1)."""
    out = [ZERO] * order
    for i, ai in enumerate(a):
        if not ai:
            continue
        # x^(i+1) * x^(j+1) lands on index i + j + 1
        for j in range(order - i - 1):
            bj = b[j]
            if bj:
                out[i + j + 1] = out[i + j + 1] + ai * bj
    return out


def _binomial_mul_trunc(a: list[Polynomial], b: list[Polynomial], order: int) -> list[Polynomial]:
    """Product of two exponential numerator lists: sum C(n, i) a_i b_(n-i)."""
    out = [ZERO] * order
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(order - i - 1):
            bj = b[j]
            if bj:
                n = i + j + 2
                out[n - 1] = out[n - 1] + ai * bj * comb(n, i + 1)
    return out


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(x))`` through ``x**N``."""
    outer._check_compatible(inner)
    order = outer.order
    inner_c = list(inner.coefficients)
    result = [ZERO] * order
    power = list(inner_c)
    mul = _binomial_mul_trunc if outer.exponential else _mul_trunc
    for k in range(1, order + 1):
        ok = outer[k]
        if ok:
            for n, pn in enumerate(power):
                if pn:
                    if outer.exponential:
                        # numerator of inner^k / k! is an integer (partial Bell polynomial)
                        try:
                            pn = pn.exact_div(factorial(k))
                        except InexactDivisionError as exc:
                            raise InexactDivisionError(
                                f"power {k} of the inner series, x^{n + 1}: {exc}"
                            ) from None
                    result[n] = result[n] + ok * pn
        if k < order:
            power = mul(power, inner_c, order)
    return TruncatedSeries(result, outer.exponential)


def _check_revertible(s: TruncatedSeries) -> None:
    if s[1] != ONE:
        raise ValueError(f"reversion needs x-coefficient 1, got {s[1]}")
    if s.exponential:
        raise ValueError("reversion of exponential series is not supported; convert first")


def revert(s: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse ``t`` with ``s(t(x)) = x``.

    Solved one coefficient at a time: the ``x**n`` coefficient of ``s(t)``
    is ``t_n`` plus terms involving only ``t_1 .. t_(n-1)``.  The table
    ``powers[k][m]`` holds the ``x**m`` coefficient of ``t**k`` and is filled
    column by column.
    """
    _check_revertible(s)
    order = s.order
    t = [ZERO, ONE]  # t[m] is the x^m coefficient
    powers = [None, t, [ZERO, ZERO, ONE]]  # powers[k][m], m <= current column
    for n in range(2, order + 1):
        total = ZERO
        for k in range(2, n + 1):
            if k == len(powers):
                powers.append([ZERO] * k + [ONE])  # t^k starts at x^k
            col = powers[k]
            if len(col) <= n:
                prev = powers[k - 1]
                acc = ZERO
                for j in range(1, n - k + 2):
                    if t[j] and prev[n - j]:
                        acc = acc + t[j] * prev[n - j]
                col.append(acc)
            sk = s[k]
            if sk and col[n]:
                total = total + sk * col[n]
        t.append(-total)
    return TruncatedSeries(t[1:order + 1])


def revert_lagrange(s: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse by summing over dissection types.

    For ``s = x - sum u_n x**n`` the inverse is ``x + sum v_n x**n`` with
    ``v_n = sum over lam |- n-1 of P(lam) * prod u_(i+1)**lam_i``.
    """
    _check_revertible(s)
    order = s.order
    u = {i: -s[i] for i in range(2, order + 1)}
    pow_cache: dict[tuple[int, int], Polynomial] = {}

    def upow(i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in pow_cache:
            pow_cache[key] = u[i] if e == 1 else upow(i, e - 1) * u[i]
        return pow_cache[key]

    v = [ONE]
    for n in range(2, order + 1):
        total = ZERO
        for lam in partitions(n - 1):
            term = Polynomial.constant(count_P(lam))
            for i, mult in lam.multiplicities:
                if not u[i + 1]:
                    term = ZERO
                    break
                term = term * upow(i + 1, mult)
            if term:
                total = total + term
        v.append(total)
    return TruncatedSeries(v)


def egf_scale(s: TruncatedSeries, direction: str) -> TruncatedSeries:
    """Switch between ordinary coefficients and exponential numerators.

    ``to_egf`` multiplies the ``x**n`` coefficient by ``n!`` and flags the
    result exponential; ``from_egf`` divides by ``n!`` and raises
    :class:`InexactDivisionError` if any division leaves a remainder.
    """
    if direction == TO_EGF:
        if s.exponential:
            raise ValueError("series is already exponential")
        return TruncatedSeries((c * factorial(n) for n, c in enumerate(s.coefficients, 1)), True)
    if direction == FROM_EGF:
        if not s.exponential:
            raise ValueError("series is not exponential")
        return TruncatedSeries(c.exact_div(factorial(n)) for n, c in enumerate(s.coefficients, 1))
    raise ValueError(f"unknown direction {direction!r}")
