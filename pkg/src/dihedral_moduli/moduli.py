"""Poincare polynomials and Betti numbers of M_{0,n}, M_{0,n}^delta and the
compactification, plus the consistency checks tying them together.

All public functions take ``n`` = number of marked points of the space
they describe: ``euler_open(5)`` is the polynomial of M_{0,5}.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial, prod

from .combinatorics import count_P, count_T, enumerate_dissections, partitions
from .polynomial import ONE, ZERO, Polynomial, from_root_range
from .series import TruncatedSeries, compose, revert

__all__ = [
    "METHODS",
    "BettiTable",
    "PurityViolation",
    "MethodDisagreement",
    "CheckResult",
    "Report",
    "euler_open",
    "euler_delta",
    "euler_compact",
    "stratification_terms",
    "open_series",
    "delta_series",
    "betti_numbers",
    "betti_table",
    "closed_formula_check",
    "middle_betti",
    "corollary_sequence",
    "cross_method_check",
    "dissection_oracle_check",
    "verify_inversion",
    "gk_series",
    "clear_caches",
    "PUBLISHED_TABLE",
]

METHODS = ("stratification", "inversion", "recurrence")

# Betti numbers a_{n,i} for i = 1 .. n-3 as printed for 5 <= n <= 11.
PUBLISHED_TABLE = {
    5: (0, 1),
    6: (0, 5, 4),
    7: (0, 15, 28, 22),
    8: (0, 35, 112, 206, 144),
    9: (0, 70, 336, 1063, 1704, 1089),
    10: (0, 126, 840, 3999, 10848, 15709, 9308),
    11: (0, 210, 1848, 12255, 49368, 119857, 159412, 88562),
}


class PurityViolation(ArithmeticError):
    """A Poincare polynomial does not have the alternating sign pattern."""


class MethodDisagreement(ArithmeticError):
    """Two independent computations of the same quantity differ."""


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"M_0,n needs n >= 3, got {n}")


@lru_cache(maxsize=None)
def euler_open(n: int) -> Polynomial:
    """e(M_{0,n})(q) = (q-2)(q-3)...(q-(n-2))."""
    _check_n(n)
    return from_root_range(2, n - 2)


def _stratify(n: int, weight) -> Polynomial:
    total = ZERO
    for lam in partitions(n - 2):
        term = Polynomial.constant(weight(lam))
        for i, mult in lam.multiplicities:
            term = term * euler_open(i + 2) ** mult
        total = total + term
    return total


def stratification_terms(n: int) -> list[tuple]:
    """``(lam, P(lam), stratum polynomial)`` for every type of n-gon dissection."""
    _check_n(n)
    out = []
    for lam in partitions(n - 2):
        stratum = prod((euler_open(i + 2) ** mult for i, mult in lam.multiplicities), start=ONE)
        out.append((lam, count_P(lam), stratum))
    return out


# -- the three routes to e(M_{0,n}^delta) ----------------------------------------


def open_series(order: int) -> TruncatedSeries:
    """f(x) = x - sum_{m>=2} e(M_{0,m+1}) x^m."""
    return TruncatedSeries([ONE] + [-euler_open(m + 1) for m in range(2, order + 1)])


def delta_series(order: int, method: str = "stratification") -> TruncatedSeries:
    """f_delta(x) = x + sum_{m>=2} e(M_{0,m+1}^delta) x^m."""
    return TruncatedSeries([ONE] + [euler_delta(m + 1, method) for m in range(2, order + 1)])


_inverted: list[TruncatedSeries] = []


def _inverted_open_series(order: int) -> TruncatedSeries:
    # reversion is prefix-stable, so one inversion at the largest order serves all
    if not _inverted or _inverted[0].order < order:
        _inverted[:] = [revert(open_series(order))]
    return _inverted[0].truncate(order)


_recurrence_values: list[Polynomial] = []


def _recurrence(upto: int) -> list[Polynomial]:
    """a_0 .. a_upto of the recurrence, with a_m = (-1)^(m+1) e(M_{0,m+1}^delta)."""
    a = _recurrence_values
    if not a:
        a.extend([ZERO, ONE])
    q = Polynomial((0, 1))
    while len(a) <= upto:
        m = len(a)
        total = ZERO
        for k in range(2, m):
            total = total - a[k] * a[m + 1 - k] * k
        for k in range(1, m):
            total = total + (q * k - 1) * a[k] * a[m - k]
        triple = ZERO
        for k in range(1, m):
            for l in range(1, m + 1 - k):
                j = m + 1 - k - l
                if j >= 1:
                    triple = triple + a[k] * a[l] * a[j] * k
        total = total - q * triple
        a.append(total)
    return a[: upto + 1]


@lru_cache(maxsize=None)
def euler_delta(n: int, method: str = "stratification") -> Polynomial:
    """e(M_{0,n}^delta)(q) by one of ``METHODS``."""
    _check_n(n)
    if method == "stratification":
        return _stratify(n, count_P)
    if method == "inversion":
        if n == 3:
            return ONE
        return _inverted_open_series(n - 1)[n - 1]
    if method == "recurrence":
        a = _recurrence(n - 1)[n - 1]
        return a if n % 2 == 0 else -a
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


@lru_cache(maxsize=None)
def euler_compact(n: int) -> Polynomial:
    """e of the compactification, summing strata with the dual-graph counts T."""
    _check_n(n)
    return _stratify(n, count_T)


def clear_caches() -> None:
    """Forget memoised results (used when tests swap in perturbed pieces)."""
    for fn in (euler_open, euler_delta, euler_compact):
        fn.cache_clear()
    _inverted.clear()
    _recurrence_values.clear()


# -- Betti numbers -----------------------------------------------------------


def betti_numbers(poly: Polynomial, dim: int) -> tuple[int, ...]:
    """Read a_i = (-1)^i [q^(dim-i)] off a pure Poincare polynomial."""
    if poly.degree > dim:
        raise PurityViolation(f"degree {poly.degree} exceeds dimension {dim}")
    out = []
    for i in range(dim + 1):
        a = (-1) ** i * poly.coefficient(dim - i)
        if a < 0:
            raise PurityViolation(f"negative Betti number {a} in degree {i} of {poly}")
        out.append(a)
    return tuple(out)


@dataclass
class BettiTable:
    """a_{n,i} = dim H^i(M_{0,n}^delta) for each computed n; row n has n-2 entries."""

    rows: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        n, i = key
        return self.rows[n][i]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]

    @property
    def n_values(self) -> list[int]:
        return sorted(self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "i", "a"])
        for n in self.n_values:
            for i, a in enumerate(self.rows[n]):
                w.writerow([n, i, a])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "BettiTable":
        cells: dict[int, dict[int, int]] = {}
        reader = csv.DictReader(io.StringIO(text))
        if reader.fieldnames != ["n", "i", "a"]:
            raise ValueError(f"unexpected CSV header {reader.fieldnames}")
        for rec in reader:
            cells.setdefault(int(rec["n"]), {})[int(rec["i"])] = int(rec["a"])
        rows = {}
        for n, entries in cells.items():
            if sorted(entries) != list(range(len(entries))):
                raise ValueError(f"row n={n} has gaps")
            rows[n] = tuple(entries[i] for i in range(len(entries)))
        return cls(rows)

    def to_json(self) -> str:
        return json.dumps({str(n): list(self.rows[n]) for n in self.n_values}, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        data = json.loads(text)
        return cls({int(n): tuple(int(a) for a in row) for n, row in data.items()})

    def render(self) -> str:
        width = max(n - 2 for n in self.rows)
        cols = [max(len(str(self.rows[n][i])) for n in self.rows if i < len(self.rows[n])) for i in range(width)]
        cols = [max(c, len(f"a{i}")) for i, c in enumerate(cols)]
        lines = ["n   " + "  ".join(f"a{i}".rjust(cols[i]) for i in range(width))]
        for n in self.n_values:
            cells = [str(a).rjust(cols[i]) for i, a in enumerate(self.rows[n])]
            lines.append(f"{n:<3} " + "  ".join(cells))
        return "\n".join(line.rstrip() for line in lines)


def betti_table(n_max: int, method: str = "stratification") -> BettiTable:
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    return BettiTable({n: betti_numbers(euler_delta(n, method), n - 3) for n in range(3, n_max + 1)})


# -- checks --------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class Report:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail))

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    def __str__(self) -> str:
        return "\n".join(c.line() for c in self.checks)


def closed_formula_check(n_max: int) -> Report:
    """a_{n,2} = C(n-1, 4) and a_{n,3} = 4 C(n, 6) for 5 <= n <= n_max."""
    if n_max < 5:
        raise ValueError("n_max must be at least 5")
    table = betti_table(n_max)
    report = Report()
    for n in range(5, n_max + 1):
        got2, want2 = table[n, 2], comb(n - 1, 4)
        report.add(f"a[{n},2] = C({n - 1},4)", got2 == want2, f"{got2} vs {want2}")
        if n >= 6:
            got3, want3 = table[n, 3], 4 * comb(n, 6)
            report.add(f"a[{n},3] = 4*C({n},6)", got3 == want3, f"{got3} vs {want3}")
    return report


def corollary_sequence(upto: int) -> list[int]:
    """b_0 .. b_upto with b_m = dim H^(m-2)(M_{0,m+1}^delta) for m >= 2.

    b_m = sum_{k+l=m+1, k,l>=2} k b_k b_l + sum_{k+l=m} b_k b_l, b_0 = 0, b_1 = -1.
    """
    b = [0, -1]
    for m in range(2, upto + 1):
        total = sum(k * b[k] * b[m + 1 - k] for k in range(2, m))
        total += sum(b[k] * b[m - k] for k in range(1, m))
        b.append(total)
    return b[: upto + 1]


def _middle_by_recurrence(n_max: int) -> list[int]:
    b = corollary_sequence(n_max - 1)
    return [b[n - 1] for n in range(4, n_max + 1)]


def _middle_by_q_zero(n_max: int) -> list[int]:
    return [(-1) ** (n - 3) * euler_delta(n)(0) for n in range(4, n_max + 1)]


def _middle_by_inverse_series(n_max: int) -> list[int]:
    # inverse of x + sum (m-1)! x^m is x - sum b_m x^m
    order = n_max - 1
    s = TruncatedSeries([1] + [factorial(m - 1) for m in range(2, order + 1)])
    t = revert(s)
    return [-t[n - 1](0) for n in range(4, n_max + 1)]


_MIDDLE = {
    "recurrence": _middle_by_recurrence,
    "q_zero": _middle_by_q_zero,
    "inverse_series": _middle_by_inverse_series,
}


def middle_betti(n_max: int, method: str = "recurrence") -> list[int]:
    """dim H^(n-3)(M_{0,n}^delta) for 4 <= n <= n_max.

    The requested method is cross-checked against the q = 0 value of the
    stratification sum; a mismatch raises :class:`MethodDisagreement`.
    """
    if n_max < 4:
        raise ValueError("n_max must be at least 4")
    if method not in _MIDDLE:
        raise ValueError(f"unknown method {method!r}")
    values = _MIDDLE[method](n_max)
    if method != "q_zero":
        ref = _middle_by_q_zero(n_max)
        if values != ref:
            raise MethodDisagreement(f"{method} gives {values}, q=0 gives {ref}")
    return values


def cross_method_check(n_max: int) -> Report:
    report = Report()
    for n in range(3, n_max + 1):
        vals = {m: euler_delta(n, m) for m in METHODS}
        ok = len(set(vals.values())) == 1
        detail = "" if ok else "; ".join(f"{m}: {v}" for m, v in vals.items())
        report.add(f"e(M_0,{n}^delta) agrees across methods", ok, detail)
    return report


def dissection_oracle_check(n_max: int) -> Report:
    report = Report()
    for n in range(3, n_max + 1):
        found = enumerate_dissections(n)
        bad = [str(lam) for lam in partitions(n - 2) if found.get(lam, 0) != count_P(lam)]
        extra = [str(lam) for lam in found if lam.weight != n - 2]
        ok = not bad and not extra
        detail = f"{sum(found.values())} dissections"
        if not ok:
            detail += f"; mismatched types {bad + extra}"
        report.add(f"{n}-gon dissections match P(lambda)", ok, detail)
    return report


def _residual_detail(residual: TruncatedSeries) -> str:
    bad = [f"x^{n}: {residual[n]}" for n in range(1, residual.order + 1) if residual[n]]
    return "all residual coefficients zero" if not bad else "nonzero " + ", ".join(bad)


def _identity_check(report: Report, name: str, composed: TruncatedSeries) -> None:
    residual = composed - TruncatedSeries.identity(composed.order, composed.exponential)
    report.add(name, composed.is_identity(), _residual_detail(residual))


def gk_series(order: int, substitution: int = 2, compact_substitution: int | None = None):
    """The exponential series g and g-bar, as integer numerators.

    ``g`` has numerators ``-e(M_{0,m+1})(q**substitution)`` and ``g-bar``
    has ``e(compactification of M_{0,m+1})(q**compact_substitution)``; by
    default both use the same substitution.
    """
    if compact_substitution is None:
        compact_substitution = substitution
    g = TruncatedSeries(
        [ONE] + [-euler_open(m + 1).substitute_power(substitution) for m in range(2, order + 1)],
        exponential=True,
    )
    gbar = TruncatedSeries(
        [ONE] + [euler_compact(m + 1).substitute_power(compact_substitution) for m in range(2, order + 1)],
        exponential=True,
    )
    return g, gbar


def verify_inversion(order: int) -> Report:
    """Check f(f_delta) = f_delta(f) = x and gbar(g) = g(gbar) = x exactly.

    f_delta is built from the stratification sum, gbar from the dual-graph
    stratification of the compactification.  Both exponential series use
    ``q -> q^2``; the relation only holds when g and gbar share a variable.
    """
    if order < 1:
        raise ValueError("order must be positive")
    report = Report()
    if order == 1:
        report.add("order 1: every series is x", True)
        return report
    f = open_series(order)
    fd = delta_series(order, "stratification")
    _identity_check(report, f"f(f_delta(x)) = x to order {order}", compose(f, fd))
    _identity_check(report, f"f_delta(f(x)) = x to order {order}", compose(fd, f))
    g, gbar = gk_series(order)
    _identity_check(report, f"gbar(g(x)) = x to order {order}", compose(gbar, g))
    _identity_check(report, f"g(gbar(x)) = x to order {order}", compose(g, gbar))
    return report
