"""Power series genera and their multiplicative sequences.

The L-genus series and everything derived from it is computed from scratch
in exact arithmetic; no tabulated L-polynomials are used.

Grading convention: the Pontryagin generator ``p_i`` has weight ``i``
(one weight unit is cohomological degree 4). Chern generators ``c_i`` have
weight ``i`` (one unit is degree 2), so ``p_k`` written in Chern classes has
weight ``2k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .exactalg import GradedPoly, Ring

DEFAULT_ORDER = 9


@dataclass(frozen=True)
class GenusSeries:
    """Truncated power series ``c_0 + c_1 z + ... + c_N z^N`` with rational coefficients."""

    coefficients: tuple

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a series needs at least its constant term")
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient z^{k} is beyond truncation order {self.order}")
        return self.coefficients[k]

    def __mul__(self, other: "GenusSeries") -> "GenusSeries":
        n = min(self.order, other.order)
        return GenusSeries(
            tuple(sum(self[i] * other[k - i] for i in range(k + 1)) for k in range(n + 1))
        )

    def inverse(self) -> "GenusSeries":
        if self[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [1 / self[0]]
        for k in range(1, self.order + 1):
            s = sum(self[i] * inv[k - i] for i in range(1, k + 1))
            inv.append(-s / self[0])
        return GenusSeries(tuple(inv))

    def __truediv__(self, other: "GenusSeries") -> "GenusSeries":
        return self * other.inverse()

    def truncate(self, n: int) -> "GenusSeries":
        return GenusSeries(self.coefficients[: n + 1])

    def log(self) -> "GenusSeries":
        """``log`` of a series with constant term 1 (constant term of the result is 0)."""
        if self[0] != 1:
            raise ValueError("log requires constant term 1")
        # f' = f * (log f)'
        n = self.order
        lg = [Fraction(0)] * (n + 1)
        for k in range(1, n + 1):
            # k * lg_k = k * f_k - sum_{j=1}^{k-1} j * lg_j * f_{k-j}
            s = k * self[k] - sum(j * lg[j] * self[k - j] for j in range(1, k))
            lg[k] = s / k
        return GenusSeries(tuple(lg))


def exp_series(n: int) -> GenusSeries:
    return GenusSeries(tuple(Fraction(1, factorial(k)) for k in range(n + 1)))


def _even_part(series: GenusSeries, shift: int, n: int) -> GenusSeries:
    """Coefficients ``series[2k + shift]`` for k = 0..n, read as a series in z = x^2."""
    return GenusSeries(tuple(series[2 * k + shift] for k in range(n + 1)))


def l_genus_series(n: int = DEFAULT_ORDER) -> GenusSeries:
    """``sqrt(z)/tanh(sqrt(z))`` to order ``z^n``.

    With ``x = sqrt(z)``: ``x/tanh(x) = cosh(x) / (sinh(x)/x)``, and both
    factors are read off the exponential series.
    """
    if n < 0:
        raise ValueError("truncation order must be non-negative")
    e = exp_series(2 * n + 1)
    cosh = _even_part(e, 0, n)
    sinh_over_x = _even_part(e, 1, n)
    return cosh / sinh_over_x


@lru_cache(maxsize=None)
def pontryagin_ring(n: int = DEFAULT_ORDER) -> Ring:
    return Ring.even(*((f"p{i}", i) for i in range(1, n + 1)))


@lru_cache(maxsize=None)
def chern_ring(rank: int) -> Ring:
    return Ring.even(*((f"c{i}", i) for i in range(1, rank + 1)))


def newton_power_sums(ring: Ring, elementary: Sequence[str], n: int) -> list:
    """Power sums ``N_0..N_n`` in terms of elementary symmetric generators.

    ``elementary[i-1]`` names ``e_i``; indices beyond the list are zero.
    Uses ``N_k = sum_{i<k} (-1)^(i-1) e_i N_(k-i) + (-1)^(k-1) k e_k``.
    ``N_0`` is returned as 0 (the rank term is not tracked).
    """
    def e(i):
        return ring.gen(elementary[i - 1]) if i <= len(elementary) else ring.zero()

    sums = [ring.zero()]
    for k in range(1, n + 1):
        s = e(k) * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            s = s + e(i) * sums[k - i] * (-1) ** (i - 1)
        sums.append(s)
    return sums


@dataclass(frozen=True)
class MultSeqTable:
    """``K_0 .. K_n`` of a multiplicative sequence, as polynomials in p_1..p_N."""

    entries: tuple
    series: GenusSeries

    def __getitem__(self, m: int) -> GradedPoly:
        return self.entries[m]

    def __len__(self):
        return len(self.entries)

    @property
    def ring(self) -> Ring:
        return self.entries[0].ring


def multiplicative_sequence(Q: GenusSeries, n: int) -> MultSeqTable:
    """Multiplicative sequence ``K_0..K_n`` of ``Q`` with ``p_i`` = elementary symmetric ``e_i``.

    With formal roots ``z_j`` and ``log Q(z) = sum_k l_k z^k``,
    ``prod_j Q(z_j) = exp(sum_k l_k N_k)`` where ``N_k`` is the k-th power sum
    of the roots. Newton's identities write ``N_k`` in the ``p_i``; the weight-m
    part of the exponential is ``K_m``. The result does not depend on the
    number of roots as long as it is at least m.
    """
    if Q[0] != 1:
        raise ValueError("multiplicative sequences need constant term 1")
    if n > Q.order:
        raise ValueError(f"n={n} exceeds the series truncation order {Q.order}")
    if n < 0:
        raise ValueError("n must be non-negative")
    ring = pontryagin_ring(Q.order)
    lg = Q.log()
    sums = newton_power_sums(ring, ring.names, n)
    exponent = ring.zero()
    for k in range(1, n + 1):
        exponent = exponent + sums[k] * lg[k]
    # exp of a series with no constant term, truncated at weight n
    total = ring.one()
    term = ring.one()
    for j in range(1, n + 1):
        term = (term * exponent).truncate(n) / j
        if term.is_zero():
            break
        total = total + term
    entries = tuple(total.component(m) for m in range(n + 1))
    return MultSeqTable(entries, Q)


@lru_cache(maxsize=None)
def _l_table(order: int) -> MultSeqTable:
    return multiplicative_sequence(l_genus_series(order), order)


def l_polynomial(n: int, order: int = DEFAULT_ORDER) -> GradedPoly:
    """Hirzebruch ``L_n`` in ``pontryagin_ring(max(order, n))``."""
    return _l_table(max(order, n))[n]


def atiyah_singer_l(n: int, order: int = DEFAULT_ORDER) -> GradedPoly:
    """Atiyah-Singer modified L-polynomial, ``L~_n = 2^(-n) L_n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return l_polynomial(n, order) / 2 ** n


def pontryagin_from_chern(rank: int, n: int) -> list:
    """``p_1..p_n`` of the underlying real bundle of a complex bundle of given rank.

    From ``sum (-1)^k p_k = (sum (-1)^i c_i)(sum c_i)``: ``p_k`` is ``(-1)^k`` times
    the weight-``2k`` component of the product.
    """
    if rank < 1 or n < 1:
        raise ValueError("rank and n must be positive")
    ring = chern_ring(rank)
    plus = ring.one()
    minus = ring.one()
    for i in range(1, rank + 1):
        c = ring.gen(f"c{i}")
        plus = plus + c
        minus = minus + c * (-1) ** i
    prod = plus * minus
    return [prod.component(2 * k) * (-1) ** k for k in range(1, n + 1)]


def ph_component(i: int, n_classes: int = DEFAULT_ORDER) -> GradedPoly:
    """Degree-4i part of the Pontryagin character, ``2 N_i(p) / (2i)!``.

    Lives in ``pontryagin_ring(max(n_classes, i))`` with ``p_j = 0`` for
    ``j > n_classes``.
    """
    if i < 1:
        raise ValueError("ph_0 is the rank and is not represented")
    ring = pontryagin_ring(max(n_classes, i))
    sums = newton_power_sums(ring, ring.names[:n_classes], i)
    return sums[i] * Fraction(2, factorial(2 * i))
