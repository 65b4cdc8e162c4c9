"""The seven q-polynomial families, generated by convolution recurrences.

Every family is defined by a quotient of even/odd q-exponential-like series;
multiplying through by the denominator and comparing coefficients turns each
definition into a finite recurrence over Gaussian polynomials, which is what
gets implemented.  The recurrences for the q-Euler and variant q-Salie
numbers are:

    E_{2m}    = -sum_{k<m} [2m over 2k] E_{2k},                 E_0 = 1
    E^(c)_{cn} = -sum_{j<n} [cn over cj] E^(c)_{cj},            E^(c)_0 = 1
    Sbar_{2n} = 1       - sum_{k<n} (-1)^{n-k} [2n over 2k] Sbar_{2k}
    Shat_{2n} = q^{2n}  - sum_{k<n} (-1)^{n-k} [2n over 2k] Shat_{2k}
    Stil_{2n} = q^{n^2} - sum_{k<n} (-1)^{n-k} [2n over 2k] Stil_{2k}

The q-Salie and q-tangent recurrences follow from their definitions by the
same coefficient comparison:

    S_{2n}    = q^n     - sum_{k<n} (-1)^{n-k} [2n over 2k] S_{2k}
    T_{2n+1}  = (-1)^n  - sum_{k<n} (-1)^{n-k} [2n+1 over 2k+1] T_{2k+1}

All functions are memoized, so asking for index n fills the prefix 0..n once.
Index convention: the argument n is the recurrence index; the polynomial
subscript is 2n for the even families, 2n+1 for the tangent family, and c*n
for the generalized Euler family with parameter c.
"""

from __future__ import annotations

import functools

from .poly import IntPoly, ONE, ZERO, q_power
from .qbinom import gauss


@functools.lru_cache(maxsize=None)
def euler(n: int) -> IntPoly:
    """q-Euler (q-secant) numbers E_{2n}(q); E_0 = 1, E_2 = -1."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return ONE
    total = ZERO
    for k in range(n):
        total = total + gauss(2 * n, 2 * k) * euler(k)
    return -total


@functools.lru_cache(maxsize=None)
def gen_euler(k: int, n: int) -> IntPoly:
    """Generalized q-Euler numbers E^(k)_{kn}(q); the k = 2 family is euler()."""
    if k < 1:
        raise ValueError("family parameter must be positive")
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return ONE
    total = ZERO
    for j in range(n):
        total = total + gauss(k * n, k * j) * gen_euler(k, j)
    return -total


@functools.lru_cache(maxsize=None)
def tangent(n: int) -> IntPoly:
    """q-tangent numbers T_{2n+1}(q); T_1 = 1, T_3 = q + q^2."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return ONE
    total = IntPoly(((-1) ** n,))
    for k in range(n):
        total = total - ((-1) ** (n - k)) * gauss(2 * n + 1, 2 * k + 1) * tangent(k)
    return total


@functools.lru_cache(maxsize=None)
def salie(n: int) -> IntPoly:
    """q-Salie numbers S_{2n}(q); S_0 = 1, S_2 = 1 + q."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return ONE
    total = q_power(n)
    for k in range(n):
        total = total - ((-1) ** (n - k)) * gauss(2 * n, 2 * k) * salie(k)
    return total


def _salie_variant(n: int, lead: IntPoly, prefix) -> IntPoly:
    total = lead
    for k in range(n):
        total = total - ((-1) ** (n - k)) * gauss(2 * n, 2 * k) * prefix(k)
    return total


@functools.lru_cache(maxsize=None)
def salie_bar(n: int) -> IntPoly:
    """Variant q-Salie numbers Sbar_{2n}(q) with constant numerator term 1."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return ONE
    return _salie_variant(n, ONE, salie_bar)


@functools.lru_cache(maxsize=None)
def salie_hat(n: int) -> IntPoly:
    """Variant q-Salie numbers Shat_{2n}(q) with numerator term q^{2n}."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return ONE
    return _salie_variant(n, q_power(2 * n), salie_hat)


@functools.lru_cache(maxsize=None)
def salie_tilde(n: int) -> IntPoly:
    """Variant q-Salie numbers Stil_{2n}(q) with numerator term q^{n^2}."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return ONE
    return _salie_variant(n, q_power(n * n), salie_tilde)


SEQUENCE_FAMILIES = (
    "euler",
    "tangent",
    "salie",
    "gen-euler",
    "salie-bar",
    "salie-hat",
    "salie-tilde",
)

_PLAIN = {
    "euler": euler,
    "tangent": tangent,
    "salie": salie,
    "salie-bar": salie_bar,
    "salie-hat": salie_hat,
    "salie-tilde": salie_tilde,
}


def family_value(family: str, n: int, k: int | None = None) -> IntPoly:
    """Dispatch on a family tag; gen-euler requires the extra parameter k."""
    if family == "gen-euler":
        if k is None:
            raise ValueError("family gen-euler requires the parameter k")
        return gen_euler(k, n)
    try:
        return _PLAIN[family](n)
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
