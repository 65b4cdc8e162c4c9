"""Cyclotomic polynomials and exact products of them.

``cyclotomic(n)`` produces the n-th cyclotomic polynomial Phi_n through the
identity q^n - 1 = prod_{d|n} Phi_d(q), by exact division.  ``FactoredPoly``
represents a product prod_d Phi_d^{e_d} without expanding it; since distinct
cyclotomic polynomials are coprime, divisibility questions between such
products reduce to exponent comparisons, and lcm is an exponent-wise max.

>>> print(cyclotomic(6))
1 - q + q^2
"""

from __future__ import annotations

import functools

from .poly import IntPoly, NotDivisible, ONE, q_power


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, monic with integer coefficients.

    >>> print(cyclotomic(1))
    -1 + q
    >>> print(cyclotomic(2))
    1 + q
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = q_power(n) - 1
    for d in range(1, n):
        if n % d == 0:
            poly = poly.exact_div(cyclotomic(d))
    return poly


def factor_one_plus_qd(d: int) -> "FactoredPoly":
    """Cyclotomic factorization of 1 + q^d: {Phi_2k : k | d, 2k does not divide d}."""
    if d < 1:
        raise ValueError("exponent must be positive")
    return FactoredPoly(
        {2 * k: 1 for k in range(1, d + 1) if d % k == 0 and d % (2 * k) != 0}
    )


class FactoredPoly:
    """A product of cyclotomic polynomials, kept in factored form.

    The factors are a map from cyclotomic index to a strictly positive
    exponent; the empty product is the constant 1.  Instances are immutable.
    """

    __slots__ = ("_factors",)

    def __init__(self, factors=None):
        items: dict[int, int] = {}
        if factors:
            pairs = factors.items() if isinstance(factors, dict) else factors
            for d, e in pairs:
                if d < 1:
                    raise ValueError("cyclotomic index must be positive")
                if e < 0:
                    raise ValueError("exponent must be nonnegative")
                if e:
                    items[d] = items.get(d, 0) + e
        self._factors = dict(sorted(items.items()))

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._factors)

    def exponent(self, d: int) -> int:
        return self._factors.get(d, 0)

    def is_one(self) -> bool:
        return not self._factors

    def __mul__(self, other: "FactoredPoly") -> "FactoredPoly":
        merged = dict(self._factors)
        for d, e in other._factors.items():
            merged[d] = merged.get(d, 0) + e
        return FactoredPoly(merged)

    def __pow__(self, e: int) -> "FactoredPoly":
        if e < 0:
            raise ValueError("negative power of a factored product")
        return FactoredPoly({d: x * e for d, x in self._factors.items()})

    def lcm(self, other: "FactoredPoly") -> "FactoredPoly":
        """Least common multiple: exponent-wise max (cyclotomics are coprime)."""
        merged = dict(self._factors)
        for d, e in other._factors.items():
            merged[d] = max(merged.get(d, 0), e)
        return FactoredPoly(merged)

    def expand(self) -> IntPoly:
        """Multiply the product out; always monic."""
        result = ONE
        for d, e in self._factors.items():
            result = result * cyclotomic(d) ** e
        return result

    def divides(self, p: IntPoly) -> tuple[bool, IntPoly]:
        """Whether the expanded product divides p exactly.

        Returns (True, quotient) on success and (False, remainder witness)
        on failure.
        """
        if p.is_zero():
            raise ValueError("divisibility of the zero polynomial is not tested")
        try:
            return True, p.exact_div(self.expand())
        except NotDivisible as exc:
            return False, exc.remainder

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactoredPoly):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self):
        return hash(tuple(self._factors.items()))

    def __repr__(self) -> str:
        return f"FactoredPoly({self._factors!r})"

    def __str__(self) -> str:
        if not self._factors:
            return "1"
        return " * ".join(
            f"Phi_{d}" if e == 1 else f"Phi_{d}^{e}"
            for d, e in self._factors.items()
        )
