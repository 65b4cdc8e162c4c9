"""Exact dense univariate polynomials over arbitrary-precision integers.

A polynomial is stored as a tuple of coefficients in ascending degree order,
so ``IntPoly((1, 0, 2))`` is ``1 + 2q^2``.  Canonical form: the last stored
coefficient is nonzero, and the zero polynomial is the empty tuple.  Values
are immutable and hashable, hence safe to share across threads; every
operation returns a new polynomial.

>>> p = IntPoly((1, 1))
>>> print(p * p)
1 + 2q + q^2
>>> print(p - p)
0
"""

from __future__ import annotations

from typing import Iterable


class NotDivisible(ArithmeticError):
    """Exact polynomial division failed.

    ``remainder`` witnesses the failure: it is nonzero and congruent to the
    dividend modulo the divisor.  For a monic divisor it is the canonical
    long-division remainder; for a non-monic divisor it is the partial
    remainder at the step where integer division of leading coefficients
    broke down.
    """

    def __init__(self, message: str, remainder: "IntPoly"):
        super().__init__(message)
        self.remainder = remainder


class NonMonicModulus(ValueError):
    """Polynomial remainder requested modulo a non-monic polynomial."""


def _as_poly(value) -> "IntPoly | None":
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly((value,))
    return None


class IntPoly:
    """A univariate polynomial with integer coefficients in the variable q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # basic queries --------------------------------------------------------

    def degree(self) -> int:
        """Degree of the leading term; -1 is the zero-polynomial sentinel."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, i: int) -> int:
        """Coefficient of q^i; zero beyond the stored length."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # ring operations -------------------------------------------------------

    def __add__(self, other) -> "IntPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "IntPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "IntPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # division ---------------------------------------------------------------

    def _divmod(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Integer long division.

        Requires each leading-coefficient step to divide exactly over the
        integers (always true for monic divisors); raises NotDivisible with
        the partial remainder otherwise.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        dn, dd = self.degree(), divisor.degree()
        if dn < dd:
            return ZERO, self
        lead = divisor.coeffs[-1]
        rem = list(self.coeffs)
        quot = [0] * (dn - dd + 1)
        for shift in range(dn - dd, -1, -1):
            top = rem[shift + dd]
            if top == 0:
                continue
            t, leftover = divmod(top, lead)
            if leftover:
                raise NotDivisible(
                    f"leading coefficient {top} not divisible by {lead}",
                    IntPoly(rem),
                )
            quot[shift] = t
            for i, c in enumerate(divisor.coeffs):
                rem[shift + i] -= t * c
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, divisor: "IntPoly") -> "IntPoly":
        """The quotient self / divisor when the division is exact.

        >>> print(IntPoly((-1, 0, 1)).exact_div(IntPoly((1, 1))))
        -1 + q
        """
        quotient, remainder = self._divmod(divisor)
        if not remainder.is_zero():
            raise NotDivisible(
                f"{self} is not divisible by {divisor}", remainder
            )
        return quotient

    def rem_monic(self, modulus: "IntPoly") -> "IntPoly":
        """Canonical remainder modulo a monic polynomial.

        The result r satisfies degree(r) < degree(modulus) and
        self = q * modulus + r over the integers.

        >>> print(IntPoly((1, 0, 0, 0, 1)).rem_monic(IntPoly((1, 0, 1))))
        2
        """
        if modulus.leading_coefficient() != 1:
            raise NonMonicModulus(
                f"modulus {modulus} is not monic; integer remainders undefined"
            )
        return self._divmod(modulus)[1]

    # specializations ----------------------------------------------------------

    def substitute_power(self, k: int) -> "IntPoly":
        """The polynomial a(q^k).

        >>> print(IntPoly((0, 1, 1)).substitute_power(2))
        q^2 + q^4
        """
        if k < 1:
            raise ValueError("power substitution needs k >= 1")
        if k == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPoly(out)

    def eval_int(self, x: int) -> int:
        """Exact Horner evaluation at the integer x."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # comparisons and rendering -------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        # Constants hash like their int value so p == n implies equal hashes.
        if len(self.coeffs) > 1:
            return hash(self.coeffs)
        return hash(self.coeffs[0] if self.coeffs else 0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


ZERO = IntPoly()
ONE = IntPoly((1,))
Q = IntPoly((0, 1))


def q_power(n: int) -> IntPoly:
    """The monomial q^n."""
    if n < 0:
        raise ValueError("monomial degree must be nonnegative")
    return IntPoly((0,) * n + (1,))


def one_plus_q_power(d: int) -> IntPoly:
    """The binomial 1 + q^d, the modulus family of the main congruences."""
    if d < 1:
        raise ValueError("exponent must be positive")
    return IntPoly((1,) + (0,) * (d - 1) + (1,))
