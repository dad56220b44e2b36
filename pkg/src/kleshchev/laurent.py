"""Sparse integer Laurent polynomials in one variable ``v``."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping


class InexactDivisionError(ArithmeticError):
    pass


class LaurentPoly:
    """Immutable element of Z[v, v^-1], stored as ``{exponent: coefficient}``.

    >>> (LaurentPoly.v() + 1) * (LaurentPoly.v() - 1)
    LaurentPoly('-1 + v^2')
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for k, a in items:
            if a:
                c[k] = c.get(k, 0) + a
        self._c = {k: a for k, a in c.items() if a}
        self._hash = None

    @classmethod
    def _wrap(cls, c: dict[int, int]) -> "LaurentPoly":
        # c must already be pruned of zeros
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._wrap({exponent: coeff} if coeff else {})

    @classmethod
    def v(cls) -> "LaurentPoly":
        return cls.monomial(1)

    @classmethod
    def const(cls, a: int) -> "LaurentPoly":
        return cls.monomial(0, a)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    def __add__(self, other):
        other = self._coerce(other)
        c = dict(self._c)
        for k, a in other._c.items():
            s = c.get(k, 0) + a
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return LaurentPoly._wrap(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap({k: -a for k, a in self._c.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly._wrap({})
            return LaurentPoly._wrap({k: a * other for k, a in self._c.items()})
        other = self._coerce(other)
        c: dict[int, int] = {}
        for k1, a1 in self._c.items():
            for k2, a2 in other._c.items():
                c[k1 + k2] = c.get(k1 + k2, 0) + a1 * a2
        return LaurentPoly._wrap({k: a for k, a in c.items() if a})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1 or next(iter(self._c.values())) not in (1, -1):
                raise ValueError("only unit monomials have negative powers")
            (k, a), = self._c.items()
            return LaurentPoly._wrap({-k * -n: a ** n})
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        if not k:
            return self
        return LaurentPoly._wrap({e + k: a for e, a in self._c.items()})

    def bar(self) -> "LaurentPoly":
        return LaurentPoly._wrap({-k: a for k, a in self._c.items()})

    def min_degree(self) -> int:
        return min(self._c)

    def max_degree(self) -> int:
        return max(self._c)

    def evaluate_at_one(self) -> int:
        return sum(self._c.values())

    def is_bar_symmetric(self) -> bool:
        return all(self._c.get(-k) == a for k, a in self._c.items())

    def in_positive_v_span(self) -> bool:
        """True iff the polynomial lies in vZ[v] (zero included)."""
        return all(k >= 1 for k in self._c)

    def has_nonnegative_coefficients(self) -> bool:
        return all(a > 0 for a in self._c.values())

    def bar_symmetric_correction(self) -> "LaurentPoly":
        """The bar-symmetric polynomial agreeing with ``self`` in degrees <= 0."""
        c = {}
        for k, a in self._c.items():
            if k <= 0:
                c[k] = a
                if k:
                    c[-k] = a
        return LaurentPoly._wrap(c)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / other``; raises unless it is an integral Laurent polynomial."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return self
        lo = other.min_degree()
        dlead = other.max_degree()
        lead = other._c[dlead]
        rem = dict(self._c)
        quot: dict[int, int] = {}
        # long division from the top degree down
        while rem:
            top = max(rem)
            if top - dlead < min(self._c) - lo:
                raise InexactDivisionError(f"{self} is not divisible by {other}")
            a = rem[top]
            if a % lead:
                raise InexactDivisionError(f"{self} is not divisible by {other}")
            q = a // lead
            shift = top - dlead
            quot[shift] = q
            for k, b in other._c.items():
                s = rem.get(k + shift, 0) - q * b
                if s:
                    rem[k + shift] = s
                else:
                    rem.pop(k + shift, None)
        return LaurentPoly._wrap(quot)

    def to_pairs(self) -> list[list[int]]:
        return [[k, a] for k, a in sorted(self._c.items())]

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPoly":
        return cls((int(k), int(a)) for k, a in pairs)

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for k, a in sorted(self._c.items()):
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                var = "v" if k == 1 else f"v^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            if not out:
                out.append(body if a > 0 else "-" + body)
            else:
                out.append(("+ " if a > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


@lru_cache(maxsize=None)
def quantum_integer(n: int) -> LaurentPoly:
    """Balanced quantum integer [n] = (v^n - v^-n) / (v - v^-1)."""
    if n < 0:
        return -quantum_integer(-n)
    return LaurentPoly._wrap({n - 1 - 2 * j: 1 for j in range(n)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("quantum factorial of a negative integer")
    out = ONE
    for k in range(2, n + 1):
        out = out * quantum_integer(k)
    return out


def quantum_binomial(n: int, k: int) -> LaurentPoly:
    if k < 0 or k > n:
        return ZERO
    return quantum_factorial(n).exact_div(quantum_factorial(k) * quantum_factorial(n - k))
