"""Laurent polynomials with integer coefficients.

Used for Hecke-algebra coefficients (variable v) and for graded Hilbert
series and hom series (variable t).  Coefficients live in a dict keyed by
exponent; zero coefficients are never stored, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for exp, c in coeffs.items():
                if c != 0:
                    data[int(exp)] = c
        self.coeffs = data

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    def coeff(self, exp: int):
        return self.coeffs.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out: dict[int, object] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __call__(self, value):
        """Evaluate at a numeric value (value=1 sums the coefficients)."""
        if value == 1:
            return sum(self.coeffs.values())
        return sum(c * value**e for e, c in self.coeffs.items())

    @property
    def degree(self) -> int | None:
        return max(self.coeffs) if self.coeffs else None

    @property
    def valuation(self) -> int | None:
        return min(self.coeffs) if self.coeffs else None

    def bar(self) -> "LaurentPoly":
        """Substitute the variable by its inverse."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """Exact quotient self/other with integer coefficients, else None."""
        if not other:
            return None
        if not self:
            return LaurentPoly.zero()
        # normalize both to ordinary polynomials and long-divide from the top
        num = {e - self.valuation: Fraction(c) for e, c in self.coeffs.items()}
        den = {e - other.valuation: Fraction(c) for e, c in other.coeffs.items()}
        ddeg = max(den)
        dlead = den[ddeg]
        quo: dict[int, Fraction] = {}
        while num:
            ndeg = max(num)
            if ndeg < ddeg:
                return None
            f = num[ndeg] / dlead
            quo[ndeg - ddeg] = f
            for e, c in den.items():
                k = e + ndeg - ddeg
                val = num.get(k, Fraction(0)) - f * c
                if val:
                    num[k] = val
                else:
                    num.pop(k, None)
        if any(c.denominator != 1 for c in quo.values()):
            return None
        shift = self.valuation - other.valuation
        return LaurentPoly({e + shift: int(c) for e, c in quo.items()})

    def format(self, var: str = "t") -> str:
        """Ascending-degree text form, e.g. '1 + 2*t^2'."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                term = str(c)
            else:
                pow_txt = var if e == 1 else f"{var}^{e}"
                if c == 1:
                    term = pow_txt
                elif c == -1:
                    term = f"-{pow_txt}"
                else:
                    term = f"{c}*{pow_txt}"
            parts.append(term)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly({self.format()!r})"
