"""Exact multivariate polynomial arithmetic over Gaussian rationals.

This is the coefficient domain fed to the Groebner engine.  Buchberger's
algorithm is numerically unstable in floating point, so everything on the
inverse-problem path is exact: coefficients live in Q(i), monomials are
exponent tuples in a fixed global variable order, and the term order is pure
lexicographic (variable 0 is the most significant).

gmpy2.mpq is used for the rational parts when available; fractions.Fraction
is the drop-in fallback.
"""

from __future__ import annotations

from typing import Iterable, Mapping

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 present in normal installs
    from fractions import Fraction as _Q

__all__ = [
    "GaussianRational",
    "SymbolicPoly",
    "QZERO",
    "QONE",
    "mono_mul",
    "mono_divides",
    "mono_div",
    "mono_lcm",
    "mono_degree",
]


class GaussianRational:
    """Element of Q(i): exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _Q(re)
        self.im = _Q(im)

    @classmethod
    def from_ratios(cls, re_num, re_den, im_num=0, im_den=1):
        return cls(_Q(int(re_num), int(re_den)), _Q(int(im_num), int(im_den)))

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other):
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def conj(self):
        return GaussianRational(self.re, -self.im)

    def abs2(self):
        """Exact squared modulus, a plain rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        if self.im == 0:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    def ratios(self):
        """(re_num, re_den, im_num, im_den) as plain ints."""
        return (
            int(self.re.numerator),
            int(self.re.denominator),
            int(self.im.numerator),
            int(self.im.denominator),
        )


QZERO = GaussianRational(0)
QONE = GaussianRational(1)


# -- monomial helpers (exponent tuples, lex order = tuple order) --

def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    """True when a | b, i.e. every exponent of a is <= that of b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: tuple) -> int:
    return sum(a)


class SymbolicPoly:
    """Sparse polynomial in `nvars` variables over GaussianRational.

    Terms map exponent tuples to nonzero coefficients.  Instances are
    treated as immutable; all operations return new polynomials.
    """

    __slots__ = ("nvars", "terms", "_lm")

    def __init__(self, nvars: int, terms: Mapping[tuple, GaussianRational] | None = None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != nvars:
                    raise ValueError("exponent tuple length != variable count")
                if not coeff.is_zero():
                    self.terms[mono] = coeff
        self._lm = None

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._lm = None
        return p

    @classmethod
    def constant(cls, nvars, coeff: GaussianRational):
        if coeff.is_zero():
            return cls._raw(nvars, {})
        return cls._raw(nvars, {(0,) * nvars: coeff})

    @classmethod
    def variable(cls, nvars, index):
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls._raw(nvars, {mono: QONE})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def lm(self) -> tuple:
        """Leading monomial under lex (variable 0 most significant)."""
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms)
        return self._lm

    def lc(self) -> GaussianRational:
        return self.terms[self.lm()]

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable-set mismatch")

    def __add__(self, other):
        self._check(other)
        res = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = res.get(mono)
            if acc is None:
                res[mono] = coeff
            else:
                acc = acc + coeff
                if acc.is_zero():
                    del res[mono]
                else:
                    res[mono] = acc
        return SymbolicPoly._raw(self.nvars, res)

    def __sub__(self, other):
        self._check(other)
        res = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = res.get(mono)
            if acc is None:
                res[mono] = -coeff
            else:
                acc = acc - coeff
                if acc.is_zero():
                    del res[mono]
                else:
                    res[mono] = acc
        return SymbolicPoly._raw(self.nvars, res)

    def __neg__(self):
        return SymbolicPoly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        if len(self.terms) > len(other.terms):
            self, other = other, self
        res: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = mono_mul(m1, m2)
                prod = c1 * c2
                acc = res.get(mono)
                if acc is None:
                    res[mono] = prod
                else:
                    acc = acc + prod
                    if acc.is_zero():
                        del res[mono]
                    else:
                        res[mono] = acc
        return SymbolicPoly._raw(self.nvars, res)

    def scale(self, coeff: GaussianRational):
        if coeff.is_zero():
            return SymbolicPoly._raw(self.nvars, {})
        return SymbolicPoly._raw(self.nvars, {m: c * coeff for m, c in self.terms.items()})

    def mul_term(self, coeff: GaussianRational, mono: tuple):
        if coeff.is_zero():
            return SymbolicPoly._raw(self.nvars, {})
        return SymbolicPoly._raw(
            self.nvars, {mono_mul(m, mono): c * coeff for m, c in self.terms.items()}
        )

    def monic(self):
        lc = self.lc()
        if lc == QONE:
            return self
        inv = QONE / lc
        return SymbolicPoly._raw(self.nvars, {m: c * inv for m, c in self.terms.items()})

    def variables_used(self) -> set:
        used = set()
        for mono in self.terms:
            for i, e in enumerate(mono):
                if e:
                    used.add(i)
        return used

    def derivative(self, var: int):
        res = {}
        for mono, coeff in self.terms.items():
            e = mono[var]
            if e == 0:
                continue
            lowered = mono[:var] + (e - 1,) + mono[var + 1 :]
            res[lowered] = coeff * GaussianRational(e)
        return SymbolicPoly._raw(self.nvars, res)

    def evaluate(self, point: Iterable[complex]) -> complex:
        """Floating evaluation at a complex point."""
        point = tuple(point)
        total = 0j
        for mono, coeff in self.terms.items():
            val = complex(coeff)
            for i, e in enumerate(mono):
                if e:
                    val *= point[i] ** e
            total += val
        return total

    def __eq__(self, other):
        if not isinstance(other, SymbolicPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self):
        """Terms in descending lex order, the canonical serialization order."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def format(self, names: list[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i}" for i in range(self.nvars)]
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(mono)
                if e
            ]
            cs = _coeff_str(coeff)
            parts.append(cs + ("*" + "*".join(factors) if factors else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"SymbolicPoly({self.format()})"


def _coeff_str(c: GaussianRational) -> str:
    if c.im == 0:
        return str(c.re)
    if c.re == 0:
        return f"{c.im}i"
    return f"({c.re}{'+' if c.im > 0 else ''}{c.im}i)"
