"""Polynomial representation of bosonic Fock states.

A state of K modes corresponds to a polynomial in the K creation operators
acting on vacuum: the monomial with exponents (k_1, ..., k_K) maps to the
Fock state |k_1 .. k_K> with amplitude coeff * sqrt(prod k_j!).  Polynomials
built from a mode transformation acting on an n-photon input are homogeneous
of degree n.

Coefficients here are complex doubles; the exact mirror used by the inverse
solver lives in exactpoly.
"""

from __future__ import annotations

from math import factorial, prod, sqrt
from typing import Mapping

__all__ = [
    "FockState",
    "OperatorPoly",
    "check_occupations",
    "total_photons",
    "poly_mul",
    "linear_form_power",
    "coefficient_extract",
    "state_from_poly",
    "poly_from_state",
]

# Occupation vectors are plain tuples of non-negative ints.
FockState = tuple


def check_occupations(state) -> FockState:
    state = tuple(int(x) for x in state)
    if any(x < 0 for x in state):
        raise ValueError(f"negative occupation in {state}")
    return state


def total_photons(state) -> int:
    return sum(state)


class OperatorPoly:
    """Sparse polynomial in creation operators with complex coefficients.

    Terms map exponent tuples (one slot per mode) to nonzero complex
    coefficients.  Instances are immutable by convention.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, complex] | None = None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for mono, coeff in terms.items():
                mono = tuple(mono)
                if len(mono) != nvars:
                    raise ValueError("exponent tuple length != mode count")
                coeff = complex(coeff)
                if coeff != 0:
                    self.terms[mono] = coeff

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def one(cls, nvars):
        return cls._raw(nvars, {(0,) * nvars: 1.0 + 0j})

    @classmethod
    def linear_form(cls, coeffs):
        """sum_j coeffs[j] * adag_j."""
        n = len(coeffs)
        terms = {}
        for j, c in enumerate(coeffs):
            c = complex(c)
            if c != 0:
                terms[tuple(1 if i == j else 0 for i in range(n))] = c
        return cls._raw(n, terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(m) for m in self.terms}
        return len(degrees) <= 1

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable-set mismatch")

    def __add__(self, other):
        self._check(other)
        res = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = res.get(mono, 0j) + coeff
            if acc == 0:
                res.pop(mono, None)
            else:
                res[mono] = acc
        return OperatorPoly._raw(self.nvars, res)

    def __sub__(self, other):
        return self + other.scale(-1.0)

    def __mul__(self, other):
        return poly_mul(self, other)

    def scale(self, c):
        c = complex(c)
        if c == 0:
            return OperatorPoly.zero(self.nvars)
        return OperatorPoly._raw(self.nvars, {m: v * c for m, v in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __eq__(self, other):
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "OperatorPoly(0)"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = [
                f"a{i}" if e == 1 else f"a{i}^{e}" for i, e in enumerate(mono) if e
            ]
            parts.append(f"({coeff:.6g})" + ("*" + "*".join(factors) if factors else ""))
        return "OperatorPoly(" + " + ".join(parts) + ")"


def poly_mul(p: OperatorPoly, q: OperatorPoly) -> OperatorPoly:
    """Distributive product; degrees add for homogeneous inputs."""
    if p.nvars != q.nvars:
        raise ValueError("variable-set mismatch")
    if len(p.terms) > len(q.terms):
        p, q = q, p
    res: dict = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            mono = tuple(a + b for a, b in zip(m1, m2))
            acc = res.get(mono, 0j) + c1 * c2
            if acc == 0:
                res.pop(mono, None)
            else:
                res[mono] = acc
    return OperatorPoly._raw(p.nvars, res)


def linear_form_power(coeffs, power: int) -> OperatorPoly:
    """(sum_j coeffs[j] adag_j)^power via the multinomial expansion."""
    n = len(coeffs)
    if power == 0:
        return OperatorPoly.one(n)
    fact = factorial(power)
    terms: dict = {}

    def compositions(remaining, j, mono, value):
        if j == n - 1:
            c = coeffs[j]
            if remaining and c == 0:
                return
            terms_key = mono + (remaining,)
            coef = value * c**remaining / factorial(remaining)
            if coef != 0:
                terms[terms_key] = terms.get(terms_key, 0j) + coef
            return
        c = coeffs[j]
        top = remaining if c != 0 else 0
        for k in range(top + 1):
            compositions(remaining - k, j + 1, mono + (k,), value * c**k / factorial(k))

    compositions(power, 0, (), complex(fact))
    return OperatorPoly._raw(n, {m: c for m, c in terms.items() if c != 0})


def coefficient_extract(p, pattern: Mapping[int, int]):
    """Select terms matching the pattern exactly, drop those variables.

    `pattern` maps variable indices to required exponents.  The result is a
    polynomial in the remaining variables, kept in their original order.
    Works for both OperatorPoly and exactpoly.SymbolicPoly since only the
    term mapping is touched.  An empty result is the zero polynomial.
    """
    pattern = {int(k): int(v) for k, v in pattern.items()}
    for idx in pattern:
        if not 0 <= idx < p.nvars:
            raise ValueError(f"pattern variable {idx} out of range")
    keep = [i for i in range(p.nvars) if i not in pattern]
    res: dict = {}
    for mono, coeff in p.terms.items():
        if all(mono[i] == e for i, e in pattern.items()):
            res[tuple(mono[i] for i in keep)] = coeff
    return type(p)(len(keep), res)


def state_from_poly(p: OperatorPoly) -> dict:
    """Map each monomial to its Fock state with amplitude coeff*sqrt(prod k!)."""
    return {
        mono: coeff * sqrt(prod(factorial(e) for e in mono))
        for mono, coeff in p.terms.items()
    }


def poly_from_state(state: Mapping[tuple, complex], nvars: int | None = None) -> OperatorPoly:
    """Inverse of state_from_poly; round-trips exactly on finite polynomials."""
    if nvars is None:
        if not state:
            raise ValueError("cannot infer mode count from an empty state")
        nvars = len(next(iter(state)))
    terms = {}
    for occ, amp in state.items():
        occ = check_occupations(occ)
        if len(occ) != nvars:
            raise ValueError("inconsistent mode count in state map")
        terms[occ] = complex(amp) / sqrt(prod(factorial(e) for e in occ))
    return OperatorPoly(nvars, terms)
