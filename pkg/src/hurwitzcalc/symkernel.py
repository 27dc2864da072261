"""Exact arithmetic substrate: rationals, sparse multivariate polynomials,
and rational functions in named symbolic parameters.

Everything is built on :class:`fractions.Fraction`; no operation anywhere in
the engine produces a floating-point value.  Values are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import MissingVariable

Rational = Fraction

Scalar = Union[int, Fraction]
PolyLike = Union[int, Fraction, "Poly"]

# A monomial is a tuple of (variable, exponent) pairs, sorted by variable
# name, with all exponents > 0.  The empty tuple is the constant monomial.
Monomial = tuple[tuple[str, int], ...]


def rational_from_string(s: str) -> Fraction:
    """Parse "p/q" or "p" into an exact rational."""
    return Fraction(s)


def rational_to_string(q: Scalar) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(q))


def ceil_div(a: int, b: int) -> int:
    """Smallest integer >= a/b for b > 0; exact for negative a as well.

    >>> ceil_div(100, 6), ceil_div(-60, 4), ceil_div(0, 5)
    (17, -15, 0)
    """
    if b <= 0:
        raise ValueError("ceil_div requires a positive divisor")
    return -((-a) // b)


def _merge_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    exps: dict[str, int] = dict(m1)
    for name, e in m2:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted((n, e) for n, e in exps.items() if e != 0))


def _monomial_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _monomial_str(m: Monomial) -> str:
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in m)


class Poly:
    """A multivariate polynomial with exact rational coefficients.

    Terms are stored sparsely as a map from monomials to nonzero Fractions.
    Addition and multiplication are exact; the string form is canonical
    (terms sorted by total degree, then by variables), e.g. ``7*g + 6``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c != 0:
                    clean[mono] = clean.get(mono, Fraction(0)) + c
                    if clean[mono] == 0:
                        del clean[mono]
        object.__setattr__(self, "terms", clean)

    # -- constructors ------------------------------------------------------

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        return cls({(): Fraction(value)})

    @staticmethod
    def coerce(x: PolyLike) -> "Poly":
        if isinstance(x, Poly):
            return x
        return Poly.const(x)

    @staticmethod
    def _coercible(x) -> bool:
        return isinstance(x, (Poly, int, Fraction))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get((), Fraction(0))

    def variables(self) -> set[str]:
        return {name for mono in self.terms for name, _ in mono}

    def total_degree(self) -> int:
        return max((_monomial_degree(m) for m in self.terms), default=0)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: PolyLike) -> "Poly":
        if not Poly._coercible(other):
            return NotImplemented
        other = Poly.coerce(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: PolyLike) -> "Poly":
        if not Poly._coercible(other):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other: PolyLike) -> "Poly":
        return Poly.coerce(other) + (-self)

    def __mul__(self, other: PolyLike) -> "Poly":
        if not Poly._coercible(other):
            return NotImplemented
        other = Poly.coerce(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _merge_monomials(m1, m2)
                terms[mono] = terms.get(mono, Fraction(0)) + c1 * c2
        return Poly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other: Scalar) -> "Poly":
        c = Fraction(other)
        return Poly({m: coeff / c for m, coeff in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- evaluation and substitution ----------------------------------------

    def eval(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Exact value at the assignment; raises MissingVariable if a
        variable of the polynomial is unassigned."""
        missing = self.variables() - set(assignment)
        if missing:
            raise MissingVariable(f"unassigned variables: {sorted(missing)}")
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            value = coeff
            for name, e in mono:
                value *= Fraction(assignment[name]) ** e
            total += value
        return total

    def subs(self, mapping: Mapping[str, PolyLike]) -> "Poly":
        """Substitute polynomials (or constants) for variables."""
        result = Poly.const(0)
        for mono, coeff in self.terms.items():
            term = Poly.const(coeff)
            for name, e in mono:
                repl = Poly.coerce(mapping[name]) if name in mapping else Poly.var(name)
                term = term * repl ** e
            result = result + term
        return result

    # -- display -----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: (-_monomial_degree(kv[0]), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for mono, coeff in self.sorted_terms():
            if mono == ():
                body = rational_to_string(abs(coeff))
            elif abs(coeff) == 1:
                body = _monomial_str(mono)
            else:
                body = f"{rational_to_string(abs(coeff))}*{_monomial_str(mono)}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def poly_eval(p: Poly, assignment: Mapping[str, Scalar]) -> Fraction:
    """Exact value of p at the assignment (all variables must be covered)."""
    return p.eval(assignment)


def poly_identical_zero(p: Poly) -> bool:
    """True iff p has no terms after normalization.

    Used to certify symbolic identities: an identity holds exactly when the
    difference of its two sides is identically zero.
    """
    return p.is_zero()


def poly_from_vars(expr_coeffs: Mapping[str, Scalar], const: Scalar = 0) -> Poly:
    """Convenience: build c1*x1 + c2*x2 + ... + const."""
    p = Poly.const(const)
    for name, c in expr_coeffs.items():
        p = p + Poly.var(name) * c
    return p


def _univariate_coeffs(p: Poly, name: str) -> list[Fraction] | None:
    """Dense coefficient list if p involves no variable other than `name`."""
    if not p.variables() <= {name}:
        return None
    coeffs = [Fraction(0)] * (p.total_degree() + 1)
    for mono, c in p.terms.items():
        deg = mono[0][1] if mono else 0
        coeffs[deg] = c
    return coeffs


def _univariate_exact_div(num: Poly, den: Poly, name: str) -> Poly | None:
    """num / den when both are univariate in `name` and the division is exact."""
    nc = _univariate_coeffs(num, name)
    dc = _univariate_coeffs(den, name)
    if nc is None or dc is None or len(nc) < len(dc):
        return None
    quotient = [Fraction(0)] * (len(nc) - len(dc) + 1)
    rem = list(nc)
    lead = dc[-1]
    for k in range(len(quotient) - 1, -1, -1):
        q = rem[k + len(dc) - 1] / lead
        quotient[k] = q
        for j, d in enumerate(dc):
            rem[k + j] -= q * d
    if any(r != 0 for r in rem):
        return None
    terms: dict[Monomial, Fraction] = {}
    for deg, c in enumerate(quotient):
        if c != 0:
            terms[((name, deg),) if deg else ()] = c
    return Poly(terms)


class RationalFunction:
    """A quotient of polynomials.  The denominator is never identically zero;
    equality is decided by cross-multiplication, so no factorization or gcd
    machinery is needed."""

    __slots__ = ("num", "den")

    def __init__(self, num: PolyLike, den: PolyLike = 1):
        num = Poly.coerce(num)
        den = Poly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        # fold constant denominators into the numerator
        if den.is_constant():
            num = num / den.constant_value()
            den = Poly.const(1)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def coerce(x: Union["RationalFunction", PolyLike]) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        return RationalFunction(Poly.coerce(x))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == Poly.const(1)

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            simplified = self.simplified()
            if not simplified.is_polynomial():
                raise ValueError(f"not a polynomial: {self}")
            return simplified.num
        return self.num

    def __add__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) / self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFunction.coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        s = self.simplified()
        return hash((s.num, s.den))

    def eval(self, assignment: Mapping[str, Scalar]) -> Fraction:
        d = self.den.eval(assignment)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the assignment")
        return self.num.eval(assignment) / d

    def simplified(self) -> "RationalFunction":
        """Cancel the denominator when an exact univariate division exists."""
        if self.is_polynomial() or self.num.is_zero():
            return RationalFunction(self.num)
        names = self.num.variables() | self.den.variables()
        if len(names) == 1:
            name = next(iter(names))
            q = _univariate_exact_div(self.num, self.den, name)
            if q is not None:
                return RationalFunction(q)
        return self

    def __str__(self) -> str:
        s = self.simplified()
        if s.is_polynomial():
            return str(s.num)
        return f"({s.num})/({s.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def symbols(names: Iterable[str]) -> list[Poly]:
    """Poly variables for each name, e.g. g, gR = symbols(["g", "gR"])."""
    return [Poly.var(n) for n in names]
