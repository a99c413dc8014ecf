"""Exact polynomials in the two root-length parameters.

Every scalar in the symbolic pipeline lives in Z-graded polynomials over
arbitrary-precision rationals in at most two variables: ``k_s`` (parameter of
the short-root class, index 0) and ``k_l`` (long-root class, index 1).  For
simply-laced systems only ``k_s`` ever occurs.  There is deliberately no
rational-function type; symbolic computations work with cleared denominators.
"""

from __future__ import annotations

from fractions import Fraction

VAR_NAMES = ("k_s", "k_l")

# exponent pair (e_short, e_long) -> name of the parameter class
_KEY_SHORT = (1, 0)
_KEY_LONG = (0, 1)


class KPoly:
    """Sparse polynomial in k_s, k_l with Fraction coefficients.

    Instances are immutable values: arithmetic returns new objects, zero
    coefficients are never stored, and equal polynomials compare (and hash)
    equal, so exact equality tests are meaningful.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    es, el = key
                    clean[(int(es), int(el))] = coeff
        self._terms = clean

    @classmethod
    def const(cls, value) -> "KPoly":
        return cls({(0, 0): Fraction(value)})

    @classmethod
    def var(cls, class_index: int) -> "KPoly":
        """The parameter of a length class: 0 -> k_s, 1 -> k_l."""
        if class_index == 0:
            return cls({_KEY_SHORT: Fraction(1)})
        if class_index == 1:
            return cls({_KEY_LONG: Fraction(1)})
        raise ValueError(f"no parameter class {class_index}")

    @classmethod
    def zero(cls) -> "KPoly":
        return cls()

    @classmethod
    def one(cls) -> "KPoly":
        return cls.const(1)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, KPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == KPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "KPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return KPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> "KPoly":
        return KPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other) -> "KPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "KPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "KPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for (a, b), c1 in self._terms.items():
            for (x, y), c2 in other._terms.items():
                key = (a + x, b + y)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return KPoly(terms)

    __rmul__ = __mul__

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1."""
        if not self._terms:
            return -1
        return max(es + el for es, el in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0), Fraction(0))

    def specialize(self, values) -> Fraction:
        """Evaluate exactly at ``values``: a map class index -> rational.

        Only classes that actually occur need to be present.
        """
        total = Fraction(0)
        for (es, el), coeff in self._terms.items():
            term = coeff
            if es:
                term *= Fraction(values[0]) ** es
            if el:
                term *= Fraction(values[1]) ** el
            total += term
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key in sorted(self._terms, key=lambda k: (k[0] + k[1], k[0])):
            parts.append(_term_str(key, self._terms[key]))
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += " - " + part[1:]
            else:
                out += " + " + part
        return out

    def __repr__(self) -> str:
        return f"KPoly({self})"


def _coerce(x):
    if isinstance(x, KPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return KPoly.const(x)
    return None


def _term_str(key, coeff: Fraction) -> str:
    es, el = key
    factors = []
    if es:
        factors.append(VAR_NAMES[0] if es == 1 else f"{VAR_NAMES[0]}^{es}")
    if el:
        factors.append(VAR_NAMES[1] if el == 1 else f"{VAR_NAMES[1]}^{el}")
    mon = "*".join(factors)
    if not mon:
        return str(coeff)
    if coeff == 1:
        return mon
    if coeff == -1:
        return "-" + mon
    return f"{coeff}*{mon}"


def is_nonneg_integral(p: KPoly) -> bool:
    """True iff every coefficient is a non-negative integer."""
    return all(c.denominator == 1 and c >= 0 for _, c in p.items())


def is_positive_linear(p: KPoly) -> bool:
    """True iff p has degree <= 1, non-negative integer coefficients,
    and a positive constant term."""
    return p.degree() <= 1 and is_nonneg_integral(p) and p.constant_term() >= 1
