# braid_workbench/src/laurent.py
"""Sparse integer Laurent polynomials in one variable, stored as {degree: coeff}."""

from typing import Dict, Iterable, Mapping, Tuple, Union

import sympy as sp


class LaurentPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None):
        collected: Dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for degree, coeff in items:
            collected[int(degree)] = collected.get(int(degree), 0) + int(coeff)
        self._terms = tuple(sorted((d, c) for d, c in collected.items() if c != 0))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "LaurentPoly":
        return cls({degree: coeff})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("The zero polynomial has no degree")
        return self._terms[-1][0]

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("The zero polynomial has no valuation")
        return self._terms[0][0]

    def coefficient(self, degree: int) -> int:
        return dict(self._terms).get(degree, 0)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        other = _coerce(other)
        return LaurentPoly(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly((d, -c) for d, c in self._terms)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        other = _coerce(other)
        product: Dict[int, int] = {}
        for d1, c1 in self._terms:
            for d2, c2 in other._terms:
                product[d1 + d2] = product.get(d1 + d2, 0) + c1 * c2
        return LaurentPoly(product)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("Only unit monomials have Laurent inverses")
            (d, c), = self._terms
            return LaurentPoly.monomial(-d, c) ** -k
        result = LaurentPoly.one()
        for _ in range(k):
            result = result * self
        return result

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Replaces the variable v by v^k."""
        return LaurentPoly((d * k, c) for d, c in self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.monomial(0, other)
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def to_sympy(self, symbol: sp.Symbol) -> sp.Expr:
        return sp.Add(*[c * symbol ** d for d, c in self._terms])

    def to_json(self) -> Dict[str, int]:
        return {str(d): c for d, c in self._terms}

    def render(self, var: str = "A") -> str:
        if not self._terms:
            return "0"
        pieces = []
        for d, c in reversed(self._terms):
            magnitude = abs(c)
            if d == 0:
                body = str(magnitude)
            else:
                power = var if d == 1 else f"{var}^{d}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self._terms)!r})"


def _coerce(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.monomial(0, value)
    raise TypeError(f"Cannot combine LaurentPoly with {type(value).__name__}")


# Loop value d = -A^2 - A^-2
LOOP_WEIGHT = LaurentPoly({2: -1, -2: -1})
