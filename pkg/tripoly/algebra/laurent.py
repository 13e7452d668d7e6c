"""This module contains truncated Laurent series in the inverse of a basis variable."""

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple, Union

from tripoly.algebra.exceptions import BasisMismatchError, DomainError
from tripoly.algebra.polynomial import BasisTag, Scalar, TaggedPoly, convolve, format_terms


class LaurentSeries:
    """Laurent series in var^-1, known from its top degree down to var^-order.

    Coefficients of exponents below -order are unknown rather than zero, so every operation
    computes the order up to which its result is still exact.

    Parameters
    ----------
    tag : BasisTag
        Variable of the series.
    order : int
        Truncation order N; the coefficients of var^e are known for e >= -N.
    terms : mapping of int to Fraction
        Coefficients by exponent. Exponents below -order are dropped.

    """

    __slots__ = ("_tag", "_order", "_coefficients")

    def __init__(self, tag: BasisTag, order: int, terms: Mapping[int, Scalar]):
        if order < 0:
            raise DomainError(f"Truncation order must be nonnegative, not {order}")
        values = {exponent: Fraction(value) for exponent, value in terms.items()}
        top = max((e for e, value in values.items() if value != 0 and e >= -order), default=-order)
        self._tag = tag
        self._order = order
        self._coefficients = tuple(
            values.get(exponent, Fraction(0)) for exponent in range(-order, top + 1)
        )

    @classmethod
    def from_polynomial(cls, poly: TaggedPoly, order: int) -> "LaurentSeries":
        return cls(poly.tag, order, dict(enumerate(poly.coefficients)))

    @property
    def tag(self) -> BasisTag:
        return self._tag

    @property
    def order(self) -> int:
        return self._order

    @property
    def degree(self) -> Union[int, None]:
        """Highest exponent with a nonzero coefficient, None if all known terms vanish."""
        for index in range(len(self._coefficients) - 1, -1, -1):
            if self._coefficients[index] != 0:
                return index - self._order
        return None

    def _top(self) -> int:
        degree = self.degree
        return -self._order - 1 if degree is None else degree

    def coeff(self, exponent: int) -> Fraction:
        """Return the coefficient of var^exponent.

        Raises
        ------
        DomainError
            If the exponent lies below the truncation order.

        """
        if exponent < -self._order:
            raise DomainError(
                f"Coefficient of {self._tag.value}^{exponent} is unknown at order {self._order}"
            )
        index = exponent + self._order
        if index < len(self._coefficients):
            return self._coefficients[index]
        return Fraction(0)

    def terms(self) -> Iterator[Tuple[int, Fraction]]:
        """Nonzero terms, highest exponent first."""
        for index in range(len(self._coefficients) - 1, -1, -1):
            if self._coefficients[index] != 0:
                yield index - self._order, self._coefficients[index]

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.terms())

    def polynomial_part(self) -> TaggedPoly:
        """Terms with nonnegative exponents."""
        top = self._top()
        return TaggedPoly(self._tag, [self.coeff(e) for e in range(0, max(top, -1) + 1)])

    def truncated(self, order: int) -> "LaurentSeries":
        """Forget all terms below var^-order."""
        if order > self._order:
            raise DomainError(f"Can't extend a series of order {self._order} to order {order}")
        return LaurentSeries(self._tag, order, self.as_dict())

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Compare two series on the exponents both of them know."""
        self._require_same_tag(other, "compare")
        order = min(self._order, other.order)
        return self.truncated(order) == other.truncated(order)

    def _require_same_tag(self, other: "LaurentSeries", operation: str):
        if other.tag != self._tag:
            raise BasisMismatchError(operation, self._tag.value, other.tag.value)

    def _as_series(self, other) -> Union["LaurentSeries", None]:
        if isinstance(other, LaurentSeries):
            self._require_same_tag(other, "combine series")
            return other
        if isinstance(other, TaggedPoly):
            if other.tag != self._tag:
                raise BasisMismatchError("combine series", self._tag.value, other.tag.value)
            return LaurentSeries.from_polynomial(other, self._order)
        if isinstance(other, (int, Fraction)):
            return LaurentSeries(self._tag, self._order, {0: other})
        return None

    def __add__(self, other):
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        order = min(self._order, other.order)
        top = max(self._top(), other._top(), -order)
        return LaurentSeries(
            self._tag,
            order,
            {e: self.coeff(e) + other.coeff(e) for e in range(-order, top + 1)},
        )

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self._tag, self._order, {e: -c for e, c in self.terms()})

    def __sub__(self, other):
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentSeries(self._tag, self._order, {e: c * other for e, c in self.terms()})
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        # the unknown tail of one factor times the top term of the other bounds the result;
        # positive degrees push it below the smaller operand order, negative ones never lift it
        order = min(
            self._order, other.order, self._order - other._top(), other.order - self._top()
        )
        if order < 0:
            raise DomainError("Truncation orders are too small for the degrees of the factors")
        product = convolve(self._coefficients, other._coefficients)
        low = -self._order - other.order
        return LaurentSeries(
            self._tag,
            order,
            {low + index: value for index, value in enumerate(product) if low + index >= -order},
        )

    __rmul__ = __mul__

    def inverse(self) -> "LaurentSeries":
        """Return the multiplicative inverse, exact down to the order the known terms allow.

        Raises
        ------
        DomainError
            If the series is zero or too short to determine any coefficient of the inverse.

        """
        top = self.degree
        if top is None:
            raise DomainError("The zero series has no inverse")
        leading = self.coeff(top)
        known = top + self._order
        order = top + known
        if order < 0:
            raise DomainError(f"Series of order {self._order} is too short to invert")
        inverse = [1 / leading]
        for j in range(1, known + 1):
            total = sum(self.coeff(top - i) * inverse[j - i] for i in range(1, j + 1))
            inverse.append(-total / leading)
        return LaurentSeries(
            self._tag, order, {-top - j: value for j, value in enumerate(inverse)}
        )

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return False
        return (
            self._tag == other.tag
            and self._order == other.order
            and self.as_dict() == other.as_dict()
        )

    def __hash__(self):
        return hash((self._tag, self._order, tuple(self.terms())))

    def __str__(self):
        variable = self._tag.value
        body = format_terms(
            (value, ((variable, exponent),) if exponent else ()) for exponent, value in self.terms()
        )
        return f"{body}+O({variable}^{-self._order - 1})"

    def __repr__(self):
        return f"LaurentSeries({self._tag.name}, {self._order}, '{self}')"
