"""This module contains dense polynomials over the rationals that carry a basis tag.

Triangulation polynomials are written in four variables: x and y belong to the upper side of a
near-edge, u and v to its lower side. The same coefficient list means different things in
different bases, so every binary operation compares the tags and raises a BasisMismatchError
instead of silently combining e.g. a t-polynomial with an m-polynomial.

"""

import re
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from tripoly.algebra.binomials import binomial
from tripoly.algebra.exceptions import BasisMismatchError, DomainError, PolynomialParseError

Rational = Fraction
Scalar = Union[int, Fraction]
Monomial = Tuple[Tuple[str, int], ...]


class BasisTag(Enum):
    """Variable of a triangulation polynomial.

    X and Y are upper side variables, U and V lower side variables. Y and U are the concave
    basis, X and V the convex basis.

    """

    X = "x"
    Y = "y"
    U = "u"
    V = "v"

    @property
    def is_upper(self) -> bool:
        return self in (BasisTag.X, BasisTag.Y)

    @property
    def is_concave(self) -> bool:
        return self in (BasisTag.Y, BasisTag.U)

    def converted(self) -> "BasisTag":
        """Tag of the image under 𝓜 or 𝓣, i.e. Y <-> X and U <-> V."""
        return _CONVERTED[self]


_CONVERTED = {
    BasisTag.X: BasisTag.Y,
    BasisTag.Y: BasisTag.X,
    BasisTag.U: BasisTag.V,
    BasisTag.V: BasisTag.U,
}


def integer_form(coefficients: Sequence[Fraction]) -> Tuple[List[int], int]:
    """Scale rationals to integers by their common denominator.

    Returns
    -------
    numerators : list of int
        The scaled coefficients.
    denominator : int
        The common denominator, so that coefficients[i] == numerators[i] / denominator.

    """
    denominator = lcm(*(value.denominator for value in coefficients))
    numerators = [value.numerator * (denominator // value.denominator) for value in coefficients]
    return numerators, denominator


def convolve(left: Sequence[Fraction], right: Sequence[Fraction]) -> List[Fraction]:
    """Exact product of two dense coefficient lists."""
    if not left or not right:
        return []
    left_numerators, left_denominator = integer_form(left)
    right_numerators, right_denominator = integer_form(right)
    product = [0] * (len(left) + len(right) - 1)
    for i, left_value in enumerate(left_numerators):
        if left_value:
            for j, right_value in enumerate(right_numerators):
                product[i + j] += left_value * right_value
    denominator = left_denominator * right_denominator
    return [Fraction(value, denominator) for value in product]


class TaggedPoly:
    """Dense univariate polynomial with exact rational coefficients in one basis variable.

    Instances are immutable. Coefficients are indexed by exponent and the highest stored
    coefficient is never zero; the zero polynomial stores no coefficients.

    Parameters
    ----------
    tag : BasisTag
        Variable of the polynomial.
    coefficients : iterable of int or Fraction
        Coefficients indexed by exponent.

    """

    __slots__ = ("_tag", "_coefficients")

    def __init__(self, tag: BasisTag, coefficients: Iterable[Scalar] = ()):
        values = [Fraction(value) for value in coefficients]
        while values and values[-1] == 0:
            values.pop()
        self._tag = tag
        self._coefficients = tuple(values)

    @classmethod
    def monomial(cls, tag: BasisTag, exponent: int, coefficient: Scalar = 1) -> "TaggedPoly":
        if exponent < 0:
            raise DomainError(f"Exponents must be nonnegative, not {exponent}")
        return cls(tag, [0] * exponent + [coefficient])

    @classmethod
    def constant(cls, tag: BasisTag, value: Scalar) -> "TaggedPoly":
        return cls(tag, [value])

    @classmethod
    def parse(cls, text: str, tag: Optional[BasisTag] = None) -> "TaggedPoly":
        """Parse a polynomial like "y^4+2*y^3+5*y^2".

        Parameters
        ----------
        text : str
            Terms "c*y^k" joined by "+" or "-". "*" and "^1" may be omitted.
        tag : BasisTag, optional
            Basis of the result. Required if the text contains no variable, otherwise it must
            match the variable of the text.

        Raises
        ------
        PolynomialParseError
            If the text is malformed, mixes variables or its basis can't be determined.

        """
        monomials = parse_monomials(text)
        variables = {variable for monomial in monomials for variable, _ in monomial}
        if len(variables) > 1 or any(len(monomial) > 1 for monomial in monomials):
            raise PolynomialParseError(text, 1, "univariate polynomial expected")
        if variables:
            found = _tag_of_variable(text, variables.pop())
            if tag is not None and tag != found:
                raise PolynomialParseError(text, 1, f"expected variable {tag.value}")
            tag = found
        if tag is None:
            raise PolynomialParseError(text, 1, "can't infer the variable of a constant")
        degree = max((monomial[0][1] if monomial else 0 for monomial in monomials), default=0)
        coefficients = [Fraction(0)] * (degree + 1)
        for monomial, value in monomials.items():
            coefficients[monomial[0][1] if monomial else 0] += value
        return cls(tag, coefficients)

    @property
    def tag(self) -> BasisTag:
        return self._tag

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coefficients

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self._coefficients) - 1

    @property
    def lowest_degree(self) -> Optional[int]:
        """Smallest exponent with a nonzero coefficient, None for the zero polynomial."""
        for exponent, value in enumerate(self._coefficients):
            if value != 0:
                return exponent
        return None

    def is_zero(self) -> bool:
        return not self._coefficients

    def coeff(self, exponent: int) -> Fraction:
        """Return the coefficient of var^exponent, zero beyond the stored degree."""
        if exponent < 0:
            raise DomainError(f"Exponents must be nonnegative, not {exponent}")
        if exponent < len(self._coefficients):
            return self._coefficients[exponent]
        return Fraction(0)

    def retagged(self, tag: BasisTag) -> "TaggedPoly":
        """Same coefficients in another variable."""
        return TaggedPoly(tag, self._coefficients)

    def shifted(self, exponent: int) -> "TaggedPoly":
        """Multiply by var^exponent."""
        return TaggedPoly(self._tag, [0] * exponent + list(self._coefficients))

    def derivative(self) -> "TaggedPoly":
        return TaggedPoly(
            self._tag, [value * exponent for exponent, value in enumerate(self._coefficients)][1:]
        )

    def _coerce(self, other, operation: str) -> Optional["TaggedPoly"]:
        if isinstance(other, TaggedPoly):
            if other.tag != self._tag:
                raise BasisMismatchError(operation, self._tag.value, other.tag.value)
            return other
        if isinstance(other, (int, Fraction)):
            return TaggedPoly.constant(self._tag, other)
        return None

    def __add__(self, other):
        other = self._coerce(other, "add")
        if other is None:
            return NotImplemented
        width = max(len(self._coefficients), len(other.coefficients))
        return TaggedPoly(self._tag, [self.coeff(i) + other.coeff(i) for i in range(width)])

    __radd__ = __add__

    def __neg__(self):
        return TaggedPoly(self._tag, [-value for value in self._coefficients])

    def __sub__(self, other):
        other = self._coerce(other, "subtract")
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TaggedPoly(self._tag, [value * other for value in self._coefficients])
        other = self._coerce(other, "multiply")
        if other is None:
            return NotImplemented
        return TaggedPoly(self._tag, convolve(self._coefficients, other.coefficients))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise DomainError("Polynomials can only be raised to nonnegative powers")
        result = TaggedPoly.constant(self._tag, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, value):
        result = Fraction(0)
        for coefficient in reversed(self._coefficients):
            result = result * value + coefficient
        return result

    def __eq__(self, other):
        if not isinstance(other, TaggedPoly):
            return False
        return self._tag == other.tag and self._coefficients == other.coefficients

    def __hash__(self):
        return hash((self._tag, self._coefficients))

    def __str__(self):
        variable = self._tag.value
        return format_terms(
            (value, ((variable, exponent),) if exponent else ())
            for exponent, value in reversed(list(enumerate(self._coefficients)))
        )

    def __repr__(self):
        return f"TaggedPoly({self._tag.name}, '{self}')"


class JointPoly:
    """Dense bivariate polynomial in one upper and one lower variable.

    Rows are indexed by the exponent of the upper variable (x or y), columns by the exponent of
    the lower variable (u or v). Trailing all-zero rows and columns are never stored.

    Parameters
    ----------
    tags : tuple of BasisTag
        Upper variable (X or Y) followed by the lower variable (U or V).
    rows : iterable of iterables
        Coefficient matrix; ragged rows are padded with zeros.

    """

    __slots__ = ("_tags", "_rows")

    def __init__(self, tags: Tuple[BasisTag, BasisTag], rows: Iterable[Iterable[Scalar]] = ()):
        upper, lower = tags
        if not upper.is_upper or lower.is_upper:
            raise BasisMismatchError("JointPoly", "(x|y, u|v)", f"({upper.value}, {lower.value})")
        matrix = [[Fraction(value) for value in row] for row in rows]
        while matrix and not any(matrix[-1]):
            matrix.pop()
        width = max((len(row) for row in matrix), default=0)
        matrix = [row + [Fraction(0)] * (width - len(row)) for row in matrix]
        while width and all(row[width - 1] == 0 for row in matrix):
            width -= 1
        self._tags = (upper, lower)
        self._rows = tuple(tuple(row[:width]) for row in matrix)

    @classmethod
    def from_terms(
        cls, tags: Tuple[BasisTag, BasisTag], terms: Dict[Tuple[int, int], Scalar]
    ) -> "JointPoly":
        if not terms:
            return cls(tags)
        height = max(i for i, _ in terms) + 1
        width = max(j for _, j in terms) + 1
        rows = [[0] * width for _ in range(height)]
        for (i, j), value in terms.items():
            rows[i][j] += value
        return cls(tags, rows)

    @classmethod
    def outer(cls, upper: TaggedPoly, lower: TaggedPoly) -> "JointPoly":
        """Product upper(var1) * lower(var2) of two univariate polynomials."""
        return cls(
            (upper.tag, lower.tag),
            [[a * b for b in lower.coefficients] for a in upper.coefficients],
        )

    @classmethod
    def from_columns(cls, upper: BasisTag, lower: BasisTag, columns: Sequence[TaggedPoly]):
        """Assemble from polynomials in the upper variable, one per lower exponent."""
        height = max((column.degree + 1 for column in columns), default=0)
        return cls(
            (upper, lower),
            [[column.coeff(i) for column in columns] for i in range(height)],
        )

    @classmethod
    def from_rows(cls, upper: BasisTag, lower: BasisTag, rows: Sequence[TaggedPoly]):
        """Assemble from polynomials in the lower variable, one per upper exponent."""
        return cls((upper, lower), [row.coefficients for row in rows])

    @classmethod
    def parse(cls, text: str, tags: Optional[Tuple[BasisTag, BasisTag]] = None) -> "JointPoly":
        """Parse terms like "y^2*u^2+y*u^2". Constants need explicit tags."""
        monomials = parse_monomials(text)
        upper = lower = None
        terms = {}
        for monomial, value in monomials.items():
            i = j = 0
            for variable, exponent in monomial:
                tag = _tag_of_variable(text, variable)
                if tag.is_upper:
                    if upper not in (None, tag):
                        raise PolynomialParseError(text, 1, "two upper variables")
                    upper, i = tag, exponent
                else:
                    if lower not in (None, tag):
                        raise PolynomialParseError(text, 1, "two lower variables")
                    lower, j = tag, exponent
            terms[(i, j)] = terms.get((i, j), Fraction(0)) + value
        if tags is not None:
            if (upper or tags[0]) != tags[0] or (lower or tags[1]) != tags[1]:
                expected = f"{tags[0].value}, {tags[1].value}"
                raise PolynomialParseError(text, 1, f"expected variables {expected}")
            upper, lower = tags
        if upper is None or lower is None:
            raise PolynomialParseError(text, 1, "can't infer both variables")
        return cls.from_terms((upper, lower), terms)

    @property
    def tags(self) -> Tuple[BasisTag, BasisTag]:
        return self._tags

    @property
    def upper_tag(self) -> BasisTag:
        return self._tags[0]

    @property
    def lower_tag(self) -> BasisTag:
        return self._tags[1]

    @property
    def rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self._rows), len(self._rows[0]) if self._rows else 0

    def is_zero(self) -> bool:
        return not self._rows

    def coeff(self, upper_exponent: int, lower_exponent: int) -> Fraction:
        """Return [var1^i var2^j], zero beyond the stored degrees."""
        if upper_exponent < 0 or lower_exponent < 0:
            raise DomainError("Exponents must be nonnegative")
        height, width = self.shape
        if upper_exponent < height and lower_exponent < width:
            return self._rows[upper_exponent][lower_exponent]
        return Fraction(0)

    def terms(self) -> Iterator[Tuple[int, int, Fraction]]:
        """Nonzero terms as (upper exponent, lower exponent, coefficient)."""
        for i, row in enumerate(self._rows):
            for j, value in enumerate(row):
                if value != 0:
                    yield i, j, value

    def lowest_exponents(self) -> Optional[Tuple[int, int]]:
        """Minimal upper and minimal lower exponent over all nonzero terms."""
        terms = list(self.terms())
        if not terms:
            return None
        return min(i for i, _, _ in terms), min(j for _, j, _ in terms)

    def column(self, lower_exponent: int) -> TaggedPoly:
        """Coefficient of var2^j as a polynomial in the upper variable."""
        return TaggedPoly(
            self.upper_tag, [self.coeff(i, lower_exponent) for i in range(len(self._rows))]
        )

    def row(self, upper_exponent: int) -> TaggedPoly:
        """Coefficient of var1^i as a polynomial in the lower variable."""
        if upper_exponent >= len(self._rows):
            return TaggedPoly(self.lower_tag)
        return TaggedPoly(self.lower_tag, self._rows[upper_exponent])

    def columns(self) -> List[TaggedPoly]:
        return [self.column(j) for j in range(self.shape[1])]

    def row_polys(self) -> List[TaggedPoly]:
        return [self.row(i) for i in range(self.shape[0])]

    def transposed(self) -> "JointPoly":
        """Swap the roles of the two variables while keeping the basis pair.

        This is the flip rule a_Ā(y, u) = a_A(u, y), valid for the (y, u) and (x, v) pairs.

        """
        if self._tags not in ((BasisTag.Y, BasisTag.U), (BasisTag.X, BasisTag.V)):
            raise BasisMismatchError("transpose", "(y, u) or (x, v)", self._tags_text())
        height, width = self.shape
        transposed = [[self._rows[i][j] for i in range(height)] for j in range(width)]
        return JointPoly(self._tags, transposed)

    def retagged(self, tags: Tuple[BasisTag, BasisTag]) -> "JointPoly":
        return JointPoly(tags, self._rows)

    def _tags_text(self) -> str:
        return f"({self._tags[0].value}, {self._tags[1].value})"

    def _require_same_tags(self, other: "JointPoly", operation: str):
        if other.tags != self._tags:
            raise BasisMismatchError(operation, self._tags_text(), other._tags_text())

    def __add__(self, other):
        if not isinstance(other, JointPoly):
            return NotImplemented
        self._require_same_tags(other, "add")
        height = max(self.shape[0], other.shape[0])
        width = max(self.shape[1], other.shape[1])
        return JointPoly(
            self._tags,
            [[self.coeff(i, j) + other.coeff(i, j) for j in range(width)] for i in range(height)],
        )

    def __neg__(self):
        return JointPoly(self._tags, [[-value for value in row] for row in self._rows])

    def __sub__(self, other):
        if not isinstance(other, JointPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return JointPoly(self._tags, [[value * other for value in row] for row in self._rows])
        if not isinstance(other, JointPoly):
            return NotImplemented
        self._require_same_tags(other, "multiply")
        if self.is_zero() or other.is_zero():
            return JointPoly(self._tags)
        # Kronecker substitution: (i, j) -> i * width + j keeps the product's exponents apart.
        width = self.shape[1] + other.shape[1] - 1
        product = convolve(self._flattened(width), other._flattened(width))
        height = self.shape[0] + other.shape[0] - 1
        product += [Fraction(0)] * (height * width - len(product))
        return JointPoly(self._tags, [product[i * width : (i + 1) * width] for i in range(height)])

    __rmul__ = __mul__

    def _flattened(self, width: int) -> List[Fraction]:
        flat = [Fraction(0)] * (len(self._rows) * width)
        for i, row in enumerate(self._rows):
            flat[i * width : i * width + len(row)] = row
        return flat

    def __call__(self, upper_value, lower_value):
        result = Fraction(0)
        for row in reversed(self._rows):
            result = result * upper_value + TaggedPoly(self.lower_tag, row)(lower_value)
        return result

    def __eq__(self, other):
        if not isinstance(other, JointPoly):
            return False
        return self._tags == other.tags and self._rows == other.rows

    def __hash__(self):
        return hash((self._tags, self._rows))

    def __str__(self):
        upper, lower = self._tags[0].value, self._tags[1].value
        ordered = sorted(self.terms(), key=lambda term: (term[0], term[1]), reverse=True)
        return format_terms(
            (value, tuple(factor for factor in ((upper, i), (lower, j)) if factor[1]))
            for i, j, value in ordered
        )

    def __repr__(self):
        return f"JointPoly({self._tags_text()}, '{self}')"


def taylor_shift(poly: TaggedPoly, shift: Scalar) -> TaggedPoly:
    """Return poly(var + shift), exactly."""
    shift = Fraction(shift)
    if poly.is_zero():
        return poly
    numerators, denominator = integer_form(list(poly.coefficients))
    degree = poly.degree
    p, q = shift.numerator, shift.denominator
    # S(w) = q^d * poly(w / q) has integer coefficients and poly(y + p/q) = S(q*y + p) / q^d
    scaled = [value * q ** (degree - i) for i, value in enumerate(numerators)]
    for i in range(degree):
        for j in range(degree - 1, i - 1, -1):
            scaled[j] += p * scaled[j + 1]
    scale = denominator * q**degree
    return TaggedPoly(poly.tag, [Fraction(value * q**k, scale) for k, value in enumerate(scaled)])


def moebius_numerator(poly: TaggedPoly, degree: Optional[int] = None) -> TaggedPoly:
    """Return (var-1)^degree * poly(var / (var-1)) as a polynomial.

    Parameters
    ----------
    poly : TaggedPoly
        Polynomial to substitute into.
    degree : int, optional
        Power of (var-1) that clears the denominators, at least the degree of poly. Defaults to
        the degree of poly.

    """
    if degree is None:
        degree = max(poly.degree, 0)
    if degree < poly.degree:
        raise DomainError(f"Can't clear denominators of degree {poly.degree} with power {degree}")
    numerators, denominator = integer_form(list(poly.coefficients))
    result = [0] * (degree + 1)
    # y^n (y-1)^(d-n) contributes binom(d-n, e-n) (-1)^(d-e) to y^e
    for n, value in enumerate(numerators):
        if value:
            for e in range(n, degree + 1):
                term = value * binomial(degree - n, e - n)
                result[e] += term if (degree - e) % 2 == 0 else -term
    return TaggedPoly(poly.tag, [Fraction(value, denominator) for value in result])


_TERM = re.compile(
    r"(?P<sign>[+-])?(?P<coefficient>\d+(?:/\d+)?)?(?P<factors>(?:\*?[a-z](?:\^\d+)?)*)"
)
_FACTOR = re.compile(r"\*?(?P<variable>[a-z])(?:\^(?P<exponent>\d+))?")


def parse_monomials(text: str) -> Dict[Monomial, Fraction]:
    """Split a polynomial string into monomials.

    Returns
    -------
    monomials : dict
        Maps sorted tuples of (variable, exponent) to the summed coefficient.

    Raises
    ------
    PolynomialParseError
        If the string is empty or contains something other than signed terms.

    """
    compact = re.sub(r"\s+", "", text.replace("−", "-"))
    if not compact:
        raise PolynomialParseError(text, 1, "empty polynomial")
    monomials = {}
    position = 0
    while position < len(compact):
        match = _TERM.match(compact, position)
        empty = not (match.group("coefficient") or match.group("factors"))
        if empty or (position > 0 and not match.group("sign")):
            offset = match.end() if empty else position
            if offset >= len(compact):
                raise PolynomialParseError(text, offset + 1, "unexpected end of text")
            raise PolynomialParseError(text, offset + 1, f"unexpected '{compact[offset]}'")
        if not match.group("coefficient") and match.group("factors").startswith("*"):
            raise PolynomialParseError(text, position + 1, "'*' without coefficient")
        value = Fraction(match.group("coefficient") or 1)
        if match.group("sign") == "-":
            value = -value
        exponents = {}
        for factor in _FACTOR.finditer(match.group("factors")):
            exponent = int(factor.group("exponent") or 1)
            variable = factor.group("variable")
            exponents[variable] = exponents.get(variable, 0) + exponent
        monomial = tuple(sorted(item for item in exponents.items() if item[1]))
        monomials[monomial] = monomials.get(monomial, Fraction(0)) + value
        position = match.end()
    return monomials


def format_terms(terms: Iterable[Tuple[Fraction, Monomial]]) -> str:
    """Join (coefficient, monomial) pairs into "c*y^k" terms, skipping zero coefficients."""
    text = ""
    for value, monomial in terms:
        if value == 0:
            continue
        factors = "*".join(
            name if exponent == 1 else f"{name}^{exponent}" for name, exponent in monomial
        )
        if not factors:
            term = str(value)
        elif value == 1:
            term = factors
        elif value == -1:
            term = f"-{factors}"
        else:
            term = f"{value}*{factors}"
        if text and not term.startswith("-"):
            text += "+"
        text += term
    return text or "0"


def _tag_of_variable(text: str, variable: str) -> BasisTag:
    try:
        return BasisTag(variable)
    except ValueError as error:
        offset = text.find(variable) + 1
        raise PolynomialParseError(text, offset, f"unknown variable '{variable}'") from error
