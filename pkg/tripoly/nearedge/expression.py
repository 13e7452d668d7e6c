"""This module contains the expression trees describing near-edges.

The core nodes are the primitive chain E, explicit point lists, the convex sum ∨, the concave
sum ∧ and the vertical flip. Ccvx, Cccv, Koch, poly and twin chains are derived nodes that
expand into core nodes before they are evaluated.

"""

from abc import ABCMeta, abstractmethod
from functools import reduce
from typing import Optional, Tuple

from tripoly.geometry.exceptions import DegeneracyError
from tripoly.geometry.point_set import PointSet, is_chain, require_general_position
from tripoly.nearedge.exceptions import NotANearEdgeError


class NearEdgeExpression(metaclass=ABCMeta):
    """Base class of all near-edge expressions.

    Expressions are immutable. Equality is structural, as for filter expressions: same type and
    same attributes.

    """

    _hash: int

    @property
    @abstractmethod
    def segments(self) -> int:
        """Number of segments of the near-edge, one less than its number of points."""

    @property
    def children(self) -> Tuple["NearEdgeExpression", ...]:
        return ()

    def core(self) -> "NearEdgeExpression":
        """Equivalent expression built from E, point lists, ∨, ∧ and flip only."""
        return self

    def __eq__(self, other):
        # pylint: disable=unidiomatic-typecheck
        if self is other:
            return True
        if type(self) != type(other) or hash(self) != hash(other):
            return False
        return all(self.__dict__[key] == other.__dict__[key] for key in self.__dict__)

    def __hash__(self):
        return self._hash


class PrimitiveChain(NearEdgeExpression):
    """The two point chain E from (0, 0) to (1, 0)."""

    def __init__(self):
        self._hash = hash("E")

    @property
    def segments(self) -> int:
        return 1

    def __repr__(self):
        return "E"


E = PrimitiveChain()


class Leaf(NearEdgeExpression):
    """Standalone near-edge given by explicit points, ordered by x-coordinate.

    Raises
    ------
    NotANearEdgeError
        If two points share an x-coordinate or three points are collinear.

    """

    def __init__(self, points: PointSet, source: Optional[str] = None):
        if len(points) < 1:
            raise NotANearEdgeError("A near-edge needs at least one point")
        if not points.has_distinct_x():
            raise NotANearEdgeError("The points of a standalone near-edge need distinct x")
        try:
            require_general_position(points.points)
        except DegeneracyError as error:
            raise NotANearEdgeError(f"Points are not in general position: {error}") from error
        self.points = points.sorted_by_x()
        self.source = source
        self._hash = hash(("pts", self.points))

    def __eq__(self, other):
        return isinstance(other, Leaf) and self.points == other.points

    __hash__ = NearEdgeExpression.__hash__

    @property
    def segments(self) -> int:
        return len(self.points) - 1

    def __repr__(self):
        if self.source is not None:
            return f"pts({self.source})"
        return "pts[" + ",".join(f"({p.x},{p.y})" for p in self.points) + "]"


class BinaryExpression(NearEdgeExpression):
    """Base class of the convex and the concave sum."""

    symbol = ""

    def __init__(self, left: NearEdgeExpression, right: NearEdgeExpression):
        self.left = left
        self.right = right
        self._segments = left.segments + right.segments
        self._hash = hash((self.symbol, left, right))

    @property
    def segments(self) -> int:
        return self._segments

    @property
    def children(self) -> Tuple[NearEdgeExpression, ...]:
        return self.left, self.right

    def core(self) -> NearEdgeExpression:
        left, right = self.left.core(), self.right.core()
        if left is self.left and right is self.right:
            return self
        return type(self)(left, right)

    def __repr__(self):
        return f"{self.symbol}({self.left!r},{self.right!r})"


class Vee(BinaryExpression):
    """Convex sum A ∨ B, glued onto (0, 0), (1, -1), (2, 0)."""

    symbol = "vee"


class Wedge(BinaryExpression):
    """Concave sum A ∧ B, glued onto (0, 0), (1, 1), (2, 0)."""

    symbol = "wedge"


class Flip(NearEdgeExpression):
    """Vertical reflection of a near-edge."""

    def __init__(self, expression: NearEdgeExpression):
        self.expression = expression
        self._hash = hash(("flip", expression))

    @property
    def segments(self) -> int:
        return self.expression.segments

    @property
    def children(self) -> Tuple[NearEdgeExpression, ...]:
        return (self.expression,)

    def core(self) -> NearEdgeExpression:
        inner = self.expression.core()
        return self if inner is self.expression else Flip(inner)

    def __repr__(self):
        return f"flip({self.expression!r})"


class DerivedExpression(NearEdgeExpression):
    """Base class of named constructions that expand into core expressions."""

    keyword = ""

    def __init__(self, *arguments):
        self.arguments = arguments
        self._hash = hash((type(self).__name__, arguments))
        self._core: Optional[NearEdgeExpression] = None

    def __eq__(self, other):
        # pylint: disable=unidiomatic-typecheck
        return type(self) == type(other) and self.arguments == other.arguments

    __hash__ = NearEdgeExpression.__hash__

    @abstractmethod
    def _expand(self) -> NearEdgeExpression:
        """Build the core expression."""

    def core(self) -> NearEdgeExpression:
        if self._core is None:
            self._core = self._expand().core()
        return self._core

    @property
    def segments(self) -> int:
        return self.core().segments

    @property
    def children(self) -> Tuple[NearEdgeExpression, ...]:
        return tuple(
            argument for argument in self.arguments if isinstance(argument, NearEdgeExpression)
        )

    def __repr__(self):
        return f"{self.keyword}({','.join(repr(argument) for argument in self.arguments)})"


def _require_count(name: str, count: int, minimum: int):
    if not isinstance(count, int) or count < minimum:
        raise NotANearEdgeError(f"{name} needs an integer of at least {minimum}, not {count}")


def _fold(operator, expression: NearEdgeExpression, copies: int) -> NearEdgeExpression:
    # left associative: ((A op A) op A) ...
    return reduce(operator, [expression] * copies)


class Ccvx(DerivedExpression):
    """Convex chain E ∨ E ∨ ... ∨ E with the given number of copies."""

    keyword = "ccvx"

    def __init__(self, copies: int):
        _require_count("ccvx", copies, 1)
        super().__init__(copies)

    def _expand(self):
        return _fold(Vee, E, self.arguments[0])


class Cccv(DerivedExpression):
    """Concave chain E ∧ E ∧ ... ∧ E with the given number of copies."""

    keyword = "cccv"

    def __init__(self, copies: int):
        _require_count("cccv", copies, 1)
        super().__init__(copies)

    def _expand(self):
        return _fold(Wedge, E, self.arguments[0])


class Koch(DerivedExpression):
    """Generalized Koch near-edge: K_0(A) = A and K_s(A) = flip(K_s-1(A)) ∨ flip(K_s-1(A))."""

    keyword = "koch"

    def __init__(self, expression: NearEdgeExpression, stage: int):
        _require_count("koch", stage, 0)
        super().__init__(expression, stage)

    def _expand(self):
        expression, stage = self.arguments
        current = expression.core()
        for _ in range(stage):
            flipped = Flip(current)
            current = Vee(flipped, flipped)
        return current


class PolyChain(DerivedExpression):
    """Poly-A near-edge flip(A) ∨ ... ∨ flip(A) with the given number of copies."""

    keyword = "poly"

    def __init__(self, expression: NearEdgeExpression, copies: int):
        _require_count("poly", copies, 1)
        super().__init__(expression, copies)

    def _expand(self):
        expression, copies = self.arguments
        return _fold(Vee, Flip(expression.core()), copies)


class TwinChain(DerivedExpression):
    """Twin-A near-edge flip(poly(A, N)) ∨ E ∨ flip(poly(A, N)); the middle E is kept."""

    keyword = "twin"

    def __init__(self, expression: NearEdgeExpression, copies: int):
        _require_count("twin", copies, 1)
        super().__init__(expression, copies)

    def _expand(self):
        expression, copies = self.arguments
        outer = Flip(PolyChain(expression, copies).core())
        return Vee(Vee(outer, E), outer)


def is_chain_expr(expression: NearEdgeExpression) -> bool:
    """Structural chain test: E is a chain and ∨, ∧ and flip keep chains chains.

    Point lists are tested geometrically.
    """
    expression = expression.core()
    if isinstance(expression, Leaf):
        return len(expression.points) < 3 or is_chain(expression.points.points)
    return all(is_chain_expr(child) for child in expression.children)


def walk(expression: NearEdgeExpression):
    """Yield every distinct subexpression of the core tree once, children first."""
    seen = set()

    def visit(node: NearEdgeExpression):
        if id(node) in seen:
            return
        seen.add(id(node))
        for child in node.children:
            yield from visit(child)
        yield node

    yield from visit(expression.core())
