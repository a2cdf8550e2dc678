"""
Skew polynomial rings.

Exact arithmetic in Q = k_q[x_1, ..., x_n] where x_i x_j = q_ij x_j x_i, the
skew bicharacter chi on exponent-vector colors, color degrees of elements and
the normality test with its certificate.

Monomials are exponent tuples. The monomial order is graded by weighted
internal degree and then compares exponent tuples lexicographically from x_1,
so x_1 is the largest variable: x_1^2 > x_1 x_2 > x_2^2 in degree two.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from skew_dga_tool.algebra.field import Scalar, ScalarField
from skew_dga_tool.core.exceptions import (
    DimensionMismatchError, HomogeneityError, ZeroElementError, ConfigurationError
)

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
ColorDegree = Tuple[int, ...]


def add_vectors(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    """Componentwise sum of two exponent vectors."""
    return tuple(x + y for x, y in zip(a, b))


def subtract_vectors(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    """Componentwise difference of two exponent vectors."""
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def accumulate(terms: Dict, key, value: Scalar) -> None:
    """Add value into terms[key], dropping the entry when it cancels."""
    current = terms.get(key)
    if current is None:
        if value:
            terms[key] = value
        return
    current = current + value
    if current:
        terms[key] = current
    else:
        del terms[key]


class QMatrix:
    """
    Multiplicatively antisymmetric commutation matrix of a skew polynomial ring.

    Entries are 0-based: ``q[i][j]`` is the scalar with x_i x_j = q[i][j] x_j x_i.
    """

    def __init__(self, field: ScalarField, entries: Sequence[Sequence[Scalar]]):
        """
        Initialize and validate the matrix.

        Args:
            field: Ground field of the entries
            entries: Full n x n matrix of field elements

        Raises:
            ConfigurationError: If an axiom of the matrix fails
        """
        self.field = field
        self.n = len(entries)
        self.entries = tuple(tuple(row) for row in entries)
        self._validate()

    @classmethod
    def from_upper(cls, field: ScalarField, n: int,
                   upper: Optional[Dict[Tuple[int, int], Scalar]] = None) -> "QMatrix":
        """
        Build a matrix from the entries above the diagonal.

        Args:
            field: Ground field
            n: Number of variables
            upper: Map (i, j) -> q[i][j] for i < j; missing pairs commute

        Returns:
            QMatrix with q[j][i] = 1/q[i][j] and unit diagonal
        """
        entries = [[field.one] * n for _ in range(n)]
        for (i, j), value in (upper or {}).items():
            if not (0 <= i < j < n):
                raise ConfigurationError(f"q entry ({i + 1}, {j + 1}) must satisfy i < j <= {n}",
                                         config_key="q")
            if not value:
                raise ConfigurationError(f"q entry ({i + 1}, {j + 1}) must be nonzero",
                                         config_key="q")
            entries[i][j] = value
            entries[j][i] = field.one / value
        return cls(field, entries)

    def _validate(self):
        """Check unit diagonal, antisymmetry and nonzero entries."""
        for i in range(self.n):
            if len(self.entries[i]) != self.n:
                raise ConfigurationError("q matrix must be square", config_key="q")
            if self.entries[i][i] != self.field.one:
                raise ConfigurationError(f"diagonal must be 1 (entry {i + 1},{i + 1})",
                                         config_key="q")
            for j in range(self.n):
                value = self.entries[i][j]
                if not value:
                    raise ConfigurationError(f"q entry ({i + 1}, {j + 1}) must be nonzero",
                                             config_key="q")
                if value * self.entries[j][i] != self.field.one:
                    raise ConfigurationError(
                        f"q[{i + 1}][{j + 1}] * q[{j + 1}][{i + 1}] must equal 1", config_key="q"
                    )

    def __getitem__(self, index: int) -> Tuple[Scalar, ...]:
        return self.entries[index]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, QMatrix) and other.field == self.field
                and other.entries == self.entries)

    def __hash__(self) -> int:
        return hash((self.field, self.entries))


@dataclass(frozen=True)
class NormalityCertificate:
    """Outcome of the normality test."""
    normal: bool
    color: Optional[ColorDegree] = None
    betas: Optional[Tuple[Scalar, ...]] = None
    variable: Optional[int] = None
    monomials: Optional[Tuple[Monomial, Monomial]] = None

    def __bool__(self) -> bool:
        return self.normal


class SkewPolynomialRing:
    """
    The skew polynomial ring k_q[x_1, ..., x_n] with weighted internal degrees.

    All values are immutable; caches only memoize pure functions of exponent
    vectors.
    """

    def __init__(self, field: ScalarField, q: QMatrix, names: Optional[Sequence[str]] = None,
                 degrees: Optional[Sequence[int]] = None):
        """
        Initialize the ring.

        Args:
            field: Ground field
            q: Commutation matrix
            names: Variable names (default x1..xn)
            degrees: Positive internal degrees of the variables (default all 1)
        """
        if q.field != field:
            raise DimensionMismatchError("q matrix lives over a different field",
                                         expected=field, actual=q.field)
        self.field = field
        self.q = q
        self.n = q.n
        self.names = tuple(names) if names is not None else tuple(f"x{i + 1}" for i in range(self.n))
        self.degrees = tuple(degrees) if degrees is not None else (1,) * self.n
        if len(self.names) != self.n or len(self.degrees) != self.n:
            raise DimensionMismatchError("names and degrees must match the variable count",
                                         expected=self.n, actual=(len(self.names), len(self.degrees)))
        if any(d < 1 for d in self.degrees):
            raise ConfigurationError("variable degrees must be positive", config_key="deg")
        self._twist_cache: Dict[Tuple[Monomial, Monomial], Scalar] = {}
        self._chi_cache: Dict[Tuple[ColorDegree, ColorDegree], Scalar] = {}
        self._degree_cache: Dict[int, Tuple[Monomial, ...]] = {}

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SkewPolynomialRing) and other.q == self.q
                and other.names == self.names and other.degrees == self.degrees)

    def __hash__(self) -> int:
        return hash((self.q, self.names, self.degrees))

    def __repr__(self) -> str:
        return f"SkewPolynomialRing({self.field!r}, n={self.n})"

    # -- monomials -------------------------------------------------------

    @property
    def unit(self) -> Monomial:
        return (0,) * self.n

    def unit_vector(self, i: int) -> Monomial:
        return tuple(1 if k == i else 0 for k in range(self.n))

    def monomial_degree(self, monomial: Sequence[int]) -> int:
        """Weighted internal degree of an exponent vector."""
        return sum(e * d for e, d in zip(monomial, self.degrees))

    def monomial_key(self, monomial: Monomial) -> Tuple[int, Monomial]:
        """Sort key of the monomial order."""
        return (self.monomial_degree(monomial), monomial)

    def monomials_of_degree(self, d: int) -> Tuple[Monomial, ...]:
        """All monomials of weighted degree d, ascending in the monomial order."""
        if d < 0:
            return ()
        if d not in self._degree_cache:
            found: List[Monomial] = []

            def extend(prefix: List[int], index: int, remaining: int):
                if index == self.n:
                    if remaining == 0:
                        found.append(tuple(prefix))
                    return
                for e in range(remaining // self.degrees[index] + 1):
                    prefix.append(e)
                    extend(prefix, index + 1, remaining - e * self.degrees[index])
                    prefix.pop()

            extend([], 0, d)
            self._degree_cache[d] = tuple(sorted(found))
        return self._degree_cache[d]

    # -- scalars attached to exponent vectors ----------------------------

    def twist(self, left: Monomial, right: Monomial) -> Scalar:
        """
        Reordering constant of x^left * x^right = twist * x^(left + right).

        Equals the product over j < i of q[i][j]^(left_i * right_j).
        """
        key = (left, right)
        cached = self._twist_cache.get(key)
        if cached is not None:
            return cached
        value = self.field.one
        for i in range(self.n):
            if not left[i]:
                continue
            for j in range(i):
                exponent = left[i] * right[j]
                if exponent:
                    value = value * self.field.power(self.q[i][j], exponent)
        self._twist_cache[key] = value
        return value

    def chi(self, a: Sequence[int], b: Sequence[int]) -> Scalar:
        """
        Skew bicharacter on colors: the product of q[i][j]^(a_i * b_j).

        Raises:
            DimensionMismatchError: If a vector does not have length n
        """
        if len(a) != self.n or len(b) != self.n:
            raise DimensionMismatchError("color vectors must have one entry per variable",
                                         expected=self.n, actual=(len(a), len(b)),
                                         operation="chi")
        key = (tuple(a), tuple(b))
        cached = self._chi_cache.get(key)
        if cached is not None:
            return cached
        value = self.field.one
        for i in range(self.n):
            if not a[i]:
                continue
            for j in range(self.n):
                exponent = a[i] * b[j]
                if exponent and i != j:
                    value = value * self.field.power(self.q[i][j], exponent)
        self._chi_cache[key] = value
        return value

    def color_signature(self, color: Sequence[int]) -> Tuple[Scalar, ...]:
        """
        The normalizing automorphism of a color as scalars on the variables.

        Two colors act identically exactly when their signatures agree.
        """
        return tuple(self.chi(color, self.unit_vector(j)) for j in range(self.n))

    # -- elements ----------------------------------------------------------

    def element(self, terms: Dict[Monomial, Scalar]) -> "RingElement":
        return RingElement(self, {m: c for m, c in terms.items() if c})

    def zero(self) -> "RingElement":
        return RingElement(self, {})

    def one(self) -> "RingElement":
        return self.constant(self.field.one)

    def constant(self, value) -> "RingElement":
        value = self.field(value)
        return RingElement(self, {self.unit: value} if value else {})

    def monomial(self, exponents: Sequence[int], coefficient=None) -> "RingElement":
        if len(exponents) != self.n:
            raise DimensionMismatchError("monomial length must equal the variable count",
                                         expected=self.n, actual=len(exponents))
        coefficient = self.field.one if coefficient is None else coefficient
        return RingElement(self, {tuple(exponents): coefficient} if coefficient else {})

    def variable(self, i: int) -> "RingElement":
        """The variable x_(i+1) for a 0-based index i."""
        return self.monomial(self.unit_vector(i))

    def variables(self) -> List["RingElement"]:
        return [self.variable(i) for i in range(self.n)]

    def multiply(self, f: "RingElement", g: "RingElement") -> "RingElement":
        """
        Product in the skew polynomial ring.

        Args:
            f: Left factor
            g: Right factor

        Returns:
            The product, in ordered normal form

        Raises:
            DimensionMismatchError: If the factors live in different rings
        """
        if f.ring is not self and f.ring != self:
            raise DimensionMismatchError("left factor belongs to another ring", operation="multiply")
        if g.ring is not self and g.ring != self:
            raise DimensionMismatchError("right factor belongs to another ring", operation="multiply")
        out: Dict[Monomial, Scalar] = {}
        for left, a in f.terms.items():
            for right, b in g.terms.items():
                accumulate(out, add_vectors(left, right), a * b * self.twist(left, right))
        return RingElement(self, out)

    # -- color degrees and normality ----------------------------------------

    def color_degree(self, f: "RingElement") -> Optional[ColorDegree]:
        """
        Common color of the support of f, if the support is color homogeneous.

        Returns the exponent vector of the lexicographically least support
        monomial as the representative, or None when two support monomials
        act by different automorphisms.

        Raises:
            ZeroElementError: If f is zero
        """
        if f.is_zero():
            raise ZeroElementError("the zero element has no color degree", operation="color_degree")
        support = sorted(f.terms)
        reference = self.color_signature(support[0])
        for monomial in support[1:]:
            if self.color_signature(monomial) != reference:
                return None
        return support[0]

    def is_normal(self, f: "RingElement") -> NormalityCertificate:
        """
        Decide normality of a homogeneous element.

        A homogeneous element is normal exactly when its support is color
        homogeneous. The certificate carries the color and the scalars beta_j
        with f x_j = beta_j x_j f; on failure it names a variable and two
        support monomials that commute differently with it.

        Raises:
            ZeroElementError: If f is zero
            HomogeneityError: If f is not homogeneous in internal degree
        """
        if f.is_zero():
            raise ZeroElementError("normality of the zero element is not defined",
                                   operation="is_normal")
        if not f.is_homogeneous():
            raise HomogeneityError("normality test requires a homogeneous element",
                                   degrees=f.degrees(), operation="is_normal")
        color = self.color_degree(f)
        if color is not None:
            return NormalityCertificate(True, color=color, betas=self.color_signature(color))
        support = sorted(f.terms)
        reference = self.color_signature(support[0])
        for monomial in support[1:]:
            signature = self.color_signature(monomial)
            for j in range(self.n):
                if signature[j] != reference[j]:
                    logger.debug(f"{f.to_text()} is not normal: x{j + 1} separates "
                                 f"{support[0]} and {monomial}")
                    return NormalityCertificate(False, variable=j, monomials=(support[0], monomial))
        return NormalityCertificate(False)

    def monomial_text(self, monomial: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, monomial):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


class RingElement:
    """
    Sparse linear combination of ordered monomials.

    ``terms`` maps exponent tuples to nonzero field elements and is never
    mutated after construction.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: SkewPolynomialRing, terms: Dict[Monomial, Scalar]):
        self.ring = ring
        self.terms = terms

    # arithmetic

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise DimensionMismatchError("operands belong to different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other) -> "RingElement":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            accumulate(out, m, c)
        return RingElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "RingElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RingElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            return self.ring.multiply(self, other)
        return self.scale(self.ring.field(other))

    def __rmul__(self, other) -> "RingElement":
        return self.scale(self.ring.field(other))

    def __pow__(self, exponent: int) -> "RingElement":
        result = self.ring.one()
        for _ in range(exponent):
            result = self.ring.multiply(result, self)
        return result

    def scale(self, value: Scalar) -> "RingElement":
        if not value:
            return self.ring.zero()
        return RingElement(self.ring, {m: c * value for m, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self.ring.constant(other)
        return isinstance(other, RingElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"RingElement({self.to_text()})"

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> List[Monomial]:
        """Support monomials, ascending in the monomial order."""
        return sorted(self.terms, key=self.ring.monomial_key)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ZeroElementError("the zero element has no leading monomial")
        return max(self.terms, key=self.ring.monomial_key)

    def leading_coefficient(self) -> Scalar:
        return self.terms[self.leading_monomial()]

    def coefficient(self, monomial: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(monomial), self.ring.field.zero)

    def degrees(self) -> List[int]:
        return sorted({self.ring.monomial_degree(m) for m in self.terms})

    def internal_degree(self) -> Optional[int]:
        """Highest internal degree in the support (None for zero)."""
        degrees = self.degrees()
        return degrees[-1] if degrees else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_component(self, d: int) -> "RingElement":
        return RingElement(self.ring, {m: c for m, c in self.terms.items()
                                       if self.ring.monomial_degree(m) == d})

    def augmentation(self) -> Scalar:
        """The constant-term coefficient."""
        return self.terms.get(self.ring.unit, self.ring.field.zero)

    def to_text(self) -> str:
        """Print as a polynomial, leading term first, e.g. 'x1^2 - 1/2*x1*x2'."""
        if not self.terms:
            return "0"
        field = self.ring.field
        pieces: List[str] = []
        for monomial in reversed(self.support()):
            value = self.terms[monomial]
            text = field.format(value)
            negative = field.characteristic == 0 and text.startswith("-")
            if negative:
                text = text[1:]
            mono = self.ring.monomial_text(monomial)
            if mono == "1":
                body = text
            elif text == "1":
                body = mono
            else:
                body = f"{text}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)
