"""Sparse integer chains on tuples of quandle elements, the rack boundary
operator, the degenerate-tuple projection, and boundary matrices.

A degree-n chain is a formal integer combination of n-tuples.  The quandle
chain complex is the quotient of the rack complex by tuples with two equal
adjacent entries; since that subgroup is generator-spanned, the quotient is
realized by simply dropping degenerate tuples (project_quandle).

Boundary convention, fixed for the whole package:

    d(x_1, ..., x_n) = sum_{i=2..n} (-1)^i [ (x_1, ..., ^x_i, ..., x_n)
                       - (x_1*x_i, ..., x_{i-1}*x_i, x_{i+1}, ..., x_n) ]

where ^x_i omits the i-th entry and * is the quandle operation.
"""

from functools import lru_cache
from itertools import product

from .errors import DegenerateGeneratorError, DegreeError, SchemaError
from .intlinalg import IntMatrix
from .quandle import Quandle


def is_degenerate(tup):
    """True if the tuple has two equal adjacent entries.

    >>> is_degenerate((1, 1, 2))
    True
    >>> is_degenerate((2, 0, 2))
    False
    """
    return any(tup[i] == tup[i + 1] for i in range(len(tup) - 1))


class Chain:
    """A sparse formal integer combination of fixed-degree tuples.

    Zero coefficients are never stored, so equal chains compare equal and
    serialize identically.  Iteration is always in lexicographic tuple
    order.  Chains are immutable; arithmetic returns new chains and raises
    DegreeError on mixed degrees.

    >>> c = Chain.generator((2, 0, 2)) + Chain.generator((2, 1, 0))
    >>> c - c == Chain.zero(3)
    True
    """

    __slots__ = ("degree", "_terms")

    def __init__(self, degree, terms=()):
        if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
            raise DegreeError(f"chain degree must be a positive integer, got {degree!r}")
        combined = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for tup, coeff in items:
            tup = tuple(tup)
            if len(tup) != degree:
                raise DegreeError(
                    f"tuple {tup} has length {len(tup)}, chain degree is {degree}"
                )
            for e in tup:
                if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                    raise ValueError(f"tuple entry {e!r} is not a nonnegative int")
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise ValueError(f"coefficient {coeff!r} is not an int")
            c = combined.get(tup, 0) + coeff
            if c:
                combined[tup] = c
            elif tup in combined:
                del combined[tup]
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_terms", combined)

    def __setattr__(self, name, value):
        raise AttributeError("Chain is immutable")

    @classmethod
    def zero(cls, degree):
        return cls(degree)

    @classmethod
    def generator(cls, tup, coeff=1):
        tup = tuple(tup)
        return cls(len(tup), [(tup, coeff)])

    def items(self):
        """(tuple, coefficient) pairs in lexicographic tuple order."""
        return sorted(self._terms.items())

    def support(self):
        return sorted(self._terms)

    def coefficient(self, tup):
        return self._terms.get(tuple(tup), 0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _check_degree(self, other):
        if self.degree != other.degree:
            raise DegreeError(
                f"mixed-degree arithmetic: {self.degree} vs {other.degree}"
            )

    def __add__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        self._check_degree(other)
        terms = dict(self._terms)
        for tup, coeff in other._terms.items():
            c = terms.get(tup, 0) + coeff
            if c:
                terms[tup] = c
            elif tup in terms:
                del terms[tup]
        return Chain(self.degree, terms)

    def __sub__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Chain(self.degree, {t: -c for t, c in self._terms.items()})

    def __mul__(self, k):
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        return Chain(self.degree, {t: k * c for t, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        return hash((self.degree, tuple(self.items())))

    def __repr__(self):
        if not self._terms:
            return f"Chain.zero({self.degree})"
        parts = []
        for tup, coeff in self.items():
            if coeff == 1:
                parts.append(f"+{tup}")
            elif coeff == -1:
                parts.append(f"-{tup}")
            else:
                parts.append(f"{coeff:+d}*{tup}")
        return " ".join(parts)

    def to_json_dict(self):
        """{"degree": n, "terms": [...]} with coefficients as decimal strings."""
        return {
            "degree": self.degree,
            "terms": [
                {"tuple": list(tup), "coeff": str(coeff)}
                for tup, coeff in self.items()
            ],
        }

    @classmethod
    def from_json_dict(cls, obj):
        if not isinstance(obj, dict):
            raise SchemaError("", "chain document must be a JSON object")
        extra = set(obj) - {"degree", "terms"}
        if extra:
            raise SchemaError(sorted(extra)[0], "unknown field")
        if "degree" not in obj:
            raise SchemaError("degree", "missing field")
        if "terms" not in obj:
            raise SchemaError("terms", "missing field")
        degree = obj["degree"]
        if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
            raise SchemaError("degree", "must be a positive integer")
        terms_obj = obj["terms"]
        if not isinstance(terms_obj, list):
            raise SchemaError("terms", "must be a list")
        terms = []
        for i, entry in enumerate(terms_obj):
            path = f"terms[{i}]"
            if not isinstance(entry, dict):
                raise SchemaError(path, "must be an object")
            extra = set(entry) - {"tuple", "coeff"}
            if extra:
                raise SchemaError(f"{path}.{sorted(extra)[0]}", "unknown field")
            if "tuple" not in entry:
                raise SchemaError(f"{path}.tuple", "missing field")
            if "coeff" not in entry:
                raise SchemaError(f"{path}.coeff", "missing field")
            tup = entry["tuple"]
            if not isinstance(tup, list) or len(tup) != degree:
                raise SchemaError(f"{path}.tuple", f"must be a list of {degree} integers")
            for j, e in enumerate(tup):
                if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                    raise SchemaError(
                        f"{path}.tuple[{j}]", "must be a nonnegative integer"
                    )
            coeff = entry["coeff"]
            if isinstance(coeff, str):
                try:
                    coeff = int(coeff, 10)
                except ValueError:
                    raise SchemaError(f"{path}.coeff", "must be a decimal integer string")
            elif not isinstance(coeff, int) or isinstance(coeff, bool):
                raise SchemaError(f"{path}.coeff", "must be a decimal integer string")
            terms.append((tuple(tup), coeff))
        return cls(degree, terms)


def boundary_rack(chain, quandle):
    """Rack boundary of a chain, by linear extension of the generator
    formula in the module docstring.

    >>> r3 = Quandle.dihedral(3)
    >>> boundary_rack(Chain.generator((2, 0)), r3)
    -(1,) +(2,)
    """
    if chain.degree < 2:
        raise DegreeError(f"boundary requires degree >= 2, got {chain.degree}")
    n = chain.degree
    terms = {}

    def add(tup, coeff):
        c = terms.get(tup, 0) + coeff
        if c:
            terms[tup] = c
        elif tup in terms:
            del terms[tup]

    for tup, coeff in chain.items():
        for e in tup:
            if e >= quandle.order:
                raise ValueError(
                    f"tuple entry {e} out of range for quandle of order {quandle.order}"
                )
        for ii in range(1, n):  # ii is the 0-based index of x_i, i = ii + 1
            sign = 1 if ii % 2 else -1
            omitted = tup[:ii] + tup[ii + 1 :]
            acted = (
                tuple(quandle.act(tup[j], tup[ii]) for j in range(ii)) + tup[ii + 1 :]
            )
            add(omitted, sign * coeff)
            add(acted, -sign * coeff)
    return Chain(n - 1, terms)


def project_quandle(chain):
    """Project into the quandle complex by dropping degenerate generators."""
    return Chain(
        chain.degree,
        {t: c for t, c in chain.items() if not is_degenerate(t)},
    )


def boundary_quandle(chain, quandle):
    """Quandle-complex boundary: the rack boundary followed by projection.

    The input must already live in the quandle complex; a degenerate
    generator is a contract violation, not a value to be silently dropped.
    """
    for tup in chain.support():
        if is_degenerate(tup):
            raise DegenerateGeneratorError(
                f"generator {tup} has two equal adjacent entries"
            )
    return project_quandle(boundary_rack(chain, quandle))


@lru_cache(maxsize=None)
def quandle_basis(quandle, degree):
    """All non-degenerate degree-n tuples over the quandle, lexicographic.

    >>> len(quandle_basis(Quandle.dihedral(3), 3))
    12
    """
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise DegreeError(f"basis degree must be a positive integer, got {degree!r}")
    return tuple(
        t
        for t in product(range(quandle.order), repeat=degree)
        if not is_degenerate(t)
    )


@lru_cache(maxsize=None)
def matrix_of_boundary(quandle, degree):
    """Matrix of the quandle boundary from degree n to n-1, with columns
    indexed by quandle_basis(quandle, n) and rows by the degree-(n-1)
    basis, both lexicographic.
    """
    if degree < 2:
        raise DegreeError(f"boundary matrix requires degree >= 2, got {degree}")
    col_basis = quandle_basis(quandle, degree)
    row_basis = quandle_basis(quandle, degree - 1)
    row_index = {t: i for i, t in enumerate(row_basis)}
    data = [[0] * len(col_basis) for _ in row_basis]
    for j, gen in enumerate(col_basis):
        image = boundary_quandle(Chain.generator(gen), quandle)
        for tup, coeff in image.items():
            data[row_index[tup]][j] = coeff
    return IntMatrix(data, cols=len(col_basis))


def coordinates(chain, quandle):
    """Coordinate vector of a quandle-complex chain in its degree basis."""
    basis = quandle_basis(quandle, chain.degree)
    index = {t: i for i, t in enumerate(basis)}
    vec = [0] * len(basis)
    for tup, coeff in chain.items():
        if tup not in index:
            if is_degenerate(tup):
                raise DegenerateGeneratorError(
                    f"generator {tup} is degenerate, not a quandle-basis element"
                )
            raise ValueError(
                f"tuple {tup} out of range for quandle of order {quandle.order}"
            )
        vec[index[tup]] = coeff
    return vec
