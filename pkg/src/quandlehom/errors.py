"""Exception types raised by the library.

Everything user-facing derives from QuandlehomError so the CLI can map
library failures to its input-error exit code in one place.
"""


class QuandlehomError(Exception):
    """Base class for all errors raised by this package."""


class QuandleAxiomError(QuandlehomError):
    """An operation table violates a quandle axiom.

    `axiom` is one of "idempotency", "right_bijectivity",
    "distributivity"; `witness` is the offending element tuple.
    """

    def __init__(self, axiom, witness, message):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class DegreeError(QuandlehomError):
    """Chain degree is invalid for the requested operation (including
    mixed-degree arithmetic, which is never silently coerced)."""


class DegenerateGeneratorError(QuandlehomError):
    """A chain contains a generator with two equal adjacent entries where
    only quandle-complex (non-degenerate) chains are allowed."""


class NotACycleError(QuandlehomError):
    """A chain required to be a cycle has nonzero quandle boundary."""


class QuandleMismatchError(QuandlehomError):
    """A chain or dataset does not live over the expected quandle."""


class CocycleValidationError(QuandlehomError):
    """A constructed cocycle table failed the 3-cocycle check.

    `witness` is the violating triple or quadruple.
    """

    def __init__(self, witness, message):
        super().__init__(message)
        self.witness = witness


class UnknownIdError(QuandlehomError):
    """A subset references a triple-point id absent from the dataset."""


class EnumerationCapError(QuandlehomError):
    """The dataset has more triple points than the enumeration cap."""


class SchemaError(QuandlehomError):
    """A JSON document violates the expected schema.

    `path` locates the offending field, e.g. "triple_points[0].sign".
    """

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
