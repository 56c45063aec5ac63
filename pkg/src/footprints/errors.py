"""Exception types shared across the toolkit.

Everything raised on bad *data* derives from FootprintError so callers (and
the CLI, which maps them to exit code 2) can catch one base class. Usage
errors, by contrast, are plain ValueError/TypeError.
"""


class FootprintError(Exception):
    """Base class for data-level errors raised by this package."""


# --- corpus ---------------------------------------------------------------

class NoSpeakersFound(FootprintError):
    """No speaker label in the transcript matched the configured convention."""


class MalformedInput(FootprintError):
    """Input is not decodable UTF-8 text."""


class AllSpeakersExcluded(FootprintError):
    """Splitting by speaker would produce zero documents."""


# --- nlu ------------------------------------------------------------------

class SchemaError(FootprintError):
    """A required field is missing from an NLU JSON document."""


class RangeError(FootprintError):
    """A score field is not numeric."""


class EmptyDocument(FootprintError):
    """Key-term extraction was asked to run on an empty document."""


# --- vsm ------------------------------------------------------------------

class EmptyFile(FootprintError):
    """The vector file contains no data lines."""


class ParseError(FootprintError):
    """A vector file line could not be parsed."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class DimMismatch(FootprintError):
    """The loaded dimensionality differs from the expected one."""


class ZeroVector(FootprintError):
    """Cosine similarity is undefined for a zero vector."""


class EmptyInput(FootprintError):
    """An operation that needs at least one element got none."""


class ZeroWeightSum(FootprintError):
    """Weighted averaging is undefined when the weights sum to zero."""


class DegenerateData(FootprintError):
    """The point set has zero variance in every direction."""


# --- footprint ------------------------------------------------------------

class NothingEmbeddable(FootprintError):
    """Every key term fell outside the vector space."""


class SeedNotInFootprint(FootprintError):
    """The requested seed term is not part of the footprint."""


class ThemeNotInSpace(FootprintError):
    """The requested theme word is not in the vector space vocabulary."""


class KTooLarge(FootprintError):
    """k-means was asked for more clusters than there are points."""
