"""Exception types shared across the toolkit."""
from __future__ import annotations


class HypergraphError(Exception):
    """Base class for every error raised by this package."""


class ParseError(HypergraphError):
    """Malformed input text; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class CapExceeded(HypergraphError):
    """An enumeration would exceed the caller-supplied work cap."""


class ConditionViolated(HypergraphError):
    """A recoloring/peeling step certified that the algorithm's precondition fails.

    The coloring algorithms do not pre-check their hypotheses; instead every
    step that is guaranteed to succeed under the hypothesis raises this error
    when it does not, which is a certificate that the input violated it.
    """


class StructureViolated(HypergraphError):
    """A structural invariant of the decomposition failed to hold.

    On inputs that pass the pairwise intersection check this is unreachable;
    if it fires anyway it indicates a bug, so the message is kept verbose.
    """


class PropertySViolation(HypergraphError):
    """Input rejected by the pairwise intersection check; carries the witness."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(str(witness))
